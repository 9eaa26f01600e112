#include "gerbe/io.hpp"

#include <filesystem>
#include <fstream>

namespace gerbe {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(errc::invalid_input, "at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

int expect_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<int>();
}

std::vector<int> expect_int_array(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(expect_int(j[i], path + "/" + std::to_string(i)));
  }
  return out;
}

std::vector<std::vector<int>> expect_int_matrix(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of arrays");
  std::vector<std::vector<int>> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(expect_int_array(j[i], path + "/" + std::to_string(i)));
  }
  return out;
}

void check_format(const json& j, const std::string& path) {
  if (j.contains("format") && (!j["format"].is_number_integer() || j["format"] != 1)) {
    bad(path + "/format", "unsupported schema version (expected 1)");
  }
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_input, "cannot open file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(errc::invalid_input, "malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

FiniteGroup parse_group(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected a group object");
  check_format(j, path);
  std::string name = j.value("name", std::string("group"));

  if (j.contains("table")) {
    auto table = expect_int_matrix(j["table"], path + "/table");
    if (j.contains("order") &&
        expect_int(j["order"], path + "/order") != static_cast<int>(table.size())) {
      bad(path + "/order", "order does not match table size");
    }
    try {
      return FiniteGroup::validate(std::move(table), std::move(name));
    } catch (const error& e) {
      if (e.code() == errc::invalid_input) bad(path + "/table", e.what());
      throw;
    }
  }
  if (j.contains("generators")) {
    if (!j.contains("degree")) bad(path + "/degree", "generator form requires a degree");
    const int degree = expect_int(j["degree"], path + "/degree");
    auto gens = expect_int_matrix(j["generators"], path + "/generators");
    FiniteGroup g = group_from_permutations(degree, gens);
    return FiniteGroup::validate(g.table(), std::move(name));
  }
  bad(path, "group needs either a table or degree+generators");
}

Extension parse_extension(const json& j, const std::string& base_dir, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an extension object");
  check_format(j, path);

  auto group_field = [&](const char* key) -> FiniteGroup {
    if (!j.contains(key)) bad(path + "/" + key, "missing group");
    const json& field = j[key];
    if (field.is_string()) {
      std::filesystem::path p = field.get<std::string>();
      if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
      return parse_group(load_json_file(p.string()), path + "/" + key);
    }
    return parse_group(field, path + "/" + key);
  };

  FiniteGroup g = group_field("G");
  FiniteGroup h = group_field("H");
  FiniteGroup q = group_field("Q");
  if (!j.contains("iota")) bad(path + "/iota", "missing");
  if (!j.contains("pi")) bad(path + "/pi", "missing");
  auto iota = expect_int_array(j["iota"], path + "/iota");
  auto pi = expect_int_array(j["pi"], path + "/pi");

  return build_extension(std::make_shared<const FiniteGroup>(std::move(g)),
                         std::make_shared<const FiniteGroup>(std::move(h)),
                         std::make_shared<const FiniteGroup>(std::move(q)), std::move(iota),
                         std::move(pi));
}

std::vector<Sample> parse_samples(const json& j, const std::string& path) {
  const json* arr = &j;
  std::string p = path;
  if (j.is_object()) {
    check_format(j, path);
    if (!j.contains("samples")) bad(path + "/samples", "missing");
    arr = &j["samples"];
    p += "/samples";
  }
  if (!arr->is_array()) bad(p, "expected an array of [r, value] pairs");
  std::vector<Sample> out;
  for (size_t i = 0; i < arr->size(); ++i) {
    const json& pair = (*arr)[i];
    const std::string ip = p + "/" + std::to_string(i);
    if (!pair.is_array() || pair.size() != 2) bad(ip, "expected [r, value]");
    Sample s;
    if (!pair[0].is_number_integer()) bad(ip + "/0", "expected an integer sample point");
    s.r = pair[0].get<long long>();
    if (pair[1].is_number_integer()) {
      s.value = Rational(pair[1].get<long long>());
    } else if (pair[1].is_string()) {
      s.value = parse_rational(pair[1].get<std::string>(), ip + "/1");
    } else {
      bad(ip + "/1", "expected an integer or a \"p/q\" string");
    }
    out.push_back(std::move(s));
  }
  return out;
}

Rational parse_rational(const std::string& text, const std::string& path) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) bad(path, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    bad(path, "not a rational: \"" + text + "\"");
  }
}

std::string rational_str(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

ordered_json group_to_json(const FiniteGroup& g) {
  ordered_json j;
  j["format"] = 1;
  j["name"] = g.name();
  j["order"] = g.order();
  j["table"] = g.table();
  return j;
}

ordered_json extension_to_json(const Extension& ext, const std::string& name) {
  ordered_json j;
  j["format"] = 1;
  j["name"] = name;
  j["G"] = group_to_json(ext.g());
  j["H"] = group_to_json(ext.h());
  j["Q"] = group_to_json(ext.q());
  j["iota"] = ext.incl.map();
  j["pi"] = ext.proj.map();
  return j;
}

}  // namespace gerbe

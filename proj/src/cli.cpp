#include "gerbe/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "gerbe/clifford.hpp"
#include "gerbe/dual.hpp"
#include "gerbe/gw.hpp"
#include "gerbe/io.hpp"
#include "gerbe/library.hpp"
#include "gerbe/rcoeff.hpp"
#include "gerbe/version.hpp"

namespace gerbe {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

ordered_json report_envelope(const RunConfig& config) {
  ordered_json j;
  j["format"] = 1;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = config.command;
  j["seed"] = config.seed;
  j["conventions"] = {
      {"section", "minimal-index lift, s(e) = e"},
      {"intertwiner_normalization", "det T_q = 1 via the principal d-th root"},
      {"central_character", "(1,e) acts as exp(+2 pi i / m)"},
      {"duality_factor", "|G|^(2g-2) with per-orbit weight dim(rho)^(2-2g)"},
  };
  return j;
}

// errors raised while reading and validating user input exit with code 2,
// unlike failures of the mathematical checks themselves
struct input_error : error {
  explicit input_error(const error& e) : error(e) {}
};

template <typename F>
auto parse_phase(F&& fn) {
  try {
    return fn();
  } catch (const error& e) {
    throw input_error(e);
  }
}

struct ResolvedInput {
  const LibraryEntry* bundled = nullptr;  // when input was builtin:NAME
  json parsed;                            // otherwise the loaded file
  std::string base_dir;
};

ResolvedInput resolve_input(const RunConfig& config) {
  return parse_phase([&] {
    if (config.input.empty()) fail(errc::invalid_input, "no input given (-i)");
    ResolvedInput r;
    if (config.input.rfind("builtin:", 0) == 0) {
      const std::string name = config.input.substr(8);
      r.bundled = find_bundled(name);
      if (!r.bundled) fail(errc::invalid_input, "no bundled extension named \"" + name + "\"");
      return r;
    }
    r.parsed = load_json_file(config.input);
    r.base_dir = std::filesystem::path(config.input).parent_path().string();
    return r;
  });
}

Extension input_extension(const RunConfig& config) {
  ResolvedInput in = resolve_input(config);
  if (in.bundled) return in.bundled->ext;
  return parse_phase([&] { return parse_extension(in.parsed, in.base_dir, ""); });
}

GroupPtr input_group(const RunConfig& config) {
  ResolvedInput in = resolve_input(config);
  if (in.bundled) return in.bundled->ext.total;  // the total group of a bundled extension
  return parse_phase(
      [&] { return std::make_shared<const FiniteGroup>(parse_group(in.parsed, "")); });
}

ordered_json complex_pair(const cxd& v) { return ordered_json::array({v.real(), v.imag()}); }

// ---- command implementations ----

ordered_json cmd_library(const RunConfig& config) {
  ordered_json j = report_envelope(config);
  if (!config.dump.empty()) {
    const LibraryEntry* entry = find_bundled(config.dump);
    if (!entry) fail(errc::invalid_input, "no bundled extension named \"" + config.dump + "\"");
    return extension_to_json(entry->ext, entry->name);
  }
  ordered_json list = ordered_json::array();
  for (const LibraryEntry& e : bundled_library()) {
    list.push_back({{"name", e.name},
                    {"description", e.description},
                    {"kernel_order", e.ext.g().order()},
                    {"total_order", e.ext.h().order()},
                    {"quotient_order", e.ext.q().order()},
                    {"banded", e.banded}});
  }
  j["extensions"] = std::move(list);
  return j;
}

ordered_json cmd_irreps(const RunConfig& config) {
  GroupPtr g = input_group(config);
  const IrrepSet set = compute_irreps(g, config.seed, config.tol);

  ordered_json j = report_envelope(config);
  j["group"] = g->name();
  j["order"] = g->order();
  const auto classes = conjugacy_classes(*g);
  j["class_count"] = classes.size();
  ordered_json dims = ordered_json::array();
  for (const Irrep& r : set.irreps) dims.push_back(r.dim);
  j["dims"] = std::move(dims);
  j["sum_dim_sq"] = set.sum_dim_sq();
  j["residuals"] = {{"hom", sci(set.diag.hom_residual)},
                    {"unitary", sci(set.diag.unitary_residual)},
                    {"orthogonality", sci(set.diag.ortho_residual)},
                    {"class_constancy", sci(set.diag.class_residual)}};
  if (config.characters) {
    ordered_json cls = ordered_json::array();
    for (const auto& c : classes) cls.push_back(c);
    ordered_json chars = ordered_json::array();
    for (const Irrep& r : set.irreps) {
      ordered_json row = ordered_json::array();
      for (const auto& c : classes) row.push_back(complex_pair(r.character[c[0]]));
      chars.push_back(std::move(row));
    }
    j["classes"] = std::move(cls);
    j["characters"] = std::move(chars);
  }
  return j;
}

ordered_json dual_to_json(const DualSpace& dual, std::uint64_t seed) {
  ordered_json orbits = ordered_json::array();
  for (const DualOrbit& o : dual.orbits) {
    ordered_json jo;
    jo["representative"] = o.rep_index;
    jo["rep_dim"] = dual.ghat.irreps[o.rep_index].dim;
    jo["orbit"] = o.orbit;
    jo["stabilizer"] = o.stabilizer;
    jo["cocycle"] = {{"modulus", o.cocycle.modulus},
                     {"values", o.cocycle.values},
                     {"triviality", triviality_name(cocycle_triviality(o.cocycle, seed))}};
    jo["defect_residual"] = sci(o.defect_residual);
    jo["snap_distance"] = sci(o.snap_distance);
    orbits.push_back(std::move(jo));
  }
  return orbits;
}

ordered_json cmd_dual(const RunConfig& config) {
  const Extension ext = input_extension(config);
  const DualSpace dual = compute_dual(ext, config.seed, config.tol);

  ordered_json j = report_envelope(config);
  j["kernel"] = ext.g().name();
  j["total"] = ext.h().name();
  j["quotient"] = ext.q().name();
  j["banded"] = is_banded(ext);
  j["ghat_size"] = dual.ghat.irreps.size();
  ordered_json dims = ordered_json::array();
  for (const Irrep& r : dual.ghat.irreps) dims.push_back(r.dim);
  j["ghat_dims"] = std::move(dims);
  j["orbits"] = dual_to_json(dual, config.seed);
  return j;
}

ordered_json cmd_clifford_check(const RunConfig& config, bool& passed) {
  const Extension ext = input_extension(config);
  const DualSpace dual = compute_dual(ext, config.seed, config.tol);
  const IrrepSet irr_h = compute_irreps(ext.total, derive_seed(config.seed, 0x44), config.tol);
  const CliffordReport report = clifford_count_check(dual, irr_h, config.seed);

  ordered_json j = report_envelope(config);
  j["total_group"] = ext.h().name();
  j["irr_h_count"] = report.h_dims.size();
  j["irr_h_dims"] = report.h_dims;
  j["dual_count"] = report.dual_dims.size();
  j["dual_dims"] = report.dual_dims;
  ordered_json lines = ordered_json::array();
  for (const auto& line : report.orbit_lines) {
    lines.push_back({{"representative", line.rep_index},
                     {"orbit_size", line.orbit_size},
                     {"rep_dim", line.rep_dim},
                     {"twisted_dims", line.twisted_dims}});
  }
  j["orbits"] = std::move(lines);
  j["count_match"] = report.count_match;
  j["dims_match"] = report.dims_match;
  j["pass"] = report.pass();
  passed = report.pass();
  return j;
}

ordered_json cmd_duality_check(const RunConfig& config, bool& passed) {
  const Extension ext = input_extension(config);
  const DualSpace dual = compute_dual(ext, config.seed, config.tol);
  const IrrepSet irr_h = compute_irreps(ext.total, derive_seed(config.seed, 0x44), config.tol);
  const DualityReport report =
      duality_check(dual, irr_h, config.genus_min, config.genus_max, config.seed);

  ordered_json j = report_envelope(config);
  j["kernel_order"] = ext.g().order();
  j["total_order"] = ext.h().order();
  j["quotient_order"] = ext.q().order();
  ordered_json orbits = ordered_json::array();
  for (const auto& term : report.orbit_terms) {
    orbits.push_back({{"representative", term.rep_index},
                      {"orbit_size", term.orbit_size},
                      {"rep_dim", term.rep_dim},
                      {"stabilizer_order", term.stab_order},
                      {"twisted_dims", term.twisted_dims}});
  }
  j["orbits"] = std::move(orbits);
  ordered_json rows = ordered_json::array();
  for (const DualityRow& row : report.rows) {
    rows.push_back({{"genus", row.genus},
                    {"lhs", rational_str(row.lhs)},
                    {"rhs", rational_str(row.rhs)},
                    {"factor", rational_str(row.factor)},
                    {"pass", row.pass}});
  }
  j["rows"] = std::move(rows);
  j["pass"] = report.all_pass;
  passed = report.all_pass;
  return j;
}

ordered_json cmd_oracle(const RunConfig& config, bool& passed) {
  GroupPtr g = input_group(config);
  const int genus = config.genus_min;
  const BigInt count = hom_count_oracle(*g, genus, config.budget);
  const IrrepSet irr = compute_irreps(g, config.seed, config.tol);
  const Rational formula = Rational(g->order()) * gw_point(irr, genus);

  ordered_json j = report_envelope(config);
  j["group"] = g->name();
  j["order"] = g->order();
  j["genus"] = genus;
  j["hom_count"] = count.str();
  j["order_times_gw"] = rational_str(formula);
  passed = Rational(count) == formula;
  j["match"] = passed;
  return j;
}

ordered_json cmd_rcoeff(const RunConfig& config) {
  if (config.degree < 0) fail(errc::invalid_input, "rcoeff requires --deg");
  ResolvedInput in = resolve_input(config);
  if (in.bundled) fail(errc::invalid_input, "rcoeff expects a samples file, not a builtin");
  const auto samples = parse_phase([&] { return parse_samples(in.parsed, ""); });
  const PolyFit fit = fit_poly(samples, config.degree);

  ordered_json j = report_envelope(config);
  j["degree"] = config.degree;
  j["sample_count"] = samples.size();
  ordered_json coeffs = ordered_json::array();
  for (const Rational& c : fit.coefficients) coeffs.push_back(rational_str(c));
  j["coefficients"] = std::move(coeffs);
  j["r0"] = rational_str(fit.coefficients[0]);
  return j;
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    if (config.genus_min < 0 || config.genus_min > config.genus_max ||
        config.genus_max > kMaxGenus) {
      fail(errc::invalid_input, "genus range must satisfy 0 <= min <= max <= " +
                                    std::to_string(kMaxGenus));
    }
    if (config.budget > kMaxBudget) {
      fail(errc::invalid_input, "budget must be at most " + std::to_string(kMaxBudget));
    }

    bool passed = true;
    ordered_json j;
    if (config.command == "library") {
      j = cmd_library(config);
    } else if (config.command == "irreps") {
      j = cmd_irreps(config);
    } else if (config.command == "dual") {
      j = cmd_dual(config);
    } else if (config.command == "clifford-check") {
      j = cmd_clifford_check(config, passed);
    } else if (config.command == "duality-check") {
      j = cmd_duality_check(config, passed);
    } else if (config.command == "oracle") {
      j = cmd_oracle(config, passed);
    } else if (config.command == "rcoeff") {
      j = cmd_rcoeff(config);
    } else {
      fail(errc::invalid_input, "unknown command: " + config.command);
    }
    result.report = j.dump(2) + "\n";
    result.exit_code = passed ? 0 : 1;
  } catch (const input_error& e) {
    result.diagnostic = e.what();
    result.exit_code = 2;
  } catch (const error& e) {
    result.diagnostic = e.what();
    result.exit_code = e.code() == errc::invalid_input ? 2 : 1;
  } catch (const std::exception& e) {
    result.diagnostic = e.what();
    result.exit_code = 1;
  }
  return result;
}

int run_main(int argc, char** argv) {
  CLI::App app{"finite-group gerbe duality toolkit"};
  app.require_subcommand(1);

  RunConfig config;
  std::string genus_range = "0";

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) {
      cmd->add_option("-i,--input", config.input, "input JSON file or builtin:NAME")
          ->required();
    }
    cmd->add_option("--seed", config.seed, "seed for all randomized numerics");
    cmd->add_option("--tol", config.tol, "matrix residual tolerance");
  };

  CLI::App* library = app.add_subcommand("library", "list bundled extensions");
  library->add_option("--dump", config.dump, "emit one bundled extension as JSON");

  CLI::App* irreps = app.add_subcommand("irreps", "irreducible representations of a group");
  add_common(irreps, true);
  irreps->add_flag("--characters", config.characters, "include the character table");

  CLI::App* dual = app.add_subcommand("dual", "dual space of an extension");
  add_common(dual, true);

  CLI::App* clifford = app.add_subcommand("clifford-check", "Irr(H) vs twisted dual counts");
  add_common(clifford, true);

  CLI::App* duality = app.add_subcommand("duality-check", "point-target duality per genus");
  add_common(duality, true);
  duality->add_option("--genus", genus_range, "genus or range, e.g. 2 or 0..3");

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive surface-tuple count vs formula");
  add_common(oracle, true);
  oracle->add_option("--genus", genus_range, "genus (single value)");
  oracle->add_option("--budget", config.budget, "max |H|^(2g) tuple space");

  CLI::App* rcoeff = app.add_subcommand("rcoeff", "exact polynomial fit and r^0 coefficient");
  add_common(rcoeff, true);
  rcoeff->add_option("--deg", config.degree, "polynomial degree bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  config.command = app.get_subcommands().front()->get_name();

  // genus range: "g" or "a..b"
  const auto dots = genus_range.find("..");
  try {
    if (dots == std::string::npos) {
      config.genus_min = config.genus_max = std::stoi(genus_range);
    } else {
      config.genus_min = std::stoi(genus_range.substr(0, dots));
      config.genus_max = std::stoi(genus_range.substr(dots + 2));
    }
  } catch (const std::exception&) {
    std::cerr << "invalid genus range: " << genus_range << "\n";
    return 2;
  }

  const RunResult result = run(config);
  if (!result.report.empty()) std::cout << result.report;
  if (!result.diagnostic.empty()) std::cerr << result.diagnostic << "\n";
  return result.exit_code;
}

}  // namespace gerbe

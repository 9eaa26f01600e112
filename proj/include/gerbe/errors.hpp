#pragma once

#include <stdexcept>
#include <string>

namespace gerbe {

enum class errc {
  no_identity_at_zero,
  not_latin_square,
  non_associative,
  order_bound_exceeded,
  not_injective,
  not_surjective,
  order_mismatch,
  not_exact,
  not_automorphism,
  group_mismatch,
  numerical_failure,
  action_broken,
  not_scalar,
  snap_failure,
  budget_exceeded,
  inconsistent,
  insufficient,
  invalid_input,
};

const char* errc_name(errc code);

// All library failures surface as a single exception type carrying a code,
// so callers can branch on the code and users still get a readable message.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace gerbe

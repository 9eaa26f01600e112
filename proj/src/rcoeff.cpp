#include "gerbe/rcoeff.hpp"

#include <set>

namespace gerbe {

Rational PolyFit::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyFit fit_poly(const std::vector<Sample>& samples, int degree) {
  if (degree < 0) fail(errc::invalid_input, "degree must be non-negative");
  const size_t need = static_cast<size_t>(degree) + 1;
  if (samples.size() < need) {
    fail(errc::insufficient, "need at least " + std::to_string(need) + " samples, got " +
                                 std::to_string(samples.size()));
  }
  std::set<long long> rs;
  for (const Sample& s : samples) {
    if (s.r <= 0) fail(errc::invalid_input, "sample points must be positive integers");
    if (!rs.insert(s.r).second) {
      fail(errc::invalid_input, "duplicate sample point r = " + std::to_string(s.r));
    }
  }

  // Lagrange basis, accumulated in coefficient form
  PolyFit fit;
  fit.coefficients.assign(need, Rational(0));
  for (size_t i = 0; i < need; ++i) {
    std::vector<Rational> basis{Rational(1)};  // product of (x - r_j)
    Rational denom = 1;
    for (size_t j = 0; j < need; ++j) {
      if (j == i) continue;
      const Rational rj(samples[j].r);
      basis.push_back(0);
      for (size_t k = basis.size() - 1; k > 0; --k) basis[k] = basis[k - 1] - rj * basis[k];
      basis[0] = -rj * basis[0];
      denom *= Rational(samples[i].r) - rj;
    }
    const Rational scale = samples[i].value / denom;
    for (size_t k = 0; k < basis.size(); ++k) fit.coefficients[k] += scale * basis[k];
  }

  for (size_t i = need; i < samples.size(); ++i) {
    if (fit.eval(Rational(samples[i].r)) != samples[i].value) {
      fail(errc::inconsistent, "sample at r = " + std::to_string(samples[i].r) +
                                   " does not lie on the degree-" + std::to_string(degree) +
                                   " fit");
    }
  }
  return fit;
}

Rational r0_coefficient(const std::vector<Sample>& samples, int degree) {
  return fit_poly(samples, degree).coefficients[0];
}

}  // namespace gerbe

#pragma once

#include <vector>

#include "gerbe/gw.hpp"

namespace gerbe {

struct Sample {
  long long r;
  Rational value;
};

// Exact polynomial through the first degree+1 samples, constant term first.
struct PolyFit {
  std::vector<Rational> coefficients;

  Rational eval(const Rational& x) const;
};

// Lagrange interpolation in exact rationals. Every sample beyond the first
// degree+1 is checked against the fit; any disagreement is an error, since
// the caller asserted the data is polynomial of degree <= degree.
PolyFit fit_poly(const std::vector<Sample>& samples, int degree);

Rational r0_coefficient(const std::vector<Sample>& samples, int degree);

}  // namespace gerbe

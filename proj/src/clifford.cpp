#include "gerbe/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gerbe {

FiniteGroup central_extension(const Cocycle& c) {
  const FiniteGroup& q = c.base;
  const int nq = q.order();
  const int m = c.modulus;
  const int n = m * nq;

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int k1 = 0; k1 < m; ++k1)
    for (int q1 = 0; q1 < nq; ++q1)
      for (int k2 = 0; k2 < m; ++k2)
        for (int q2 = 0; q2 < nq; ++q2) {
          const int k = (k1 + k2 + c.values[q1][q2]) % m;
          table[k1 * nq + q1][k2 * nq + q2] = k * nq + q.mul(q1, q2);
        }

  // full validation; associativity here is the cocycle identity
  return FiniteGroup::validate(std::move(table),
                               "E(" + q.name() + ",m=" + std::to_string(m) + ")");
}

TwistedIrrepData twisted_irreps(const Cocycle& c, std::uint64_t seed, double tol) {
  const int nq = c.base.order();
  const int m = c.modulus;

  const auto ext_group = std::make_shared<const FiniteGroup>(central_extension(c));
  const IrrepSet irr = compute_irreps(ext_group, derive_seed(seed, 0xCE), tol);

  const int central = m > 1 ? nq : 0;  // index of (1, e)
  const cxd target = std::polar(1.0, 2.0 * std::numbers::pi / m);

  TwistedIrrepData out;
  out.base_order = nq;
  for (const Irrep& r : irr.irreps) {
    // central element acts as a scalar on any irrep
    const cxd scalar = r.mats[central].trace() / static_cast<double>(r.dim);
    if ((r.mats[central] - scalar * Matrix::Identity(r.dim, r.dim)).norm() > tol) {
      fail(errc::not_scalar, "central generator does not act as a scalar");
    }
    if (std::abs(scalar - target) < 1e-6) out.dims.push_back(r.dim);
  }
  std::sort(out.dims.begin(), out.dims.end());
  out.count = static_cast<int>(out.dims.size());

  int sum_sq = 0;
  for (int d : out.dims) sum_sq += d * d;
  if (sum_sq != nq) {
    fail(errc::numerical_failure,
         "twisted slice is not an isotypic decomposition of the group algebra: sum d^2 = " +
             std::to_string(sum_sq) + " != " + std::to_string(nq));
  }
  return out;
}

CliffordReport clifford_count_check(const DualSpace& dual, const IrrepSet& irr_h,
                                    std::uint64_t seed) {
  if (!irr_h.group->same_table(dual.ext.h())) {
    fail(errc::group_mismatch, "Irr(H) was not computed for the extension's total group");
  }

  CliffordReport report;
  for (const Irrep& r : irr_h.irreps) report.h_dims.push_back(r.dim);
  std::sort(report.h_dims.begin(), report.h_dims.end());

  for (const DualOrbit& orbit : dual.orbits) {
    const TwistedIrrepData data =
        twisted_irreps(orbit.cocycle, derive_seed(seed, 0x9000 + orbit.rep_index));
    CliffordReport::OrbitLine line;
    line.rep_index = orbit.rep_index;
    line.orbit_size = static_cast<int>(orbit.orbit.size());
    line.rep_dim = dual.ghat.irreps[orbit.rep_index].dim;
    line.twisted_dims = data.dims;
    for (int t : data.dims) report.dual_dims.push_back(line.orbit_size * line.rep_dim * t);
    report.orbit_lines.push_back(std::move(line));
  }
  std::sort(report.dual_dims.begin(), report.dual_dims.end());

  report.count_match = report.h_dims.size() == report.dual_dims.size();
  report.dims_match = report.h_dims == report.dual_dims;
  return report;
}

}  // namespace gerbe

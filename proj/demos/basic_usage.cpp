// Walks through the library on x_k = e^{k^2}: differences, membership,
// statistical convergence, an Orlicz paranorm and an α-dual check.

#include <iostream>
#include <vector>

#include "geomseq/geomseq.hpp"

int main() {
  using namespace geomseq;
  const std::size_t n = 2000;
  const GeoSeq x = generate(LogPolynomial{2}, n);
  const LambdaSeq lam = LambdaSeq::cesaro(n);

  std::cout << "x_3 = e^" << x.at(3).log() << "\n";
  std::cout << "log Delta^2 x_1 = " << diff_binomial(x, 2).at(1).log() << "\n";

  for (unsigned m : {1u, 2u}) {
    const MembershipResult r = space_membership(x, m, lam, Space::abs_cesaro, 1e-2);
    std::cout << "[C,1](Delta^" << m << "): " << to_string(r.verdict) << ", L = e^" << r.limit.L.log() << "\n";
  }

  const std::vector<double> eps = {0.1, 0.5};
  const StatResult s = stat_convergence(x, 2, lam, eps, 1e-2);
  std::cout << "S(Delta^2): " << to_string(s.verdict) << "\n";

  const ParanormResult g = paranorm_g(x, 2, lam, OrliczFn::power(1.0), PSeq::constant(1.0));
  std::cout << "paranorm g(x) = e^" << g.g->log() << "\n";

  const GeoSeq canon = dual_canonical(lam, 2, n);
  std::vector<double> a(n);
  for (std::size_t k = 1; k <= n; ++k) a[k - 1] = 1.0 / (static_cast<double>(k) * k * k * k);
  const AlphaDualResult d = alpha_dual_membership(GeoSeq(a, "a"), lam, 2, 1e-2);
  const PairingBound b = pairing_bound(GeoSeq(a, "a"), canon, lam, 2);
  std::cout << "alpha dual member: " << to_string(d.verdict) << ", pairing " << b.pairing << " <= " << b.bound
            << "\n";
}

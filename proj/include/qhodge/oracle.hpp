#pragma once

#include "qhodge/lattice.hpp"
#include "qhodge/qseries.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qhodge::oracle {

/// Product by a full double loop over the dense exponent window
/// [min exponent, cap] of each operand, visiting every grid point.
inline QSeries dense_mul_reference(const QSeries& a, const QSeries& b) {
  const QExp cap = std::min(a.cap(), b.cap());
  QSeries r(cap);
  if (a.is_zero() || b.is_zero()) return r;
  const std::int64_t lo_a = a.min_exponent()->num, lo_b = b.min_exponent()->num;
  const std::int64_t hi_a = a.cap().num, hi_b = b.cap().num;
  std::vector<HodgePoly> da, db;
  for (std::int64_t e = lo_a; e <= hi_a; ++e) da.push_back(a.coeff(QExp(e)));
  for (std::int64_t e = lo_b; e <= hi_b; ++e) db.push_back(b.coeff(QExp(e)));
  const std::int64_t lo = lo_a + lo_b;
  std::vector<HodgePoly> acc(hi_a - lo_a + hi_b - lo_b + 1);
  for (std::size_t i = 0; i < da.size(); ++i)
    for (std::size_t j = 0; j < db.size(); ++j) acc[i + j] += da[i] * db[j];
  for (std::size_t k = 0; k < acc.size(); ++k) r.add_term(QExp(lo + std::int64_t(k)), acc[k]);
  return r;
}

/// Scans every zeta = alpha sigma + beta f with |alpha|, |beta| <= box on F_1
/// and keeps the walls of type (c1, n) with zeta H < 0 < zeta f.
inline std::vector<WallClass> walls_by_exhaustion(const DivisorClass& c1, const DivisorClass& H,
                                                  const DivisorClass& f, int n, int box) {
  const SurfaceLattice L = surfaces::f1();
  const int bound = 4 * n - self_intersection(L, c1);
  std::vector<WallClass> out;
  for (int alpha = -box; alpha <= box; ++alpha) {
    for (int beta = -box; beta <= box; ++beta) {
      const DivisorClass z{alpha, beta};
      if (!(intersect(L, z, H) < 0 && intersect(L, z, f) > 0)) continue;
      if ((alpha - c1[0]) % 2 != 0 || (beta - c1[1]) % 2 != 0) continue;
      const int zsq = self_intersection(L, z);
      if (zsq < -bound) continue;
      out.push_back({z, zsq, intersect(L, z, L.canonical), (bound + zsq) / 4});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const WallClass& x, const WallClass& y) { return x.zeta < y.zeta; });
  return out;
}

/// Walls of the blowup for phi^*c1 - aE found by scanning (alpha, beta, s) in
/// a box on the rank-3 lattice, using phi^*H and phi^*f as the polarization
/// pair. Returned as lifted classes sorted by coordinates.
inline std::vector<WallClass> blowup_walls_by_exhaustion(const DivisorClass& c1, int a,
                                                         const DivisorClass& H,
                                                         const DivisorClass& f, int n, int box) {
  const SurfaceLattice L = surfaces::f1_blowup();
  const DivisorClass c1t = surfaces::lift(c1, -a);
  const DivisorClass Ht = surfaces::lift(H, 0), ft = surfaces::lift(f, 0);
  const int bound = 4 * n - self_intersection(L, c1t);
  std::vector<WallClass> out;
  for (int alpha = -box; alpha <= box; ++alpha)
    for (int beta = -box; beta <= box; ++beta)
      for (int s = -box; s <= box; ++s) {
        const DivisorClass z{alpha, beta, s};
        if (!(intersect(L, z, Ht) < 0 && intersect(L, z, ft) > 0)) continue;
        bool parity = true;
        for (std::size_t i = 0; i < 3; ++i) parity = parity && (z[i] - c1t[i]) % 2 == 0;
        if (!parity) continue;
        const int zsq = self_intersection(L, z);
        if (zsq < -bound) continue;
        out.push_back({z, zsq, intersect(L, z, L.canonical), (bound + zsq) / 4});
      }
  std::sort(out.begin(), out.end(),
            [](const WallClass& x, const WallClass& y) { return x.zeta < y.zeta; });
  return out;
}

/// prod_{n>=1} (1 - q^n) from Euler's pentagonal number theorem,
/// sum_k (-1)^k q^{k(3k-1)/2}; integer coefficients only.
inline QSeries euler_product(QExp cap) {
  QSeries r(cap);
  r.add_term(QExp(0), HodgePoly(1));
  for (std::int64_t k = 1; QExp::integer(k * (3 * k - 1) / 2) <= cap; ++k) {
    const HodgePoly sign(k % 2 ? -1 : 1);
    r.add_term(QExp::integer(k * (3 * k - 1) / 2), sign);
    r.add_term(QExp::integer(k * (3 * k + 1) / 2), sign);
  }
  return r;
}

/// [q^{1/24} prod (1 - q^n)]^2 at x = y = 1.
inline QSeries eta_sq_at_one(QExp cap) {
  const QExp shift = QExp::fraction(1, 12);
  QSeries r(cap);
  if (cap < shift) return r;
  const QSeries e = euler_product(cap - shift);
  const QSeries sq = e * e;
  for (const auto& [ex, c] : sq.terms()) r.add_term(ex + shift, c);
  return r;
}

/// sum_{n in Z} q^{(n + a/2)^2}.
inline QSeries theta_at_one(int a, QExp cap) {
  if (cap > QExp::integer(1024))
    throw std::invalid_argument("theta_at_one: cap too large for the fixed window");
  QSeries r(cap);
  for (std::int64_t n = -64; n <= 64; ++n) {
    // (n + a/2)^2 = (2n + a)^2 / 4
    const std::int64_t k = 2 * n + a;
    r.add_term(QExp(6 * k * k), HodgePoly(1));
  }
  return r;
}

/// prod_{n>=1} (1 - q^n)^{-e}, expanded via the partition-style recurrence
/// n c_n = e sum_{k=1}^{n} sigma(k) c_{n-k}.
inline QSeries euler_product_power(int e, QExp cap) {
  const std::int64_t N = cap.floor();
  QSeries r(QExp::integer(std::max<std::int64_t>(N, 0)));
  if (N < 0) return r;
  std::vector<BigInt> sigma(N + 1, 0), c(N + 1, 0);
  for (std::int64_t d = 1; d <= N; ++d)
    for (std::int64_t m = d; m <= N; m += d) sigma[m] += d;
  c[0] = 1;
  for (std::int64_t n = 1; n <= N; ++n) {
    BigInt s = 0;
    for (std::int64_t k = 1; k <= n; ++k) s += sigma[k] * c[n - k];
    c[n] = BigInt(e) * s / n;
  }
  for (std::int64_t n = 0; n <= N; ++n) r.add_term(QExp::integer(n), HodgePoly(c[n]));
  return r;
}

}  // namespace qhodge::oracle

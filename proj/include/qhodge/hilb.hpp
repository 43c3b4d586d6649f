#pragma once

#include "qhodge/lattice.hpp"
#include "qhodge/qseries.hpp"

namespace qhodge {

/// Generating function  sum_n e(Hilb^n(X); x, y) q^n  as the product
///   prod_{n>=1} prod_{s,t} (1 - x^{s+n-1} y^{t+n-1} q^n)^{(-1)^{s+t+1} h^{s,t}}.
/// Factors are folded in by increasing n; factors with n > cap are omitted.
inline QSeries hilb_series(const SurfaceLattice& L, QExp cap) {
  if (cap < QExp(0)) throw std::invalid_argument("hilb_series: cap must be >= 0");
  const QExp icap = QExp::integer(cap.floor());
  QSeries result = QSeries::one(icap);
  for (int n = 1; n <= icap.floor(); ++n) {
    for (const auto& [st, h] : L.hodge) {
      if (h == 0) continue;
      const auto [s, t] = st;
      const int power = ((s + t + 1) % 2 ? -1 : 1) * h;
      const QSeries mono =
          QSeries::monomial(QExp::integer(n), HodgePoly::monomial(s + n - 1, t + n - 1), icap);
      const QSeries one_minus = QSeries::one(icap) - mono;
      const QSeries factor = power < 0 ? qs_geom(mono) : one_minus;
      for (int i = 0; i < (power < 0 ? -power : power); ++i) result = result * factor;
    }
  }
  // Reported at the requested cap; there is nothing between floor(cap) and cap.
  QSeries out(cap);
  for (const auto& [e, c] : result.terms()) out.add_term(e, c);
  return out;
}

/// Checks  H~(tq) * prod_{n>=1} (1 - t^{2n} q^n) == H(tq)  up to cap, where H
/// and H~ are the Hilbert-scheme series of F_1 and of its blowup.
inline bool hilb_ratio_check(QExp cap) {
  const QSeries lhs_hilb = qs_subst_q_to_tq(hilb_series(surfaces::f1_blowup(), cap));
  const QSeries rhs = qs_subst_q_to_tq(hilb_series(surfaces::f1(), cap));
  QSeries prod = QSeries::one(cap);
  for (std::int64_t n = 1; QExp::integer(n) <= cap; ++n) {
    QSeries factor = QSeries::one(cap);
    factor.add_term(QExp::integer(n), -HodgePoly::t_power(static_cast<int>(2 * n)));
    prod = prod * factor;
  }
  return lhs_hilb * prod == rhs;
}

}  // namespace qhodge

#pragma once

#include "qhodge/hilb.hpp"
#include "qhodge/lattice.hpp"
#include "qhodge/qseries.hpp"

#include <stdexcept>
#include <vector>

namespace qhodge {

/// Data fixing a family of Gieseker moduli spaces M_H(c1, n) on F_1.
struct ModuliProblem {
  SurfaceLattice surface = surfaces::f1();
  DivisorClass c1 = surfaces::sigma();
  DivisorClass H = surfaces::standard_polarization();
  DivisorClass f = surfaces::fiber();

  /// The configuration used for the blowup comparison: c1 = sigma, H = sigma + 2f.
  static ModuliProblem standard() { return {}; }

  void validate() const { detail::check_wall_setup(surface, c1, H, f); }
  int c1_sq() const { return self_intersection(surface, c1); }
};

enum class GenfunMode { per_n, closed };

namespace detail {

/// sum_{s+t=ell} e(Hilb^s) e(Hilb^t), read off a Hilbert series.
inline HodgePoly hilb_convolution(const QSeries& hilb, int ell) {
  HodgePoly r;
  for (int s = 0; s <= ell; ++s)
    r += hilb.coeff(QExp::integer(s)) * hilb.coeff(QExp::integer(ell - s));
  return r;
}

/// Contribution of one wall to e(M_H(c1, n)):
///   t^{ell - (zeta^2 + zeta K)/2 - chi} (1 - t^{zeta K})/(1 - t) sum_{s+t=ell} ...
inline HodgePoly wall_term(int ell, int zeta_sq, int zeta_dot_K, int chi, const QSeries& hilb) {
  if ((zeta_sq + zeta_dot_K) % 2 != 0)
    throw std::logic_error("wall_term: zeta^2 + zeta.K must be even");
  const int texp = ell - (zeta_sq + zeta_dot_K) / 2 - chi;
  return HodgePoly::t_power(texp) * t_geometric_quotient(zeta_dot_K) *
         hilb_convolution(hilb, ell);
}

/// sum_{zeta in Lambda_H, -zeta^2/4 <= cap} t^{-(zeta^2+zeta K)/2 - chi}
///   (1 - t^{zeta K})/(1 - t) q^{-zeta^2/4}
inline QSeries wall_series(const ModuliProblem& P, int chi, QExp cap) {
  QSeries w(cap);
  if (cap < QExp(0)) return w;
  const int bound = static_cast<int>(cap.num / 6);  // -zeta^2 <= 4 cap
  for (const WallClass& z : walls_with_bound(P.surface, P.c1, P.H, bound)) {
    const int texp = -(z.zeta_sq + z.zeta_dot_K) / 2 - chi;
    w.add_term(QExp(-6 * std::int64_t(z.zeta_sq)),
               HodgePoly::t_power(texp) * t_geometric_quotient(z.zeta_dot_K));
  }
  return w;
}

inline int max_ell(const std::vector<WallClass>& walls) {
  int m = 0;
  for (const auto& w : walls) m = std::max(m, w.ell);
  return m;
}

}  // namespace detail

/// e(M^G_H(c1, n); x, y) as the wall-crossing sum from the empty chamber
/// near f to H.
inline HodgePoly gieseker_hodge(const ModuliProblem& P, int n) {
  const auto walls = walls_base(P.surface, P.c1, P.H, P.f, n);
  if (walls.empty()) return {};
  const QSeries hilb = hilb_series(P.surface, QExp::integer(detail::max_ell(walls)));
  HodgePoly r;
  for (const WallClass& w : walls)
    r += detail::wall_term(w.ell, w.zeta_sq, w.zeta_dot_K, P.surface.chi_O, hilb);
  return r;
}

/// e(M^G_{H_infty}(phi^*c1 - aE, n); x, y) on the blowup of F_1.
inline HodgePoly gieseker_hodge_blowup(const ModuliProblem& P, int a, int n) {
  P.validate();
  const SurfaceLattice up = surfaces::f1_blowup();
  const auto walls = walls_blowup_decompose(P.c1, a, n, P.H, P.f);
  if (walls.empty()) return {};
  int ell = 0;
  for (const auto& w : walls) ell = std::max(ell, w.lifted.ell);
  const QSeries hilb = hilb_series(up, QExp::integer(ell));
  HodgePoly r;
  for (const BlowupWall& w : walls)
    r += detail::wall_term(w.lifted.ell, w.lifted.zeta_sq, w.lifted.zeta_dot_K, up.chi_O, hilb);
  return r;
}

/// sum_n e(M^G_H(c1, n)) q^{n - c1^2/4} up to cap.
///
/// per_n sums the wall-crossing formula one n at a time; closed evaluates
///   [sum_n e(Hilb^n)(tq)^n]^2 * sum_zeta t^{-(zeta^2+zeta K)/2 - chi}
///   (1 - t^{zeta K})/(1 - t) q^{-zeta^2/4}.
inline QSeries base_genfun(const ModuliProblem& P, QExp cap, GenfunMode mode) {
  P.validate();
  const int c1sq = P.c1_sq();
  if (mode == GenfunMode::per_n) {
    QSeries r(cap);
    for (int n = static_cast<int>(detail::ceil_div(c1sq, 4));; ++n) {
      const QExp e(24 * std::int64_t(n) - 6 * std::int64_t(c1sq));
      if (e > cap) break;
      r.add_term(e, gieseker_hodge(P, n));
    }
    return r;
  }
  if (cap < QExp(0)) return QSeries(cap);
  const QSeries hilb = qs_subst_q_to_tq(hilb_series(P.surface, cap));
  return hilb * hilb * detail::wall_series(P, P.surface.chi_O, cap);
}

/// sum_n e(M^G_{H_infty}(phi^*c1 - aE, n)) q^{n - c1~^2/4} up to cap.
///
/// per_n enumerates the blowup walls phi^*zeta + (2t - a)E directly; closed
/// factors their contribution into a theta series times the base wall sum.
inline QSeries blowup_genfun(const ModuliProblem& P, int a, QExp cap, GenfunMode mode) {
  if (a != 0 && a != 1) throw std::invalid_argument("blowup_genfun: a must be 0 or 1");
  P.validate();
  const SurfaceLattice up = surfaces::f1_blowup();
  const int c1t_sq = P.c1_sq() - a * a;
  if (mode == GenfunMode::per_n) {
    QSeries r(cap);
    for (int n = static_cast<int>(detail::ceil_div(c1t_sq, 4));; ++n) {
      const QExp e(24 * std::int64_t(n) - 6 * std::int64_t(c1t_sq));
      if (e > cap) break;
      r.add_term(e, gieseker_hodge_blowup(P, a, n));
    }
    return r;
  }
  if (cap < QExp(0)) return QSeries(cap);
  const QSeries hilb = qs_subst_q_to_tq(hilb_series(up, cap));
  return hilb * hilb * qs_theta(a, cap, ThetaVariant::blowup) *
         detail::wall_series(P, up.chi_O, cap);
}

}  // namespace qhodge

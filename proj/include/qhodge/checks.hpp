#pragma once

// Exact identity checks between independently computed series. Each check
// returns a CheckResult; on mismatch it carries the first differing exponent
// and both coefficients there.

#include "qhodge/hilb.hpp"
#include "qhodge/oracle.hpp"
#include "qhodge/series_json.hpp"
#include "qhodge/universal.hpp"
#include "qhodge/wallcross.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qhodge {

struct SeriesDiff {
  QExp q;
  HodgePoly lhs;
  HodgePoly rhs;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::optional<SeriesDiff> first_diff;
};

/// Smallest exponent at which the two series differ (caps ignored).
inline std::optional<SeriesDiff> first_difference(const QSeries& lhs, const QSeries& rhs) {
  auto a = lhs.terms().begin(), ae = lhs.terms().end();
  auto b = rhs.terms().begin(), be = rhs.terms().end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) return SeriesDiff{a->first, a->second, {}};
    if (a == ae || b->first < a->first) return SeriesDiff{b->first, {}, b->second};
    if (a->second != b->second) return SeriesDiff{a->first, a->second, b->second};
    ++a;
    ++b;
  }
  return std::nullopt;
}

inline ordered_json to_json(const SeriesDiff& d) {
  ordered_json j;
  j["q"] = d.q.num;
  j["lhs"] = to_json(d.lhs);
  j["rhs"] = to_json(d.rhs);
  return j;
}

namespace detail {

inline CheckResult compare(std::string name, const QSeries& lhs, const QSeries& rhs,
                           std::string what) {
  CheckResult r{std::move(name), true, std::move(what), std::nullopt};
  if (auto d = first_difference(lhs, rhs)) {
    r.pass = false;
    r.first_diff = d;
    r.detail += "; first difference at q^" + d->q.to_string() + ": " + d->lhs.to_string() +
                " vs " + d->rhs.to_string();
  }
  return r;
}

inline std::string cap_str(QExp cap) { return "cap " + cap.to_string(); }

}  // namespace detail

/// Per-n wall-crossing sum against its closed product form on F_1.
inline CheckResult check_base_genfun_modes(QExp cap) {
  const auto P = ModuliProblem::standard();
  return detail::compare("base generating function per-n == closed",
                         base_genfun(P, cap, GenfunMode::per_n),
                         base_genfun(P, cap, GenfunMode::closed), detail::cap_str(cap));
}

/// Same on the blowup: direct enumeration of blowup walls against the theta
/// factorization.
inline CheckResult check_blowup_genfun_modes(int a, QExp cap) {
  const auto P = ModuliProblem::standard();
  return detail::compare("blowup generating function per-n == closed, a=" + std::to_string(a),
                         blowup_genfun(P, a, cap, GenfunMode::per_n),
                         blowup_genfun(P, a, cap, GenfunMode::closed), detail::cap_str(cap));
}

inline CheckResult check_hilb_ratio(QExp cap) {
  CheckResult r{"Hilbert series ratio of blowup to F_1", hilb_ratio_check(cap),
                detail::cap_str(cap), std::nullopt};
  return r;
}

/// blowup * [q^{1/24} prod(1 - t^{2n} q^n)]^2 == q^{1/12} * theta_a * base.
inline CheckResult check_blowup_formula(int a, QExp cap) {
  const auto P = ModuliProblem::standard();
  const QSeries blow = blowup_genfun(P, a, cap, GenfunMode::closed);
  const QSeries base = base_genfun(P, cap, GenfunMode::closed);
  const QSeries shift = QSeries::monomial(QExp::fraction(1, 12), HodgePoly(1), cap);
  return detail::compare("blowup formula (cross-multiplied), a=" + std::to_string(a),
                         blow * qs_eta_sq(cap), shift * base * qs_theta(a, cap),
                         detail::cap_str(cap));
}

/// Bracket built from the B_{a,n} enumeration against the closed bracket.
inline CheckResult check_z1_closed_form(int a, QExp cap) {
  return detail::compare("Z~ bracket from B == closed form, a=" + std::to_string(a),
                         z1_bracket_from_B(a, cap), z1_bracket_closed(a, cap),
                         detail::cap_str(cap));
}

inline CheckResult check_u_strata(int max_m) {
  CheckResult r{"e(U(m1,m2)) closed form == stratification recursion", true, "", std::nullopt};
  int cases = 0;
  for (int m2 = 0; m2 <= max_m; ++m2)
    for (int m1 = 0; m1 <= m2; ++m1, ++cases)
      if (u_poly(m1, m2) != u_poly_via_strata(m1, m2)) {
        r.pass = false;
        r.detail += "mismatch at (" + std::to_string(m1) + "," + std::to_string(m2) + "): " +
                    u_poly(m1, m2).to_string() + " vs " +
                    u_poly_via_strata(m1, m2).to_string() + "; ";
      }
  r.detail += std::to_string(cases) + " cases, 0 <= m1 <= m2 <= " + std::to_string(max_m);
  return r;
}

struct PointCountRow {
  int p, m1, m2;
  std::int64_t count;
  BigInt expected;
};

inline std::vector<PointCountRow> u_point_count_table(const std::vector<int>& primes,
                                                      int max_sum) {
  std::vector<PointCountRow> rows;
  for (int p : primes)
    for (int m1 = 0; m1 <= max_sum; ++m1)
      for (int m2 = 0; m1 + m2 <= max_sum; ++m2)
        rows.push_back({p, m1, m2, count_U_points(p, m1, m2), u_poly(m1, m2).at_t(p)});
  return rows;
}

inline CheckResult check_u_point_counts() {
  CheckResult r{"#U(m1,m2)(F_p) == e(U(m1,m2)) at t=p", true, "", std::nullopt};
  const auto rows = u_point_count_table({2, 3}, 5);
  for (const auto& row : rows)
    if (BigInt(row.count) != row.expected) {
      r.pass = false;
      r.detail += "p=" + std::to_string(row.p) + " (" + std::to_string(row.m1) + "," +
                  std::to_string(row.m2) + "): " + std::to_string(row.count) +
                  " vs " + row.expected.str() + "; ";
    }
  r.detail += std::to_string(rows.size()) + " cases, p in {2,3}, m1+m2 <= 5";
  return r;
}

/// Euler-characteristic specializations against integer-only oracles.
inline std::vector<CheckResult> check_specializations(int a, QExp cap) {
  std::vector<CheckResult> out;
  const SeriesQuotient z2 = z2_closed(a, cap);
  const QExp c2 = z2.numerator.cap();
  const std::string as = ", a=" + std::to_string(a);
  out.push_back(detail::compare("theta at x=y=1 == sum q^{(n+a/2)^2}" + as,
                                qs_specialize_xy1(z2.numerator), oracle::theta_at_one(a, c2),
                                detail::cap_str(c2)));
  out.push_back(detail::compare("eta-type square at x=y=1 == [q^{1/24} prod(1-q^n)]^2",
                                qs_specialize_xy1(z2.denominator), oracle::eta_sq_at_one(c2),
                                detail::cap_str(c2)));
  out.push_back(detail::compare("Z~ bracket at x=y=1 == theta at x=y=1" + as,
                                qs_specialize_xy1(z1_bracket_closed(a, cap)),
                                qs_specialize_xy1(qs_theta(a, cap)), detail::cap_str(cap)));
  return out;
}

/// Hilbert series of F_1 at x=y=1 against prod (1 - q^n)^{-e(F_1)}.
inline CheckResult check_hilb_euler(QExp cap) {
  const SurfaceLattice L = surfaces::f1();
  const QExp icap = QExp::integer(cap.floor());
  return detail::compare("Hilbert series of F_1 at x=y=1 == prod (1-q^n)^{-4}",
                         qs_specialize_xy1(hilb_series(L, icap)),
                         oracle::euler_product_power(L.euler_characteristic(), icap),
                         detail::cap_str(icap));
}

struct ProbeReport {
  int a = 0;
  QExp order;
  bool agree = true;
  std::optional<SeriesDiff> first_diff;
};

/// Closed bracket against the conjectured product bracket. A report, not an
/// assertion: disagreement is a finding.
inline ProbeReport probe_conjectured_product(int a, QExp cap) {
  ProbeReport r;
  r.a = a;
  r.order = cap;
  r.first_diff = first_difference(z1_bracket_closed(a, cap), z1_bracket_conjectured(a, cap));
  r.agree = !r.first_diff.has_value();
  return r;
}

/// {"order": N, "agree": bool, "first_diff": {q, lhs, rhs} | null}
inline ordered_json to_json(const ProbeReport& r) {
  ordered_json j;
  j["order"] = r.order.is_integer() ? ordered_json(r.order.floor())
                                    : ordered_json(r.order.to_string());
  j["agree"] = r.agree;
  j["first_diff"] = r.first_diff ? to_json(*r.first_diff) : ordered_json(nullptr);
  return j;
}

}  // namespace qhodge

#pragma once

#include "qhodge/qseries.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qhodge {

// ---------------------------------------------------------------------------
// U(m1, m2): coprime pairs of binary forms of degrees m1, m2 up to a common
// scalar.

namespace detail {

inline HodgePoly u_poly_ordered(int m1, int m2) {
  if (m1 == 0 && m2 == 0) return HodgePoly::t_power(1) + HodgePoly(1);
  if (m1 == 0) return HodgePoly::t_power(m2 + 1);
  return HodgePoly::t_power(m1 + m2 - 1) * (HodgePoly::t_power(2) - HodgePoly(1));
}

/// e(P^d) = 1 + t + ... + t^d.
inline HodgePoly projective_space(int d) { return t_geometric_quotient(d + 1); }

}  // namespace detail

/// Virtual Hodge polynomial of U(m1, m2). Arguments are put in order first.
inline HodgePoly u_poly(int m1, int m2) {
  if (m1 < 0 || m2 < 0) throw std::invalid_argument("u_poly: degrees must be non-negative");
  if (m1 > m2) std::swap(m1, m2);
  return detail::u_poly_ordered(m1, m2);
}

/// e(U(m1, m2)) recovered from the stratification of P^{m1+m2+1} - P^{m2} by
/// the degree d of gcd(f1, f2): the d-stratum is P^d times U(m1-d, m2-d)
/// (or a punctured P^1 when d = m1 = m2), so
///   e(U(m1,m2)) = e(P^{m1+m2+1}) - e(P^{m2}) - sum_{d>=1} e(stratum_d).
/// Uses only the recursion, never the closed form.
inline HodgePoly u_poly_via_strata(int m1, int m2) {
  if (m1 < 0 || m1 > m2)
    throw std::invalid_argument("u_poly_via_strata: need 0 <= m1 <= m2");
  if (m1 == 0) {
    if (m2 == 0) return detail::projective_space(1);
    return detail::projective_space(m2 + 1) - detail::projective_space(m2);
  }
  HodgePoly r = detail::projective_space(m1 + m2 + 1) - detail::projective_space(m2);
  for (int d = 1; d < m1; ++d)
    r -= detail::projective_space(d) * u_poly_via_strata(m1 - d, m2 - d);
  if (m1 < m2)
    r -= detail::projective_space(m1) * u_poly_via_strata(0, m2 - m1);
  else
    r -= detail::projective_space(m1) * (detail::projective_space(1) - HodgePoly(1));
  return r;
}

namespace detail {

inline std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Determinant over F_p by Gaussian elimination.
inline std::int64_t det_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  const std::size_t n = m.size();
  std::int64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] % p == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = (p - det) % p;
    }
    det = det * m[col][col] % p;
    const std::int64_t inv = mod_pow(m[col][col], p - 2, p);
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::int64_t factor = m[r][col] * inv % p;
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c)
        m[r][c] = ((m[r][c] - factor * m[col][c]) % p + p) % p;
    }
  }
  return det;
}

/// Homogeneous resultant of binary forms with coefficient vectors f (degree
/// f.size()-1) and g, via the Sylvester matrix with formal leading
/// coefficients. It vanishes iff the forms share a zero on P^1 over the
/// algebraic closure (a vanishing form shares every zero).
inline std::int64_t binary_resultant_mod_p(const std::vector<std::int64_t>& f,
                                           const std::vector<std::int64_t>& g,
                                           std::int64_t p) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  std::vector<std::vector<std::int64_t>> syl(size, std::vector<std::int64_t>(size, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) syl[r][r + i] = f[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) syl[n + r][r + i] = g[n - i];
  return det_mod_p(std::move(syl), p);
}

}  // namespace detail

/// #U(m1, m2)(F_p) by brute force: every pair of coefficient vectors, keep the
/// nonzero coprime ones, divide by the p - 1 common scalars.
inline std::int64_t count_U_points(int p, int m1, int m2) {
  if (p != 2 && p != 3 && p != 5)
    throw std::invalid_argument("count_U_points: p must be 2, 3 or 5");
  if (m1 < 0 || m2 < 0 || m1 + m2 > 6)
    throw std::invalid_argument("count_U_points: need m1, m2 >= 0 and m1 + m2 <= 6");
  const int len = m1 + m2 + 2;
  std::int64_t total = 1;
  for (int i = 0; i < len; ++i) total *= p;
  std::vector<std::int64_t> f(m1 + 1), g(m2 + 1);
  std::int64_t count = 0;
  for (std::int64_t code = 1; code < total; ++code) {  // code 0 is the zero pair
    std::int64_t c = code;
    for (auto& v : f) { v = c % p; c /= p; }
    for (auto& v : g) { v = c % p; c /= p; }
    if (detail::binary_resultant_mod_p(f, g, p) != 0) ++count;
  }
  return count / (p - 1);
}

// ---------------------------------------------------------------------------
// B_{a,n}: sums over index sequences d_1..d_L (L = 2s + a) summing to n.
//
// Consecutive entries alternate between a strict step d_{i+1} <= d_i - 1 with
// factor U(d_i - d_{i+1} - 1, d_i + d_{i+1}) and a weak step d_{i+1} <= d_i
// with factor U(d_i - d_{i+1}, d_i + d_{i+1}). For a = 0 the odd positions
// step strictly, for a = 1 the even ones. The last entry contributes
// U(d_L, d_L).

namespace detail {

inline bool strict_step(int a, int i) { return (i + a) % 2 == 1; }

/// U factor for a step; asserts the pair is already ordered.
inline HodgePoly step_factor(int m1, int m2) {
  if (m1 < 0 || m1 > m2) throw std::logic_error("b_poly: unordered U argument");
  return u_poly_ordered(m1, m2);
}

class IndexSequenceSum {
 public:
  IndexSequenceSum(int a, int length) : a_(a), len_(length) {}

  /// Sum over sequences d_{i+1}..d_L given d_i = d and the remaining total.
  const HodgePoly& tail(int i, int d, int rem) {
    const auto key = std::make_tuple(i, d, rem);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    HodgePoly r;
    if (i == len_) {
      if (rem == 0) r = step_factor(d, d);
    } else {
      const bool strict = strict_step(a_, i);
      const int hi = std::min(strict ? d - 1 : d, rem);
      for (int next = 0; next <= hi; ++next) {
        const HodgePoly& rest = tail(i + 1, next, rem - next);
        if (rest.is_zero()) continue;
        const HodgePoly u = strict ? step_factor(d - next - 1, d + next)
                                   : step_factor(d - next, d + next);
        r += u * rest;
      }
    }
    return memo_.emplace(key, std::move(r)).first->second;
  }

  HodgePoly total(int n) {
    HodgePoly r;
    for (int d1 = 0; d1 <= n; ++d1) r += tail(1, d1, n - d1);
    return r;
  }

 private:
  int a_;
  int len_;
  std::map<std::tuple<int, int, int>, HodgePoly> memo_;
};

}  // namespace detail

/// Length of the index sequences for (a, s).
inline int index_sequence_length(int a, int s) { return 2 * s + a; }

/// Smallest possible sum of a valid index sequence: s^2 for a = 0 (the
/// sequence s, s-1, s-1, ..., 1, 1, 0) and s(s+1) for a = 1.
inline int min_index_sequence_sum(int a, int s) { return a == 0 ? s * s : s * (s + 1); }

/// Number of valid index sequences for (a, s) summing to n (brute force, used
/// to confirm the truncation bound on s).
inline std::int64_t count_index_sequences(int a, int s, int n) {
  const int len = index_sequence_length(a, s);
  if (len == 0) return n == 0 ? 1 : 0;
  std::int64_t count = 0;
  std::vector<int> seq;
  auto rec = [&](auto&& self, int rem) -> void {
    const int i = static_cast<int>(seq.size());
    if (i == len) {
      if (rem == 0) ++count;
      return;
    }
    int hi = rem;
    if (i > 0) hi = std::min(hi, detail::strict_step(a, i) ? seq.back() - 1 : seq.back());
    for (int d = 0; d <= hi; ++d) {
      seq.push_back(d);
      self(self, rem - d);
      seq.pop_back();
    }
  };
  rec(rec, n);
  return count;
}

/// B_{a,n}(x, y). B_{0,0} = 1.
inline HodgePoly b_poly(int a, int n) {
  if (a != 0 && a != 1) throw std::invalid_argument("b_poly: a must be 0 or 1");
  if (n < 0) throw std::invalid_argument("b_poly: n must be >= 0");
  if (a == 0 && n == 0) return HodgePoly(1);
  HodgePoly r;
  int s = a == 0 ? 1 : 0;
  for (; min_index_sequence_sum(a, s) <= n; ++s)
    r += detail::IndexSequenceSum(a, index_sequence_length(a, s)).total(n);
  if (count_index_sequences(a, s, n) != 0)
    throw std::logic_error("b_poly: sequences exist beyond the derived bound on s");
  return r;
}

// ---------------------------------------------------------------------------
// Universal functions as explicit quotients. Every consumer compares them by
// cross-multiplication; no series is ever divided.

struct SeriesQuotient {
  QSeries numerator;
  QSeries denominator;
};

namespace detail {

inline QExp twelfth() { return QExp::fraction(1, 12); }

/// q^{1/12} (1 - t q).
inline QSeries z1_denominator(QExp cap) {
  QSeries d(cap);
  d.add_term(twelfth(), HodgePoly(1));
  d.add_term(twelfth() + QExp::integer(1), -HodgePoly::t_power(1));
  return d;
}

/// (1 - t^{2j-2} q^j) / (1 - t^{2j} q^j).
inline QSeries z1_ratio_factor(int j, QExp cap) {
  const QExp e = QExp::integer(j);
  QSeries num = QSeries::one(cap);
  num.add_term(e, -HodgePoly::t_power(2 * j - 2));
  return num * qs_geom(QSeries::monomial(e, HodgePoly::t_power(2 * j), cap));
}

}  // namespace detail

/// Theta series over the eta-type square.
inline SeriesQuotient z2_closed(int a, QExp cap) {
  const QExp c = cap + detail::twelfth();
  return {qs_theta(a, c), qs_eta_sq(c)};
}

/// The bracket
///   sum_{s>=0} t^{(k^2+k)/2} q^{k^2/4} prod_{j=1}^{k} R_j
///   + sum_{s>=1-a} t^{(k^2+k-2)/2} q^{k^2/4} prod_{j=1}^{k-1} R_j,   k = 2s + a,
/// with R_j = (1 - t^{2j-2} q^j)/(1 - t^{2j} q^j) and empty products equal to 1.
inline QSeries z1_bracket_closed(int a, QExp cap) {
  if (a != 0 && a != 1) throw std::invalid_argument("z1_bracket_closed: a must be 0 or 1");
  QSeries r(cap);
  if (cap < QExp(0)) return r;
  // partial[k] = prod_{j=1}^{k} R_j
  std::vector<QSeries> partial{QSeries::one(cap)};
  auto prod_upto = [&](int k) -> const QSeries& {
    while (static_cast<int>(partial.size()) <= k) {
      const int j = static_cast<int>(partial.size());
      partial.push_back(partial.back() * detail::z1_ratio_factor(j, cap));
    }
    return partial[k];
  };
  for (int s = 0;; ++s) {
    const int k = 2 * s + a;
    const QExp e(6 * std::int64_t(k) * k);
    if (e > cap) break;
    const QSeries lead1 = QSeries::monomial(e, HodgePoly::t_power((k * k + k) / 2), cap);
    r = r + lead1 * prod_upto(k);
    if (s >= 1 - a) {
      const QSeries lead2 = QSeries::monomial(e, HodgePoly::t_power((k * k + k - 2) / 2), cap);
      r = r + lead2 * prod_upto(k - 1);
    }
  }
  return r;
}

/// q^{a/4} sum_{n>=0} B_{a,n} q^n.
inline QSeries z1_bracket_from_B(int a, QExp cap) {
  if (a != 0 && a != 1) throw std::invalid_argument("z1_bracket_from_B: a must be 0 or 1");
  QSeries r(cap);
  for (int n = 0;; ++n) {
    const QExp e(24 * std::int64_t(n) + 6 * a);
    if (e > cap) break;
    r.add_term(e, b_poly(a, n));
  }
  return r;
}

/// Theta series times prod_{d>=1} (1 - t^{2d-1} q^d)/(1 - t^{2d} q^d).
inline QSeries z1_bracket_conjectured(int a, QExp cap) {
  QSeries r = qs_theta(a, cap);
  for (std::int64_t d = 1; QExp::integer(d) <= cap; ++d) {
    const QExp e = QExp::integer(d);
    QSeries num = QSeries::one(cap);
    num.add_term(e, -HodgePoly::t_power(static_cast<int>(2 * d - 1)));
    r = r * num * qs_geom(QSeries::monomial(e, HodgePoly::t_power(static_cast<int>(2 * d)), cap));
  }
  return r;
}

/// Closed form of Z~_a: bracket over q^{1/12}(1 - tq). Both parts carry
/// cap + 1/12 so products against series capped at `cap` stay exact.
inline SeriesQuotient z1_closed(int a, QExp cap) {
  const QExp c = cap + detail::twelfth();
  return {z1_bracket_closed(a, c), detail::z1_denominator(c)};
}

inline SeriesQuotient z1_from_B(int a, QExp cap) {
  const QExp c = cap + detail::twelfth();
  return {z1_bracket_from_B(a, c), detail::z1_denominator(c)};
}

inline SeriesQuotient z1_conjectured(int a, QExp cap) {
  const QExp c = cap + detail::twelfth();
  return {z1_bracket_conjectured(a, c), detail::z1_denominator(c)};
}

}  // namespace qhodge

#pragma once

#include "qhodge/hodge_poly.hpp"
#include "qhodge/qexp.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qhodge {

/// Truncated series  sum_e c_e q^e  with e on the 1/24 grid and Laurent
/// coefficients c_e in x, y. Exponents above `cap` are never stored, and
/// neither are zero coefficients.
class QSeries {
 public:
  using Terms = std::map<QExp, HodgePoly>;

  explicit QSeries(QExp cap) : cap_(cap) {}

  static QSeries zero(QExp cap) { return QSeries(cap); }
  static QSeries one(QExp cap) { return monomial(QExp(0), HodgePoly(1), cap); }
  static QSeries monomial(QExp e, HodgePoly c, QExp cap) {
    QSeries s(cap);
    s.add_term(e, c);
    return s;
  }

  QExp cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  HodgePoly coeff(QExp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? HodgePoly{} : it->second;
  }

  /// Smallest stored exponent; nullopt for the zero series.
  std::optional<QExp> min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  /// Adds c q^e; silently dropped when e > cap.
  void add_term(QExp e, const HodgePoly& c) {
    if (e > cap_ || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Same series with a smaller cap. Raising the cap is rejected because it
  /// would claim precision that was never computed.
  QSeries truncated(QExp new_cap) const {
    if (new_cap > cap_)
      throw std::invalid_argument("QSeries::truncated: cannot raise cap");
    QSeries r(new_cap);
    for (const auto& [e, c] : terms_) {
      if (e > new_cap) break;
      r.terms_.emplace(e, c);
    }
    return r;
  }

  /// Multiplies every coefficient by a polynomial.
  QSeries scaled(const HodgePoly& p) const {
    QSeries r(cap_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * p);
    return r;
  }

  /// Every exponent has ex = ey, i.e. the series lives in Z[t, t^-1][[q]].
  bool is_t_graded() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.second.is_t_graded(); });
  }

  friend bool operator==(const QSeries&, const QSeries&) = default;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a);
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  std::string to_string() const;

 private:
  QExp cap_;
  Terms terms_;
};

inline QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries r = a.truncated(std::min(a.cap(), b.cap()));
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

inline QSeries operator-(const QSeries& a) {
  QSeries r(a.cap());
  for (const auto& [e, c] : a.terms()) r.add_term(e, -c);
  return r;
}

inline QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

/// Cauchy product, truncated to min(a.cap, b.cap). Both term maps are sorted,
/// so the inner loop stops as soon as the exponent sum leaves the window.
inline QSeries operator*(const QSeries& a, const QSeries& b) {
  const QExp cap = std::min(a.cap(), b.cap());
  QSeries r(cap);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      const QExp e = ea + eb;
      if (e > cap) break;
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

inline std::string QSeries::to_string() const {
  if (terms_.empty()) return "0 + O(q^" + cap_.to_string() + "+)";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*q^" + e.to_string();
  }
  return s;
}

inline QSeries qs_add(const QSeries& a, const QSeries& b) { return a + b; }
inline QSeries qs_mul(const QSeries& a, const QSeries& b) { return a * b; }

/// a^k to a's cap, k >= 0.
inline QSeries qs_pow(const QSeries& a, int k) {
  if (k < 0) throw std::invalid_argument("qs_pow: negative exponent");
  QSeries r = QSeries::one(a.cap());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

/// 1 / (1 - u) = sum_k u^k, truncated to u.cap. Needs every exponent of u to
/// be strictly positive, which also makes the sum finite.
inline QSeries qs_geom(const QSeries& u) {
  auto lo = u.min_exponent();
  if (lo && *lo <= QExp(0))
    throw std::domain_error("qs_geom: minimal q-exponent must be positive, got " +
                            lo->to_string());
  QSeries result = QSeries::one(u.cap());
  QSeries power = u;
  while (!power.is_zero()) {
    result = result + power;
    power = power * u;
  }
  return result;
}

/// Replaces q^n by (xy q)^n. Only non-negative integer exponents are allowed.
inline QSeries qs_subst_q_to_tq(const QSeries& s) {
  QSeries r(s.cap());
  for (const auto& [e, c] : s.terms()) {
    if (!e.is_integer() || e < QExp(0))
      throw std::domain_error("qs_subst_q_to_tq: exponent " + e.to_string() +
                              " is not a non-negative integer");
    r.add_term(e, c * HodgePoly::t_power(static_cast<int>(e.floor())));
  }
  return r;
}

/// Evaluates every coefficient at x = y = 1.
inline QSeries qs_specialize_xy1(const QSeries& s) {
  QSeries r(s.cap());
  for (const auto& [e, c] : s.terms()) r.add_term(e, HodgePoly(c.at_one()));
  return r;
}

/// The bracketed square  [q^(1/24) prod_{n>=1} (1 - (xy)^(2n) q^n)]^2.
inline QSeries qs_eta_sq(QExp cap) {
  const QExp shift = QExp::fraction(1, 12);
  if (cap < shift) throw std::invalid_argument("qs_eta_sq: cap must be >= 1/12");
  // The product part only needs precision cap - 1/12.
  const QExp inner = cap - shift;
  QSeries prod = QSeries::one(inner);
  for (std::int64_t n = 1; QExp::integer(n) <= inner; ++n) {
    QSeries factor = QSeries::one(inner);
    factor.add_term(QExp::integer(n), -HodgePoly::t_power(static_cast<int>(2 * n)));
    prod = prod * factor * factor;
  }
  QSeries r(cap);
  for (const auto& [e, c] : prod.terms()) r.add_term(e + shift, c);
  return r;
}

enum class ThetaVariant { moduli, blowup };

/// sum_{n in Z} (xy)^(((2n+a)^2 - (2n+a))/2) q^((2n+a)^2/4), truncated.
///
/// The blowup variant enumerates the classes (2t - a)E as they arise from the
/// blown-up lattice, i.e. sum_t (xy)^(((2t-a)^2 + (2t-a))/2) q^((2t-a)^2/4);
/// substituting t -> -t shows both variants are the same series.
inline QSeries qs_theta(int a, QExp cap, ThetaVariant variant = ThetaVariant::moduli) {
  if (a != 0 && a != 1) throw std::invalid_argument("qs_theta: a must be 0 or 1");
  QSeries r(cap);
  if (cap < QExp(0)) return r;
  // (2n+a)^2/4 <= cap  <=>  6 (2n+a)^2 <= cap.num, so |2n+a| <= sqrt(cap.num/6).
  std::int64_t bound = 0;
  while (6 * (bound + 1) * (bound + 1) <= cap.num) ++bound;
  for (std::int64_t k = -bound; k <= bound; ++k) {
    if (((k - a) % 2 + 2) % 2 != 0) continue;  // k = 2n + a, or k = 2t - a
    const std::int64_t tdeg =
        variant == ThetaVariant::moduli ? (k * k - k) / 2 : (k * k + k) / 2;
    r.add_term(QExp(6 * k * k), HodgePoly::t_power(static_cast<int>(tdeg)));
  }
  return r;
}

}  // namespace qhodge

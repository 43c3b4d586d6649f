#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qhodge {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent pair (power of x, power of y) of a Laurent monomial.
struct Monomial {
  int ex = 0;
  int ey = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse Laurent polynomial in x and y with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so two polynomials are
/// equal iff their term maps are equal.
class HodgePoly {
 public:
  using Terms = std::map<Monomial, BigInt>;

  HodgePoly() = default;
  HodgePoly(BigInt c) {  // NOLINT(google-explicit-constructor): constants
    add_term({0, 0}, std::move(c));
  }
  HodgePoly(int c) : HodgePoly(BigInt(c)) {}  // NOLINT

  static HodgePoly monomial(int ex, int ey, BigInt c = 1) {
    HodgePoly p;
    p.add_term({ex, ey}, std::move(c));
    return p;
  }

  /// (xy)^k.
  static HodgePoly t_power(int k) { return monomial(k, k); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coeff(int ex, int ey) const {
    auto it = terms_.find({ex, ey});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(Monomial m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  HodgePoly& operator+=(const HodgePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  HodgePoly& operator-=(const HodgePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  HodgePoly& operator*=(const HodgePoly& o) { return *this = *this * o; }

  friend HodgePoly operator+(HodgePoly a, const HodgePoly& b) { return a += b; }
  friend HodgePoly operator-(HodgePoly a, const HodgePoly& b) { return a -= b; }
  friend HodgePoly operator-(HodgePoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend HodgePoly operator*(const HodgePoly& a, const HodgePoly& b) {
    HodgePoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term({ma.ex + mb.ex, ma.ey + mb.ey}, ca * cb);
    return r;
  }

  friend bool operator==(const HodgePoly&, const HodgePoly&) = default;

  /// Value at x = y = 1 (the Euler-characteristic specialization).
  BigInt at_one() const {
    BigInt s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
  }

  /// Value at x = y = v; requires every monomial to have ex = ey >= 0 so the
  /// result stays integral.
  BigInt at_t(const BigInt& v) const {
    BigInt s = 0;
    for (const auto& [m, c] : terms_) {
      if (m.ex != m.ey || m.ex < 0)
        throw std::domain_error("HodgePoly::at_t: not a polynomial in t = xy");
      BigInt p = 1;
      for (int i = 0; i < m.ex; ++i) p *= v;
      s += c * p;
    }
    return s;
  }

  /// True iff every monomial is a power of t = xy.
  bool is_t_graded() const {
    for (const auto& [m, c] : terms_)
      if (m.ex != m.ey) return false;
    return true;
  }

  bool has_nonnegative_coeffs() const {
    for (const auto& [m, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first reads better in tables.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      const bool unit = m.ex == 0 && m.ey == 0;
      if (mag != 1 || unit) os << mag;
      auto var = [&](char v, int e, bool need_star) {
        if (e == 0) return need_star;
        if (need_star) os << "*";
        os << v;
        if (e != 1) os << "^" << e;
        return true;
      };
      bool star = (mag != 1 && !unit);
      star = var('x', m.ex, star);
      var('y', m.ey, star);
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const HodgePoly& p) {
    return os << p.to_string();
  }

 private:
  Terms terms_;
};

/// x^k y^k.
inline HodgePoly hp_make_t_power(int k) { return HodgePoly::t_power(k); }

/// 1 + t + ... + t^(n-1) for n > 0, -(t^n + ... + t^-1) for n < 0, 0 for n = 0.
/// This is the exact quotient (1 - t^n) / (1 - t).
inline HodgePoly t_geometric_quotient(int n) {
  HodgePoly r;
  if (n > 0) {
    for (int i = 0; i < n; ++i) r.add_term({i, i}, 1);
  } else if (n < 0) {
    for (int i = n; i < 0; ++i) r.add_term({i, i}, -1);
  }
  return r;
}

}  // namespace qhodge

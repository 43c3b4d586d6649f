#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qhodge {

/// Exponent of q on the fixed grid (1/24)Z. Only the numerator is stored;
/// values are never reduced, so equality and ordering are those of `num`.
struct QExp {
  static constexpr std::int64_t den = 24;

  std::int64_t num = 0;

  constexpr QExp() = default;
  constexpr explicit QExp(std::int64_t numerator) : num(numerator) {}

  static constexpr QExp integer(std::int64_t n) { return QExp(n * den); }
  /// p / q, which must land on the grid (q divides 24 * p).
  static QExp fraction(std::int64_t p, std::int64_t q);

  constexpr bool is_integer() const { return num % den == 0; }
  /// Largest integer <= this exponent.
  constexpr std::int64_t floor() const {
    return num >= 0 ? num / den : -((-num + den - 1) / den);
  }

  friend constexpr QExp operator+(QExp a, QExp b) { return QExp(a.num + b.num); }
  friend constexpr QExp operator-(QExp a, QExp b) { return QExp(a.num - b.num); }
  friend constexpr auto operator<=>(QExp, QExp) = default;

  /// Reduced fraction, e.g. "5/4", "1", "-1/12".
  std::string to_string() const {
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = den;
    std::int64_t p = num / g, q = den / g;
    return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
  }
};

inline QExp QExp::fraction(std::int64_t p, std::int64_t q) {
  if (q == 0 || (p * den) % q != 0)
    throw std::invalid_argument("QExp::fraction: " + std::to_string(p) + "/" +
                                std::to_string(q) + " is not on the 1/24 grid");
  return QExp(p * den / q);
}

}  // namespace qhodge

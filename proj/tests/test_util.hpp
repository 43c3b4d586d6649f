#pragma once

#include "qhodge/qseries.hpp"

#include <initializer_list>
#include <random>
#include <utility>

namespace qhodge::testing {

/// sum c_k t^k from (k, c_k) pairs.
inline HodgePoly tpoly(std::initializer_list<std::pair<int, int>> terms) {
  HodgePoly p;
  for (auto [k, c] : terms) p.add_term({k, k}, c);
  return p;
}

/// Series from (numerator, coefficient) pairs.
inline QSeries series(QExp cap, std::initializer_list<std::pair<std::int64_t, HodgePoly>> terms) {
  QSeries s(cap);
  for (const auto& [e, c] : terms) s.add_term(QExp(e), c);
  return s;
}

inline QExp q(std::int64_t n) { return QExp::integer(n); }

/// Random sparse series with exponents in [lo, cap] and Laurent coefficients.
inline QSeries random_series(std::mt19937_64& rng, QExp cap, std::int64_t lo = 0,
                             int max_terms = 6) {
  QSeries s(cap);
  std::uniform_int_distribution<std::int64_t> exp_d(lo, cap.num);
  std::uniform_int_distribution<int> count_d(0, max_terms), mono_d(-2, 3), coeff_d(-4, 4),
      nmono_d(1, 3);
  const int count = count_d(rng);
  for (int i = 0; i < count; ++i) {
    HodgePoly c;
    const int nm = nmono_d(rng);
    for (int k = 0; k < nm; ++k) c.add_term({mono_d(rng), mono_d(rng)}, coeff_d(rng));
    s.add_term(QExp(exp_d(rng)), c);
  }
  return s;
}

}  // namespace qhodge::testing

#include "qhodge/oracle.hpp"
#include "qhodge/qseries.hpp"
#include "qhodge/series_json.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qhodge;
using namespace qhodge::testing;

namespace {

const HodgePoly one(1);
const HodgePoly t = HodgePoly::t_power(1);

}  // namespace

TEST(QExp, GridAndOrdering) {
  EXPECT_EQ(QExp::fraction(1, 12).num, 2);
  EXPECT_EQ(QExp::fraction(5, 4).num, 30);
  EXPECT_EQ(QExp::fraction(5, 4).to_string(), "5/4");
  EXPECT_EQ(QExp::integer(3).to_string(), "3");
  EXPECT_EQ(QExp(-2).to_string(), "-1/12");
  EXPECT_LT(QExp(1), QExp(2));
  EXPECT_EQ(QExp(-1).floor(), -1);
  EXPECT_EQ(QExp(47).floor(), 1);
  EXPECT_THROW(QExp::fraction(1, 5), std::invalid_argument);
}

TEST(HodgePoly, TPower) {
  EXPECT_EQ(hp_make_t_power(0), HodgePoly(1));
  EXPECT_EQ(hp_make_t_power(2), HodgePoly::monomial(2, 2));
  EXPECT_EQ(hp_make_t_power(-1), HodgePoly::monomial(-1, -1));
  EXPECT_EQ(hp_make_t_power(2).to_string(), "x^2*y^2");
}

TEST(HodgePoly, ZeroPruningAndArithmetic) {
  HodgePoly p = HodgePoly::monomial(1, 0, 3) + HodgePoly::monomial(0, 1, -2);
  HodgePoly d = p - p;
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(d.size(), 0u);
  EXPECT_EQ((one + t) * (one - t), one - HodgePoly::t_power(2));
  EXPECT_EQ(p.at_one(), 1);
  EXPECT_EQ(tpoly({{3, 1}, {1, -1}}).at_t(2), 6);
  EXPECT_THROW(HodgePoly::monomial(1, 0).at_t(2), std::domain_error);
}

TEST(HodgePoly, GeometricQuotient) {
  EXPECT_EQ(t_geometric_quotient(3), tpoly({{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(t_geometric_quotient(-2), tpoly({{-2, -1}, {-1, -1}}));
  EXPECT_TRUE(t_geometric_quotient(0).is_zero());
  // (1 - t) * quotient == 1 - t^n for both signs
  for (int n = -5; n <= 5; ++n)
    EXPECT_EQ((one - t) * t_geometric_quotient(n), one - HodgePoly::t_power(n)) << n;
}

TEST(QSeries, AddExamples) {
  const QExp cap = q(3);
  EXPECT_TRUE((QSeries::one(cap) + (-QSeries::one(cap))).is_zero());
  const QSeries quarter = series(cap, {{6, one}});
  EXPECT_EQ(quarter + quarter, series(cap, {{6, HodgePoly(2)}}));
  const QSeries a = series(cap, {{0, one}, {24, t}});
  const QSeries b = series(cap, {{0, one}, {24, -t}});
  EXPECT_EQ(a + b, series(cap, {{0, HodgePoly(2)}}));
}

TEST(QSeries, AddTakesMinCap) {
  const QSeries a = series(q(5), {{0, one}, {96, one}});
  const QSeries b = series(q(2), {{24, one}});
  const QSeries s = a + b;
  EXPECT_EQ(s.cap(), q(2));
  EXPECT_EQ(s, series(q(2), {{0, one}, {24, one}}));
}

TEST(QSeries, MulExamples) {
  const QSeries a = series(q(2), {{0, one}, {24, t}});
  const QSeries b = series(q(2), {{0, one}, {24, -t}});
  EXPECT_EQ(a * b, series(q(2), {{0, one}, {48, -HodgePoly::t_power(2)}}));

  const QSeries twelfth = series(q(1), {{2, one}});
  EXPECT_EQ(twelfth * twelfth, series(q(1), {{4, one}}));

  QSeries geo(q(5));
  for (int n = 0; n <= 5; ++n) geo.add_term(q(n), one);
  const QSeries one_minus_q = series(q(5), {{0, one}, {24, HodgePoly(-1)}});
  EXPECT_EQ(geo * one_minus_q, QSeries::one(q(5)));
}

TEST(QSeries, MulNeverExceedsCap) {
  const QSeries a = series(q(1), {{20, one}});
  const QSeries b = series(q(3), {{20, one}, {30, one}});
  const QSeries p = a * b;
  EXPECT_EQ(p.cap(), q(1));
  EXPECT_EQ(p, series(q(1), {{40, one}}));
}

TEST(QSeries, GeomExamples) {
  EXPECT_EQ(qs_geom(series(q(3), {{24, one}})),
            series(q(3), {{0, one}, {24, one}, {48, one}, {72, one}}));
  EXPECT_EQ(qs_geom(series(q(2), {{24, HodgePoly::t_power(2)}})),
            series(q(2), {{0, one}, {24, HodgePoly::t_power(2)}, {48, HodgePoly::t_power(4)}}));
  EXPECT_EQ(qs_geom(series(QExp(12), {{6, one}})),
            series(QExp(12), {{0, one}, {6, one}, {12, one}}));
  EXPECT_EQ(qs_geom(QSeries::zero(q(2))), QSeries::one(q(2)));
}

TEST(QSeries, GeomRejectsNonPositiveExponent) {
  EXPECT_THROW(qs_geom(QSeries::one(q(2))), std::domain_error);
  EXPECT_THROW(qs_geom(series(q(2), {{-6, one}, {24, one}})), std::domain_error);
}

TEST(QSeries, EtaSquare) {
  EXPECT_EQ(qs_eta_sq(QExp::fraction(1, 12)), series(QExp(2), {{2, one}}));
  // (1 - t^2 q)^2 = 1 - 2 t^2 q + ..., the n = 2 factor starts at q^2
  EXPECT_EQ(qs_eta_sq(QExp(26)), series(QExp(26), {{2, one}, {26, -2 * HodgePoly::t_power(2)}}));
  EXPECT_THROW(qs_eta_sq(QExp(1)), std::invalid_argument);
}

TEST(QSeries, EtaSquareSpecializesToDedekindSquare) {
  const QExp cap = QExp(24 * 12 + 2);
  EXPECT_EQ(qs_specialize_xy1(qs_eta_sq(cap)), oracle::eta_sq_at_one(cap));
}

TEST(QSeries, ThetaExamples) {
  // a = 0, n in {-1, 0, 1}: t^0 q^0, t^1 q, t^3 q
  EXPECT_EQ(qs_theta(0, q(2)), series(q(2), {{0, one}, {24, tpoly({{1, 1}, {3, 1}})}}));
  // a = 1, n in {-1, 0}
  EXPECT_EQ(qs_theta(1, QExp(6)), series(QExp(6), {{6, tpoly({{0, 1}, {1, 1}})}}));
  EXPECT_EQ(qs_specialize_xy1(qs_theta(0, q(4))),
            series(q(4), {{0, one}, {24, HodgePoly(2)}, {96, HodgePoly(2)}}));
  EXPECT_THROW(qs_theta(2, q(1)), std::invalid_argument);
}

TEST(QSeries, ThetaVariantsAgree) {
  for (int a = 0; a <= 1; ++a)
    for (int c = 0; c <= 30; c += 5)
      EXPECT_EQ(qs_theta(a, q(c), ThetaVariant::moduli), qs_theta(a, q(c), ThetaVariant::blowup));
}

TEST(QSeries, SubstQToTq) {
  EXPECT_EQ(qs_subst_q_to_tq(series(q(3), {{0, one}, {24, one}})),
            series(q(3), {{0, one}, {24, t}}));
  EXPECT_EQ(qs_subst_q_to_tq(series(q(3), {{0, one}, {24, 2 * t}, {48, one}})),
            series(q(3), {{0, one}, {24, 2 * HodgePoly::t_power(2)}, {48, HodgePoly::t_power(2)}}));
  EXPECT_THROW(qs_subst_q_to_tq(series(q(3), {{6, one}})), std::domain_error);
  EXPECT_THROW(qs_subst_q_to_tq(series(q(3), {{-24, one}})), std::domain_error);
}

TEST(QSeries, SpecializeXy1) {
  EXPECT_EQ(qs_specialize_xy1(series(q(2), {{24, tpoly({{0, 1}, {1, 1}, {2, 1}})}})),
            series(q(2), {{24, HodgePoly(3)}}));
  EXPECT_TRUE(qs_specialize_xy1(QSeries::zero(q(2))).is_zero());
  EXPECT_EQ(qs_specialize_xy1(qs_theta(0, q(2))),
            series(q(2), {{0, one}, {24, HodgePoly(2)}}));
  // coefficients that cancel at x = y = 1 are pruned
  EXPECT_TRUE(qs_specialize_xy1(series(q(1), {{24, one - t}})).is_zero());
}

TEST(QSeries, TruncateCannotRaiseCap) {
  EXPECT_THROW(QSeries::one(q(1)).truncated(q(2)), std::invalid_argument);
}

// Ring laws on random sparse series (fixed seed, so failures reproduce).
TEST(QSeriesProperty, RingLaws) {
  std::mt19937_64 rng(20241);
  const QExp cap = q(6);
  for (int i = 0; i < 200; ++i) {
    const QSeries a = random_series(rng, cap), b = random_series(rng, cap),
                  c = random_series(rng, cap);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(QSeriesProperty, GeomInverse) {
  std::mt19937_64 rng(77);
  const QExp cap = q(6);
  for (int i = 0; i < 200; ++i) {
    const QSeries u = random_series(rng, cap, 12);
    ASSERT_EQ(qs_geom(u) * (QSeries::one(cap) - u), QSeries::one(cap));
  }
}

TEST(QSeriesProperty, DenseReferenceAgrees) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const QExp cap(std::uniform_int_distribution<int>(0, 144)(rng));
    const QSeries a = random_series(rng, cap, -12), b = random_series(rng, cap, -12);
    ASSERT_EQ(a * b, oracle::dense_mul_reference(a, b));
  }
}

TEST(QSeriesProperty, TruncationConsistency) {
  std::mt19937_64 rng(99);
  const QExp big = q(6);
  for (int i = 0; i < 100; ++i) {
    const QExp small(std::uniform_int_distribution<int>(0, 144)(rng));
    const QSeries a = random_series(rng, big), b = random_series(rng, big);
    const QSeries u = random_series(rng, big, 12);
    ASSERT_EQ((a * b).truncated(small), a.truncated(small) * b.truncated(small));
    ASSERT_EQ((a + b).truncated(small), a.truncated(small) + b.truncated(small));
    ASSERT_EQ(qs_geom(u).truncated(small), qs_geom(u.truncated(small)));
    ASSERT_EQ(qs_specialize_xy1(a).truncated(small), qs_specialize_xy1(a.truncated(small)));
  }
  for (int a = 0; a <= 1; ++a)
    for (int c = 0; c <= 24 * 6; c += 7) {
      ASSERT_EQ(qs_theta(a, big).truncated(QExp(c)), qs_theta(a, QExp(c)));
      if (c >= 2) {
        ASSERT_EQ(qs_eta_sq(big).truncated(QExp(c)), qs_eta_sq(QExp(c)));
      }
    }
}

TEST(SeriesJson, Encoding) {
  const QSeries s = series(q(2), {{0, one}, {24, tpoly({{1, 1}, {3, 1}})}});
  EXPECT_EQ(to_json(s).dump(),
            R"({"den":24,"cap":48,"terms":[{"q":0,"coeff":[{"x":0,"y":0,"c":"1"}]},)"
            R"({"q":24,"coeff":[{"x":1,"y":1,"c":"1"},{"x":3,"y":3,"c":"1"}]}]})");
}

TEST(SeriesJson, BigCoefficientsSurviveRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    QSeries s = random_series(rng, q(4), -24);
    s = s * s * s;
    s.add_term(QExp(1), HodgePoly(BigInt("123456789012345678901234567890")));
    ASSERT_EQ(series_from_json(ordered_json::parse(to_json(s).dump())), s);
  }
}

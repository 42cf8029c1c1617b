#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "triscord/correlations.hpp"
#include "triscord/entropy.hpp"
#include "triscord/errors.hpp"
#include "triscord/linalg.hpp"
#include "triscord/xstate.hpp"

using namespace triscord;
using triscord::testing::TripleGen;

namespace {

// 30-digit reference values.
constexpr double kS3Half = 0.907852300601928;     // S3(0, 0.5, -0.5)
constexpr double kS2Half = 0.954434002924965;     // S2(0, 0.5, -0.5)
constexpr double kD3Peak = 0.600876036692856;     // 1 - eps(1/sqrt 2)/2

double d_theta(const XParams& p, MeasurementAngles at, double h) {
  MeasurementAngles hi = at;
  MeasurementAngles lo = at;
  hi.theta1 += h;
  hi.theta2 += h;
  lo.theta1 -= h;
  lo.theta2 -= h;
  return (s_rel(p, hi) - s_rel(p, lo)) / (2 * h);
}

double d_coord(const XParams& p, MeasurementAngles at, double MeasurementAngles::*field, double h) {
  MeasurementAngles hi = at;
  MeasurementAngles lo = at;
  hi.*field += h;
  lo.*field -= h;
  return (s_rel(p, hi) - s_rel(p, lo)) / (2 * h);
}

}  // namespace

TEST_CASE("angle transform round trip") {
  TripleGen gen(41);
  for (int n = 0; n < 1000; ++n) {
    const MeasurementAngles raw = gen.angles();
    const MeasurementAngles t = to_transformed(raw);
    CHECK(t.phi1 == doctest::Approx(raw.phi1 - raw.phi2));
    CHECK(t.phi2 == doctest::Approx(raw.phi1 + raw.phi2));
    const MeasurementAngles back = to_raw(t);
    REQUIRE(back.theta1 == raw.theta1);
    REQUIRE(back.phi1 == doctest::Approx(raw.phi1).epsilon(1e-14));
    REQUIRE(back.phi2 == doctest::Approx(raw.phi2).epsilon(1e-14));
  }
  const MeasurementAngles r = MeasurementAngles{-0.1, kPi, 7.0, -1.0}.reduced();
  CHECK(r.theta1 == doctest::Approx(kPi - 0.1));
  CHECK(r.theta2 == doctest::Approx(0.0));
  CHECK(r.phi1 == doctest::Approx(7.0 - 2 * kPi));
  CHECK(r.phi2 == doctest::Approx(2 * kPi - 1.0));
}

TEST_CASE("lambda_set at the computational basis") {
  TripleGen gen(42);
  for (int n = 0; n < 200; ++n) {
    const XParams p = gen.next();
    const LambdaSet l = lambda_set(p, {0, 0, 0, 0});
    CHECK(l.lambda_a == doctest::Approx(3 + p.a1));
    CHECK(l.lambda_b == doctest::Approx(3 - p.a1));
    CHECK(l.lambda_c == 0.0);
    const double hi12 = std::max(l.lambda[0], l.lambda[1]);
    const double lo12 = std::min(l.lambda[0], l.lambda[1]);
    CHECK(hi12 == doctest::Approx(std::max(3 + p.a1, 3 - 3 * p.a1)));
    CHECK(lo12 == doctest::Approx(std::min(3 + p.a1, 3 - 3 * p.a1)));
    CHECK(l.lambda[2] == doctest::Approx(3 + p.a1));
    CHECK(l.lambda[3] == doctest::Approx(3 + p.a1));
    CHECK(l.lambda[0] >= l.lambda[1]);
  }
}

TEST_CASE("lambda_set at (pi/4, pi/4, 0, 0)") {
  TripleGen gen(43);
  for (int n = 0; n < 200; ++n) {
    const XParams p = gen.next();
    const LambdaSet l = lambda_set(p, {kPi / 4, kPi / 4, 0, 0});
    const double f = (p.c1 + 3 * p.c2) * (p.c1 + 3 * p.c2);
    CHECK(l.lambda_a == doctest::Approx(3.0));
    CHECK(l.lambda_b == doctest::Approx(3.0));
    CHECK(l.lambda_c == doctest::Approx(9.0 / 16.0 * f).epsilon(1e-12));
    const double r = 0.75 * std::abs(p.c1 + 3 * p.c2);
    CHECK(l.lambda[0] == doctest::Approx(3 + r));
    CHECK(l.lambda[1] == doctest::Approx(3 - r));
    CHECK(l.lambda[2] == doctest::Approx(3 + r));
    CHECK(l.lambda[3] == doctest::Approx(3 - r));
  }
}

TEST_CASE("s_rel and branch examples") {
  CHECK(std::abs(s_rel({-3, 4, 0}, {0, 0, 0, 0})) < 1e-14);
  CHECK(std::abs(s1({-3, 4, 0})) < 1e-14);
  CHECK(std::abs(s2({-3, 4, 0})) < 1e-14);

  const XParams half{0, 0.5, -0.5};
  CHECK(s1(half) == doctest::Approx(1.0));
  CHECK(s2(half) == doctest::Approx(kS2Half).epsilon(1e-13));
  REQUIRE(s3(half).has_value());
  CHECK(*s3(half) == doctest::Approx(kS3Half).epsilon(1e-13));
  CHECK(*s3(half) == doctest::Approx(1.0 - 0.5 * epsilon(std::sqrt(2.0) / 4)).epsilon(1e-15));

  CHECK_THROWS_AS(s1({2, 0, 0}), DomainError);
  CHECK_THROWS_AS(s2({0, 0, 2}), DomainError);
}

TEST_CASE("s3_applicable") {
  for (double a1 : {-2.0, -0.5, 0.0, 0.5, 1.0}) CHECK(s3_applicable({a1, 0.5, -0.5}));
  CHECK_FALSE(s3_applicable({0.0, 0.5, 1.0}));
  CHECK_FALSE(s3_applicable({0.5, 0.5, 1.0}));
  CHECK_FALSE(s3_applicable({0.0, 0.0, 0.5}));
  CHECK_FALSE(s3({0.3, 0.0, 0.0}).has_value());
  CHECK_FALSE(s3_phi({0.0, 0.5, 1.0}).has_value());
  CHECK(*s3_phi({0, 0.5, -0.5}) == doctest::Approx(kPi / 2));
}

TEST_CASE("conditional_entropy examples") {
  const CondEntropyResult ghz = conditional_entropy({-3, 4, 0});
  CHECK(std::abs(ghz.value) < 1e-14);
  CHECK(ghz.branch == Branch::S1);

  for (double a1 : {-3.0, -2.0, -1.0, 0.0, 0.5, 1.0}) {
    const CondEntropyResult r = conditional_entropy({a1, 0, 0});
    CHECK(r.branch == Branch::S1);
    CHECK(r.value == doctest::Approx(1.0 - triscord::gamma(a1) / 12));
    CHECK(s2({a1, 0, 0}) == 1.0);
  }

  const CondEntropyResult half = conditional_entropy({0, 0.5, -0.5});
  CHECK(half.branch == Branch::S3);
  CHECK(half.value == doctest::Approx(kS3Half).epsilon(1e-13));
  CHECK(half.value == doctest::Approx(0.907839).epsilon(2e-5));
  CHECK(half.candidates[0] == doctest::Approx(1.0));
  CHECK_FALSE(half.candidates[1].has_value());
  CHECK(*half.candidates[2] == doctest::Approx(kS3Half));
  CHECK(half.angles.theta1 == doctest::Approx(kPi / 4));
  CHECK(half.angles.phi2 == doctest::Approx(kPi / 2));

  CHECK_THROWS_AS(conditional_entropy({0, 0, 1.5}), DomainError);
}

TEST_CASE("branch rule and tie-breaking") {
  // Both S1 and S2 vanish at GHZ; S1 wins the tie.
  CHECK(conditional_entropy({-3, -4, 0}).branch == Branch::S1);
  // c1 c2 > 0 forces the {S1, S2} pair.
  const CondEntropyResult plus = conditional_entropy({0, 1, 1});
  CHECK(plus.branch == Branch::S2);
  CHECK_FALSE(plus.candidates[2].has_value());
  // |3 c1| < |c2| with c1 c2 < 0 also stays on {S1, S2}.
  const CondEntropyResult weak = conditional_entropy({0, 0.1, -0.9});
  CHECK_FALSE(weak.candidates[2].has_value());
  CHECK(weak.candidates[1].has_value());
}

TEST_CASE("gtqd and friends at the benchmark states") {
  CHECK(gtqd({-3, 4, 0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t3({-3, 4, 0}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(j3({-3, 4, 0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gtqd({0, 1, -1}) == doctest::Approx(kD3Peak).epsilon(1e-12));
  CHECK(gtqd({0, 1, -1}) == doctest::Approx(0.600881).epsilon(1e-4));
  CHECK(std::abs(gtqd({0, 1, 1})) < 1e-12);

  for (double a1 = -3.0; a1 <= 1.0; a1 += 0.25) {
    const XParams p{a1, 0, 0};
    CHECK(std::abs(gtqd(p)) < 1e-12);
    CHECK(j3(p) == doctest::Approx(triscord::gamma(a1) / 12));
    CHECK(t3(p) == doctest::Approx(j3(p)));
  }
}

TEST_CASE("report assembles every quantity") {
  const CorrelationReport r = report({-3, 4, 0});
  CHECK(std::abs(r.s_rho) < 1e-12);
  CHECK(r.s_ab == doctest::Approx(1.0));
  CHECK(std::abs(r.s_cond) < 1e-12);
  CHECK(r.branch == Branch::S1);
  CHECK(r.d3 == doctest::Approx(1.0));
  CHECK(r.t3 == doctest::Approx(2.0));
  CHECK(r.j3 == doctest::Approx(1.0));
  CHECK(r.n3 == doctest::Approx(1.0));

  const CorrelationReport plus = report({0, 1, 1});
  CHECK(std::abs(plus.d3) < 1e-12);
  CHECK(std::abs(plus.n3) < 1e-12);
}

TEST_CASE("negativity") {
  CHECK(negativity_analytic({-3, 4, 0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(negativity_numeric(build_rho({-3, 4, 0})) == doctest::Approx(1.0).epsilon(1e-12));
  for (double a1 = -3.0; a1 <= 1.0; a1 += 0.2) {
    const double lim = std::min(1 - a1, 1 + a1 / 3);
    for (double c = -lim; c <= lim; c += lim / 5 + 1e-9) CHECK(negativity_analytic({a1, c, c}) <= 1e-12);
  }
  for (double c1 = -1.0; c1 <= 1.0; c1 += 0.1)
    for (double c2 = -1.0; c2 <= 1.0; c2 += 0.1) REQUIRE(negativity_analytic({0, c1, c2}) <= 1e-12);

  TripleGen gen(44);
  for (int n = 0; n < 1000; ++n) {
    const XParams p = gen.next();
    const DensityMatrix rho = build_rho(p);
    const double analytic = negativity_analytic(p);
    REQUIRE(analytic >= 0.0);
    for (Subsystem s : {Subsystem::A, Subsystem::B, Subsystem::C}) {
      REQUIRE(std::abs(analytic - negativity_numeric(rho, s)) < 1e-10);
    }
  }
}

TEST_CASE("closed forms equal s_rel at their angle points") {
  TripleGen gen(45);
  int s3_defined = 0;
  for (int n = 0; n < 10000; ++n) {
    const XParams p = gen.next();
    REQUIRE(std::abs(s_rel(p, {0, 0, 0, 0}) - s1(p)) < 1e-10);
    REQUIRE(std::abs(s_rel(p, {kPi / 4, kPi / 4, 0, 0}) - s2(p)) < 1e-10);
    REQUIRE(std::abs(s_rel(p, branch_angles(p, Branch::S1)) - s1(p)) < 1e-10);
    REQUIRE(std::abs(s_rel(p, branch_angles(p, Branch::S2)) - s2(p)) < 1e-10);
    if (const auto v = s3(p)) {
      ++s3_defined;
      REQUIRE(std::abs(s_rel(p, {kPi / 4, kPi / 4, 0, *s3_phi(p)}) - *v) < 1e-10);
      REQUIRE(std::abs(s_rel(p, branch_angles(p, Branch::S3)) - *v) < 1e-10);
    }
    const CondEntropyResult r = conditional_entropy(p);
    REQUIRE(std::abs(s_rel(p, r.angles) - r.value) < 1e-10);
  }
  CHECK(s3_defined > 1000);
}

TEST_CASE("S3 beats S2 exactly when c1 c2 < 0") {
  TripleGen gen(46);
  int negative = 0;
  int positive = 0;
  for (int n = 0; n < 20000; ++n) {
    const XParams p = gen.next();
    const auto v3 = s3(p);
    if (!v3) continue;
    const double v2 = s2(p);
    if (p.c1 * p.c2 < 0) {
      ++negative;
      REQUIRE(*v3 < v2);
    } else if (p.c1 * p.c2 > 0) {
      ++positive;
      REQUIRE(v2 <= *v3);
    }
  }
  CHECK(negative > 1000);
  CHECK(positive > 1000);
}

TEST_CASE("conditional_entropy is the minimum over an angle grid") {
  TripleGen gen(47);
  constexpr int kT = 12;
  constexpr int kP = 12;
  for (int n = 0; n < 60; ++n) {
    const XParams p = gen.next();
    const double v = conditional_entropy(p).value;
    double grid_min = INFINITY;
    for (int i = 0; i < kT; ++i)
      for (int j = 0; j < kT; ++j)
        for (int k = 0; k < kP; ++k)
          for (int l = 0; l < kP; ++l) {
            const MeasurementAngles a{i * kPi / kT, j * kPi / kT, k * 2 * kPi / kP, l * 2 * kPi / kP};
            grid_min = std::min(grid_min, s_rel(p, a));
          }
    REQUIRE(v <= grid_min + 1e-10);
  }
}

TEST_CASE("s_rel is stationary at the branch points") {
  constexpr double h = 1e-5;
  TripleGen gen(48);
  for (int n = 0; n < 2000; ++n) {
    const XParams p = gen.next();
    for (double theta : {0.0, kPi / 4}) {
      const MeasurementAngles at{theta, theta, 0, 0};
      REQUIRE(std::abs(d_theta(p, at, h)) < 1e-6);
      REQUIRE(std::abs(d_coord(p, at, &MeasurementAngles::theta1, h)) < 1e-6);
      REQUIRE(std::abs(d_coord(p, at, &MeasurementAngles::theta2, h)) < 1e-6);
    }
    const MeasurementAngles diag{kPi / 4, kPi / 4, 0, 0};
    REQUIRE(std::abs(d_coord(p, diag, &MeasurementAngles::phi2, h)) < 1e-6);
    REQUIRE(std::abs(d_coord(p, diag, &MeasurementAngles::phi1, h)) < 1e-6);
    if (const auto phi = s3_phi(p)) {
      // Skip the existence boundary where the stationary point merges with phi2 = 0 or pi.
      if (*phi < 1e-3 || *phi > kPi - 1e-3) continue;
      const MeasurementAngles at{kPi / 4, kPi / 4, 0, *phi};
      REQUIRE(std::abs(d_coord(p, at, &MeasurementAngles::phi2, h)) < 1e-6);
      REQUIRE(std::abs(d_theta(p, at, h)) < 1e-6);
    }
  }
}

TEST_CASE("identities and sign symmetry") {
  TripleGen gen(49);
  for (int n = 0; n < 10000; ++n) {
    const XParams p = gen.next();
    const double d = gtqd(p);
    REQUIRE(d >= 0.0);
    REQUIRE(t3(p) >= 0.0);
    REQUIRE(j3(p) >= 0.0);
    REQUIRE(std::abs(d - (t3(p) - j3(p))) < 1e-12);
    REQUIRE(std::abs(t3(p) - (1 + s_ab(p) - s_total(p))) < 1e-12);
    REQUIRE(std::abs(d - gtqd({p.a1, -p.c1, -p.c2})) < 1e-12);
    REQUIRE(conditional_entropy(p).branch == conditional_entropy({p.a1, -p.c1, -p.c2}).branch);
  }
}

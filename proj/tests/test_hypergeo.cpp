#include <doctest.h>

#include <cmath>
#include <random>

#include "empirical.hpp"
#include "jackhyp/combinatorics.hpp"
#include "jackhyp/hypergeo.hpp"
#include "jackhyp/jack.hpp"

using namespace jackhyp;

namespace {

Scalar Q(const char* s) { return parse_scalar(s); }

SeriesParams P(std::vector<const char*> al, std::vector<const char*> be, int r, const char* a) {
  std::vector<Scalar> x, y;
  for (const char* s : al) x.push_back(Q(s));
  for (const char* s : be) y.push_back(Q(s));
  return SeriesParams(x, y, r, Q(a));
}

long double partial_at_one(const SeriesParams& p, int from, int to) {
  long double s = 0;
  for (int n = from; n <= to; ++n) s += reduce_shell(shell_terms(p, n, {}, Precision::Extended, Exec::Serial), Precision::Extended);
  return s;
}

}  // namespace

TEST_CASE("convergent_at_one examples") {
  CHECK(convergent_at_one(P({"1", "1"}, {"3"}, 1, "2")));
  CHECK_FALSE(convergent_at_one(P({"2", "2"}, {"3"}, 2, "2")));
  for (int r = 1; r <= 4; ++r)
    for (const char* a : {"1", "2", "1/2"}) CHECK(convergent_at_one(P({"0", "5"}, {"3"}, r, a)));
}

TEST_CASE("convergent_at_one on other shapes") {
  CHECK(convergent_at_one(P({"5", "7"}, {"3/2", "5/2"}, 2, "2")));
  CHECK(convergent_at_one(P({}, {}, 3, "1")));
  CHECK_FALSE(convergent_at_one(P({"1", "1", "1"}, {"9"}, 2, "2")));
  CHECK(convergent_at_one(P({"-2", "1", "1"}, {"9"}, 2, "2")));
}

TEST_CASE("balance excess sits on the boundary") {
  // r = 2, a = 2: the threshold on sum(alpha) - sum(beta) is -1
  CHECK(balance_excess(P({"1", "1"}, {"3"}, 2, "2")) == 0);
  CHECK_FALSE(convergent_at_one(P({"1", "1"}, {"3"}, 2, "2")));
  CHECK(convergent_at_one(P({"1", "1"}, {"31/10"}, 2, "2")));
  CHECK(balance_excess(P({"1/2", "1"}, {"2"}, 3, "1")) == Q("1/2"));
}

TEST_CASE("numerator bounds") {
  const auto b = numerator_bounds(P({"1", "-3"}, {"4"}, 3, "2"));
  REQUIRE(b.size() == 3);
  CHECK(b[0].row == 1);
  CHECK(b[0].level == 3);
  CHECK(b[1].row == 2);
  CHECK(b[1].level == 0);
  CHECK(b[2].row == 3);
  CHECK(b[2].level == 1);
  CHECK(is_finite_series(P({"-3"}, {}, 2, "2")));
  CHECK_FALSE(is_finite_series(P({"1"}, {}, 2, "2")));
}

TEST_CASE("value 1 at the origin") {
  for (int r = 1; r <= 3; ++r) {
    const SeriesResult res = hyper_eval(P({"3/2", "2"}, {"5/2"}, r, "2"), std::vector<long double>(r, 0), 20);
    CHECK(res.has_value);
    CHECK(res.value == 1);
  }
  // even an everywhere-divergent shape is 1 at the origin
  const SeriesResult res = hyper_eval(P({"1", "1", "1"}, {}, 2, "2"), {0, 0}, 5);
  CHECK(res.has_value);
  CHECK(res.value == 1);
}

TEST_CASE("2F1(1,1;2) against the logarithm") {
  const long double t = 0.5L;
  const SeriesResult res = hyper_eval(P({"1", "1"}, {"2"}, 1, "2"), {t}, 60);
  CHECK(res.verdict == Verdict::ConvergedByCriterion);
  CHECK(std::fabs(res.value + std::log(1 - t * t) / (t * t)) < 1e-10);
}

TEST_CASE("1F0 and 0F0 in rank one") {
  const long double x = 0.3L;
  const SeriesResult f10 = hyper_series(P({"5/2"}, {}, 1, "2"), {x}, 200, {Precision::Extended});
  CHECK(std::fabs(f10.value - std::pow(1 - x, -2.5L)) < 1e-15);
  const SeriesResult f00 = hyper_series(P({}, {}, 1, "2"), {x}, 40, {Precision::Extended});
  CHECK(std::fabs(f00.value - std::exp(x)) < 1e-15);
}

TEST_CASE("0F0 is the exponential of the trace") {
  const std::vector<long double> x{0.1L, -0.2L, 0.4L};
  for (const char* a : {"1", "2", "4"}) {
    const SeriesResult res = hyper_series(P({}, {}, 3, a), x, 40, {Precision::Extended});
    CHECK(std::fabs(res.value - std::exp(0.3L)) < 1e-15);
  }
}

TEST_CASE("truncating numerator sums only partitions with m_j = 0") {
  // alpha_1 = (a/2)(j-1) with j = 2, a = 2
  const SeriesParams p = P({"1", "3/2"}, {"5/2"}, 2, "2");
  const std::vector<Scalar> tq{frac(1, 2), frac(3, 10)};
  const std::vector<long double> t{0.5L, 0.3L};
  std::vector<Scalar> sq{tq[0] * tq[0], tq[1] * tq[1]};
  long double direct = 0;
  for (int n = 0; n <= 30; ++n)
    for (const Partition& m : enumerate_partitions(n, 2)) {
      if (m.length() >= 2) {
        CHECK(series_coefficient(p, m) == 0);
        continue;
      }
      direct += to_long_double(series_coefficient(p, m) * omega_eval(m, Q("2"), sq));
    }
  const SeriesResult res = hyper_eval(p, t, 30, {Precision::Extended});
  CHECK(std::fabs(res.value - direct) < 1e-15);
}

TEST_CASE("alpha containing 0 sums to 1 at 1^r") {
  for (int r = 1; r <= 3; ++r) {
    const SeriesResult res = hyper_at_one(P({"0", "7"}, {"2"}, r, "2"), 30, 0);
    CHECK(res.has_value);
    CHECK(res.value == 1);
    CHECK(res.verdict == Verdict::TruncatedSeries);
  }
}

TEST_CASE("divergent parameter sets are refused") {
  const SeriesResult res = hyper_at_one(P({"2", "2"}, {"3"}, 2, "2"), 30, 0);
  CHECK_FALSE(res.has_value);
  CHECK(res.verdict == Verdict::DivergentByCriterion);
  CHECK(res.shell_sums.empty());
}

TEST_CASE("balanced convergent series has a finite value and decaying shells") {
  // sigma = 1, c = 4, r = 2, a = 2: 2 - 4 < -1
  const SeriesResult res = hyper_at_one(P({"1", "1"}, {"4"}, 2, "2"), 200, 0, {Precision::Extended});
  REQUIRE(res.has_value);
  CHECK(res.verdict == Verdict::ConvergedByCriterion);
  CHECK(std::isfinite(static_cast<double>(res.value)));
  const auto& mags = res.shell_magnitudes;
  for (std::size_t n = 20; n + 1 < mags.size(); ++n) CHECK(mags[n + 1] < mags[n]);
}

TEST_CASE("tail tolerance stops the summation") {
  const SeriesResult res = hyper_at_one(P({"1", "1"}, {"5"}, 1, "2"), 10000, 1e-6);
  CHECK(res.tolerance_met);
  CHECK(res.last_shell_magnitude < 1e-6);
  CHECK(res.truncation_degree < 10000);
  // 2F1(1,1;5;1) = 4/3 by Gauss
  CHECK(std::fabs(res.value - 4.0L / 3) < 1e-2);
}

TEST_CASE("pole lattice and point validation") {
  CHECK_THROWS_AS(P({"1"}, {"-1"}, 1, "2"), DomainError);
  CHECK_THROWS_AS(P({"3/2"}, {"1"}, 2, "2"), DomainError);
  CHECK_NOTHROW(P({"1"}, {"1"}, 2, "2"));
  CHECK_NOTHROW(P({"1"}, {"1/2"}, 2, "2"));
  CHECK_THROWS_AS(P({"1"}, {"2"}, 0, "2"), DomainError);
  const SeriesParams p = P({"1"}, {"2"}, 2, "2");
  CHECK_THROWS_AS(hyper_eval(p, {0.5L, 1.0L}, 5), DomainError);
  CHECK_THROWS_AS(hyper_eval(p, {-0.1L, 0.2L}, 5), DomainError);
  CHECK_THROWS_AS(hyper_eval(p, {0.5L}, 5), DomainError);
  CHECK_THROWS_AS(hyper_eval(p, {0.1L, 0.2L}, -1), DomainError);
}

TEST_CASE("exact and floating terms agree") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(1, 40), den(1, 7);
  const std::vector<Scalar> xq{frac(1, 4), frac(1, 9), frac(2, 5)};
  const std::vector<long double> x{0.25L, 1.0L / 9, 0.4L};
  for (int s = 0; s < 6; ++s) {
    const Scalar a = s % 2 ? Scalar(2) : frac(1, 2);
    const SeriesParams p({frac(num(rng), den(rng)), frac(num(rng), den(rng))}, {frac(num(rng), den(rng))}, 3, a);
    for (int n = 0; n <= 7; ++n) {
      const auto parts = enumerate_partitions(n, 3);
      const auto terms = shell_terms(p, n, x, Precision::Double, Exec::Serial);
      REQUIRE(terms.size() == parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const Scalar c = series_coefficient(p, parts[i]);
        CHECK(series_coefficient_real(p, parts[i], 0.0) == doctest::Approx(to_double(c)).epsilon(1e-12));
        const double exact = to_double(c * omega_eval(parts[i], a, xq));
        CHECK(static_cast<double>(terms[i]) == doctest::Approx(exact).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("nonnegative parameters give nondecreasing partial sums") {
  for (int r = 1; r <= 3; ++r) {
    const SeriesResult res = hyper_at_one(P({"3/2", "2"}, {"6"}, r, "2"), 40, 0);
    REQUIRE(res.has_value);
    long double prev = 0;
    for (long double s : res.shell_sums) {
      CHECK(s >= 0);
      CHECK(prev + s >= prev);
      prev += s;
    }
  }
}

TEST_CASE("logarithmic growth at zero excess") {
  // rank one harmonic series and a rank-two diagonal case
  for (const SeriesParams& p : {P({"1", "1"}, {"2"}, 1, "2"), P({"1", "1"}, {"3"}, 2, "2")}) {
    CHECK(balance_excess(p) == 0);
    const long double d1 = partial_at_one(p, 101, 200);
    const long double d2 = partial_at_one(p, 201, 400);
    CHECK(d1 > 0);
    CHECK(d2 / d1 == doctest::Approx(1.0).epsilon(0.02));
    const verify::EmpiricalBehavior e = verify::empirical_behavior(p, 120);
    CHECK_FALSE(e.bounded);
    CHECK(e.exponent == doctest::Approx(-1.0).epsilon(0.05));
  }
}

TEST_CASE("empirical boundedness agrees with the criterion on the curated cases") {
  const auto cases = verify::curated_boundary_cases();
  CHECK(cases.size() == 20);
  for (const verify::EmpiricalCase& c : cases) {
    CHECK(c.params.rank <= 3);
    const verify::EmpiricalBehavior e = verify::empirical_behavior(c.params, 80);
    CHECK_MESSAGE(e.bounded == convergent_at_one(c.params), c.name << " exponent " << e.exponent);
  }
}

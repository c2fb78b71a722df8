#include <doctest.h>

#include <algorithm>
#include <random>

#include "jack_oracle.hpp"
#include "jackhyp/combinatorics.hpp"
#include "jackhyp/jack.hpp"

using namespace jackhyp;

namespace {

Scalar Q(const char* s) { return parse_scalar(s); }

std::vector<Partition> up_to(int w, int len) {
  std::vector<Partition> out;
  for (int n = 0; n <= w; ++n)
    for (const Partition& m : enumerate_partitions(n, len)) out.push_back(m);
  return out;
}

// Weyl dimension of the U(n) module with highest weight m.
Scalar weyl_dim(const Partition& m, int n) {
  const std::vector<int> e = m.padded(n);
  Scalar d = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= Scalar(e[i] - e[j] + j - i) / Scalar(j - i);
  return d;
}

}  // namespace

TEST_CASE("J_(1) is m_(1)") {
  for (const char* al : {"1", "2", "1/3"})
    for (int r = 1; r <= 4; ++r) {
      const SymmetricPoly j = jack_J(Partition{1}, Q(al), r);
      CHECK(j.coeffs().size() == 1);
      CHECK(j.coeff(Partition{1}) == 1);
    }
}

TEST_CASE("degree two tables") {
  const Scalar alpha = Q("3/2");
  const SymmetricPoly j2 = jack_J(Partition{2}, alpha, 2);
  CHECK(j2.coeff(Partition{2}) == 1 + alpha);
  CHECK(j2.coeff(Partition{1, 1}) == 2);
  const SymmetricPoly j11 = jack_J(Partition{1, 1}, alpha, 2);
  CHECK(j11.coeff(Partition{2}) == 0);
  CHECK(j11.coeff(Partition{1, 1}) == 2);
}

TEST_CASE("lowest coefficient is |m|! when the rank allows it") {
  for (const char* al : {"1", "2", "1/2", "5/3"})
    for (const Partition& m : up_to(5, 5)) {
      if (m.weight() == 0) continue;
      Scalar fact = 1;
      for (int i = 2; i <= m.weight(); ++i) fact *= i;
      CHECK(jack_J(m, Q(al), m.weight()).coeff(Partition(std::vector<int>(m.weight(), 1))) == fact);
    }
}

TEST_CASE("alpha = 1 gives hook product times Schur") {
  for (int r = 1; r <= 3; ++r)
    for (const Partition& m : up_to(5, r)) {
      SymmetricPoly s = verify::schur_bialternant(m, r);
      const Scalar h = verify::hook_length_product(m);
      const SymmetricPoly j = jack_J(m, Scalar(1), r);
      for (const auto& [mu, c] : j.coeffs()) CHECK(c == h * s.coeff(mu));
      CHECK(j.coeffs().size() == s.coeffs().size());
    }
}

TEST_CASE("alpha = 2 coefficients are nonnegative") {
  for (const Partition& m : up_to(4, 4)) {
    const SymmetricPoly j = jack_J(m, Scalar(2), 4);
    for (const auto& [mu, c] : j.coeffs()) CHECK(sgn(c) >= 0);
  }
}

TEST_CASE("triangular in dominance order") {
  for (const char* al : {"1/2", "2", "7/3"})
    for (const Partition& m : up_to(6, 4)) {
      const SymmetricPoly j = jack_J(m, Q(al), 4);
      for (const auto& [mu, c] : j.coeffs()) {
        CHECK(mu.weight() == m.weight());
        CHECK(m.dominates(mu));
        CHECK(c != 0);
      }
    }
}

TEST_CASE("agrees with the Gram-Schmidt oracle") {
  for (const char* al : {"1", "2", "1/2", "4"})
    for (int r = 1; r <= 3; ++r)
      for (const Partition& m : up_to(4, r)) CHECK(jack_J(m, Q(al), r) == verify::jack_by_gram_schmidt(m, Q(al), r));
}

TEST_CASE("eigenvectors with separated eigenvalues up to weight 5") {
  for (const char* al : {"1", "2", "1/2", "4"})
    for (int r = 1; r <= 3; ++r) {
      for (int n = 0; n <= 5; ++n) CHECK(verify::eigenvalue_collisions(n, Q(al), r) == 0);
      for (const Partition& m : up_to(5, r)) CHECK(verify::is_laplace_beltrami_eigenvector(m, Q(al), r));
    }
}

TEST_CASE("uncached and cached computations match") {
  clear_jack_caches();
  for (const Partition& m : up_to(5, 3)) CHECK(jack_J(m, Q("2/3"), 3) == jack_J_uncached(m, Q("2/3"), 3));
}

TEST_CASE("length above the rank is rejected") {
  CHECK_THROWS_AS(jack_J(Partition{1, 1, 1}, Scalar(2), 2), DomainError);
  CHECK_THROWS_AS(jack_J(Partition{1}, Scalar(0), 2), DomainError);
  CHECK_THROWS_AS(omega_eval(Partition{1, 1, 1}, Scalar(2), std::vector<Scalar>{1, 1}), DomainError);
}

TEST_CASE("omega_eval examples") {
  const Scalar a = Q("2/3");
  for (int r = 1; r <= 4; ++r) {
    const std::vector<Scalar> ones(r, Scalar(1)), zeros(r, Scalar(0));
    std::vector<Scalar> t;
    Scalar sum = 0;
    for (int i = 0; i < r; ++i) {
      t.push_back(frac(i + 1, 7));
      sum += t.back();
    }
    CHECK(omega_eval(Partition{1}, a, t) == sum / r);
    for (const Partition& m : up_to(4, r)) {
      CHECK(omega_eval(m, a, ones) == 1);
      if (m.weight() > 0) CHECK(omega_eval(m, a, zeros) == 0);
    }
  }
}

TEST_CASE("omega_eval is symmetric") {
  std::mt19937_64 rng(3);
  const std::vector<Scalar> base{frac(1, 3), frac(-2, 5), frac(7, 4), frac(1, 9)};
  for (const Partition& m : up_to(4, 4)) {
    const Scalar ref = omega_eval(m, Scalar(2), base);
    std::vector<Scalar> t = base;
    for (int s = 0; s < 10; ++s) {
      std::shuffle(t.begin(), t.end(), rng);
      CHECK(omega_eval(m, Scalar(2), t) == ref);
    }
  }
}

TEST_CASE("floating omega_eval tracks the exact value") {
  const std::vector<Scalar> tq{frac(1, 4), frac(1, 2), frac(2, 3)};
  const std::vector<double> td{0.25, 0.5, 2.0 / 3.0};
  for (const Partition& m : up_to(6, 3)) {
    const double exact = to_double(omega_eval(m, Scalar(1), tq));
    CHECK(omega_eval(m, Scalar(1), td) == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("jack_norm_one examples") {
  CHECK(jack_norm_one(Partition{}, 3, Scalar(2)) == 1);
  for (int r = 1; r <= 5; ++r) CHECK(jack_norm_one(Partition{1}, r, Q("3/2")) == r);
}

TEST_CASE("jack_norm_one matches evaluation at 1^r") {
  for (const char* as : {"1", "2", "4", "1/2"})
    for (int r = 1; r <= 4; ++r)
      for (const Partition& m : up_to(5, r)) {
        const Scalar a = Q(as);
        CHECK(jack_norm_one(m, r, a) == jack_J(m, 2 / a, r).at_ones());
      }
}

TEST_CASE("dim_component examples") {
  CHECK(dim_component(make_su(3, 2), Partition{}) == 1);
  CHECK(dim_component(make_su(3, 2), Partition{2}) == 18);
  for (int l = 2; l <= 6; ++l)
    for (int r = 1; r <= l; ++r) CHECK(dim_component(make_su(l, r), Partition{1}) == l * r);
  CHECK_THROWS_AS(dim_component(make_so(5, 2), Partition{1}), DomainError);
}

TEST_CASE("dim_component is the product of the two GL dimensions") {
  for (auto [l, r] : {std::pair{3, 2}, {4, 2}, {5, 3}, {4, 4}})
    for (const Partition& m : up_to(4, r)) CHECK(dim_component(make_su(l, r), m) == weyl_dim(m, l) * weyl_dim(m, r));
}

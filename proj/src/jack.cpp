#include "jackhyp/jack.hpp"

#include <mutex>
#include <string>
#include <unordered_map>

#include "jackhyp/combinatorics.hpp"

namespace jackhyp {

Scalar SymmetricPoly::coeff(const Partition& mu) const {
  auto it = coeffs_.find(mu);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

void SymmetricPoly::set(const Partition& mu, const Scalar& c) {
  if (mu.weight() != degree_) throw std::logic_error("SymmetricPoly: monomial of the wrong degree");
  if (mu.length() > rank_) throw std::logic_error("SymmetricPoly: monomial longer than the rank");
  if (c == 0)
    coeffs_.erase(mu);
  else
    coeffs_[mu] = c;
}

namespace {

template <class T>
T evaluate_table(const SymmetricPoly::Table& table, int rank, const std::vector<T>& x) {
  if (static_cast<int>(x.size()) != rank) throw DomainError("point has the wrong number of coordinates");
  T s = 0;
  for (const auto& [mu, c] : table) {
    if constexpr (std::is_same_v<T, Scalar>) {
      s += c * monomial_symmetric(mu, x);
    } else {
      s += to_real<T>(c) * monomial_symmetric(mu, x);
    }
  }
  return s;
}

}  // namespace

Scalar SymmetricPoly::evaluate(const std::vector<Scalar>& x) const { return evaluate_table(coeffs_, rank_, x); }
double SymmetricPoly::evaluate(const std::vector<double>& x) const { return evaluate_table(coeffs_, rank_, x); }
long double SymmetricPoly::evaluate(const std::vector<long double>& x) const { return evaluate_table(coeffs_, rank_, x); }

Scalar SymmetricPoly::at_ones() const {
  Scalar s = 0;
  for (const auto& [mu, c] : coeffs_) s += c * Scalar(static_cast<long>(orbit_size(mu, rank_)));
  return s;
}

MultivariatePoly SymmetricPoly::expand() const {
  MultivariatePoly p(rank_);
  for (const auto& [mu, c] : coeffs_) {
    std::vector<int> e = mu.padded(rank_);
    std::sort(e.begin(), e.end());
    do {
      p.add_term(e, c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return p;
}

Scalar jack_eigenvalue(const Partition& m, const Scalar& alpha, int r) {
  Scalar s = 0;
  for (int i = 0; i < m.length(); ++i) s += Scalar(m[i] * (m[i] - 1)) * alpha / 2 - Scalar(i * m[i]);
  return s + Scalar((r - 1) * m.weight());
}

namespace {

using Index = std::map<Partition, int>;

Scalar rho(const Partition& m, const Scalar& two_over_alpha) {
  Scalar s = 0;
  for (int i = 0; i < m.length(); ++i) s += m[i] * (m[i] - 1 - two_over_alpha * i);
  return s;
}

// Coefficients of J_kappa on the monomials of `shell` (all partitions of
// |kappa| with at most r parts, reverse-lex). The Laplace-Beltrami matrix is
// triangular in dominance order, so every coefficient is a weighted sum of
// coefficients already fixed for more dominant monomials.
SymmetricPoly solve_jack(const Partition& kappa, const Scalar& alpha, int r, const std::vector<Partition>& shell,
                         const Index& index) {
  const Scalar two_over_alpha = 2 / alpha;
  const Scalar rho_kappa = rho(kappa, two_over_alpha);
  std::vector<Scalar> c(shell.size());
  std::vector<char> live(shell.size(), 0);
  SymmetricPoly out(r, kappa.weight());

  int start = index.at(kappa);
  c[static_cast<std::size_t>(start)] = hook_products(kappa, alpha).lower;
  live[static_cast<std::size_t>(start)] = 1;
  out.set(kappa, c[static_cast<std::size_t>(start)]);

  std::vector<int> raised(static_cast<std::size_t>(r));
  for (std::size_t s = static_cast<std::size_t>(start) + 1; s < shell.size(); ++s) {
    const Partition& mu = shell[s];
    if (!kappa.dominates(mu)) continue;
    std::vector<int> mm = mu.padded(r);
    Scalar acc = 0;
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        for (int t = 1; t <= mm[static_cast<std::size_t>(j)]; ++t) {
          raised = mm;
          raised[static_cast<std::size_t>(i)] += t;
          raised[static_cast<std::size_t>(j)] -= t;
          int diff = raised[static_cast<std::size_t>(i)] - raised[static_cast<std::size_t>(j)];
          std::sort(raised.begin(), raised.end(), std::greater<>());
          auto it = index.find(Partition(raised));
          if (it == index.end()) continue;
          auto k = static_cast<std::size_t>(it->second);
          if (!live[k]) continue;
          acc += diff * c[k];
        }
      }
    }
    if (acc == 0) continue;
    Scalar gap = rho_kappa - rho(mu, two_over_alpha);
    if (gap == 0) throw std::logic_error("Jack recurrence: degenerate eigenvalues");
    c[s] = two_over_alpha * acc / gap;
    live[s] = 1;
    out.set(mu, c[s]);
  }
  return out;
}

Index make_index(const std::vector<Partition>& shell) {
  Index idx;
  for (std::size_t i = 0; i < shell.size(); ++i) idx.emplace(shell[i], static_cast<int>(i));
  return idx;
}

void check_args(const Partition& m, const Scalar& alpha, int r) {
  if (r < 1) throw DomainError("rank must be at least 1");
  if (sgn(alpha) <= 0) throw DomainError("Jack parameter alpha must be positive");
  if (m.length() > r)
    throw DomainError("partition " + to_string(m) + " has more than " + std::to_string(r) +
                      " parts; J_m vanishes identically in r variables");
}

std::string cache_key(int n_or_m, const std::string& tag, const Scalar& alpha, int r) {
  return std::to_string(n_or_m) + "|" + tag + "|" + to_string(alpha) + "|" + std::to_string(r);
}

struct Caches {
  std::mutex mu;
  std::unordered_map<std::string, SymmetricPoly> jacks;
  std::unordered_map<std::string, std::shared_ptr<const JackShell>> shells;
};

Caches& caches() {
  static Caches c;
  return c;
}

}  // namespace

SymmetricPoly jack_J_uncached(const Partition& m, const Scalar& alpha, int r) {
  check_args(m, alpha, r);
  std::vector<Partition> shell = enumerate_partitions(m.weight(), r);
  return solve_jack(m, alpha, r, shell, make_index(shell));
}

SymmetricPoly jack_J(const Partition& m, const Scalar& alpha, int r) {
  check_args(m, alpha, r);
  const std::string key = cache_key(m.weight(), to_string(m), alpha, r);
  Caches& cc = caches();
  {
    std::lock_guard<std::mutex> lock(cc.mu);
    auto it = cc.jacks.find(key);
    if (it != cc.jacks.end()) return it->second;
  }
  SymmetricPoly j = jack_J_uncached(m, alpha, r);
  std::lock_guard<std::mutex> lock(cc.mu);
  cc.jacks.emplace(key, j);
  return j;
}

std::shared_ptr<const JackShell> jack_shell(int n, int r, const Scalar& alpha) {
  check_args(Partition{}, alpha, r);
  if (n < 0) throw DomainError("negative shell weight");
  const std::string key = cache_key(n, "shell", alpha, r);
  Caches& cc = caches();
  {
    std::lock_guard<std::mutex> lock(cc.mu);
    auto it = cc.shells.find(key);
    if (it != cc.shells.end()) return it->second;
  }

  auto shell = std::make_shared<JackShell>();
  shell->weight = n;
  shell->rank = r;
  shell->alpha = alpha;
  shell->partitions = enumerate_partitions(n, r);
  const std::size_t count = shell->partitions.size();
  const Index index = make_index(shell->partitions);
  const Scalar a = 2 / alpha;

  std::vector<SymmetricPoly> polys(count, SymmetricPoly(r, n));
  shell->omega.assign(count, std::vector<long double>(count, 0.0L));
  const long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < total; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const Partition& kappa = shell->partitions[u];
    polys[u] = solve_jack(kappa, alpha, r, shell->partitions, index);
    const Scalar norm = jack_norm_one(kappa, r, a);
    for (const auto& [mu, c] : polys[u].coeffs())
      shell->omega[u][static_cast<std::size_t>(index.at(mu))] = to_long_double(Scalar(c / norm));
  }
  shell->jack = std::move(polys);

  std::lock_guard<std::mutex> lock(cc.mu);
  for (std::size_t i = 0; i < count; ++i)
    cc.jacks.try_emplace(cache_key(n, to_string(shell->partitions[i]), alpha, r), shell->jack[i]);
  auto [it, inserted] = cc.shells.try_emplace(key, std::move(shell));
  return it->second;
}

void clear_jack_caches() {
  Caches& cc = caches();
  std::lock_guard<std::mutex> lock(cc.mu);
  cc.jacks.clear();
  cc.shells.clear();
}

Scalar jack_norm_one(const Partition& m, int r, const Scalar& a) {
  if (m.length() > r) throw DomainError("partition longer than the rank");
  if (sgn(a) <= 0) throw DomainError("multiplicity a must be positive");
  const Scalar k = a / 2;
  return gen_pochhammer(Scalar(r * k), m, k) * pow(k, -static_cast<long>(m.weight()));
}

namespace {

template <class T>
T omega_float(const Partition& m, const Scalar& a, const std::vector<T>& t) {
  const int r = static_cast<int>(t.size());
  if (sgn(a) <= 0) throw DomainError("multiplicity a must be positive");
  SymmetricPoly j = jack_J(m, Scalar(2 / a), r);
  const Scalar norm = jack_norm_one(m, r, a);
  T s = 0;
  for (const auto& [mu, c] : j.coeffs()) s += to_real<T>(Scalar(c / norm)) * monomial_symmetric(mu, t);
  return s;
}

}  // namespace

Scalar omega_eval(const Partition& m, const Scalar& a, const std::vector<Scalar>& t) {
  const int r = static_cast<int>(t.size());
  if (sgn(a) <= 0) throw DomainError("multiplicity a must be positive");
  const Scalar norm = jack_norm_one(m, r, a);
  if (norm == 0) throw DomainError("J_m(1^r) vanishes");
  return jack_J(m, Scalar(2 / a), r).evaluate(t) / norm;
}

double omega_eval(const Partition& m, const Scalar& a, const std::vector<double>& t) { return omega_float(m, a, t); }

long double omega_eval(const Partition& m, const Scalar& a, const std::vector<long double>& t) {
  return omega_float(m, a, t);
}

Scalar dim_component(const DomainDescriptor& dom, const Partition& m) {
  if (dom.kind != DomainKind::BCxBC) throw DomainError("dim_component needs a complex (BCxBC) descriptor");
  const int r = dom.complex.rank;
  if (m.length() > r) throw DomainError("partition longer than the rank");
  const Scalar& a = dom.complex.a;
  const Scalar k = a / 2;
  Scalar d = gen_pochhammer(dom.d_over_r, m, k) * pi_m(m, r, a) / gen_pochhammer(q_param(r, a), m, k);
  if (!is_integer(d) || sgn(d) <= 0)
    throw DomainError("dimension of K-type " + to_string(m) + " came out as " + to_string(d) +
                      "; descriptor is inconsistent");
  return d;
}

}  // namespace jackhyp

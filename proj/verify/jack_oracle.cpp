#include "jack_oracle.hpp"

#include <map>

namespace jackhyp::verify {

namespace {

MultivariatePoly power_sum(int nvars, int k) {
  MultivariatePoly p(nvars);
  for (int i = 0; i < nvars; ++i) {
    MultivariatePoly::Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = k;
    p.add_term(e, 1);
  }
  return p;
}

Scalar factorial(int n) {
  Scalar f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// z_lambda = prod_i i^{c_i} c_i! where c_i counts the parts equal to i.
Scalar z_factor(const Partition& lam) {
  std::map<int, int> counts;
  for (int x : lam.parts()) ++counts[x];
  Scalar z = 1;
  for (const auto& [part, c] : counts) z *= pow(Scalar(part), c) * factorial(c);
  return z;
}

using Matrix = std::vector<std::vector<Scalar>>;

Matrix invert(Matrix m) {
  const std::size_t n = m.size();
  Matrix inv(n, std::vector<Scalar>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[col], m[piv]);
    std::swap(inv[col], inv[piv]);
    const Scalar d = m[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      m[col][k] /= d;
      inv[col][k] /= d;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Scalar f = m[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[row][k] -= f * m[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

}  // namespace

SymmetricPoly to_monomial_basis(const MultivariatePoly& f, int degree) {
  const int r = f.nvars();
  SymmetricPoly out(r, degree);
  for (const Partition& mu : enumerate_partitions(degree, r)) out.set(mu, f.coeff(mu.padded(r)));
  return out;
}

SymmetricPoly jack_by_gram_schmidt(const Partition& m, const Scalar& alpha, int r) {
  const int n = m.weight();
  if (m.length() > r) throw DomainError("partition longer than the number of variables");
  if (n == 0) {
    SymmetricPoly one(r, 0);
    one.set(Partition{}, 1);
    return one;
  }
  const std::vector<Partition> parts = enumerate_partitions(n, n);
  const std::size_t P = parts.size();

  // L[lambda][mu]: coefficient of m_mu in p_lambda, read in n variables.
  Matrix L(P, std::vector<Scalar>(P, 0));
  for (std::size_t i = 0; i < P; ++i) {
    MultivariatePoly p = MultivariatePoly::constant(n, 1);
    for (int k : parts[i].parts()) p = p * power_sum(n, k);
    for (std::size_t j = 0; j < P; ++j) L[i][j] = p.coeff(parts[j].padded(n));
  }
  const Matrix Linv = invert(L);
  std::vector<Scalar> w(P);
  for (std::size_t i = 0; i < P; ++i) w[i] = z_factor(parts[i]) * pow(alpha, parts[i].length());

  Matrix G(P, std::vector<Scalar>(P, 0));
  for (std::size_t a = 0; a < P; ++a)
    for (std::size_t b = 0; b < P; ++b)
      for (std::size_t l = 0; l < P; ++l) G[a][b] += Linv[a][l] * Linv[b][l] * w[l];

  auto inner = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    Scalar s = 0;
    for (std::size_t a = 0; a < P; ++a) {
      if (u[a] == 0) continue;
      for (std::size_t b = 0; b < P; ++b)
        if (v[b] != 0) s += u[a] * G[a][b] * v[b];
    }
    return s;
  };

  // Orthogonalize from (1^n) upwards; reverse-lex order refines dominance.
  std::vector<std::vector<Scalar>> basis(P);
  std::vector<Scalar> norms(P);
  std::size_t target = P;
  for (std::size_t idx = P; idx-- > 0;) {
    std::vector<Scalar> v(P, 0);
    v[idx] = 1;
    for (std::size_t j = idx + 1; j < P; ++j) {
      const Scalar c = inner(v, basis[j]) / norms[j];
      for (std::size_t k = 0; k < P; ++k) v[k] -= c * basis[j][k];
    }
    norms[idx] = inner(v, v);
    basis[idx] = std::move(v);
    if (parts[idx] == m) {
      target = idx;
      break;
    }
  }
  std::vector<Scalar> J = basis[target];
  const Scalar scale = factorial(n) / J[P - 1];
  SymmetricPoly out(r, n);
  for (std::size_t k = 0; k < P; ++k)
    if (parts[k].length() <= r) out.set(parts[k], J[k] * scale);
  return out;
}

MultivariatePoly laplace_beltrami(const MultivariatePoly& f, const Scalar& alpha) {
  const int r = f.nvars();
  MultivariatePoly out(r);
  std::vector<MultivariatePoly> xsq_d;
  for (int i = 0; i < r; ++i) {
    MultivariatePoly::Exponent sq(static_cast<std::size_t>(r), 0);
    sq[static_cast<std::size_t>(i)] = 2;
    const MultivariatePoly x2 = MultivariatePoly::monomial(r, sq);
    const MultivariatePoly d = f.derivative(i);
    out += (x2 * d.derivative(i)) * Scalar(alpha / 2);
    xsq_d.push_back(x2 * d);
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const MultivariatePoly num = xsq_d[static_cast<std::size_t>(i)] - xsq_d[static_cast<std::size_t>(j)];
      if (!num.is_zero()) out += num.divide_linear(i, 1, j, -1);
    }
  return out;
}

bool is_laplace_beltrami_eigenvector(const Partition& m, const Scalar& alpha, int r) {
  const MultivariatePoly j = jack_J(m, alpha, r).expand();
  return laplace_beltrami(j, alpha) == j * jack_eigenvalue(m, alpha, r);
}

int eigenvalue_collisions(int weight, const Scalar& alpha, int r) {
  const std::vector<Partition> parts = enumerate_partitions(weight, r);
  int hits = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (jack_eigenvalue(parts[i], alpha, r) == jack_eigenvalue(parts[j], alpha, r)) ++hits;
  return hits;
}

SymmetricPoly schur_bialternant(const Partition& m, int r) {
  if (m.length() > r) throw DomainError("partition longer than the number of variables");
  std::vector<int> exps = m.padded(r);
  for (int i = 0; i < r; ++i) exps[static_cast<std::size_t>(i)] += r - 1 - i;

  // a_{m+delta} = sum over permutations of sign * x^{permuted exponents}
  std::vector<int> perm(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i;
  MultivariatePoly alt(r);
  do {
    int inversions = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    MultivariatePoly::Exponent e(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = exps[static_cast<std::size_t>(i)];
    alt.add_term(e, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) alt = alt.divide_linear(i, 1, j, -1);
  return to_monomial_basis(alt, m.weight());
}

Scalar hook_length_product(const Partition& m) {
  const Partition c = m.conjugate();
  Scalar h = 1;
  for (int i = 0; i < m.length(); ++i)
    for (int j = 0; j < m.at(i); ++j) h *= (m.at(i) - j - 1) + (c.at(j) - i - 1) + 1;
  return h;
}

}  // namespace jackhyp::verify

#pragma once

#include <vector>

#include "jackhyp/jack.hpp"
#include "jackhyp/polynomial.hpp"

namespace jackhyp::verify {

/// J_m^{(alpha)} by Gram-Schmidt on the monomial basis of degree |m| in
/// |m| variables, orthogonalized in the power-sum product
/// <p_lambda, p_mu> = delta z_lambda alpha^{l(lambda)}, normalized by
/// [m_{1^n}] = n! and then restricted to r variables.
SymmetricPoly jack_by_gram_schmidt(const Partition& m, const Scalar& alpha, int r);

/// (alpha/2) sum x_i^2 d_i^2 f + sum_{i<j} (x_i^2 d_i f - x_j^2 d_j f) / (x_i - x_j)
MultivariatePoly laplace_beltrami(const MultivariatePoly& f, const Scalar& alpha);

/// Applies the operator to the expanded jack_J(m) and compares with
/// jack_eigenvalue(m) * jack_J(m).
bool is_laplace_beltrami_eigenvector(const Partition& m, const Scalar& alpha, int r);

/// Number of pairs in one weight shell sharing an eigenvalue (only
/// dominance-incomparable pairs can collide).
int eigenvalue_collisions(int weight, const Scalar& alpha, int r);

/// Schur polynomial as the quotient of alternants a_{m+delta} / a_delta.
SymmetricPoly schur_bialternant(const Partition& m, int r);

/// Product of the classical hook lengths.
Scalar hook_length_product(const Partition& m);

/// Monomial-basis coefficients of a symmetric polynomial of the given degree.
SymmetricPoly to_monomial_basis(const MultivariatePoly& f, int degree);

}  // namespace jackhyp::verify

#pragma once

#include "jackhyp/partition.hpp"
#include "jackhyp/scalar.hpp"

namespace jackhyp {

/// Rising factorial (c)_n = c(c+1)...(c+n-1).
Scalar rising(const Scalar& c, int n);

/// Generalized Pochhammer symbol
///   (c)_{m,beta} = prod_j prod_{k=1..m_j} (c - beta(j-1) + k - 1).
Scalar gen_pochhammer(const Scalar& c, const Partition& m, const Scalar& beta);

/// q = 1 + (a/2)(r-1).
Scalar q_param(int r, const Scalar& a);

/// pi_m = prod_{i<j<=r} (m_i-m_j+(a/2)(j-i))/((a/2)(j-i))
///                    * ((a/2)(j-i+1))_{m_i-m_j} / ((a/2)(j-i-1)+1)_{m_i-m_j}
/// Requires length(m) <= r and a > 0.
Scalar pi_m(const Partition& m, int r, const Scalar& a);

struct HookProducts {
  Scalar lower;  ///< prod over cells of alpha*arm + leg + 1
  Scalar upper;  ///< prod over cells of alpha*arm + leg + alpha
};

HookProducts hook_products(const Partition& m, const Scalar& alpha);

}  // namespace jackhyp

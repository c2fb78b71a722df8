#include "jackhyp/polynomial.hpp"

#include <numeric>

namespace jackhyp {

MultivariatePoly MultivariatePoly::constant(int nvars, const Scalar& c) {
  return monomial(nvars, Exponent(static_cast<std::size_t>(nvars), 0), c);
}

MultivariatePoly MultivariatePoly::variable(int nvars, int j) {
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(j)) = 1;
  return monomial(nvars, e, 1);
}

MultivariatePoly MultivariatePoly::monomial(int nvars, const Exponent& e, const Scalar& c) {
  MultivariatePoly p(nvars);
  p.add_term(e, c);
  return p;
}

int MultivariatePoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MultivariatePoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int de = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && de != d) return false;
    d = de;
  }
  return true;
}

Scalar MultivariatePoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void MultivariatePoly::add_term(const Exponent& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::logic_error("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultivariatePoly& MultivariatePoly::operator+=(const MultivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultivariatePoly& MultivariatePoly::operator-=(const MultivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Scalar(-c));
  return *this;
}

MultivariatePoly& MultivariatePoly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultivariatePoly operator*(const MultivariatePoly& a, const MultivariatePoly& b) {
  MultivariatePoly out(a.nvars_);
  MultivariatePoly::Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultivariatePoly MultivariatePoly::derivative(int j) const {
  MultivariatePoly out(nvars_);
  auto J = static_cast<std::size_t>(j);
  for (const auto& [e, c] : terms_) {
    if (e[J] == 0) continue;
    Exponent f = e;
    --f[J];
    out.add_term(f, c * e[J]);
  }
  return out;
}

MultivariatePoly MultivariatePoly::signed_permute(const std::vector<int>& perm, const std::vector<int>& sign) const {
  MultivariatePoly out(nvars_);
  Exponent f(static_cast<std::size_t>(nvars_));
  for (const auto& [e, c] : terms_) {
    std::fill(f.begin(), f.end(), 0);
    int s = 1;
    for (std::size_t j = 0; j < e.size(); ++j) {
      f[static_cast<std::size_t>(perm[j])] += e[j];
      if (sign[j] < 0 && (e[j] & 1)) s = -s;
    }
    out.add_term(f, s > 0 ? c : Scalar(-c));
  }
  return out;
}

MultivariatePoly MultivariatePoly::divide_linear(int j, const Scalar& cj, int k, const Scalar& ck) const {
  if (cj == 0) throw std::logic_error("divide_linear: zero leading coefficient");
  auto J = static_cast<std::size_t>(j);
  MultivariatePoly rem = *this;
  MultivariatePoly quot(nvars_);
  int top = 0;
  for (const auto& [e, c] : rem.terms_) top = std::max(top, e[J]);
  // peel off the highest power of x_j each round
  for (int d = top; d >= 1; --d) {
    std::vector<std::pair<Exponent, Scalar>> layer;
    for (const auto& [e, c] : rem.terms_)
      if (e[J] == d) layer.emplace_back(e, c);
    for (auto& [e, c] : layer) {
      Exponent qe = e;
      --qe[J];
      Scalar qc = c / cj;
      quot.add_term(qe, qc);
      rem.add_term(e, Scalar(-c));
      if (k >= 0) {
        Exponent se = qe;
        ++se[static_cast<std::size_t>(k)];
        rem.add_term(se, Scalar(-qc * ck));
      }
    }
  }
  if (!rem.is_zero()) throw std::logic_error("divide_linear: polynomial is not divisible by the linear form");
  return quot;
}

Scalar MultivariatePoly::evaluate(const std::vector<Scalar>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::logic_error("evaluate: wrong number of coordinates");
  Scalar s = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= pow(x[i], e[i]);
    s += t;
  }
  return s;
}

}  // namespace jackhyp

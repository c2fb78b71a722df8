#include "jackhyp/dunkl.hpp"

#include <map>

#include "jackhyp/jack.hpp"

namespace jackhyp {

RootSystemData RootSystemData::from(const RealQuadruple& q) {
  RootSystemData rs;
  rs.rank = q.rank;
  rs.iota_minus_1 = q.iota_minus_1;
  rs.a = q.a;
  rs.two_b = q.two_b;
  return rs;
}

RootSystemData RootSystemData::for_domain(const DomainDescriptor& dom) {
  RootSystemData rs = from(dom.real);
  rs.differences_only = dom.family() == Family::A;
  return rs;
}

namespace {

struct Root {
  int j;          // coordinate form cj*x_j + ck*x_k
  Scalar cj;
  int k;          // -1 when the form involves x_j only
  Scalar ck;
  Scalar mult;
  std::vector<int> perm, sign;
};

std::vector<Root> positive_roots(const RootSystemData& rs) {
  const int r = rs.rank;
  std::vector<Root> roots;
  auto identity = [r](std::vector<int>& perm, std::vector<int>& sign) {
    perm.resize(static_cast<std::size_t>(r));
    sign.assign(static_cast<std::size_t>(r), 1);
    for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i;
  };
  for (int j = 0; j < r; ++j) {
    Root flip{j, 0, -1, 0, 0, {}, {}};
    identity(flip.perm, flip.sign);
    flip.sign[static_cast<std::size_t>(j)] = -1;
    if (!rs.differences_only && rs.iota_minus_1 != 0) {
      Root b = flip;
      b.cj = 2;
      b.mult = rs.iota_minus_1;
      roots.push_back(b);
    }
    if (!rs.differences_only && rs.two_b != 0) {
      Root h = flip;
      h.cj = 1;
      h.mult = rs.two_b;
      roots.push_back(h);
    }
  }
  if (rs.a != 0) {
    for (int j = 0; j < r; ++j) {
      for (int k = j + 1; k < r; ++k) {
        Root minus{j, 1, k, -1, rs.a, {}, {}};
        identity(minus.perm, minus.sign);
        std::swap(minus.perm[static_cast<std::size_t>(j)], minus.perm[static_cast<std::size_t>(k)]);
        roots.push_back(minus);
        if (rs.differences_only) continue;
        Root plus = minus;
        plus.ck = 1;
        plus.sign[static_cast<std::size_t>(j)] = -1;
        plus.sign[static_cast<std::size_t>(k)] = -1;
        roots.push_back(plus);
      }
    }
  }
  return roots;
}

}  // namespace

MultivariatePoly dunkl_apply(const RootSystemData& rs, int j, const MultivariatePoly& p) {
  if (j < 1 || j > rs.rank) throw DomainError("Dunkl index out of range");
  if (p.nvars() != rs.rank) throw DomainError("polynomial has the wrong number of variables");
  const int J = j - 1;
  MultivariatePoly out = p.derivative(J);
  for (const Root& g : positive_roots(rs)) {
    // gamma(xi_j) is the x_j-coefficient of the coordinate form
    Scalar at_xi = g.j == J ? g.cj : (g.k == J ? g.ck : Scalar(0));
    if (at_xi == 0) continue;
    MultivariatePoly diff = p - p.signed_permute(g.perm, g.sign);
    if (diff.is_zero()) continue;
    MultivariatePoly quot = diff.divide_linear(g.j, g.cj, g.k, g.ck);
    out += quot * Scalar(g.mult * at_xi / 2);
  }
  return out;
}

Scalar pairing_B(const RootSystemData& rs, const MultivariatePoly& p, const MultivariatePoly& q, bool half) {
  std::map<MultivariatePoly::Exponent, MultivariatePoly> memo;
  const MultivariatePoly::Exponent zero(static_cast<std::size_t>(rs.rank), 0);
  memo.emplace(zero, q);
  // D^e q built from D^{e - e_j} q; the Dunkl operators commute, so the
  // order of application is immaterial.
  auto apply = [&](auto&& self, const MultivariatePoly::Exponent& e) -> const MultivariatePoly& {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    std::size_t j = 0;
    while (e[j] == 0) ++j;
    MultivariatePoly::Exponent prev = e;
    --prev[j];
    MultivariatePoly val = dunkl_apply(rs, static_cast<int>(j) + 1, self(self, prev));
    return memo.emplace(e, std::move(val)).first->second;
  };
  Scalar total = 0;
  for (const auto& [e, c] : p.terms()) {
    Scalar v = apply(apply, e).at_origin();
    if (v == 0) continue;
    int deg = 0;
    for (int x : e) deg += x;
    if (half) v /= pow(Scalar(2), deg);
    total += c * v;
  }
  return total;
}

Scalar norm_B(const RootSystemData& rs, const MultivariatePoly& p, bool half) { return pairing_B(rs, p, p, half); }

bool uses_half_dunkl(Family f) { return f == Family::BC; }

MultivariatePoly restricted_invariant(const DomainDescriptor& dom, const InvariantLabel& label) {
  const int r = dom.rank();
  if (label.family == Family::BCxBC) throw DomainError("restricted invariants are defined for the real families only");
  const Scalar a = dom.real.a;
  SymmetricPoly j = jack_J(label.m, Scalar(2 / a), r);
  const Scalar norm = jack_norm_one(label.m, r, a);
  const bool squared = label.family != Family::A;
  const MultivariatePoly base = j.expand();
  MultivariatePoly out(r);
  for (const auto& [e, c] : base.terms()) {
    MultivariatePoly::Exponent f = e;
    for (int& x : f) {
      if (squared) x *= 2;
      x += label.parity;
    }
    out.add_term(f, c / norm);
  }
  return out;
}

std::vector<DunklCheckRow> dunkl_check(const std::vector<DomainDescriptor>& domains, int max_weight) {
  std::vector<DunklCheckRow> rows;
  for (const DomainDescriptor& dom : domains) {
    const RootSystemData rs = RootSystemData::for_domain(dom);
    const bool half = uses_half_dunkl(dom.family());
    const int parities = dom.family() == Family::D ? 2 : 1;
    for (int w = 0; w <= max_weight; ++w) {
      for (const Partition& m : enumerate_partitions(w, dom.rank())) {
        for (int parity = 0; parity < parities; ++parity) {
          InvariantLabel lab = make_label(dom, m, parity);
          DunklCheckRow row;
          row.domain = dom.group_h;
          row.kind = to_string(dom.kind);
          row.rank = dom.rank();
          row.m = m;
          row.parity = parity;
          row.oracle = norm_B(rs, restricted_invariant(dom, lab), half);
          row.closed_form = fock_norm(dom, lab);
          row.pass = row.oracle == row.closed_form;
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

std::vector<DomainDescriptor> default_dunkl_domains() {
  return {make_so(5, 2), make_so(7, 3), make_sp(3, 2), make_sp(4, 3), make_domain(DomainKind::B2, {{}, 2, {}, {}}),
          make_domain(DomainKind::D1, {{}, 2, {}, {}}), make_domain(DomainKind::D1, {{}, 3, {}, {}})};
}

}  // namespace jackhyp

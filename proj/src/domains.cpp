#include "jackhyp/domains.hpp"

#include <array>

namespace jackhyp {

std::string to_string(DomainKind k) {
  switch (k) {
    case DomainKind::BCxBC: return "BCxBC";
    case DomainKind::A: return "A";
    case DomainKind::BC: return "BC";
    case DomainKind::B1: return "B1";
    case DomainKind::B2: return "B2";
    case DomainKind::D1: return "D1";
    case DomainKind::D2: return "D2";
  }
  return "?";
}

DomainKind parse_domain_kind(const std::string& s) {
  static const std::array<std::pair<const char*, DomainKind>, 10> names{{
      {"BCxBC", DomainKind::BCxBC},
      {"BCXBC", DomainKind::BCxBC},
      {"A", DomainKind::A},
      {"BC", DomainKind::BC},
      {"B1", DomainKind::B1},
      {"B", DomainKind::B1},
      {"B2", DomainKind::B2},
      {"D1", DomainKind::D1},
      {"D", DomainKind::D1},
      {"D2", DomainKind::D2},
  }};
  for (auto& [n, k] : names)
    if (s == n) return k;
  throw ParseError("unknown domain family '" + s + "'");
}

Family family_of(DomainKind k) {
  switch (k) {
    case DomainKind::BCxBC: return Family::BCxBC;
    case DomainKind::A: return Family::A;
    case DomainKind::BC: return Family::BC;
    case DomainKind::B1:
    case DomainKind::B2: return Family::B;
    case DomainKind::D1:
    case DomainKind::D2: return Family::D;
  }
  return Family::A;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::BCxBC: return "BCxBC";
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::BC: return "BC";
    case Family::D: return "D";
  }
  return "?";
}

Scalar DomainDescriptor::q() const { return Scalar(1 + real.a / 2 * (real.rank - 1)); }

Scalar rho_xi_from_roots(const RealQuadruple& q) {
  // gamma(xi) with beta_j(xi) = 2: beta_j -> 2, (beta_j+beta_k)/2 -> 2,
  // (beta_j-beta_k)/2 -> 0, beta_j/2 -> 1.
  Scalar twice_rho = 0;
  for (int j = 0; j < q.rank; ++j) {
    twice_rho += q.iota_minus_1 * 2;  // beta_j
    twice_rho += q.two_b * 1;         // beta_j / 2
    for (int k = j + 1; k < q.rank; ++k) {
      twice_rho += q.a * 2;  // (beta_j + beta_k)/2
      twice_rho += q.a * 0;  // (beta_j - beta_k)/2
    }
  }
  return twice_rho / 2;
}

namespace {

int need(const std::optional<int>& v, const char* name, DomainKind k) {
  if (!v) throw DomainError(to_string(k) + " requires parameter " + name);
  return *v;
}

bool is_nonneg_int(const Scalar& x) { return is_integer(x) && sgn(x) >= 0; }

// Complex domains (r', a', 2b') from the classification of irreducible
// bounded symmetric domains.
bool in_complex_list(int r, const Scalar& a, const Scalar& two_b) {
  if (r == 1) return is_nonneg_int(two_b) && sgn(a) > 0;  // rank one: a is vacuous
  if (a == 2 && is_nonneg_int(two_b) && is_integer(two_b / 2)) return true;
  if (a == 1 && two_b == 0) return true;
  if (a == 4 && (two_b == 0 || two_b == 2)) return true;
  if (r == 2 && two_b == 0 && is_integer(a) && sgn(a) > 0) return true;
  if (r == 2 && a == 6 && two_b == 8) return true;
  if (r == 3 && a == 8 && two_b == 0) return true;
  return false;
}

bool in_tube_list(int r, const Scalar& a) {
  if (r < 2) return false;
  if (a == 2 || a == 1 || a == 4) return true;
  if (r == 2 && is_integer(a) && sgn(a) > 0) return true;
  if (r == 3 && a == 8) return true;
  return false;
}

std::string pair_label(const char* name, int l, int r) {
  return std::string(name) + "(" + std::to_string(l) + "," + std::to_string(r) + ")";
}

void finish(DomainDescriptor& d) {
  const ComplexTriple& c = d.complex;
  d.genus = c.a * (c.rank - 1) + 2 + c.b();
  d.d_over_r = 1 + c.b() + c.a / 2 * (c.rank - 1);
  d.rho_xi = rho_xi_from_roots(d.real);
  d.wallach_singular.clear();
  for (int j = 0; j < c.rank; ++j) d.wallach_singular.push_back(Scalar(c.a / 2 * j));
  d.wallach_threshold = c.a / 2 * (c.rank - 1);

  // consistency of the two descriptions
  const RealQuadruple& q = d.real;
  switch (d.kind) {
    case DomainKind::BCxBC:
      if (q.rank != c.rank || q.iota_minus_1 != 1 || q.a != c.a || q.two_b != c.two_b)
        throw DomainError("BCxBC: real and complex data disagree");
      break;
    case DomainKind::BC:
      if (c.rank != 2 * q.rank || q.a != 2 * c.a) throw DomainError("BC: expected r' = 2r and a = 2a'");
      break;
    case DomainKind::A:
      if (c.rank != q.rank || c.a != q.a || c.two_b != 0) throw DomainError("A: expected tube type with a' = a");
      break;
    default:
      if (c.rank != q.rank || c.a != 2 * q.a) throw DomainError(to_string(d.kind) + ": expected r' = r and a' = 2a");
  }
  if (d.genus != c.a * (c.rank - 1) + 2 + c.b()) throw DomainError("genus invariant violated");
}

}  // namespace

DomainDescriptor make_domain(DomainKind kind, const DomainParams& p) {
  DomainDescriptor d;
  d.kind = kind;
  d.params = p;
  switch (kind) {
    case DomainKind::BCxBC: {
      int r;
      Scalar a, two_b;
      if (p.l) {
        int l = *p.l;
        r = need(p.r, "r", kind);
        if (r < 1 || l < r) throw DomainError("SU(l,r) needs l >= r >= 1");
        a = 2;
        two_b = 2 * (l - r);
        d.group_h = pair_label("SU", l, r);
      } else {
        r = need(p.r, "r", kind);
        if (!p.a) throw DomainError("BCxBC requires either l or a");
        a = *p.a;
        two_b = p.two_b.value_or(Scalar(0));
        if (!in_complex_list(r, a, two_b))
          throw DomainError("(r', a', 2b') = (" + std::to_string(r) + ", " + to_string(a) + ", " + to_string(two_b) +
                            ") is not a bounded symmetric domain");
        d.group_h = "Aut(D)(r=" + std::to_string(r) + ",a=" + to_string(a) + ",2b=" + to_string(two_b) + ")";
      }
      d.group_g = d.group_h + "x" + d.group_h;
      d.rank_one_oracle = (r == 1);
      d.complex = {r, a, two_b};
      d.real = {r, Scalar(1), a, two_b};
      break;
    }
    case DomainKind::A: {
      int r = need(p.r, "r", kind);
      if (!p.a) throw DomainError("A requires parameter a");
      Scalar a = *p.a;
      if (!in_tube_list(r, a)) throw DomainError("(r, a) = (" + std::to_string(r) + ", " + to_string(a) + ") is not a type A pair");
      d.real = {r, Scalar(0), a, Scalar(0)};
      d.complex = {r, a, Scalar(0)};
      d.group_h = "GL-cone(r=" + std::to_string(r) + ",a=" + to_string(a) + ")";
      d.group_g = "tube(r=" + std::to_string(r) + ",a=" + to_string(a) + ")";
      break;
    }
    case DomainKind::BC: {
      int l = need(p.l, "l", kind), r = need(p.r, "r", kind);
      if (!(l > r && r >= 2)) throw DomainError("Sp(l,r) needs l > r >= 2");
      d.real = {r, Scalar(3), Scalar(4), Scalar(4 * (l - r))};
      d.complex = {2 * r, Scalar(2), Scalar(4 * (l - r))};
      d.group_h = pair_label("Sp", l, r);
      d.group_g = pair_label("SU", 2 * l, 2 * r);
      break;
    }
    case DomainKind::B1: {
      int l = need(p.l, "l", kind), r = need(p.r, "r", kind);
      if (!(l > r && r >= 2)) throw DomainError("SO0(l,r) needs l > r >= 2");
      d.real = {r, Scalar(0), Scalar(1), Scalar(l - r)};
      d.complex = {r, Scalar(2), Scalar(2 * (l - r))};
      d.group_h = pair_label("SO0", l, r);
      d.group_g = pair_label("SU", l, r);
      break;
    }
    case DomainKind::B2: {
      int r = need(p.r, "r", kind);
      if (r < 2) throw DomainError("B2 needs r >= 2");
      d.real = {r, Scalar(0), Scalar(2), Scalar(2)};
      d.complex = {r, Scalar(4), Scalar(4)};
      d.group_h = "SO(" + std::to_string(2 * r + 1) + ",C)";
      d.group_g = "SO*(" + std::to_string(2 * (2 * r + 1)) + ")";
      break;
    }
    case DomainKind::D1: {
      int r = need(p.r, "r", kind);
      if (r < 2) throw DomainError("SO(r,r) needs r >= 2");
      d.real = {r, Scalar(0), Scalar(1), Scalar(0)};
      d.complex = {r, Scalar(2), Scalar(0)};
      d.group_h = pair_label("SO", r, r);
      d.group_g = pair_label("SU", r, r);
      break;
    }
    case DomainKind::D2: {
      if (p.r && *p.r != 3) throw DomainError("D2 has rank 3");
      d.real = {3, Scalar(0), Scalar(4), Scalar(0)};
      d.complex = {3, Scalar(8), Scalar(0)};
      d.group_h = "SU*(8)";
      d.group_g = "E7(-25)";
      break;
    }
  }
  finish(d);
  return d;
}

DomainDescriptor make_su(int l, int r) { return make_domain(DomainKind::BCxBC, {l, r, {}, {}}); }
DomainDescriptor make_so(int l, int r) { return make_domain(DomainKind::B1, {l, r, {}, {}}); }
DomainDescriptor make_sp(int l, int r) { return make_domain(DomainKind::BC, {l, r, {}, {}}); }

bool WallachSet::contains(const Scalar& nu) const { return nu > threshold || singular_index(nu).has_value(); }

std::optional<int> WallachSet::singular_index(const Scalar& nu) const {
  for (std::size_t i = 0; i < singular.size(); ++i)
    if (singular[i] == nu) return static_cast<int>(i) + 1;
  return std::nullopt;
}

WallachSet wallach_set(const DomainDescriptor& dom) { return {dom.wallach_singular, dom.wallach_threshold}; }

}  // namespace jackhyp

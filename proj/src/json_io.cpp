#include "jackhyp/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace jackhyp {

std::string format_real(long double x, Precision prec) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", prec == Precision::Extended ? 21 : 17, x);
  return buf;
}

Json to_json(const Scalar& x) { return to_string(x); }

Json to_json(const Partition& p) { return to_string(p); }

namespace {

Json number_or_null(bool has, long double v) {
  if (!has || !std::isfinite(v)) return nullptr;
  return static_cast<double>(v);
}

Json scalars(const std::vector<Scalar>& xs) {
  Json arr = Json::array();
  for (const Scalar& x : xs) arr.push_back(to_string(x));
  return arr;
}

}  // namespace

Json to_json(const DomainDescriptor& dom) {
  Json params = Json::object();
  if (dom.params.l) params["l"] = *dom.params.l;
  if (dom.params.r) params["r"] = *dom.params.r;
  if (dom.params.a) params["a"] = to_string(*dom.params.a);
  if (dom.params.two_b) params["two_b"] = to_string(*dom.params.two_b);

  Json j;
  j["kind"] = to_string(dom.kind);
  j["family"] = to_string(dom.family());
  j["params"] = params;
  j["group_h"] = dom.group_h;
  j["group_g"] = dom.group_g;
  j["real"] = {{"rank", dom.real.rank},
               {"iota_minus_1", to_string(dom.real.iota_minus_1)},
               {"a", to_string(dom.real.a)},
               {"two_b", to_string(dom.real.two_b)}};
  j["complex"] = {{"rank", dom.complex.rank}, {"a", to_string(dom.complex.a)}, {"two_b", to_string(dom.complex.two_b)}};
  j["genus"] = to_string(dom.genus);
  j["d_over_r"] = to_string(dom.d_over_r);
  j["q"] = to_string(dom.q());
  j["rho_xi"] = to_string(dom.rho_xi);
  j["wallach"] = {{"singular", scalars(dom.wallach_singular)}, {"threshold", to_string(dom.wallach_threshold)}};
  j["rank_one_oracle"] = dom.rank_one_oracle;
  return j;
}

Json to_json(const SeriesResult& res, bool with_shells) {
  Json j;
  j["has_value"] = res.has_value;
  j["value"] = number_or_null(res.has_value, res.value);
  j["value_text"] = res.has_value ? Json(format_real(res.value, res.precision)) : Json(nullptr);
  j["truncation_degree"] = res.truncation_degree;
  j["last_shell_magnitude"] = static_cast<double>(res.last_shell_magnitude);
  j["verdict"] = to_string(res.verdict);
  j["tolerance_met"] = res.tolerance_met;
  j["precision"] = to_string(res.precision);
  if (with_shells) {
    Json sums = Json::array();
    Json mags = Json::array();
    for (long double s : res.shell_sums) sums.push_back(static_cast<double>(s));
    for (long double m : res.shell_magnitudes) mags.push_back(static_cast<double>(m));
    j["shell_sums"] = sums;
    j["shell_magnitudes"] = mags;
  }
  return j;
}

Json to_json(const SeriesParams& p) {
  return {{"alpha", scalars(p.alpha)}, {"beta", scalars(p.beta)}, {"rank", p.rank}, {"a", to_string(p.a)}};
}

Json to_json(const BranchingCertificate& c, Precision prec) {
  Json j;
  j["tag"] = c.tag;
  j["setting"] = to_string(c.setting);
  j["hkind"] = to_string(c.hkind);
  j["l"] = c.l;
  j["r"] = c.r;
  j["group_g"] = c.group_g;
  j["group_h"] = c.group_h;
  j["nu"] = to_string(c.nu);
  j["nu_class"] = c.singular_j ? "singular-wallach" : "continuous-wallach";
  j["singular_j"] = c.singular_j ? Json(*c.singular_j) : Json(nullptr);
  j["k"] = c.k;
  j["sigma"] = to_string(c.sigma);
  j["i_lambda"] = to_string(c.i_lambda);
  Json lit = Json::array();
  for (const LambdaReading& rd : c.lambda_literal) lit.push_back({{"source", rd.source}, {"i_lambda", to_string(rd.i_lambda)}});
  j["i_lambda_literal"] = lit;
  j["series"] = to_json(c.params);
  j["predicate"] = c.predicate;
  j["printed_bound"] = c.printed_bound;
  j["printed_bound_text"] = c.printed_bound_text;
  j["bound_agrees"] = c.bound_agrees();
  SeriesResult ns = c.norm_square;
  ns.precision = prec;
  j["norm_square"] = to_json(ns);
  j["certified"] = c.certified;
  return j;
}

Json to_json(const DunklCheckRow& row) {
  return {{"domain", row.domain}, {"kind", row.kind},          {"rank", row.rank},
          {"m", to_string(row.m)}, {"parity", row.parity},    {"oracle", to_string(row.oracle)},
          {"closed_form", to_string(row.closed_form)},        {"pass", row.pass}};
}

Json jack_table_json(const Partition& m, const Scalar& alpha, const SymmetricPoly& j) {
  Json coeffs = Json::object();
  for (const auto& [mu, c] : j.coeffs()) coeffs[to_string(mu)] = to_string(c);
  return {{"partition", to_string(m)}, {"alpha", to_string(alpha)}, {"rank", j.rank()}, {"coeffs", coeffs}};
}

namespace csv {

std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void certificates(std::ostream& out, const std::vector<BranchingCertificate>& certs, Precision prec) {
  out << "tag,setting,hkind,l,r,nu,nu_class,singular_j,k,sigma,i_lambda,predicate,printed_bound,"
         "certified,norm_square,last_shell_magnitude,truncation_degree,verdict\n";
  for (const BranchingCertificate& c : certs) {
    const SeriesResult& ns = c.norm_square;
    out << c.tag << ',' << to_string(c.setting) << ',' << to_string(c.hkind) << ',' << c.l << ',' << c.r << ','
        << field(to_string(c.nu)) << ',' << (c.singular_j ? "singular-wallach" : "continuous-wallach") << ','
        << (c.singular_j ? std::to_string(*c.singular_j) : "") << ',' << c.k << ',' << field(to_string(c.sigma))
        << ',' << field(to_string(c.i_lambda)) << ',' << (c.predicate ? 1 : 0) << ',' << (c.printed_bound ? 1 : 0)
        << ',' << (c.certified ? 1 : 0) << ',' << (ns.has_value ? format_real(ns.value, prec) : "") << ','
        << format_real(ns.last_shell_magnitude, prec) << ',' << ns.truncation_degree << ','
        << to_string(ns.verdict) << '\n';
  }
}

void dunkl_rows(std::ostream& out, const std::vector<DunklCheckRow>& rows) {
  out << "domain,kind,rank,m,parity,oracle,closed_form,pass\n";
  for (const DunklCheckRow& r : rows)
    out << field(r.domain) << ',' << r.kind << ',' << r.rank << ',' << field(to_string(r.m)) << ',' << r.parity << ','
        << to_string(r.oracle) << ',' << to_string(r.closed_form) << ',' << (r.pass ? 1 : 0) << '\n';
}

void shells(std::ostream& out, const SeriesResult& res) {
  out << "degree,shell_sum,shell_magnitude,partial_sum\n";
  long double partial = 0;
  for (std::size_t n = 0; n < res.shell_sums.size(); ++n) {
    partial += res.shell_sums[n];
    out << n << ',' << format_real(res.shell_sums[n], res.precision) << ','
        << format_real(res.shell_magnitudes[n], res.precision) << ',' << format_real(partial, res.precision) << '\n';
  }
}

void jack_table(std::ostream& out, const SymmetricPoly& j) {
  out << "monomial,coefficient\n";
  for (const auto& [mu, c] : j.coeffs()) out << field(to_string(mu)) << ',' << to_string(c) << '\n';
}

void descriptor(std::ostream& out, const DomainDescriptor& dom) {
  out << "field,value\n";
  const Json j = to_json(dom);
  for (const auto& [key, val] : j.items()) {
    if (val.is_object()) {
      for (const auto& [sub, sv] : val.items()) out << key << '.' << sub << ',' << field(sv.is_string() ? sv.get<std::string>() : sv.dump()) << '\n';
    } else {
      out << key << ',' << field(val.is_string() ? val.get<std::string>() : val.dump()) << '\n';
    }
  }
}

}  // namespace csv

}  // namespace jackhyp

#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#ifdef JACKHYP_HAVE_OPENMP
#include <omp.h>
#endif

#include "acceptance.hpp"
#include "jackhyp/branching.hpp"
#include "jackhyp/combinatorics.hpp"
#include "jackhyp/dunkl.hpp"
#include "jackhyp/invariant_norms.hpp"
#include "jackhyp/jack.hpp"
#include "jackhyp/json_io.hpp"
#include "jackhyp/spherical.hpp"

namespace jackhyp::cli {

namespace {

int thread_count() {
#ifdef JACKHYP_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

enum class Format { Json, Csv, Pretty };

struct Global {
  std::string format = "json";
  std::string precision = "double";
  std::uint64_t seed = 20240607;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "pretty") return Format::Pretty;
  throw ParseError("unknown format '" + s + "' (json|csv|pretty)");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<Scalar> parse_scalar_list(const std::string& s) {
  std::vector<Scalar> out;
  for (const std::string& x : split(s, ',')) out.push_back(parse_scalar(x));
  return out;
}

std::vector<long double> parse_real_list(const std::string& s) {
  std::vector<long double> out;
  for (const Scalar& x : parse_scalar_list(s)) out.push_back(to_long_double(x));
  return out;
}

int parse_int(const std::string& s, const char* what) {
  const Scalar v = parse_scalar(s);
  if (!is_integer(v) || !v.get_num().fits_sint_p()) throw ParseError(std::string(what) + " must be an integer");
  return static_cast<int>(v.get_num().get_si());
}

/// Family selection shared by classify, spherical and norm.
struct DomainOpts {
  std::string family;
  std::string l, r, a, two_b;
  std::string params;

  void add_to(CLI::App* sub) {
    sub->add_option("--family", family, "BCxBC | A | BC | B1 | B2 | D1 | D2")->required();
    sub->add_option("--l", l, "first matrix size (SU(l,r), SO0(l,r), Sp(l,r))");
    sub->add_option("--r", r, "rank");
    sub->add_option("--a", a, "multiplicity a (type A, generic BCxBC)");
    sub->add_option("--two-b", two_b, "multiplicity 2b (generic BCxBC)");
    sub->add_option("--params", params, "the same as key=value pairs, e.g. l=4,r=2");
  }

  DomainDescriptor build() const {
    std::string L = l, R = r, A = a, B = two_b;
    for (const std::string& kv : split(params, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ParseError("--params expects key=value pairs, got '" + kv + "'");
      const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
      if (key == "l") L = val;
      else if (key == "r") R = val;
      else if (key == "a") A = val;
      else if (key == "two_b" || key == "2b") B = val;
      else throw ParseError("unknown domain parameter '" + key + "'");
    }
    DomainParams p;
    if (!L.empty()) p.l = parse_int(L, "l");
    if (!R.empty()) p.r = parse_int(R, "r");
    if (!A.empty()) p.a = parse_scalar(A);
    if (!B.empty()) p.two_b = parse_scalar(B);
    return make_domain(parse_domain_kind(family), p);
  }
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  std::ostream& out_;
  std::ostream& err_;
  Global g_;
  Format fmt_ = Format::Json;
  Precision prec_ = Precision::Double;

  Json config(const std::string& command) const {
    Json c;
    c["command"] = command;
    c["format"] = g_.format;
    c["precision"] = g_.precision;
    c["seed"] = g_.seed;
    c["threads"] = thread_count();
    return c;
  }

  /// Writes the config header followed by the result in the chosen format.
  void emit(const Json& cfg, const Json& result, const std::function<void(std::ostream&)>& csv,
            const std::function<void(std::ostream&)>& pretty) {
    switch (fmt_) {
      case Format::Json: {
        Json doc;
        doc["config"] = cfg;
        doc["result"] = result;
        out_ << doc.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        out_ << "# " << csv::kVersion << '\n';
        for (const auto& [k, v] : cfg.items()) out_ << "# " << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        csv(out_);
        break;
      case Format::Pretty:
        out_ << "config:";
        for (const auto& [k, v] : cfg.items()) out_ << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
        out_ << "\n\n";
        pretty(out_);
        break;
    }
  }

  void emit_error(const Json& cfg, const std::string& msg) {
    if (fmt_ == Format::Json) {
      Json doc;
      doc["config"] = cfg;
      doc["error"] = msg;
      out_ << doc.dump(2) << '\n';
    }
    err_ << "error: " << msg << '\n';
  }

  std::string real(long double x) const { return format_real(x, prec_); }

  void pretty_series(std::ostream& o, const SeriesResult& s) const {
    o << "value:                " << (s.has_value ? real(s.value) : "none") << '\n'
      << "verdict:              " << to_string(s.verdict) << '\n'
      << "truncation degree:    " << s.truncation_degree << '\n'
      << "last shell magnitude: " << real(s.last_shell_magnitude) << '\n'
      << "tolerance met:        " << (s.tolerance_met ? "yes" : "no") << '\n'
      << "precision:            " << to_string(s.precision) << '\n';
  }

  int classify(const DomainOpts& d);
  int jack(const std::string& part, const std::string& alpha, const std::string& mult_a, const std::string& rank,
           const std::string& t);
  int hyper(const std::string& alpha, const std::string& beta, int rank, const std::string& mult_a,
            const std::string& t, int max_degree, bool at_one, double tail_tol, bool shells);
  int spherical(const DomainOpts& d, const std::string& sigma, const std::string& lambda, const std::string& t,
                int max_degree, double tail_tol);
  int norm(const DomainOpts& d, const std::string& part, int parity, const std::string& nu);
  int scan(const std::string& setting, const std::string& hkind, int l, int r, const std::string& nu, int k_max,
           int max_degree, double tail_tol);
  int dunkl(int max_weight);
  int selftest(const std::vector<int>& only);
};

int Runner::classify(const DomainOpts& d) {
  Json cfg = config("classify");
  cfg["family"] = d.family;
  const DomainDescriptor dom = d.build();
  cfg["params"] = to_json(dom)["params"];
  const Json j = to_json(dom);
  emit(cfg, j, [&](std::ostream& o) { csv::descriptor(o, dom); },
       [&](std::ostream& o) {
         o << dom.group_h << " in " << dom.group_g << "  (kind " << to_string(dom.kind) << ", family "
           << to_string(dom.family()) << ")\n"
           << "real quadruple (r, iota-1, a, 2b): (" << dom.real.rank << ", " << to_string(dom.real.iota_minus_1)
           << ", " << to_string(dom.real.a) << ", " << to_string(dom.real.two_b) << ")\n"
           << "complex data (r', a', 2b'):       (" << dom.complex.rank << ", " << to_string(dom.complex.a) << ", "
           << to_string(dom.complex.two_b) << ")\n"
           << "genus " << to_string(dom.genus) << ", d/r' " << to_string(dom.d_over_r) << ", q "
           << to_string(dom.q()) << ", rho(xi) " << to_string(dom.rho_xi) << '\n'
           << "Wallach set: {";
         for (std::size_t i = 0; i < dom.wallach_singular.size(); ++i)
           o << (i ? ", " : "") << to_string(dom.wallach_singular[i]);
         o << "} and (" << to_string(dom.wallach_threshold) << ", inf)\n";
       });
  return kOk;
}

int Runner::jack(const std::string& part, const std::string& alpha_s, const std::string& mult_a,
                 const std::string& rank_s, const std::string& t) {
  const Partition m = parse_partition(part);
  if (alpha_s.empty() == mult_a.empty()) throw ParseError("give exactly one of --alpha and --mult-a");
  const Scalar alpha = alpha_s.empty() ? Scalar(2 / parse_scalar(mult_a)) : parse_scalar(alpha_s);
  if (sgn(alpha) <= 0) throw DomainError("alpha must be positive");
  const int r = rank_s.empty() ? std::max(1, m.length()) : parse_int(rank_s, "rank");
  if (m.length() > r) throw DomainError("partition " + to_string(m) + " has more than r = " + std::to_string(r) + " parts");

  Json cfg = config("jack");
  cfg["partition"] = to_string(m);
  cfg["alpha"] = to_string(alpha);
  cfg["rank"] = r;
  if (!t.empty()) cfg["t"] = t;

  const SymmetricPoly j = jack_J(m, alpha, r);
  Json res = jack_table_json(m, alpha, j);
  res["value_at_ones"] = to_string(j.at_ones());
  std::optional<Scalar> omega;
  if (!t.empty()) {
    const std::vector<Scalar> pt = parse_scalar_list(t);
    if (static_cast<int>(pt.size()) != r) throw DomainError("--t needs exactly r = " + std::to_string(r) + " entries");
    omega = omega_eval(m, Scalar(2 / alpha), pt);
    res["omega_at_t"] = to_string(*omega);
  }
  emit(cfg, res, [&](std::ostream& o) { csv::jack_table(o, j); },
       [&](std::ostream& o) {
         o << "J_(" << to_string(m) << ") with alpha = " << to_string(alpha) << " in " << r << " variables\n";
         for (const auto& [mu, c] : j.coeffs()) o << "  m_(" << to_string(mu) << ")  " << to_string(c) << '\n';
         o << "J(1^r) = " << to_string(j.at_ones()) << '\n';
         if (omega) o << "Omega(t) = " << to_string(*omega) << '\n';
       });
  return kOk;
}

int Runner::hyper(const std::string& alpha, const std::string& beta, int rank, const std::string& mult_a,
                  const std::string& t, int max_degree, bool at_one, double tail_tol, bool shells) {
  if (max_degree < 0) throw ParseError("--max-degree must be nonnegative");
  if (at_one == !t.empty()) throw ParseError("give exactly one of --t and --at-one");
  const SeriesParams p(parse_scalar_list(alpha), parse_scalar_list(beta), rank, parse_scalar(mult_a));

  Json cfg = config("hyper");
  cfg["series"] = to_json(p);
  cfg["point"] = at_one ? "1^r" : t;
  cfg["max_degree"] = max_degree;
  cfg["tail_tol"] = tail_tol;

  const EvalOptions opts{prec_, Exec::Parallel, tail_tol};
  SeriesResult s;
  if (at_one) {
    s = hyper_at_one(p, max_degree, tail_tol, opts);
  } else {
    s = hyper_eval(p, parse_real_list(t), max_degree, opts);
  }
  Json res = to_json(s, shells);
  res["convergent_at_one"] = convergent_at_one(p);
  res["balance_excess"] = to_string(balance_excess(p));
  if (at_one && !s.has_value) {
    emit_error(cfg, "the series diverges at 1^r (convergence criterion fails)");
    return kDomain;
  }
  emit(cfg, res, [&](std::ostream& o) { csv::shells(o, s); },
       [&](std::ostream& o) {
         o << p.k() << "F" << p.l() << " in rank " << p.rank << ", a = " << to_string(p.a) << '\n';
         pretty_series(o, s);
         o << "convergent at 1^r:    " << (convergent_at_one(p) ? "yes" : "no") << " (excess "
           << to_string(balance_excess(p)) << ")\n";
       });
  return kOk;
}

int Runner::spherical(const DomainOpts& d, const std::string& sigma_s, const std::string& lambda_s,
                      const std::string& t, int max_degree, double tail_tol) {
  if (sigma_s.empty() == lambda_s.empty()) throw ParseError("give exactly one of --sigma and --lambda");
  const DomainDescriptor dom = d.build();
  const Scalar sigma = sigma_s.empty() ? sigma_of_lambda(dom, parse_scalar(lambda_s)) : parse_scalar(sigma_s);

  Json cfg = config("spherical");
  cfg["family"] = d.family;
  cfg["params"] = to_json(dom)["params"];
  cfg["sigma"] = to_string(sigma);
  cfg["t"] = t;
  cfg["max_degree"] = max_degree;
  cfg["tail_tol"] = tail_tol;

  const SeriesResult s = spherical_radial(dom, sigma, parse_real_list(t), max_degree, {prec_, Exec::Parallel, tail_tol});
  Json res;
  res["domain"] = dom.group_h;
  res["sigma"] = to_string(sigma);
  res["i_lambda"] = to_string(lambda_of_sigma(dom, sigma));
  Json lit = Json::array();
  for (const LambdaReading& rd : lambda_literal_readings(dom, sigma))
    lit.push_back({{"source", rd.source}, {"i_lambda", to_string(rd.i_lambda)}});
  res["i_lambda_literal"] = lit;
  res["phi"] = to_json(s);
  emit(cfg, res, [&](std::ostream& o) { csv::shells(o, s); },
       [&](std::ostream& o) {
         o << "spherical function on " << dom.group_h << ", sigma = " << to_string(sigma)
           << ", i*lambda = " << to_string(lambda_of_sigma(dom, sigma)) << '\n';
         for (const LambdaReading& rd : lambda_literal_readings(dom, sigma))
           o << "  i*lambda (" << rd.source << "): " << to_string(rd.i_lambda) << '\n';
         pretty_series(o, s);
       });
  return kOk;
}

int Runner::norm(const DomainOpts& d, const std::string& part, int parity, const std::string& nu_s) {
  const DomainDescriptor dom = d.build();
  const InvariantLabel lab = make_label(dom, parse_partition(part), parity);

  Json cfg = config("norm");
  cfg["family"] = d.family;
  cfg["params"] = to_json(dom)["params"];
  cfg["partition"] = to_string(lab.m);
  cfg["parity"] = parity;
  if (!nu_s.empty()) cfg["nu"] = nu_s;

  Json res;
  res["domain"] = dom.group_h;
  res["m"] = to_string(lab.m);
  res["n"] = to_string(lab.n);
  res["parity"] = parity;
  const Scalar fock = fock_norm(dom, lab);
  res["fock_norm"] = to_string(fock);
  std::optional<Scalar> direct, split_form;
  if (!nu_s.empty()) {
    const Scalar nu = parse_scalar(nu_s);
    direct = bergman_norm(dom, lab, nu);
    split_form = bergman_norm_split(dom, lab, nu);
    res["nu"] = to_string(nu);
    res["bergman_norm"] = to_string(*direct);
    res["bergman_norm_split"] = to_string(*split_form);
    res["routes_agree"] = *direct == *split_form;
  }
  emit(cfg, res,
       [&](std::ostream& o) {
         o << "domain,m,n,parity,fock_norm,nu,bergman_norm,bergman_norm_split\n"
           << csv::field(dom.group_h) << ',' << csv::field(to_string(lab.m)) << ',' << csv::field(to_string(lab.n))
           << ',' << parity << ',' << to_string(fock) << ',' << nu_s << ','
           << (direct ? to_string(*direct) : "") << ',' << (split_form ? to_string(*split_form) : "") << '\n';
       },
       [&](std::ostream& o) {
         o << dom.group_h << ", m = (" << to_string(lab.m) << "), n = (" << to_string(lab.n) << ")\n"
           << "Fock norm square:    " << to_string(fock) << '\n';
         if (direct)
           o << "Bergman norm square: " << to_string(*direct) << "  (split form "
             << (*direct == *split_form ? "agrees" : "DISAGREES") << ")\n";
       });
  return kOk;
}

int Runner::scan(const std::string& setting_s, const std::string& hkind_s, int l, int r, const std::string& nu_s,
                 int k_max, int max_degree, double tail_tol) {
  const Setting setting = parse_setting(setting_s);
  const HKind hk = hkind_s.empty() ? (setting == Setting::Tensor ? HKind::SU : throw ParseError("--hkind is required for the restriction setting"))
                                   : parse_hkind(hkind_s);
  std::vector<Scalar> nus;
  const std::vector<std::string> range = split(nu_s, ':');
  if (range.size() == 1) {
    nus.push_back(parse_scalar(range[0]));
  } else if (range.size() == 3) {
    const Scalar lo = parse_scalar(range[0]), hi = parse_scalar(range[1]), step = parse_scalar(range[2]);
    if (sgn(step) <= 0) throw ParseError("--nu range step must be positive");
    for (Scalar v = lo; v <= hi; v += step) nus.push_back(v);
  } else {
    throw ParseError("--nu takes a value or lo:hi:step");
  }

  Json cfg = config("scan");
  cfg["setting"] = to_string(setting);
  cfg["hkind"] = to_string(hk);
  cfg["l"] = l;
  cfg["r"] = r;
  cfg["nu"] = nu_s;
  cfg["k_max"] = k_max;
  cfg["max_degree"] = max_degree;
  cfg["tail_tol"] = tail_tol;

  const EvalOptions opts{prec_, Exec::Parallel, 0};
  std::vector<BranchingCertificate> certs;
  std::vector<BranchingCertificate> mismatches;
  Json per_nu = Json::array();
  for (const Scalar& nu : nus) {
    const ScanResult sr = setting == Setting::Tensor ? scan_tensor(l, r, nu, k_max) : scan_restriction(hk, l, r, nu, k_max);
    Json entry;
    entry["nu"] = to_string(nu);
    entry["applicable"] = sr.applicable;
    entry["reason"] = sr.reason;
    entry["certificates"] = static_cast<int>(sr.certificates.size());
    entry["bound_mismatches"] = static_cast<int>(sr.mismatches.size());
    per_nu.push_back(entry);
    for (const BranchingCertificate& c : sr.certificates) certs.push_back(certify(c, max_degree, tail_tol, opts));
    mismatches.insert(mismatches.end(), sr.mismatches.begin(), sr.mismatches.end());
  }
  Json res;
  res["scans"] = per_nu;
  Json arr = Json::array();
  for (const BranchingCertificate& c : certs) arr.push_back(to_json(c, prec_));
  res["certificates"] = arr;
  Json mm = Json::array();
  for (const BranchingCertificate& c : mismatches) mm.push_back(to_json(c, prec_));
  res["bound_mismatches"] = mm;
  emit(cfg, res, [&](std::ostream& o) { csv::certificates(o, certs, prec_); },
       [&](std::ostream& o) {
         for (const Json& e : per_nu)
           if (!e["applicable"].get<bool>())
             o << "nu = " << e["nu"].get<std::string>() << ": nothing to scan (" << e["reason"].get<std::string>() << ")\n";
         o << std::left << std::setw(18) << "tag" << std::setw(8) << "nu" << std::setw(4) << "k" << std::setw(8) << "sigma"
           << std::setw(10) << "i*lambda" << std::setw(24) << "norm square" << std::setw(12) << "last shell"
           << "certified\n";
         for (const BranchingCertificate& c : certs) {
           std::ostringstream last;
           last << std::setprecision(3) << static_cast<double>(c.norm_square.last_shell_magnitude);
           o << std::setw(18) << c.tag << std::setw(8) << to_string(c.nu) << std::setw(4) << c.k << std::setw(8)
             << to_string(c.sigma) << std::setw(10) << to_string(c.i_lambda) << std::setw(24)
             << real(c.norm_square.value) << std::setw(12) << last.str() << (c.certified ? "yes" : "no") << '\n';
         }
         if (!mismatches.empty()) o << mismatches.size() << " candidate(s) where the printed bound and the predicate disagree\n";
       });
  return kOk;
}

int Runner::dunkl(int max_weight) {
  if (max_weight < 0 || max_weight > 4) throw ParseError("--max-weight must lie in 0..4");
  Json cfg = config("dunkl-check");
  cfg["max_weight"] = max_weight;
  const std::vector<DunklCheckRow> rows = dunkl_check(default_dunkl_domains(), max_weight);
  Json arr = Json::array();
  bool all = true;
  for (const DunklCheckRow& r : rows) {
    arr.push_back(to_json(r));
    all = all && r.pass;
  }
  Json res;
  res["rows"] = arr;
  res["all_pass"] = all;
  emit(cfg, res, [&](std::ostream& o) { csv::dunkl_rows(o, rows); },
       [&](std::ostream& o) {
         for (const DunklCheckRow& r : rows)
           o << (r.pass ? "pass " : "FAIL ") << std::left << std::setw(12) << r.domain << " m=" << std::setw(8)
             << to_string(r.m) << " parity " << r.parity << "  " << to_string(r.oracle) << '\n';
       });
  return all ? kOk : kDomain;
}

int Runner::selftest(const std::vector<int>& only) {
  Json cfg = config("selftest");
  Json only_j = Json::array();
  for (int id : only) only_j.push_back(id);
  cfg["only"] = only_j;
  verify::AcceptanceOptions opts;
  opts.seed = g_.seed;
  opts.only = only;
  const std::vector<verify::CriterionResult> results = verify::run_acceptance(opts);
  Json arr = Json::array();
  bool all = true;
  for (const verify::CriterionResult& r : results) {
    arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"budget_seconds", r.budget_seconds}, {"detail", r.detail}});
    all = all && r.pass;
  }
  Json res;
  res["criteria"] = arr;
  res["all_pass"] = all;
  emit(cfg, res,
       [&](std::ostream& o) {
         o << "id,name,pass,budget_seconds,detail\n";
         for (const verify::CriterionResult& r : results)
           o << r.id << ',' << r.name << ',' << (r.pass ? 1 : 0) << ',' << r.budget_seconds << ',' << csv::field(r.detail) << '\n';
       },
       [&](std::ostream& o) {
         for (const verify::CriterionResult& r : results) o << verify::format_line(r) << '\n';
       });
  return all ? kOk : kDomain;
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Jack polynomials, matrix-argument hypergeometric series and branching certificates"};
  app.name("jackhyp");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g_.format, "json | csv | pretty")->capture_default_str();
  app.add_option("--precision", g_.precision, "double | extended")->capture_default_str();
  app.add_option("--seed", g_.seed, "seed for randomized checks")->capture_default_str();

  std::function<int()> action;

  DomainOpts cls;
  CLI::App* c_cls = app.add_subcommand("classify", "print a domain descriptor");
  cls.add_to(c_cls);
  c_cls->callback([&] { action = [&] { return classify(cls); }; });

  std::string j_part, j_alpha, j_mult, j_rank, j_t;
  CLI::App* c_jack = app.add_subcommand("jack", "Jack polynomial coefficient table");
  c_jack->add_option("--partition", j_part, "e.g. 2,1")->required();
  c_jack->add_option("--alpha", j_alpha, "Jack parameter");
  c_jack->add_option("--mult-a", j_mult, "multiplicity a (alpha = 2/a)");
  c_jack->add_option("--rank", j_rank, "number of variables (default: length of the partition)");
  c_jack->add_option("--t", j_t, "evaluate Omega at this point (comma separated)");
  c_jack->callback([&] { action = [&] { return jack(j_part, j_alpha, j_mult, j_rank, j_t); }; });

  std::string h_alpha, h_beta, h_mult = "2", h_t;
  int h_rank = 1, h_deg = 60;
  bool h_one = false, h_shells = false;
  double h_tol = 0;
  CLI::App* c_hyp = app.add_subcommand("hyper", "hypergeometric series of matrix argument");
  c_hyp->add_option("--alpha", h_alpha, "numerator parameters, comma separated");
  c_hyp->add_option("--beta", h_beta, "denominator parameters, comma separated");
  c_hyp->add_option("--rank", h_rank, "rank r")->capture_default_str();
  c_hyp->add_option("--mult-a", h_mult, "multiplicity a")->capture_default_str();
  c_hyp->add_option("--t", h_t, "point t in [0,1)^r; the series uses t_i^2");
  c_hyp->add_flag("--at-one", h_one, "sum the coefficients at 1^r");
  c_hyp->add_option("--max-degree", h_deg, "last weight shell")->capture_default_str();
  c_hyp->add_option("--tail-tol", h_tol, "stop once a shell's absolute sum is below this")->capture_default_str();
  c_hyp->add_flag("--shells", h_shells, "include per-shell sums in JSON");
  c_hyp->callback([&] { action = [&] { return hyper(h_alpha, h_beta, h_rank, h_mult, h_t, h_deg, h_one, h_tol, h_shells); }; });

  DomainOpts sph;
  std::string s_sigma, s_lambda, s_t;
  int s_deg = 100;
  double s_tol = 1e-16;
  CLI::App* c_sph = app.add_subcommand("spherical", "radial spherical function");
  sph.add_to(c_sph);
  c_sph->add_option("--sigma", s_sigma, "spectral parameter sigma");
  c_sph->add_option("--lambda", s_lambda, "i*lambda (real); converted to sigma");
  c_sph->add_option("--t", s_t, "radial coordinates, |t_j| < 1")->required();
  c_sph->add_option("--max-degree", s_deg, "last weight shell")->capture_default_str();
  c_sph->add_option("--tail-tol", s_tol, "shell tolerance")->capture_default_str();
  c_sph->callback([&] { action = [&] { return spherical(sph, s_sigma, s_lambda, s_t, s_deg, s_tol); }; });

  DomainOpts nrm;
  std::string n_part, n_nu;
  int n_parity = 0;
  CLI::App* c_norm = app.add_subcommand("norm", "Fock and Bergman norms of invariant polynomials");
  nrm.add_to(c_norm);
  c_norm->add_option("--partition", n_part, "base partition m")->required();
  c_norm->add_option("--parity", n_parity, "type D: 1 for the odd invariants")->capture_default_str();
  c_norm->add_option("--nu", n_nu, "Bergman parameter");
  c_norm->callback([&] { action = [&] { return norm(nrm, n_part, n_parity, n_nu); }; });

  std::string sc_setting, sc_hkind, sc_nu;
  int sc_l = 0, sc_r = 0, sc_kmax = 10, sc_deg = 120;
  double sc_tol = 1e-10;
  CLI::App* c_scan = app.add_subcommand("scan", "discrete components and their norm-square certificates");
  c_scan->add_option("--setting", sc_setting, "tensor | restriction")->required();
  c_scan->add_option("--hkind", sc_hkind, "SU (tensor) | SO | Sp");
  c_scan->add_option("--l", sc_l, "l")->required();
  c_scan->add_option("--r", sc_r, "r")->required();
  c_scan->add_option("--nu", sc_nu, "nu, or lo:hi:step")->required();
  c_scan->add_option("--k-max", sc_kmax, "largest k examined")->capture_default_str();
  c_scan->add_option("--max-degree", sc_deg, "last weight shell of the norm series")->capture_default_str();
  c_scan->add_option("--tail-tol", sc_tol, "certification tolerance on the last shell")->capture_default_str();
  c_scan->callback([&] { action = [&] { return scan(sc_setting, sc_hkind, sc_l, sc_r, sc_nu, sc_kmax, sc_deg, sc_tol); }; });

  int d_weight = 3;
  CLI::App* c_dunkl = app.add_subcommand("dunkl-check", "Dunkl-operator norms against the closed forms");
  c_dunkl->add_option("--max-weight", d_weight, "largest |m|")->capture_default_str();
  c_dunkl->callback([&] { action = [&] { return dunkl(d_weight); }; });

  std::vector<int> st_only;
  CLI::App* c_self = app.add_subcommand("selftest", "run the acceptance checks");
  c_self->add_option("--only", st_only, "criterion ids")->delimiter(',');
  c_self->callback([&] { action = [&] { return selftest(st_only); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out_, err_);
    return kUsage;
  }

  Json cfg;
  try {
    fmt_ = parse_format(g_.format);
    prec_ = parse_precision(g_.precision);
    cfg = config(app.get_subcommands().front()->get_name());
    return action();
  } catch (const ParseError& e) {
    err_ << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    emit_error(cfg, e.what());
    return kDomain;
  }
}

}  // namespace

bool apply_thread_override() {
  const char* v = std::getenv(kThreadsEnv);
  if (v == nullptr || *v == '\0') return true;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1 || n > 4096) return false;
#ifdef JACKHYP_HAVE_OPENMP
  omp_set_num_threads(static_cast<int>(n));
#endif
  return true;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner r(out, err);
  return r.run(args);
}

}  // namespace jackhyp::cli

#include "jackhyp/hypergeo.hpp"

#include <cmath>
#include <map>

#include "jackhyp/combinatorics.hpp"
#include "jackhyp/jack.hpp"

namespace jackhyp {

namespace {

/// Level N >= 0 with c - (a/2)(row-1) = -N, if any.
std::optional<int> row_level(const Scalar& c, int row, const Scalar& a) {
  Scalar shifted = c - a / 2 * (row - 1);
  if (!is_nonpositive_integer(shifted)) return std::nullopt;
  return static_cast<int>(-shifted.get_num().get_si());
}

bool numerator_vanishes(const std::vector<RowBound>& bounds, const Partition& m) {
  for (const RowBound& b : bounds)
    if (m[b.row - 1] > b.level) return true;
  return false;
}

}  // namespace

SeriesParams::SeriesParams(std::vector<Scalar> al, std::vector<Scalar> be, int r, Scalar mult)
    : alpha(std::move(al)), beta(std::move(be)), rank(r), a(std::move(mult)) {
  validate();
}

std::vector<RowBound> numerator_bounds(const SeriesParams& p) {
  std::map<int, int> tightest;
  for (const Scalar& c : p.alpha) {
    for (int j = 1; j <= p.rank; ++j) {
      if (auto lvl = row_level(c, j, p.a)) {
        auto [it, fresh] = tightest.try_emplace(j, *lvl);
        if (!fresh) it->second = std::min(it->second, *lvl);
      }
    }
  }
  std::vector<RowBound> out;
  for (auto [row, lvl] : tightest) out.push_back({row, lvl});
  return out;
}

void SeriesParams::validate() const {
  if (rank < 1) throw DomainError("series rank must be at least 1");
  if (sgn(a) <= 0) throw DomainError("multiplicity a must be positive");
  const std::vector<RowBound> bounds = numerator_bounds(*this);
  for (const Scalar& b : beta) {
    for (int j = 1; j <= rank; ++j) {
      auto pole = row_level(b, j, a);
      if (!pole) continue;
      // (b)_m vanishes once m_j > *pole; harmless if a numerator already
      // forces m_j (through some row above or at j) to stay within *pole.
      bool shielded = false;
      for (const RowBound& nb : bounds)
        if (nb.row <= j && nb.level <= *pole) shielded = true;
      if (!shielded)
        throw DomainError("denominator parameter " + to_string(b) + " hits a pole in row " + std::to_string(j));
    }
  }
}

bool is_finite_series(const SeriesParams& p) {
  for (const RowBound& b : numerator_bounds(p))
    if (b.row == 1) return true;
  return false;
}

Scalar balance_excess(const SeriesParams& p) {
  Scalar e = p.a / 2 * (p.rank - 1);
  for (const Scalar& c : p.alpha) e += c;
  for (const Scalar& c : p.beta) e -= c;
  return e;
}

bool convergent_at_one(const SeriesParams& p) {
  if (is_finite_series(p)) return true;
  if (p.k() <= p.l()) return true;
  if (p.k() > p.l() + 1) return false;
  return sgn(balance_excess(p)) < 0;
}

Scalar series_coefficient(const SeriesParams& p, const Partition& m) {
  if (m.length() > p.rank) throw DomainError("partition longer than the series rank");
  const Scalar k = p.a / 2;
  Scalar num = 1;
  for (const Scalar& c : p.alpha) {
    num *= gen_pochhammer(c, m, k);
    if (num == 0) return 0;
  }
  Scalar den = gen_pochhammer(q_param(p.rank, p.a), m, k);
  for (const Scalar& c : p.beta) den *= gen_pochhammer(c, m, k);
  if (den == 0) throw DomainError("denominator Pochhammer vanishes at " + to_string(m));
  return num / den * pi_m(m, p.rank, p.a);
}

namespace {

/// Floating copy of the parameters, converted once per evaluation.
template <class R>
struct RealSeries {
  std::vector<R> alpha, beta;
  R k, q;
  int rank;
  std::vector<RowBound> bounds;

  explicit RealSeries(const SeriesParams& p)
      : k(to_real<R>(Scalar(p.a / 2))), q(to_real<R>(q_param(p.rank, p.a))), rank(p.rank), bounds(numerator_bounds(p)) {
    for (const Scalar& c : p.alpha) alpha.push_back(to_real<R>(c));
    for (const Scalar& c : p.beta) beta.push_back(to_real<R>(c));
  }

  R pi(const Partition& m) const {
    R res = 1;
    for (int i = 0; i < rank; ++i) {
      for (int j = i + 1; j < rank; ++j) {
        const int d = m[i] - m[j];
        if (d == 0) continue;
        const R ks = k * static_cast<R>(j - i);
        res *= (static_cast<R>(d) + ks) / ks;
        const R up = k * static_cast<R>(j - i + 1);
        const R lo = k * static_cast<R>(j - i - 1) + 1;
        for (int s = 0; s < d; ++s) res *= (up + static_cast<R>(s)) / (lo + static_cast<R>(s));
      }
    }
    return res;
  }

  R coef(const Partition& m) const {
    if (numerator_vanishes(bounds, m)) return 0;
    R term = 1;
    for (int j = 0; j < m.length(); ++j) {
      const R shift = k * static_cast<R>(j);
      for (int s = 0; s < m[j]; ++s) {
        const R off = static_cast<R>(s) - shift;
        R num = 1, den = q + off;
        for (const R& c : alpha) num *= c + off;
        for (const R& c : beta) den *= c + off;
        term *= num / den;
      }
    }
    return term * pi(m);
  }
};

template <class R>
std::vector<long double> shell_terms_impl(const SeriesParams& p, int n, const std::vector<long double>& x, Exec exec) {
  const RealSeries<R> rs(p);
  const std::vector<Partition> parts = enumerate_partitions(n, p.rank);
  const long long count = static_cast<long long>(parts.size());
  std::vector<long double> out(parts.size(), 0.0L);

  std::shared_ptr<const JackShell> shell;
  std::vector<R> monos;
  if (!x.empty()) {
    std::vector<R> xr(x.begin(), x.end());
    shell = jack_shell(n, p.rank, Scalar(2 / p.a));
    monos.reserve(parts.size());
    for (const Partition& mu : shell->partitions) monos.push_back(monomial_symmetric(mu, xr));
  }

  auto term = [&](std::size_t i) -> R {
    R c = rs.coef(parts[i]);
    if (!shell || c == 0) return c;
    const std::vector<long double>& row = shell->omega[i];
    R om = 0;
    for (std::size_t j = i; j < row.size(); ++j)  // Omega is triangular: only dominated monomials
      if (row[j] != 0) om += static_cast<R>(row[j]) * monos[j];
    return c * om;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = term(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = term(static_cast<std::size_t>(i));
  }
  return out;
}

template <class R>
SeriesResult run_series(const SeriesParams& p, const std::vector<long double>& x, int max_degree,
                        const EvalOptions& opts, Verdict verdict) {
  if (max_degree < 0) throw DomainError("max_degree must be nonnegative");
  SeriesResult res;
  res.precision = opts.precision;
  res.verdict = verdict;
  res.has_value = true;

  // a first-row bound caps every part, hence the weight
  std::optional<int> cap;
  for (const RowBound& b : numerator_bounds(p))
    if (b.row == 1) cap = b.level * p.rank;

  R value = 0;
  for (int n = 0; n <= max_degree; ++n) {
    std::vector<long double> terms = shell_terms(p, n, x, opts.precision, opts.exec);
    R s = static_cast<R>(reduce_shell(terms, opts.precision));
    R mag = 0;
    for (long double t : terms) mag += std::fabs(static_cast<R>(t));
    value += s;
    res.shell_sums.push_back(static_cast<long double>(s));
    res.shell_magnitudes.push_back(static_cast<long double>(mag));
    res.truncation_degree = n;
    res.last_shell_magnitude = static_cast<long double>(mag);
    if (cap && n >= *cap) {
      res.tolerance_met = true;
      break;
    }
    if (opts.tail_tol > 0 && n >= 1 && mag < static_cast<R>(opts.tail_tol)) {
      res.tolerance_met = true;
      break;
    }
  }
  res.value = static_cast<long double>(value);
  return res;
}

SeriesResult dispatch(const SeriesParams& p, const std::vector<long double>& x, int max_degree, const EvalOptions& opts,
                      Verdict verdict) {
  if (opts.precision == Precision::Extended) return run_series<long double>(p, x, max_degree, opts, verdict);
  return run_series<double>(p, x, max_degree, opts, verdict);
}

Verdict interior_verdict(const SeriesParams& p) {
  if (is_finite_series(p)) return Verdict::TruncatedSeries;
  if (p.k() > p.l() + 1) return Verdict::DivergentByCriterion;
  return Verdict::ConvergedByCriterion;
}

SeriesResult interior(const SeriesParams& p, const std::vector<long double>& x, int max_degree,
                      const EvalOptions& opts) {
  if (static_cast<int>(x.size()) != p.rank) throw DomainError("point must have exactly r coordinates");
  Verdict v = interior_verdict(p);
  bool origin = true;
  for (long double xi : x) origin = origin && xi == 0;
  if (v == Verdict::DivergentByCriterion && !origin) {
    SeriesResult res;
    res.precision = opts.precision;
    res.verdict = v;
    return res;
  }
  return dispatch(p, x, max_degree, opts, v);
}

}  // namespace

double series_coefficient_real(const SeriesParams& p, const Partition& m, double) {
  return RealSeries<double>(p).coef(m);
}

long double series_coefficient_real(const SeriesParams& p, const Partition& m, long double) {
  return RealSeries<long double>(p).coef(m);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ConvergedByCriterion: return "converged-by-criterion";
    case Verdict::TruncatedSeries: return "truncated-series";
    case Verdict::DivergentByCriterion: return "divergent-by-criterion";
  }
  return "?";
}

std::string to_string(Precision p) { return p == Precision::Extended ? "extended" : "double"; }

Precision parse_precision(const std::string& s) {
  if (s == "double") return Precision::Double;
  if (s == "extended" || s == "long-double") return Precision::Extended;
  throw ParseError("unknown precision '" + s + "' (double|extended)");
}

std::vector<long double> shell_terms(const SeriesParams& p, int n, const std::vector<long double>& x, Precision prec,
                                     Exec exec) {
  if (prec == Precision::Extended) return shell_terms_impl<long double>(p, n, x, exec);
  return shell_terms_impl<double>(p, n, x, exec);
}

long double reduce_shell(const std::vector<long double>& terms, Precision prec) {
  if (prec == Precision::Extended) {
    long double s = 0;
    for (long double t : terms) s += t;
    return s;
  }
  double s = 0;
  for (long double t : terms) s += static_cast<double>(t);
  return s;
}

SeriesResult hyper_eval(const SeriesParams& p, const std::vector<long double>& t, int max_degree,
                        const EvalOptions& opts) {
  std::vector<long double> sq;
  for (long double ti : t) {
    if (!(ti >= 0 && ti < 1)) throw DomainError("hyper_eval needs every t_i in [0,1)");
    sq.push_back(ti * ti);
  }
  return interior(p, sq, max_degree, opts);
}

SeriesResult hyper_series(const SeriesParams& p, const std::vector<long double>& x, int max_degree,
                          const EvalOptions& opts) {
  for (long double xi : x)
    if (!(std::fabs(xi) < 1)) throw DomainError("series argument needs |x_i| < 1");
  return interior(p, x, max_degree, opts);
}

SeriesResult hyper_at_one(const SeriesParams& p, int max_degree, double tail_tol, const EvalOptions& opts) {
  if (!convergent_at_one(p)) {
    SeriesResult res;
    res.precision = opts.precision;
    res.verdict = Verdict::DivergentByCriterion;
    return res;
  }
  EvalOptions o = opts;
  o.tail_tol = tail_tol;
  Verdict v = is_finite_series(p) ? Verdict::TruncatedSeries : Verdict::ConvergedByCriterion;
  return dispatch(p, {}, max_degree, o, v);
}

}  // namespace jackhyp

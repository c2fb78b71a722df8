#include "jackhyp/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace jackhyp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Scalar parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not a number: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return Scalar(neg ? mpz_class(-z) : z);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Scalar num = parse_integer(text.substr(0, slash), text);
    Scalar den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    Scalar q = num / den;
    q.canonicalize();
    return q;
  }

  // decimal with optional exponent
  std::string_view mant = text;
  long exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    std::string_view ex = text.substr(e + 1);
    Scalar ev = parse_integer(ex, text);
    exp10 = ev.get_num().get_si();
  }
  bool neg = false;
  if (!mant.empty() && (mant.front() == '-' || mant.front() == '+')) {
    neg = mant.front() == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw ParseError("not a number: '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(mant)) throw ParseError("not a number: '" + std::string(text) + "'");
    digits = std::string(mant);
  }
  Scalar v{mpz_class(digits, 10)};
  v *= pow(Scalar(10), exp10);
  if (neg) v = -v;
  v.canonicalize();
  return v;
}

std::string to_string(const Scalar& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

long double to_long_double(const Scalar& x) {
  // Scale into range so strtold sees modest-size operands.
  const mpz_class& n = x.get_num();
  const mpz_class& d = x.get_den();
  if (n == 0) return 0.0L;
  long en = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  long ed = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  // keep 128 significant bits of the quotient
  long shift = 128 - (en - ed);
  mpz_class scaled;
  if (shift >= 0) {
    mpz_class num = n;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(shift));
    mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
  } else {
    mpz_class den = d;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-shift));
    mpz_tdiv_q(scaled.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t());
  }
  long double m = std::strtold(scaled.get_str().c_str(), nullptr);
  return std::ldexp(m, static_cast<int>(-shift));
}

Scalar pow(const Scalar& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DomainError("0 raised to a negative power");
    Scalar inv = 1 / base;
    return pow(inv, -exp);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace jackhyp

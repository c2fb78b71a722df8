#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace jackhyp {

/// Exact rational number. Every combinatorial quantity in the library is
/// carried in this type; floating values only appear in series summation.
using Scalar = mpq_class;

/// Raised when an input violates a mathematical precondition
/// (pole hit, invalid family parameters, divergent at-one request...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed textual input (partitions, scalars, CLI flags).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "3", "-7/2" or a decimal such as "2.5" / "-0.125" / "1e-3"
/// into an exact rational. Decimals are converted exactly, not rounded.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& x);

inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }

/// True when x is 0, -1, -2, ...
inline bool is_nonpositive_integer(const Scalar& x) { return is_integer(x) && sgn(x) <= 0; }

inline double to_double(const Scalar& x) { return x.get_d(); }

/// Conversion to long double via the decimal expansion of numerator and
/// denominator, keeping the extra mantissa bits that get_d() drops.
long double to_long_double(const Scalar& x);

template <class Real>
Real to_real(const Scalar& x) {
  if constexpr (sizeof(Real) > sizeof(double)) {
    return static_cast<Real>(to_long_double(x));
  } else {
    return static_cast<Real>(x.get_d());
  }
}

inline Scalar half(const Scalar& x) { return Scalar(x / 2); }

/// num/den in canonical form (the two-argument mpq_class constructor does
/// not reduce).
inline Scalar frac(long num, long den) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

/// base^exp for an integer exponent (negative allowed when base != 0).
Scalar pow(const Scalar& base, long exp);

}  // namespace jackhyp

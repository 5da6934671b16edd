#pragma once

// Exact scalars. Every structure constant and recursion coefficient in this
// library is rational, and normal ordering of divided powers produces large
// numerators, so fixed-width arithmetic is never used.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace superweyl {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ArithKind { add, sub, mul, div };

class RationalParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Canonical result of `lhs kind rhs`; `std::nullopt` for division by zero.
inline std::optional<Rational> rat_arith(const Rational& lhs, const Rational& rhs,
                                         ArithKind kind) {
  Rational out;
  switch (kind) {
    case ArithKind::add: out = lhs + rhs; break;
    case ArithKind::sub: out = lhs - rhs; break;
    case ArithKind::mul: out = lhs * rhs; break;
    case ArithKind::div:
      if (is_zero(rhs)) return std::nullopt;
      out = lhs / rhs;
      break;
  }
  out.canonicalize();
  return out;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_int(num, true) || (slash != std::string_view::npos && !valid_int(den, false)))
    throw RationalParseError("malformed rational '" + std::string(text) + "'");
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(Integer(std::string(num[0] == '+' ? num.substr(1) : num)));
  } else {
    Integer d(std::string{den});
    if (d == 0) throw RationalParseError("zero denominator in '" + std::string(text) + "'");
    r = Rational(Integer(std::string(num[0] == '+' ? num.substr(1) : num)), d);
  }
  r.canonicalize();
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

/// Generalized binomial n(n-1)...(n-k+1)/k!; n may be negative.
inline Integer int_binomial(long n, unsigned long k) {
  Integer num = 1;
  for (unsigned long i = 0; i < k; ++i) num *= Integer(n - static_cast<long>(i));
  return num / factorial(k);
}

/// n/d in lowest terms.
inline Rational ratio(long n, long d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rational r{Integer(n), Integer(d)};
  r.canonicalize();
  return r;
}

inline Rational inverse_factorial(unsigned long n) { return Rational(Integer(1), factorial(n)); }

}  // namespace superweyl

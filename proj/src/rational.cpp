#include "hypergw/rational.hpp"

#include "hypergw/error.hpp"

namespace hypergw {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error(ErrorKind::InvalidArgument, "malformed rational '" + s + "'");
  if (r.get_den() == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Integer factorial(unsigned long k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace hypergw

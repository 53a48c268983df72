#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypergw/rational.hpp"

namespace hypergw {

/// Dense univariate polynomial over Q, lowest degree first. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& c);  // NOLINT: constants convert implicitly

  static Poly monomial(int degree, const Rational& c = 1);
  /// prod_i (x - roots[i])
  static Poly from_roots(const std::vector<Rational>& roots);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(int k) const;
  const Rational& leading() const;

  /// Multiplicity of the root x = 0.
  int valuation() const;

  Rational operator()(const Rational& x) const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly operator-(const Poly& a);
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& c, const Poly& a);

/// Euclidean division a = q b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b when b divides a exactly; throws otherwise.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Monic greatest common divisor (zero only if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly monic(const Poly& a);

Poly derivative(const Poly& a);
/// a(x + s)
Poly taylor_shift(const Poly& a, const Rational& s);
/// x^deg a(1/x) for the given deg >= a.degree()
Poly reversed(const Poly& a, int deg);
/// Drops x^k and everything above.
Poly truncated(const Poly& a, int k);

std::string to_string(const Poly& p, const std::string& var = "h");

}  // namespace hypergw

#pragma once

#include <string>

#include "hypergw/poly.hpp"

namespace hypergw {

/// Rational function num/den of one variable over Q, kept reduced with a
/// monic denominator so that == is equality of functions.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(Poly p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
  RatFunc(Poly num, Poly den);

  /// The identity function x.
  static RatFunc variable();

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Order of the pole at 0 (0 when regular there, negative for a zero).
  int pole_order_at_zero() const;
  bool regular_at_zero() const { return pole_order_at_zero() <= 0; }

  /// Value at x; the denominator must not vanish there.
  Rational operator()(const Rational& x) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

 private:
  static RatFunc from_reduced(Poly num, Poly den);
  Poly num_;
  Poly den_;
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
};

RatFunc operator-(const RatFunc& a);
RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
RatFunc operator/(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const Rational& c, const RatFunc& a);

/// f(x + s)
RatFunc shift(const RatFunc& f, const Rational& s);
/// f(1/x)
RatFunc invert_variable(const RatFunc& f);
RatFunc derivative(const RatFunc& f);

std::string to_string(const RatFunc& f, const std::string& var = "h");

}  // namespace hypergw

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypergw/rational.hpp"

namespace hypergw {

/// Truncated power series sum_{d=0}^{D} c_d q^d with exact coefficients.
///
/// The truncation D is inclusive and travels with the value. Binary operations
/// truncate at the smaller of the two orders; reading a coefficient above D is
/// an error rather than an implicit zero.
class QSeries {
 public:
  QSeries() : coeffs_(1) {}
  explicit QSeries(int order);
  explicit QSeries(std::vector<Rational> coeffs);

  static QSeries constant(const Rational& c, int order);
  static QSeries monomial(int degree, const Rational& c, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& operator[](int d) const;
  Rational& operator[](int d);
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  int valuation() const;  // order()+1 when the series vanishes to truncation

  /// Same series at a lower order; asking for more than order() throws.
  QSeries truncated(int order) const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const Rational& c);

  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

QSeries operator-(const QSeries& a);
QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator/(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, const QSeries& a);
QSeries operator*(const QSeries& a, const Rational& c);

QSeries inverse(const QSeries& a);

/// exp requires f(0) = 0; log and pow require f(0) = 1.
QSeries exp(const QSeries& f);
QSeries log(const QSeries& f);
QSeries pow(const QSeries& f, const Rational& r);

/// d/dt on pure q-series, q = e^t: the coefficient of q^d is multiplied by d.
QSeries derivative(const QSeries& f);

/// Inverse of derivative on series without constant term: c_d q^d -> c_d q^d / d.
QSeries primitive(const QSeries& f);

/// f(g(q)) for g(0) = 0, truncated at min(order f, order g).
QSeries compose(const QSeries& f, const QSeries& g);

/// Multiplies by q^k and drops everything above the truncation.
QSeries shift(const QSeries& f, int k);

/// First degree at which a and b differ, compared up to min order.
std::optional<int> first_difference(const QSeries& a, const QSeries& b);

/// Re-expands F(q) as a series in Q = q exp(g(q)).
///
/// The compositional inverse q(Q) is found by the fixed-point iteration
/// q <- Q exp(-g(q)), which gains one correct degree per pass.
QSeries change_variable_expT(const QSeries& f, const QSeries& g);

/// The g' with q = Q exp(g'(Q)) when Q = q exp(g(q)); applying
/// change_variable_expT with g then g' is the identity.
QSeries inverse_mirror(const QSeries& g);

std::string to_string(const QSeries& f, const std::string& var = "q");

}  // namespace hypergw

#pragma once

#include <vector>

#include "hypergw/error.hpp"
#include "hypergw/qseries.hpp"

namespace hypergw {

/// Raised by TPoly::t_free_part; carries the first surviving (t-power, q-degree, value).
class NotTFreeError : public Error {
 public:
  NotTFreeError(int t_power, int q_degree, Rational value);

  int t_power() const noexcept { return t_power_; }
  int q_degree() const noexcept { return q_degree_; }
  const Rational& value() const noexcept { return value_; }

 private:
  int t_power_;
  int q_degree_;
  Rational value_;
};

/// Polynomial in t with QSeries coefficients, all at one q-truncation.
/// Zero is the single zero coefficient; trailing zero coefficients are dropped.
class TPoly {
 public:
  explicit TPoly(QSeries constant_term);
  explicit TPoly(std::vector<QSeries> coeffs);

  /// The monomial t at the given q-truncation.
  static TPoly t(int order);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int order() const noexcept { return coeffs_.front().order(); }

  /// Coefficient of t^k; zero for k above the degree.
  QSeries coefficient(int k) const;
  const std::vector<QSeries>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_t_free() const;
  /// The t^0 part, after checking every positive t-power vanishes to truncation.
  QSeries t_free_part() const;

  /// d/dt with q = e^t: t^k c(q) -> k t^{k-1} c(q) + t^k (q d/dq c)(q).
  TPoly d_dt() const;

  friend bool operator==(const TPoly& a, const TPoly& b) = default;

 private:
  void normalize();
  std::vector<QSeries> coeffs_;
};

TPoly operator-(const TPoly& a);
TPoly operator+(const TPoly& a, const TPoly& b);
TPoly operator-(const TPoly& a, const TPoly& b);
TPoly operator*(const TPoly& a, const TPoly& b);
TPoly operator*(const QSeries& s, const TPoly& a);
TPoly operator*(const Rational& c, const TPoly& a);
/// Coefficientwise division by a t-free unit series.
TPoly operator/(const TPoly& a, const QSeries& s);

}  // namespace hypergw

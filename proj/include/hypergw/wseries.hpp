#pragma once

#include <vector>

#include "hypergw/qseries.hpp"

namespace hypergw {

/// Truncated series in w with QSeries coefficients: sum_{p<=W} c_p(q) w^p.
/// Products truncate at the smaller W and the smaller q-order.
class WSeries {
 public:
  WSeries(int w_order, int q_order);
  explicit WSeries(std::vector<QSeries> coeffs);

  int w_order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int q_order() const noexcept { return coeffs_.front().order(); }

  const QSeries& operator[](int p) const;
  QSeries& operator[](int p);
  const Rational& at(int p, int d) const { return (*this)[p][d]; }

  friend bool operator==(const WSeries& a, const WSeries& b) = default;

 private:
  std::vector<QSeries> coeffs_;
};

WSeries operator+(const WSeries& a, const WSeries& b);
WSeries operator-(const WSeries& a, const WSeries& b);
WSeries operator*(const WSeries& a, const WSeries& b);
WSeries operator*(const QSeries& s, const WSeries& a);
WSeries operator*(const Rational& c, const WSeries& a);

/// log in the (w, q)-bigraded ring; the (w^0, q^0) coefficient must be 1.
WSeries log(const WSeries& f);
/// exp of a series whose (w^0, q^0) coefficient is 0.
WSeries exp(const WSeries& f);

/// Taylor coefficients at w = 0 of num(w) / den(w) for polynomials given
/// low-degree first; den(0) must be nonzero. Returned as a univariate series
/// in w truncated at w_order.
QSeries taylor_rational(const std::vector<Rational>& num, const std::vector<Rational>& den, int w_order);

}  // namespace hypergw

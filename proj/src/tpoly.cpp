#include "hypergw/tpoly.hpp"

#include <algorithm>

namespace hypergw {

NotTFreeError::NotTFreeError(int t_power, int q_degree, Rational value)
    : Error(ErrorKind::NotTFree, "t^" + std::to_string(t_power) + " q^" + std::to_string(q_degree) +
                                     " coefficient is " + to_string(value)),
      t_power_(t_power),
      q_degree_(q_degree),
      value_(std::move(value)) {}

TPoly::TPoly(QSeries constant_term) { coeffs_.push_back(std::move(constant_term)); }

TPoly::TPoly(std::vector<QSeries> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "TPoly needs at least one coefficient");
  const int order =
      std::min_element(coeffs_.begin(), coeffs_.end(), [](auto& a, auto& b) { return a.order() < b.order(); })
          ->order();
  for (auto& c : coeffs_)
    if (c.order() != order) c = c.truncated(order);
  normalize();
}

TPoly TPoly::t(int order) { return TPoly(std::vector<QSeries>{QSeries(order), QSeries::constant(1, order)}); }

void TPoly::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QSeries TPoly::coefficient(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative t-power");
  if (k > degree()) return QSeries(order());
  return coeffs_[static_cast<std::size_t>(k)];
}

bool TPoly::is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

bool TPoly::is_t_free() const { return coeffs_.size() == 1; }

QSeries TPoly::t_free_part() const {
  if (!is_t_free()) {
    for (int k = 1; k <= degree(); ++k) {
      const QSeries& c = coeffs_[static_cast<std::size_t>(k)];
      const int d = c.valuation();
      if (d <= c.order()) throw NotTFreeError(k, d, c[d]);
    }
  }
  return coeffs_[0];
}

TPoly TPoly::d_dt() const {
  std::vector<QSeries> out;
  out.reserve(coeffs_.size());
  for (int k = 0; k <= degree(); ++k) {
    QSeries c = derivative(coeffs_[static_cast<std::size_t>(k)]);
    if (k < degree()) c += Rational(k + 1) * coeffs_[static_cast<std::size_t>(k + 1)];
    out.push_back(std::move(c));
  }
  return TPoly(std::move(out));
}

TPoly operator-(const TPoly& a) { return Rational(-1) * a; }

TPoly operator+(const TPoly& a, const TPoly& b) {
  const int deg = std::max(a.degree(), b.degree());
  std::vector<QSeries> out;
  for (int k = 0; k <= deg; ++k) out.push_back(a.coefficient(k) + b.coefficient(k));
  return TPoly(std::move(out));
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<QSeries> out(static_cast<std::size_t>(a.degree() + b.degree() + 1), QSeries(order));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j)
      out[static_cast<std::size_t>(i + j)] += a.coefficients()[i] * b.coefficients()[j];
  return TPoly(std::move(out));
}

TPoly operator*(const QSeries& s, const TPoly& a) {
  std::vector<QSeries> out;
  for (const auto& c : a.coefficients()) out.push_back(s * c);
  return TPoly(std::move(out));
}

TPoly operator*(const Rational& c, const TPoly& a) {
  std::vector<QSeries> out;
  for (const auto& x : a.coefficients()) out.push_back(c * x);
  return TPoly(std::move(out));
}

TPoly operator/(const TPoly& a, const QSeries& s) {
  const QSeries inv = inverse(s);
  return inv * a;
}

}  // namespace hypergw

#include "hypergw/wseries.hpp"

#include <algorithm>

#include "hypergw/error.hpp"

namespace hypergw {

WSeries::WSeries(int w_order, int q_order) {
  if (w_order < 0) throw Error(ErrorKind::InvalidArgument, "negative w-truncation");
  coeffs_.assign(static_cast<std::size_t>(w_order) + 1, QSeries(q_order));
}

WSeries::WSeries(std::vector<QSeries> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "WSeries needs at least one coefficient");
  int order = coeffs_.front().order();
  for (const auto& c : coeffs_) order = std::min(order, c.order());
  for (auto& c : coeffs_)
    if (c.order() != order) c = c.truncated(order);
}

const QSeries& WSeries::operator[](int p) const {
  if (p < 0 || p > w_order())
    throw Error(ErrorKind::OutOfTruncation,
                "coefficient w^" + std::to_string(p) + " beyond w-truncation " + std::to_string(w_order()));
  return coeffs_[static_cast<std::size_t>(p)];
}

QSeries& WSeries::operator[](int p) {
  if (p < 0 || p > w_order())
    throw Error(ErrorKind::OutOfTruncation,
                "coefficient w^" + std::to_string(p) + " beyond w-truncation " + std::to_string(w_order()));
  return coeffs_[static_cast<std::size_t>(p)];
}

WSeries operator+(const WSeries& a, const WSeries& b) {
  const int w = std::min(a.w_order(), b.w_order());
  std::vector<QSeries> out;
  for (int p = 0; p <= w; ++p) out.push_back(a[p] + b[p]);
  return WSeries(std::move(out));
}

WSeries operator-(const WSeries& a, const WSeries& b) { return a + Rational(-1) * b; }

WSeries operator*(const WSeries& a, const WSeries& b) {
  const int w = std::min(a.w_order(), b.w_order());
  const int qo = std::min(a.q_order(), b.q_order());
  WSeries out(w, qo);
  for (int i = 0; i <= w; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= w; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

WSeries operator*(const QSeries& s, const WSeries& a) {
  std::vector<QSeries> out;
  for (int p = 0; p <= a.w_order(); ++p) out.push_back(s * a[p]);
  return WSeries(std::move(out));
}

WSeries operator*(const Rational& c, const WSeries& a) {
  std::vector<QSeries> out;
  for (int p = 0; p <= a.w_order(); ++p) out.push_back(c * a[p]);
  return WSeries(std::move(out));
}

WSeries log(const WSeries& f) {
  const QSeries& f0 = f[0];
  if (f0[0] != 1)
    throw Error(ErrorKind::BadConstantTerm, "log needs (w^0, q^0) coefficient 1, got " + to_string(f0[0]));
  // f = f0 (1 + g) with g = O(w); log f = log f0 + sum_k (-1)^{k+1} g^k / k.
  const QSeries inv0 = inverse(f0);
  WSeries g = inv0 * f;
  g[0] = QSeries(g.q_order());
  WSeries out(f.w_order(), f.q_order());
  out[0] = log(f0);
  WSeries power = g;
  for (int k = 1; k <= f.w_order(); ++k) {
    const Rational c = make_rational(k % 2 == 1 ? 1 : -1, k);
    out = out + c * power;
    power = power * g;
  }
  return out;
}

WSeries exp(const WSeries& f) {
  const QSeries& f0 = f[0];
  if (f0[0] != 0)
    throw Error(ErrorKind::BadConstantTerm, "exp needs zero (w^0, q^0) coefficient, got " + to_string(f0[0]));
  WSeries g = f;
  g[0] = QSeries(g.q_order());
  WSeries out(f.w_order(), f.q_order());
  out[0] = QSeries::constant(1, f.q_order());
  WSeries term = out;
  for (int k = 1; k <= f.w_order(); ++k) {
    term = make_rational(1, k) * (term * g);
    out = out + term;
  }
  return exp(f0) * out;
}

QSeries taylor_rational(const std::vector<Rational>& num, const std::vector<Rational>& den, int w_order) {
  if (den.empty() || den[0] == 0) throw Error(ErrorKind::DivByNonUnit, "denominator vanishes at w = 0");
  QSeries n(w_order), d(w_order);
  for (std::size_t i = 0; i < num.size() && static_cast<int>(i) <= w_order; ++i) n[static_cast<int>(i)] = num[i];
  for (std::size_t i = 0; i < den.size() && static_cast<int>(i) <= w_order; ++i) d[static_cast<int>(i)] = den[i];
  return n / d;
}

}  // namespace hypergw

#include "hypergw/useries.hpp"

#include <algorithm>

#include "hypergw/error.hpp"

namespace hypergw {

USeriesRF::USeriesRF(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, RatFunc());
}

USeriesRF::USeriesRF(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "USeriesRF needs at least one coefficient");
}

USeriesRF USeriesRF::without_constant(std::vector<RatFunc> coeffs) {
  USeriesRF out(std::move(coeffs));
  if (!out[0].is_zero())
    throw Error(ErrorKind::NonzeroConstant, "u^0 coefficient is " + to_string(out[0]) + ", expected 0");
  return out;
}

USeriesRF USeriesRF::from_qseries(const QSeries& c) {
  std::vector<RatFunc> out;
  for (int d = 0; d <= c.order(); ++d) out.emplace_back(c[d]);
  return USeriesRF(std::move(out));
}

const RatFunc& USeriesRF::operator[](int d) const {
  if (d < 0 || d > order())
    throw Error(ErrorKind::OutOfTruncation,
                "coefficient of degree " + std::to_string(d) + " beyond truncation " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(d)];
}

RatFunc& USeriesRF::operator[](int d) {
  if (d < 0 || d > order())
    throw Error(ErrorKind::OutOfTruncation,
                "coefficient of degree " + std::to_string(d) + " beyond truncation " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(d)];
}

LaurentUSeries USeriesRF::laurent_at_zero(int top) const {
  std::vector<HLaurent> out;
  for (int d = 0; d <= order(); ++d) {
    const RatFunc& c = coeffs_[d];
    const int pole = std::max(0, c.pole_order_at_zero());
    out.push_back(hypergw::laurent_at_zero(c, pole, top - d));
  }
  return LaurentUSeries(std::move(out));
}

USeriesRF operator+(const USeriesRF& a, const USeriesRF& b) {
  const int D = std::min(a.order(), b.order());
  std::vector<RatFunc> out;
  for (int d = 0; d <= D; ++d) out.push_back(a[d] + b[d]);
  return USeriesRF(std::move(out));
}

USeriesRF operator-(const USeriesRF& a, const USeriesRF& b) {
  const int D = std::min(a.order(), b.order());
  std::vector<RatFunc> out;
  for (int d = 0; d <= D; ++d) out.push_back(a[d] - b[d]);
  return USeriesRF(std::move(out));
}

USeriesRF operator*(const USeriesRF& a, const USeriesRF& b) {
  const int D = std::min(a.order(), b.order());
  std::vector<RatFunc> out(static_cast<std::size_t>(D) + 1);
  for (int i = 0; i <= D; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= D; ++j)
      if (!b[j].is_zero()) out[i + j] = out[i + j] + a[i] * b[j];
  }
  return USeriesRF(std::move(out));
}

USeriesRF operator*(const QSeries& s, const USeriesRF& a) {
  const int D = std::min(s.order(), a.order());
  std::vector<RatFunc> out(static_cast<std::size_t>(D) + 1);
  for (int i = 0; i <= D; ++i) {
    if (s[i] == 0) continue;
    for (int j = 0; i + j <= D; ++j)
      if (!a[j].is_zero()) out[i + j] = out[i + j] + s[i] * a[j];
  }
  return USeriesRF(std::move(out));
}

USeriesRF operator*(const RatFunc& c, const USeriesRF& a) {
  std::vector<RatFunc> out;
  for (int d = 0; d <= a.order(); ++d) out.push_back(c * a[d]);
  return USeriesRF(std::move(out));
}

USeriesRF u_derivative(const USeriesRF& a) {
  std::vector<RatFunc> out;
  for (int d = 0; d <= a.order(); ++d) out.push_back(Rational(d) * a[d]);
  return USeriesRF(std::move(out));
}

}  // namespace hypergw

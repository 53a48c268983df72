#include "hypergw/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "hypergw/error.hpp"

namespace hypergw {

HLaurent::HLaurent(int low, int high, std::vector<Rational> coeffs)
    : low_(low), high_(std::min(high, kExact)), coeffs_(std::move(coeffs)) {
  if (high_ < low_ - 1) throw Error(ErrorKind::InvalidArgument, "Laurent window with high < low - 1");
  const long room = static_cast<long>(high_) - low_ + 1;
  if (static_cast<long>(coeffs_.size()) > room) coeffs_.resize(static_cast<std::size_t>(room));
  trim();
}

void HLaurent::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

HLaurent HLaurent::constant(const Rational& c) { return HLaurent(0, kExact, {c}); }

HLaurent HLaurent::monomial(int power, const Rational& c) { return HLaurent(power, kExact, {c}); }

Rational HLaurent::coefficient(int k) const {
  if (k < low_) return 0;
  if (k > high_)
    throw Error(ErrorKind::WindowTooSmall, "coefficient h^" + std::to_string(k) + " above the Laurent window (high " +
                                               std::to_string(high_) + ")");
  const std::size_t i = static_cast<std::size_t>(k - low_);
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

int HLaurent::pole_order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int power = low_ + static_cast<int>(i);
    if (power >= 0) break;
    if (coeffs_[i] != 0) return -power;
  }
  return 0;
}

HLaurent HLaurent::truncated(int high) const {
  if (high > high_) throw Error(ErrorKind::WindowTooSmall, "cannot raise the upper end of a Laurent window");
  return HLaurent(low_, high, coeffs_);
}

bool operator==(const HLaurent& a, const HLaurent& b) {
  if (a.high_ != b.high_) return false;
  const int lo = std::min(a.low_, b.low_);
  const int hi = std::max(a.low_ + static_cast<int>(a.coeffs_.size()), b.low_ + static_cast<int>(b.coeffs_.size()));
  for (int k = lo; k < hi; ++k)
    if (a.coefficient(k) != b.coefficient(k)) return false;
  return true;
}

HLaurent operator-(const HLaurent& a) { return Rational(-1) * a; }

HLaurent operator*(const Rational& c, const HLaurent& a) {
  std::vector<Rational> out = a.stored();
  for (auto& x : out) x *= c;
  return HLaurent(a.low(), a.high(), std::move(out));
}

HLaurent operator+(const HLaurent& a, const HLaurent& b) {
  const int lo = std::min(a.low(), b.low());
  const int hi = std::min(a.high(), b.high());
  const int end = std::min<long>(hi, std::max(a.low() + static_cast<long>(a.stored().size()),
                                              b.low() + static_cast<long>(b.stored().size())) -
                                         1);
  std::vector<Rational> out;
  for (int k = lo; k <= end; ++k) out.push_back(a.coefficient(k) + b.coefficient(k));
  return HLaurent(lo, hi, std::move(out));
}

HLaurent operator-(const HLaurent& a, const HLaurent& b) { return a + (-b); }

HLaurent operator*(const HLaurent& a, const HLaurent& b) {
  const int lo = a.low() + b.low();
  int hi;
  if (a.exact() && b.exact())
    hi = HLaurent::kExact;
  else
    hi = std::min(a.exact() ? HLaurent::kExact : a.high() + b.low(), b.exact() ? HLaurent::kExact : b.high() + a.low());
  const auto& ca = a.stored();
  const auto& cb = b.stored();
  if (ca.empty() || cb.empty()) return HLaurent(lo, hi, {});
  const long span = std::min<long>(static_cast<long>(ca.size() + cb.size()) - 1, static_cast<long>(hi) - lo + 1);
  std::vector<Rational> out(static_cast<std::size_t>(std::max(0L, span)));
  Rational tmp;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size() && static_cast<long>(i + j) < span; ++j) {
      if (cb[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), ca[i].get_mpq_t(), cb[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return HLaurent(lo, hi, std::move(out));
}

HLaurent shift_power(const HLaurent& a, int k) {
  const int hi = a.exact() ? HLaurent::kExact : a.high() + k;
  return HLaurent(a.low() + k, hi, a.stored());
}

namespace {

// Taylor coefficients of num/den at 0 up to x^k; den(0) != 0.
std::vector<Rational> series_quotient(const Poly& num, const Poly& den, int k) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(k + 1, 0)));
  const Rational inv = 1 / den.coefficient(0);
  Rational acc;
  for (int m = 0; m <= k; ++m) {
    acc = num.coefficient(m);
    for (int j = 1; j <= std::min(m, den.degree()); ++j) acc -= den.coefficients()[j] * out[m - j];
    out[m] = acc * inv;
  }
  return out;
}

Poly drop_low(const Poly& p, int v) {
  if (v == 0) return p;
  return Poly(std::vector<Rational>(p.coefficients().begin() + v, p.coefficients().end()));
}

}  // namespace

HLaurent laurent_of_quotient(const Poly& num, const Poly& den, int L, int K) {
  if (den.is_zero()) throw Error(ErrorKind::DivByNonUnit, "Laurent expansion of a quotient by zero");
  if (num.is_zero()) return HLaurent(-L, K, {});
  const int vn = num.valuation(), vd = den.valuation();
  const int pole = vd - vn;
  if (pole > L)
    throw Error(ErrorKind::WindowTooSmall, "pole of order " + std::to_string(pole) + " exceeds window L = " +
                                               std::to_string(L));
  // num/den = h^{-pole} * num' / den' with den'(0) != 0
  const std::vector<Rational> s = series_quotient(drop_low(num, vn), drop_low(den, vd), K + pole);
  std::vector<Rational> out(static_cast<std::size_t>(L - pole));
  out.insert(out.end(), s.begin(), s.end());
  return HLaurent(-L, K, std::move(out));
}

HLaurent laurent_at_zero(const RatFunc& f, int L, int K) { return laurent_of_quotient(f.num(), f.den(), L, K); }

HLaurent laurent_at(const RatFunc& f, const Rational& a, int L, int K) {
  return laurent_at_zero(a == 0 ? f : shift(f, a), L, K);
}

std::string to_string(const HLaurent& f, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.stored().size(); ++i) {
    const Rational& c = f.stored()[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    const int k = f.low() + static_cast<int>(i);
    os << to_string(c);
    if (k != 0) os << "*" << var << "^" << k;
  }
  if (first) os << "0";
  if (!f.exact()) os << " + O(" << var << "^" << f.high() + 1 << ")";
  return os.str();
}

LaurentUSeries::LaurentUSeries(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, HLaurent());
}

LaurentUSeries::LaurentUSeries(std::vector<HLaurent> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "LaurentUSeries needs at least one coefficient");
}

LaurentUSeries LaurentUSeries::from_qseries(const QSeries& c) {
  std::vector<HLaurent> out;
  for (int d = 0; d <= c.order(); ++d) out.push_back(HLaurent::constant(c[d]));
  return LaurentUSeries(std::move(out));
}

const HLaurent& LaurentUSeries::operator[](int d) const {
  if (d < 0 || d > order())
    throw Error(ErrorKind::OutOfTruncation,
                "coefficient of degree " + std::to_string(d) + " beyond truncation " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(d)];
}

HLaurent& LaurentUSeries::operator[](int d) {
  if (d < 0 || d > order())
    throw Error(ErrorKind::OutOfTruncation,
                "coefficient of degree " + std::to_string(d) + " beyond truncation " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(d)];
}

QSeries LaurentUSeries::h_coefficient(int k) const {
  QSeries out(order());
  for (int d = 0; d <= order(); ++d) out[d] = coeffs_[d].coefficient(k);
  return out;
}

LaurentUSeries operator+(const LaurentUSeries& a, const LaurentUSeries& b) {
  const int D = std::min(a.order(), b.order());
  std::vector<HLaurent> out;
  for (int d = 0; d <= D; ++d) out.push_back(a[d] + b[d]);
  return LaurentUSeries(std::move(out));
}

LaurentUSeries operator-(const LaurentUSeries& a, const LaurentUSeries& b) {
  const int D = std::min(a.order(), b.order());
  std::vector<HLaurent> out;
  for (int d = 0; d <= D; ++d) out.push_back(a[d] - b[d]);
  return LaurentUSeries(std::move(out));
}

namespace {

bool is_exact_zero(const HLaurent& h) { return h.exact() && h.stored().empty(); }

}  // namespace

LaurentUSeries operator*(const LaurentUSeries& a, const LaurentUSeries& b) {
  const int D = std::min(a.order(), b.order());
  std::vector<HLaurent> out;
  for (int d = 0; d <= D; ++d) {
    HLaurent acc;
    bool started = false;
    for (int i = 0; i <= d; ++i) {
      if (is_exact_zero(a[i]) || is_exact_zero(b[d - i])) continue;
      HLaurent term = a[i] * b[d - i];
      acc = started ? acc + term : term;
      started = true;
    }
    out.push_back(started ? acc : HLaurent());
  }
  return LaurentUSeries(std::move(out));
}

LaurentUSeries operator*(const QSeries& s, const LaurentUSeries& a) {
  return LaurentUSeries::from_qseries(s) * a;
}

LaurentUSeries operator*(const HLaurent& c, const LaurentUSeries& a) {
  std::vector<HLaurent> out;
  for (int d = 0; d <= a.order(); ++d) out.push_back(c * a[d]);
  return LaurentUSeries(std::move(out));
}

LaurentUSeries shift_power(const LaurentUSeries& a, int k) {
  std::vector<HLaurent> out;
  for (int d = 0; d <= a.order(); ++d) out.push_back(shift_power(a[d], k));
  return LaurentUSeries(std::move(out));
}

LaurentUSeries log(const LaurentUSeries& f) {
  if (!(f[0] == HLaurent::constant(1)))
    throw Error(ErrorKind::BadConstantTerm, "log needs q^0 coefficient exactly 1, got " + to_string(f[0]));
  const int D = f.order();
  LaurentUSeries out(D);
  // d L_d = d f_d - sum_{k<d} k L_k f_{d-k}
  for (int d = 1; d <= D; ++d) {
    HLaurent acc = Rational(d) * f[d];
    for (int k = 1; k < d; ++k) {
      if (is_exact_zero(out[k]) || is_exact_zero(f[d - k])) continue;
      acc = acc - Rational(k) * (out[k] * f[d - k]);
    }
    out[d] = make_rational(1, d) * acc;
  }
  return out;
}

LaurentUSeries exp(const LaurentUSeries& f) {
  if (!is_exact_zero(f[0]) && !(f[0] == HLaurent::constant(0) && f[0].exact()))
    throw Error(ErrorKind::BadConstantTerm, "exp needs q^0 coefficient exactly 0, got " + to_string(f[0]));
  const int D = f.order();
  LaurentUSeries out(D);
  out[0] = HLaurent::constant(1);
  // d E_d = sum_{k=1}^{d} k f_k E_{d-k}
  for (int d = 1; d <= D; ++d) {
    HLaurent acc;
    bool started = false;
    for (int k = 1; k <= d; ++k) {
      if (is_exact_zero(f[k]) || is_exact_zero(out[d - k])) continue;
      HLaurent term = Rational(k) * (f[k] * out[d - k]);
      acc = started ? acc + term : term;
      started = true;
    }
    out[d] = started ? make_rational(1, d) * acc : HLaurent();
  }
  return out;
}

}  // namespace hypergw

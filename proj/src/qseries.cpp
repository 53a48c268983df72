#include "hypergw/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "hypergw/error.hpp"

namespace hypergw {

namespace {

void require_order(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
}

}  // namespace

QSeries::QSeries(int order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "a series needs at least one coefficient");
}

QSeries QSeries::constant(const Rational& c, int order) {
  QSeries out(order);
  out.coeffs_[0] = c;
  return out;
}

QSeries QSeries::monomial(int degree, const Rational& c, int order) {
  QSeries out(order);
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  if (degree <= order) out.coeffs_[static_cast<std::size_t>(degree)] = c;
  return out;
}

const Rational& QSeries::operator[](int d) const {
  if (d < 0 || d > order())
    throw Error(ErrorKind::OutOfTruncation,
                "coefficient q^" + std::to_string(d) + " of a series truncated at " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(d)];
}

Rational& QSeries::operator[](int d) {
  if (d < 0 || d > order())
    throw Error(ErrorKind::OutOfTruncation,
                "coefficient q^" + std::to_string(d) + " of a series truncated at " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(d)];
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

int QSeries::valuation() const {
  for (int d = 0; d <= order(); ++d)
    if (coeffs_[static_cast<std::size_t>(d)] != 0) return d;
  return order() + 1;
}

QSeries QSeries::truncated(int new_order) const {
  require_order(new_order);
  if (new_order > order())
    throw Error(ErrorKind::TruncationMismatch, "requested order " + std::to_string(new_order) +
                                                   " exceeds available " + std::to_string(order()));
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

QSeries& QSeries::operator+=(const QSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries operator-(const QSeries& a) {
  QSeries out = a;
  out *= Rational(-1);
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries out = a;
  out += b;
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries out = a;
  out -= b;
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order(), b.order());
  QSeries out(order);
  auto ac = a.coefficients();
  auto bc = b.coefficients();
  Rational tmp;
  for (int i = 0; i <= order; ++i) {
    if (ac[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (bc[j] == 0) continue;
      tmp = ac[i] * bc[j];
      out[i + j] += tmp;
    }
  }
  return out;
}

QSeries operator*(const Rational& c, const QSeries& a) {
  QSeries out = a;
  out *= c;
  return out;
}

QSeries operator*(const QSeries& a, const Rational& c) { return c * a; }

QSeries inverse(const QSeries& a) {
  if (a[0] == 0) throw Error(ErrorKind::DivByNonUnit, "series with zero constant term is not invertible");
  const int order = a.order();
  QSeries out(order);
  const Rational inv0 = 1 / a[0];
  out[0] = inv0;
  Rational acc;
  for (int m = 1; m <= order; ++m) {
    acc = 0;
    for (int j = 1; j <= m; ++j)
      if (a[j] != 0) acc += a[j] * out[m - j];
    out[m] = -acc * inv0;
  }
  return out;
}

QSeries operator/(const QSeries& a, const QSeries& b) {
  if (b[0] == 0) throw Error(ErrorKind::DivByNonUnit, "division by a series with zero constant term");
  const int order = std::min(a.order(), b.order());
  QSeries out(order);
  const Rational inv0 = 1 / b[0];
  Rational acc;
  for (int m = 0; m <= order; ++m) {
    acc = a[m];
    for (int j = 1; j <= m; ++j)
      if (b[j] != 0) acc -= b[j] * out[m - j];
    out[m] = acc * inv0;
  }
  return out;
}

QSeries exp(const QSeries& f) {
  if (f[0] != 0) throw Error(ErrorKind::BadConstantTerm, "exp needs zero constant term, got " + to_string(f[0]));
  const int order = f.order();
  QSeries out(order);
  out[0] = 1;
  // d E_d = sum_{k=1}^{d} k f_k E_{d-k}
  Rational acc;
  for (int d = 1; d <= order; ++d) {
    acc = 0;
    for (int k = 1; k <= d; ++k)
      if (f[k] != 0) acc += k * f[k] * out[d - k];
    out[d] = acc / d;
  }
  return out;
}

QSeries log(const QSeries& f) {
  if (f[0] != 1) throw Error(ErrorKind::BadConstantTerm, "log needs constant term 1, got " + to_string(f[0]));
  const int order = f.order();
  QSeries out(order);
  // d L_d = d f_d - sum_{k=1}^{d-1} k L_k f_{d-k}
  Rational acc;
  for (int d = 1; d <= order; ++d) {
    acc = d * f[d];
    for (int k = 1; k < d; ++k)
      if (f[d - k] != 0) acc -= k * out[k] * f[d - k];
    out[d] = acc / d;
  }
  return out;
}

QSeries pow(const QSeries& f, const Rational& r) {
  if (f[0] != 1) throw Error(ErrorKind::BadConstantTerm, "pow needs constant term 1, got " + to_string(f[0]));
  return exp(r * log(f));
}

QSeries derivative(const QSeries& f) {
  QSeries out = f;
  for (int d = 0; d <= out.order(); ++d) out[d] *= d;
  return out;
}

QSeries primitive(const QSeries& f) {
  if (f[0] != 0)
    throw Error(ErrorKind::BadConstantTerm, "primitive needs zero constant term, got " + to_string(f[0]));
  QSeries out = f;
  for (int d = 1; d <= out.order(); ++d) out[d] /= d;
  return out;
}

QSeries compose(const QSeries& f, const QSeries& g) {
  if (g[0] != 0) throw Error(ErrorKind::BadConstantTerm, "inner series of a composition needs g(0) = 0");
  const int order = std::min(f.order(), g.order());
  // Horner: f_0 + g (f_1 + g (f_2 + ...)); each pass gains one degree of g-valuation.
  QSeries out = QSeries::constant(f[order], order);
  for (int k = order - 1; k >= 0; --k) {
    out = out * g;
    out[0] += f[k];
  }
  return out;
}

QSeries shift(const QSeries& f, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative shift");
  QSeries out(f.order());
  for (int d = 0; d + k <= f.order(); ++d) out[d + k] = f[d];
  return out;
}

std::optional<int> first_difference(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order(), b.order());
  for (int d = 0; d <= order; ++d)
    if (a[d] != b[d]) return d;
  return std::nullopt;
}

namespace {

// q(Q) with Q = q exp(g(q)).
QSeries reverse_mirror(const QSeries& g) {
  if (g[0] != 0) throw Error(ErrorKind::BadMirrorMap, "mirror map needs g(0) = 0, got " + to_string(g[0]));
  const int order = g.order();
  QSeries q = QSeries::monomial(1, 1, order);
  // After pass k the coefficients through degree k+1 are final.
  for (int pass = 0; pass < order; ++pass) {
    QSeries next = shift(exp(-compose(g, q)), 1);
    if (next == q) break;
    q = std::move(next);
  }
  return q;
}

}  // namespace

QSeries change_variable_expT(const QSeries& f, const QSeries& g) {
  const int order = std::min(f.order(), g.order());
  return compose(f.truncated(order), reverse_mirror(g.truncated(order)));
}

QSeries inverse_mirror(const QSeries& g) {
  // q = Q exp(-g(q(Q)))  =>  g'(Q) = -g(q(Q)).
  return -compose(g, reverse_mirror(g));
}

std::string to_string(const QSeries& f, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= f.order(); ++d) {
    if (f[d] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(f[d]);
    if (d > 0) os << "*" << var << "^" << d;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << f.order() + 1 << ")";
  return os.str();
}

}  // namespace hypergw

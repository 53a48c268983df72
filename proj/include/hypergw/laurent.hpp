#pragma once

#include <climits>
#include <string>
#include <vector>

#include "hypergw/qseries.hpp"
#include "hypergw/ratfunc.hpp"

namespace hypergw {

/// Window [low, high] of a Laurent expansion in h at a point.
///
/// Everything below low is known to vanish; everything in the window is exact;
/// nothing above high is known. Stored coefficients may stop before high, in
/// which case the remaining window entries are zero. A finite Laurent
/// polynomial uses high = kExact.
class HLaurent {
 public:
  static constexpr int kExact = INT_MAX / 4;

  HLaurent() : low_(0), high_(kExact) {}
  HLaurent(int low, int high, std::vector<Rational> coeffs);

  static HLaurent constant(const Rational& c);
  static HLaurent monomial(int power, const Rational& c = 1);

  int low() const noexcept { return low_; }
  int high() const noexcept { return high_; }
  bool exact() const noexcept { return high_ >= kExact; }

  /// Coefficient of h^k; zero below the window, WindowTooSmall above it.
  Rational coefficient(int k) const;
  Rational residue() const { return coefficient(-1); }
  const std::vector<Rational>& stored() const noexcept { return coeffs_; }

  /// Largest m with a nonzero h^{-m} coefficient, 0 if none.
  int pole_order() const;

  /// Same expansion with the upper end of the window lowered to high.
  HLaurent truncated(int high) const;

  friend bool operator==(const HLaurent& a, const HLaurent& b);

 private:
  void trim();
  int low_;
  int high_;
  std::vector<Rational> coeffs_;  // powers low_, low_+1, ...
};

HLaurent operator-(const HLaurent& a);
HLaurent operator+(const HLaurent& a, const HLaurent& b);
HLaurent operator-(const HLaurent& a, const HLaurent& b);
HLaurent operator*(const HLaurent& a, const HLaurent& b);
HLaurent operator*(const Rational& c, const HLaurent& a);
/// Multiplication by h^k.
HLaurent shift_power(const HLaurent& a, int k);

/// Laurent expansion of f at 0 on the window [-L, K].
HLaurent laurent_at_zero(const RatFunc& f, int L, int K);
/// Same for an unreduced quotient num/den of polynomials.
HLaurent laurent_of_quotient(const Poly& num, const Poly& den, int L, int K);
/// Laurent expansion of f at h = a, in powers of (h - a).
HLaurent laurent_at(const RatFunc& f, const Rational& a, int L, int K);

std::string to_string(const HLaurent& f, const std::string& var = "h");

/// Power series in q whose coefficients are HLaurent windows in h.
class LaurentUSeries {
 public:
  explicit LaurentUSeries(int order);
  explicit LaurentUSeries(std::vector<HLaurent> coeffs);

  /// The q-series c(q) as an h-constant.
  static LaurentUSeries from_qseries(const QSeries& c);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const HLaurent& operator[](int d) const;
  HLaurent& operator[](int d);

  /// The q-series of h^k coefficients.
  QSeries h_coefficient(int k) const;
  QSeries residue() const { return h_coefficient(-1); }

 private:
  std::vector<HLaurent> coeffs_;
};

LaurentUSeries operator+(const LaurentUSeries& a, const LaurentUSeries& b);
LaurentUSeries operator-(const LaurentUSeries& a, const LaurentUSeries& b);
LaurentUSeries operator*(const LaurentUSeries& a, const LaurentUSeries& b);
LaurentUSeries operator*(const QSeries& s, const LaurentUSeries& a);
LaurentUSeries operator*(const HLaurent& c, const LaurentUSeries& a);
LaurentUSeries shift_power(const LaurentUSeries& a, int k);

/// log requires the q^0 coefficient to be exactly 1; exp requires it to be 0.
LaurentUSeries log(const LaurentUSeries& f);
LaurentUSeries exp(const LaurentUSeries& f);

}  // namespace hypergw

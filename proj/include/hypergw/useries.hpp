#pragma once

#include <vector>

#include "hypergw/laurent.hpp"
#include "hypergw/qseries.hpp"
#include "hypergw/ratfunc.hpp"

namespace hypergw {

/// Truncated power series in u (or q) with rational functions of h as
/// coefficients.
class USeriesRF {
 public:
  explicit USeriesRF(int order);
  explicit USeriesRF(std::vector<RatFunc> coeffs);

  /// Same as the vector constructor, but rejects a nonzero u^0 coefficient
  /// with NonzeroConstant.
  static USeriesRF without_constant(std::vector<RatFunc> coeffs);
  static USeriesRF from_qseries(const QSeries& c);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const RatFunc& operator[](int d) const;
  RatFunc& operator[](int d);

  /// Laurent windows at h = 0: degree d gets [-pole_bound(d), top - d].
  LaurentUSeries laurent_at_zero(int top) const;

  friend bool operator==(const USeriesRF& a, const USeriesRF& b) = default;

 private:
  std::vector<RatFunc> coeffs_;
};

USeriesRF operator+(const USeriesRF& a, const USeriesRF& b);
USeriesRF operator-(const USeriesRF& a, const USeriesRF& b);
USeriesRF operator*(const USeriesRF& a, const USeriesRF& b);
USeriesRF operator*(const QSeries& s, const USeriesRF& a);
USeriesRF operator*(const RatFunc& c, const USeriesRF& a);

/// u d/du: the degree-d coefficient is multiplied by d.
USeriesRF u_derivative(const USeriesRF& a);

}  // namespace hypergw

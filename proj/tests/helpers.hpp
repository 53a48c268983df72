#pragma once

#include <random>
#include <string>
#include <vector>

#include "hypergw/qseries.hpp"
#include "hypergw/rational.hpp"

namespace testing_support {

using hypergw::QSeries;
using hypergw::Rational;

inline Rational R(long p, long q = 1) { return hypergw::make_rational(p, q); }
inline Rational RS(const char* text) { return hypergw::parse_rational(text); }

inline QSeries series(std::initializer_list<Rational> c) { return QSeries(std::vector<Rational>(c)); }

inline Rational random_rational(std::mt19937& rng, int height = 9) {
  std::uniform_int_distribution<int> num(-height, height), den(1, height);
  return hypergw::make_rational(num(rng), den(rng));
}

inline QSeries random_series(std::mt19937& rng, int order, int height = 9) {
  QSeries out(order);
  for (int d = 0; d <= order; ++d) out[d] = random_rational(rng, height);
  return out;
}

}  // namespace testing_support

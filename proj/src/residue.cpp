#include "hypergw/residue.hpp"

#include <functional>

#include "hypergw/error.hpp"
#include "hypergw/wseries.hpp"

namespace hypergw {

int pole_order_at(const RatFunc& f, const Rational& a) {
  if (f.is_zero() || f.den().degree() == 0) return 0;
  return (a == 0 ? f.den() : taylor_shift(f.den(), a)).valuation();
}

Rational residue_at(const RatFunc& f, const Rational& a) {
  const int p = pole_order_at(f, a);
  if (p == 0) return 0;
  return laurent_at(f, a, p, -1).coefficient(-1);
}

Rational residue_at_infinity(const RatFunc& f) {
  const RatFunc w = RatFunc::variable();
  return -residue_at(invert_variable(f) / (w * w), 0);
}

namespace {

// Windows wide enough that every coefficient the checks below touch is known.
int laurent_top(int order) { return 2 * order + 2; }

RatFunc over_h_power(const Rational& c, int k) {
  return RatFunc(Poly(c), Poly::monomial(k));
}

QSeries power_over_factorial(const QSeries& x, int p) {
  QSeries out = QSeries::constant(1, x.order());
  for (int i = 0; i < p; ++i) out = out * x;
  return make_rational(1, 1) / Rational(factorial(static_cast<unsigned long>(p))) * out;
}

void require_no_constant(const USeriesRF& Z) {
  if (!Z[0].is_zero())
    throw Error(ErrorKind::NonzeroConstant, "series has u^0 coefficient " + to_string(Z[0]));
}

// X(s) = sum_k (-1)^k / k! Ctil_{k-1}(u) s^k as a w-series with w = s.
WSeries residue_generating_series(const LaurentUSeries& LZ, int D) {
  WSeries X(D, D);
  for (int k = 0; k <= D; ++k) {
    const Rational c = make_rational(k % 2 == 0 ? 1 : -1, 1) / Rational(factorial(static_cast<unsigned long>(k)));
    X[k] = c * LZ.h_coefficient(k - 1);
  }
  return X;
}

}  // namespace

QSeries Regularization::zbar_at_zero() const {
  if (!regular) throw Error(ErrorKind::NotRegularizable, "Zbar is not regular at h = 0");
  QSeries out(zbar.order());
  for (int d = 0; d <= zbar.order(); ++d) out[d] = zbar[d](0);
  return out;
}

Regularization regularize(const USeriesRF& Z) {
  require_no_constant(Z);
  const int D = Z.order();
  const LaurentUSeries LZ = Z.laurent_at_zero(laurent_top(D));

  // eta_0 = Ctil_{-1}; eta_p = sum_{q<=p} (-eta_{p-1})^q / q! Ctil_{q-1}.
  // Each pass fixes one more u-degree.
  Regularization out{QSeries(D), QSeries(D), USeriesRF(D), false};
  QSeries eta = LZ.h_coefficient(-1);
  for (int p = 1; p <= D + 1; ++p) {
    QSeries next(D);
    for (int q = 0; q <= std::min(p, D); ++q) next += power_over_factorial(-eta, q) * LZ.h_coefficient(q - 1);
    eta = next;
  }
  out.eta = eta;

  LaurentUSeries one_plus = LZ;
  one_plus[0] = HLaurent::constant(1);
  out.eta_from_log = log(one_plus).residue();

  // exp(-eta/h) with rational-function coefficients: d E_d = sum k f_k E_{d-k}
  USeriesRF E(D);
  E[0] = RatFunc(1);
  for (int d = 1; d <= D; ++d) {
    RatFunc acc;
    for (int k = 1; k <= d; ++k) {
      if (eta[k] == 0 || E[d - k].is_zero()) continue;
      acc = acc + Rational(k) * over_h_power(-eta[k], 1) * E[d - k];
    }
    E[d] = make_rational(1, d) * acc;
  }
  USeriesRF zp = Z;
  zp[0] = RatFunc(1);
  out.zbar = E * zp;
  out.zbar[0] = out.zbar[0] - RatFunc(1);
  out.regular = true;
  for (int d = 0; d <= D; ++d)
    if (!out.zbar[d].regular_at_zero()) out.regular = false;
  // Res log(1+Z) = eta + Res log(1+Zbar), so the two agree whenever Zbar is regular.
  if (out.regular && out.eta != out.eta_from_log)
    throw Error(ErrorKind::Internal, "fixed-point eta " + to_string(out.eta, "u") + " differs from Res log(1+Z) " +
                                         to_string(out.eta_from_log, "u"));
  return out;
}

IdentityReport check_lemma_2_2(const USeriesRF& Z, int a, Lemma22Form which) {
  require_no_constant(Z);
  if (a < 0) throw Error(ErrorKind::InvalidArgument, "a must be nonnegative");
  const int D = Z.order();
  const LaurentUSeries LZ = Z.laurent_at_zero(laurent_top(D));
  const WSeries X = residue_generating_series(LZ, D);

  // powers[m] = X^m; X has no u^0 part so X^m vanishes past m = D.
  std::vector<WSeries> powers;
  WSeries one(D, D);
  one[0] = QSeries::constant(1, D);
  powers.push_back(one);
  for (int m = 1; m <= D; ++m) powers.push_back(powers.back() * X);

  QSeries lhs(D), rhs(D);
  std::string name;
  if (which == Lemma22Form::Eq23) {
    name = "lemma 2.2 (2.3)";
    for (int m = 2; m <= D; ++m) {
      const int k = m - 2 - a;
      if (k < 0) continue;
      lhs += make_rational(1, static_cast<long>(m) * (m - 1)) * powers[m][k];
    }
    rhs = Rational(factorial(static_cast<unsigned long>(a))) * LZ.h_coefficient(-a - 2);
  } else {
    name = "lemma 2.2 (2.4)";
    const Regularization reg = regularize(Z);
    if (!reg.regular) throw Error(ErrorKind::NotRegularizable, "(2.4) needs a regularizable series");
    for (int m = 0; m <= D; ++m) {
      const int k = m - a;
      if (k < 0 || k > D) continue;
      lhs += powers[m][k];
    }
    QSeries eta_a = QSeries::constant(1, D);
    for (int i = 0; i < a; ++i) eta_a = eta_a * reg.eta;
    QSeries denom = reg.zbar_at_zero();
    denom[0] += 1;
    rhs = eta_a / denom;
  }
  IdentityReport report(name, {{"a", std::to_string(a)}}, D);
  report.expect_equal(lhs, rhs, "u-series");
  return report;
}

IdentityReport check_eq_2_6(const USeriesRF& Z, int a) {
  const int D = Z.order();
  const Regularization reg = regularize(Z);
  if (!reg.regular) throw Error(ErrorKind::NotRegularizable, "(2.6) needs a regularizable series");
  const LaurentUSeries LZ = Z.laurent_at_zero(laurent_top(D));
  const LaurentUSeries LB = reg.zbar.laurent_at_zero(laurent_top(D));
  const QSeries lhs = LZ.h_coefficient(-a - 1);
  QSeries rhs(D);
  for (int q = std::max(0, -1 - a); q + 1 + a <= D; ++q)
    rhs += power_over_factorial(reg.eta, q + 1 + a) * LB.h_coefficient(q);
  if (a >= 0) rhs += power_over_factorial(reg.eta, a + 1);
  IdentityReport report("(2.6)", {{"a", std::to_string(a)}}, D);
  report.expect_equal(lhs, rhs, "u-series");
  return report;
}

IdentityReport lemma_2_4_check(const std::vector<RatFunc>& fs) {
  const int N = static_cast<int>(fs.size());
  const RatFunc lam = RatFunc::variable();
  std::vector<Rational> r;
  std::vector<HLaurent> g;
  RatFunc product(1);
  for (int e = 0; e < N; ++e) {
    const int p = fs[e].pole_order_at_zero();
    if (p > 1) throw Error(ErrorKind::PoleTooHigh, "function " + std::to_string(e) + " has a pole of order " +
                                                       std::to_string(p) + " at 0");
    r.push_back(residue_at(fs[e], 0));
    g.push_back(laurent_at_zero(fs[e] - RatFunc(r.back()) / lam, 0, N));
    product = product * fs[e];
  }
  const Rational lhs = residue_at(product, 0);
  Rational rhs = 0;
  for (unsigned mask = 1; mask < (1u << N); ++mask) {
    Rational weight = 1;
    HLaurent rest = HLaurent::constant(1);
    int size = 0;
    for (int e = 0; e < N; ++e) {
      if (mask & (1u << e)) {
        weight *= r[e];
        ++size;
      } else {
        rest = rest * g[e];
      }
    }
    if (weight != 0) rhs += weight * rest.coefficient(size - 1);
  }
  IdentityReport report("lemma 2.4", {{"functions", std::to_string(N)}}, 0);
  report.expect(lhs == rhs, "residue " + to_string(lhs) + " vs subset sum " + to_string(rhs));
  return report;
}

IdentityReport appendix_a1(int b, const std::vector<int>& qs) {
  if (b < 0) throw Error(ErrorKind::InvalidArgument, "b must be nonnegative");
  long total = 0;
  for (int q : qs) {
    if (q < 0) throw Error(ErrorKind::InvalidArgument, "q entries must be nonnegative");
    total += q;
  }
  Integer lhs = 0;
  std::function<void(std::size_t, int, Integer)> walk = [&](std::size_t i, int left, Integer acc) {
    if (i == qs.size()) {
      if (left == 0) lhs += acc;
      return;
    }
    for (int beta = 0; beta <= left; ++beta) walk(i + 1, left - beta, acc * binomial(qs[i], beta));
  };
  walk(0, b, Integer(1));
  const Integer rhs = binomial(total, b);
  std::string tuple;
  for (std::size_t i = 0; i < qs.size(); ++i) tuple += (i ? "," : "") + std::to_string(qs[i]);
  IdentityReport report("(A.1)", {{"b", std::to_string(b)}, {"q", "(" + tuple + ")"}}, 0);
  report.expect(lhs == rhs, lhs.get_str() + " vs " + rhs.get_str());
  return report;
}

IdentityReport appendix_a2(int q, int a) {
  if (q < 0 || a < 1) throw Error(ErrorKind::InvalidArgument, "(A.2) needs q >= 0 and a >= 1");
  Rational lhs = 0;
  for (int b = 0; b <= q; ++b) lhs += Rational((b % 2 ? -1 : 1) * binomial(q, b)) / (a + b);
  const Rational rhs = Rational(factorial(a - 1) * factorial(q)) / Rational(factorial(a + q));
  IdentityReport report("(A.2)", {{"q", std::to_string(q)}, {"a", std::to_string(a)}}, 0);
  report.expect(lhs == rhs, to_string(lhs) + " vs " + to_string(rhs));
  return report;
}

IdentityReport appendix_a3(int q, int a, int s) {
  if (q < 0 || a < 0 || s < 0) throw Error(ErrorKind::InvalidArgument, "(A.3) needs nonnegative arguments");
  Integer lhs = 0;
  for (int b = 0; b <= q; ++b) {
    Integer prod = 1;
    for (int r = a - s + 1; r <= a; ++r) prod *= r + b;
    lhs += (b % 2 ? -1 : 1) * binomial(q, b) * prod;
  }
  const Integer rhs = (q % 2 ? -1 : 1) * factorial(s) * binomial(a, s - q);
  IdentityReport report("(A.3)", {{"q", std::to_string(q)}, {"a", std::to_string(a)}, {"s", std::to_string(s)}}, 0);
  report.expect(lhs == rhs, lhs.get_str() + " vs " + rhs.get_str());
  return report;
}

}  // namespace hypergw

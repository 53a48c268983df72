#include "hypergw/hypergeometric.hpp"

#include "hypergw/error.hpp"

namespace hypergw {

HyperSpec HyperSpec::make(int n, int D, int W) {
  HyperSpec spec{n, D, W < 0 ? n + 2 : W};
  spec.validate();
  return spec;
}

void HyperSpec::validate() const {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  if (D < 1) throw Error(ErrorKind::InvalidArgument, "q-truncation must be at least 1");
  if (W < n) throw Error(ErrorKind::InvalidArgument, "w-truncation must be at least n");
}

namespace {

QSeries one_minus_nn_q(const HyperSpec& spec) {
  Integer nn;
  mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(spec.n), static_cast<unsigned long>(spec.n));
  QSeries out = QSeries::constant(1, spec.D);
  out[1] = -Rational(nn);
  return out;
}

// Truncated product helper for w-series stored as QSeries.
QSeries linear(const Rational& c0, const Rational& c1, int order) {
  QSeries out(order);
  out[0] = c0;
  if (order >= 1) out[1] = c1;
  return out;
}

Poly power_of_linear(const Rational& c0, const Rational& c1, int n) {
  Poly out(Rational(1));
  const Poly lin(std::vector<Rational>{c0, c1});
  for (int i = 0; i < n; ++i) out = out * lin;
  return out;
}

Poly factor_hbar(int n, int r) { return power_of_linear(1, r, n) - Poly(Rational(1)); }

// Products of the denominator factors (1 + r h)^n - 1 for r in (a, b].
class DenominatorFactors {
 public:
  DenominatorFactors(int n, int D) {
    for (int r = 1; r <= D; ++r) fac_.push_back(factor_hbar(n, r));
  }
  Poly ratio(int a, int b) const {
    Poly out(Rational(1));
    for (int r = a + 1; r <= b; ++r) out = out * fac_[r - 1];
    return out;
  }
  Poly full(int d) const { return ratio(0, d); }

 private:
  std::vector<Poly> fac_;
};

// Series sum_d q^d num_d(h) / Den_d(h) with Den_d = prod_{r<=d} ((1+rh)^n - 1).
struct CommonDenSeries {
  std::vector<Poly> num;
};

CommonDenSeries kernel_common(const HyperSpec& spec) {
  CommonDenSeries out;
  for (int d = 0; d <= spec.D; ++d) out.num.push_back(kernel_num_hbar(spec.n, d));
  return out;
}

CommonDenSeries scale(const CommonDenSeries& a, const QSeries& s, const DenominatorFactors& dens) {
  const int D = static_cast<int>(a.num.size()) - 1;
  CommonDenSeries out;
  for (int d = 0; d <= D; ++d) {
    Poly acc;
    for (int j = 0; j <= d; ++j) {
      if (s[d - j] == 0 || a.num[j].is_zero()) continue;
      acc = acc + s[d - j] * (a.num[j] * dens.ratio(j, d));
    }
    out.num.push_back(acc);
  }
  return out;
}

// (1 + h q d/dq) applied degreewise.
CommonDenSeries raise(const CommonDenSeries& a) {
  CommonDenSeries out;
  for (std::size_t d = 0; d < a.num.size(); ++d)
    out.num.push_back(a.num[d] * Poly(std::vector<Rational>{1, Rational(static_cast<long>(d))}));
  return out;
}

CommonDenSeries y_common(const HyperSpec& spec, int p, const ITable& tab, const DenominatorFactors& dens) {
  CommonDenSeries y = scale(kernel_common(spec), inverse(tab.diagonal(0)), dens);
  for (int j = 1; j <= p; ++j) y = scale(raise(y), inverse(tab.diagonal(j)), dens);
  return y;
}

LaurentUSeries common_laurent(const CommonDenSeries& s, const DenominatorFactors& dens, const Rational& at, int top) {
  std::vector<HLaurent> out;
  for (std::size_t d = 0; d < s.num.size(); ++d) {
    Poly num = s.num[d], den = dens.full(static_cast<int>(d));
    if (at != 0) {
      num = taylor_shift(num, at);
      den = taylor_shift(den, at);
    }
    if (den.degree() == 0) {
      // polynomial coefficient: keep it exact
      std::vector<Rational> c;
      for (int k = 0; k <= std::max(num.degree(), 0); ++k) c.push_back(num.coefficient(k) / den.coefficient(0));
      out.emplace_back(0, HLaurent::kExact, std::move(c));
      continue;
    }
    const int pole = num.is_zero() ? 0 : std::max(0, den.valuation() - num.valuation());
    out.push_back(laurent_of_quotient(num, den, pole, top - static_cast<int>(d)));
  }
  return LaurentUSeries(std::move(out));
}

std::string degree_label(int d) { return "q^" + std::to_string(d); }

}  // namespace

WSeries build_F(const HyperSpec& spec) {
  spec.validate();
  const int n = spec.n, W = spec.W;
  WSeries F(W, spec.D);
  QSeries num = QSeries::constant(1, W), den = QSeries::constant(1, W);
  for (int d = 0; d <= spec.D; ++d) {
    if (d > 0) {
      for (int r = n * (d - 1) + 1; r <= n * d; ++r) num = num * linear(r, n, W);
      // (w + d)^n - w^n, truncated in w
      QSeries fac(W);
      for (int j = 0; j <= std::min(n - 1, W); ++j) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n - j));
        fac[j] = Rational(binomial(n, j) * p);
      }
      den = den * fac;
    }
    const QSeries Fd = num / den;
    for (int k = 0; k <= W; ++k) F[k][d] = Fd[k];
  }
  return F;
}

ITable::ITable(const HyperSpec& spec, int kmax) {
  spec.validate();
  kmax_ = kmax < 0 ? std::min(spec.W, std::max(1, spec.n - 1)) : kmax;
  if (kmax_ > spec.W) throw Error(ErrorKind::InvalidArgument, "I-table needs k <= W");
  const WSeries F = build_F(spec);
  rows_.resize(static_cast<std::size_t>(kmax_) + 1);
  for (int k = 0; k <= kmax_; ++k) {
    std::vector<QSeries> coeffs;
    for (int j = 0; j <= k; ++j) coeffs.push_back(Rational(1) / Rational(factorial(j)) * F[k - j]);
    rows_[0].push_back(TPoly(coeffs));
  }
  diag_.push_back(rows_[0][0].t_free_part());
  for (int p = 1; p <= kmax_; ++p) {
    for (int k = p; k <= kmax_; ++k) rows_[p].push_back((rows_[p - 1][k - p + 1] / diag_[p - 1]).d_dt());
    diag_.push_back(rows_[p][0].t_free_part());
  }
}

const TPoly& ITable::I(int p, int k) const {
  if (p < 0 || p > k || k > kmax_)
    throw Error(ErrorKind::InvalidArgument,
                "I_{" + std::to_string(p) + "," + std::to_string(k) + "} outside the computed table");
  return rows_[p][k - p];
}

const QSeries& ITable::diagonal(int p) const {
  if (p < 0 || p > kmax_) throw Error(ErrorKind::InvalidArgument, "diagonal index outside the computed table");
  return diag_[p];
}

TPoly I_series(const HyperSpec& spec, int p, int k) { return ITable(spec, k).I(p, k); }

QSeries mirror_map(const HyperSpec& spec) {
  const ITable tab(spec, 1);
  return (tab.I(0, 1) / tab.diagonal(0) - TPoly::t(spec.D)).t_free_part();
}

QSeries phi0(const HyperSpec& spec) { return pow(one_minus_nn_q(spec), make_rational(-1, spec.n)); }

QSeries phi1(const HyperSpec& spec) {
  const long n = spec.n;
  return make_rational((n - 2) * (n + 1), 24 * n) * (phi0(spec) - inverse(one_minus_nn_q(spec)));
}

QSeries L_series(const HyperSpec& spec) { return pow(one_minus_nn_q(spec), make_rational(1, spec.n)); }

QSeries mu(const HyperSpec& spec, MuMethod method) {
  spec.validate();
  if (method == MuMethod::ClosedForm) {
    QSeries integrand = phi0(spec);
    integrand[0] -= 1;
    return primitive(integrand);
  }
  LaurentUSeries F = kernel_laurent(spec, 0, spec.D + 2);
  return log(F).residue();
}

Poly kernel_num_hbar(int n, int d) {
  Poly out(Rational(1));
  for (int r = 1; r <= n * d; ++r) out = out * Poly(std::vector<Rational>{n, r});
  return out;
}

Poly kernel_den_hbar(int n, int d) {
  Poly out(Rational(1));
  for (int r = 1; r <= d; ++r) out = out * factor_hbar(n, r);
  return out;
}

RatFunc kernel_hbar(int n, int d) { return RatFunc(kernel_num_hbar(n, d), kernel_den_hbar(n, d)); }

LaurentUSeries kernel_laurent(const HyperSpec& spec, const Rational& at, int top) {
  const DenominatorFactors dens(spec.n, spec.D);
  return common_laurent(kernel_common(spec), dens, at, top);
}

USeriesRF q_hbar_series(const HyperSpec& spec) {
  const int D = spec.D;
  const QSeries m = mu(spec, MuMethod::ClosedForm);
  // exp(-mu x) with x = 1/h, as a polynomial in x per q-degree
  WSeries M(D, D);
  M[1] = -m;
  const WSeries E = exp(M);
  const DenominatorFactors dens(spec.n, D);
  std::vector<Poly> kernel;
  for (int d = 0; d <= D; ++d) kernel.push_back(kernel_num_hbar(spec.n, d));

  std::vector<RatFunc> out;
  for (int d = 0; d <= D; ++d) {
    // common denominator h^d Den_d
    Poly num;
    for (int j = 0; j <= d; ++j) {
      Poly e;
      for (int i = 0; i <= j; ++i)
        if (E[i][j] != 0) e = e + Poly::monomial(d - i, E[i][j]);
      if (e.is_zero()) continue;
      num = num + e * kernel[d - j] * dens.ratio(d - j, d);
    }
    RatFunc c(num, Poly::monomial(d) * dens.full(d));
    if (!c.regular_at_zero())
      throw Error(ErrorKind::RegularityViolation, "coefficient of q^" + std::to_string(d) + " has a pole of order " +
                                                      std::to_string(c.pole_order_at_zero()) + " at h = 0");
    out.push_back(std::move(c));
  }
  return USeriesRF(std::move(out));
}

RatFunc q_hbar(const HyperSpec& spec, int d) {
  if (d < 0 || d > spec.D) throw Error(ErrorKind::InvalidArgument, "q-degree outside 0..D");
  HyperSpec s = spec;
  s.D = std::max(d, 1);
  return q_hbar_series(s)[d];
}

USeriesRF y_p(const HyperSpec& spec, int p) {
  if (p < 0 || p > spec.n - 1) throw Error(ErrorKind::InvalidArgument, "y_p needs 0 <= p <= n-1");
  const ITable tab(spec, std::max(p, 0));
  const DenominatorFactors dens(spec.n, spec.D);
  const CommonDenSeries y = y_common(spec, p, tab, dens);
  std::vector<RatFunc> out;
  for (int d = 0; d <= spec.D; ++d) out.emplace_back(y.num[d], dens.full(d));
  return USeriesRF(std::move(out));
}

LaurentUSeries y_p_laurent(const HyperSpec& spec, int p, const Rational& at, int top) {
  if (p < 0 || p > spec.n - 1) throw Error(ErrorKind::InvalidArgument, "y_p needs 0 <= p <= n-1");
  const ITable tab(spec, std::max(p, 0));
  const DenominatorFactors dens(spec.n, spec.D);
  return common_laurent(y_common(spec, p, tab, dens), dens, at, top);
}

IdentityReport prop31_structure(const HyperSpec& spec) {
  const int K = spec.n - 1;
  const ITable tab(spec, std::max(K, 0));
  IdentityReport rep("prop 3.1(i) structure", {{"n", std::to_string(spec.n)}}, spec.D);
  for (int p = 0; p <= K; ++p) {
    std::vector<QSeries> tilde;  // tilde[r - p]
    for (int k = p; k <= K; ++k) {
      const TPoly& I = tab.I(p, k);
      const std::string where = "I_{" + std::to_string(p) + "," + std::to_string(k) + "}";
      rep.expect(I.degree() <= k - p, where + " has t-degree " + std::to_string(I.degree()));
      for (int r = p; r <= k; ++r) {
        const QSeries c = Rational(factorial(k - r)) * I.coefficient(k - r);
        if (r == k) {
          tilde.push_back(c);
          rep.expect(c[0] == (r == p ? 1 : 0), where + ": constant term of the r=" + std::to_string(r) + " series is " +
                                                   to_string(c[0]));
        } else {
          rep.expect_equal(c, tilde[r - p], where + " decomposition series r=" + std::to_string(r));
        }
      }
    }
  }
  return rep;
}

IdentityReport diagonal_identities(const HyperSpec& spec) {
  const int n = spec.n;
  const ITable tab(spec, n - 1);
  const QSeries om = one_minus_nn_q(spec);
  const QSeries one = QSeries::constant(1, spec.D);
  const std::vector<std::pair<std::string, std::string>> params{{"n", std::to_string(n)}};

  QSeries X = one, A = one, B = one;
  for (int p = 0; p < n; ++p) {
    X = X * tab.diagonal(p);
    for (int i = 0; i < n - 1 - p; ++i) A = A * tab.diagonal(p);
    for (int i = 0; i < p; ++i) B = B * tab.diagonal(p);
  }
  IdentityReport r34("(3.4)", params, spec.D);
  r34.expect_equal(X * om, one, "product identity");
  IdentityReport r35("(3.5)", params, spec.D);
  r35.expect_equal(A * pow(om, make_rational(n - 1, 2)), one, "weighted product identity");
  IdentityReport r36("(3.6)", params, spec.D);
  for (int p = 0; p < n; ++p)
    r36.expect_equal(tab.diagonal(p), tab.diagonal(n - 1 - p), "I_" + std::to_string(p) + " vs I_" +
                                                                   std::to_string(n - 1 - p));
  // The symmetry makes the weighted product the square root of X^{n-1};
  // the product identity then forces the weighted one.
  IdentityReport rc("(3.4)+(3.6) => (3.5)", params, spec.D);
  rc.expect_equal(pow(A * B, make_rational(1, 2)), A, "symmetry gives A = sqrt(A B)");
  rc.expect_equal(pow(A * B, make_rational(1, 2)), pow(om, make_rational(-(n - 1), 2)), "sqrt(X^{n-1}) from (3.4)");
  return merge("prop 3.1(ii)", params, {r34, r35, r36, rc});
}

IdentityReport prop32_check(const HyperSpec& spec) {
  const std::vector<std::pair<std::string, std::string>> params{{"n", std::to_string(spec.n)}};
  IdentityReport rmu("mu: residue vs integral", params, spec.D);
  rmu.expect_equal(mu(spec, MuMethod::Residue), mu(spec, MuMethod::ClosedForm), "mu");
  IdentityReport rq("Q regular at h=0 with value Phi0 and slope Phi1", params, spec.D);
  try {
    const USeriesRF Q = q_hbar_series(spec);
    const QSeries p0 = phi0(spec), p1 = phi1(spec);
    for (int d = 0; d <= spec.D; ++d) {
      const HLaurent l = laurent_at_zero(Q[d], 0, 1);
      rq.expect(l.coefficient(0) == p0[d], "value at " + degree_label(d) + ": " + to_string(l.coefficient(0)) +
                                               " vs " + to_string(p0[d]));
      rq.expect(l.coefficient(1) == p1[d], "h-derivative at " + degree_label(d) + ": " +
                                               to_string(l.coefficient(1)) + " vs " + to_string(p1[d]));
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RegularityViolation) throw;
    rq.fail(e.what());
  }
  return merge("prop 3.2", params, {rmu, rq});
}

IdentityReport y1_mirror_check(const HyperSpec& spec) {
  IdentityReport rep("(3.29) Y_1", {{"n", std::to_string(spec.n)}}, spec.D);
  if (spec.n < 2) return rep;
  const USeriesRF Y = y_p(spec, 0), Y1 = y_p(spec, 1);
  // dt/dT = 1/(1 + g'), d/dT = dt/dT d/dt
  QSeries dTdt = derivative(mirror_map(spec));
  dTdt[0] += 1;
  const USeriesRF rhs = inverse(dTdt) * (Y + RatFunc::variable() * u_derivative(Y));
  for (int d = 0; d <= spec.D; ++d)
    rep.expect(rhs[d] == Y1[d], "mismatch at " + degree_label(d));
  return rep;
}

IdentityReport theta_and_3_44(const HyperSpec& spec) {
  const int n = spec.n, D = spec.D;
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "theta identities need n >= 2");
  const std::vector<std::pair<std::string, std::string>> params{{"n", std::to_string(n)}};
  const int top = 2 * D + 2;
  const ITable tab(spec, n - 1);
  const DenominatorFactors dens(n, D);

  const QSeries m = mu(spec, MuMethod::ClosedForm);
  LaurentUSeries M(D);
  for (int d = 1; d <= D; ++d) M[d] = HLaurent::monomial(-1, -m[d]);
  const LaurentUSeries E = exp(M);

  const QSeries L = L_series(spec), P1 = phi1(spec);
  std::vector<QSeries> f, dlog;
  for (int r = 0; r < n; ++r) {
    f.push_back(inverse(L * tab.diagonal(r)));
    dlog.push_back(derivative(f.back()) / f.back());
  }

  IdentityReport r42("(3.42)", params, D), r43("(3.43)", params, D), rend("Theta_{n-1}", params, D);
  std::vector<LaurentUSeries> A;
  std::vector<QSeries> th0, th1;
  QSeries prod = QSeries::constant(1, D);
  for (int p = 0; p < n; ++p) {
    A.push_back(E * common_laurent(y_common(spec, p, tab, dens), dens, 0, top));
    th0.push_back(A.back().h_coefficient(0));
    th1.push_back(A.back().h_coefficient(1));
    prod = prod * f[p];
    r42.expect_equal(th0.back(), prod, "p=" + std::to_string(p));
    QSeries inner = P1;
    for (int r = 0; r < p; ++r) inner += Rational(p - r) * dlog[r];
    r43.expect_equal(th1.back(), L * prod * inner, "p=" + std::to_string(p));
  }
  rend.expect_equal(th0[n - 1], QSeries::constant(1, D), "Theta^(0)_{n-1} = 1");
  rend.expect_equal(th1[n - 1], L * P1, "Theta^(1)_{n-1} = L Phi1");

  // Res_{h1=0} Res_{h2=0} A_p(h1) A_q(h2) / (h1 h2 (h1 + h2))
  //   = sum_k (-1)^k [h^{-k}] A_q [h^{k+1}] A_p
  auto double_residue = [&](int p, int q) {
    QSeries out(D);
    for (int k = 0; k <= D; ++k) {
      const QSeries inner = A[q].h_coefficient(-k);
      if (inner.is_zero()) continue;
      out += Rational(k % 2 ? -1 : 1) * (inner * A[p].h_coefficient(k + 1));
    }
    return out;
  };
  QSeries lhs(D), middle(D);
  for (int p = 0; p <= n - 2; ++p) {
    lhs += double_residue(p, n - 2 - p);
    middle += th1[p] * th0[n - 2 - p];
  }
  lhs += double_residue(n - 1, n - 1);
  middle += th1[n - 1] * th0[n - 1];
  QSeries closed = Rational(n) * P1;
  for (int p = 0; p <= n - 2; ++p)
    for (int r = 0; r < p; ++r) closed += Rational(p - r) * dlog[r];
  closed = L * closed;
  IdentityReport r44("(3.44)", params, D);
  r44.expect_equal(lhs, middle, "double residue vs Theta products");
  r44.expect_equal(lhs, closed, "double residue vs closed form");
  return merge("theta identities", params, {r42, r43, rend, r44});
}

}  // namespace hypergw

#include "hypergw/gw_invariants.hpp"

#include "hypergw/error.hpp"
#include "hypergw/tpoly.hpp"

namespace hypergw {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

Params n_param(const HyperSpec& spec) { return {{"n", std::to_string(spec.n)}}; }

Integer int_pow(long base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), Integer(base).get_mpz_t(), e);
  return out;
}

QSeries one_minus_nn_q(const HyperSpec& spec) {
  QSeries out = QSeries::constant(1, spec.D);
  out[1] = -Rational(int_pow(spec.n, spec.n));
  return out;
}

// Everything the closed forms are assembled from.
struct Pieces {
  int n;
  QSeries g;                 // T - t
  QSeries mu;
  QSeries ln_om;             // ln(1 - n^n q)
  std::vector<QSeries> lnI;  // ln I_{p,p}, p <= n-1
  std::vector<QSeries> ell;  // [w^p] ln F
  std::vector<Rational> c;   // [w^k] (1+w)^n / (1+nw)

  explicit Pieces(const HyperSpec& spec) : n(spec.n) {
    const ITable tab(spec, std::max(1, n - 1));
    g = (tab.I(0, 1) / tab.diagonal(0) - TPoly::t(spec.D)).t_free_part();
    mu = hypergw::mu(spec, MuMethod::ClosedForm);
    ln_om = log(one_minus_nn_q(spec));
    for (int p = 0; p < n; ++p) lnI.push_back(log(tab.diagonal(p)));
    const WSeries lnF = log(build_F(spec));
    for (int p = 0; p <= spec.W; ++p) ell.push_back(lnF[p]);
    std::vector<Rational> num;
    for (int j = 0; j <= n; ++j) num.push_back(Rational(binomial(n, j)));
    const QSeries cs = taylor_rational(num, {1, n}, spec.W);
    for (int k = 0; k <= spec.W; ++k) c.push_back(cs[k]);
  }

  QSeries zero() const { return QSeries(g.order()); }

  Rational coef_T() const {
    return make_rational((n - 2) * (n + 1), 48) + Rational(1 - int_pow(1 - n, n)) / Rational(24 * n * n);
  }
  Rational coef_lnI0() const { return Rational(Integer(n * n - 1) + int_pow(1 - n, n)) / Rational(24 * n); }

  // The parity-split block, without the ln(1 - n^n q) part.
  QSeries parity_block() const {
    QSeries out = zero();
    if (n % 2) {
      for (int p = 0; p <= (n - 3) / 2; ++p) out += make_rational((n - 1 - 2 * p) * (n - 1 - 2 * p), 8) * lnI[p];
    } else {
      for (int p = 0; p <= (n - 4) / 2; ++p) out += make_rational((n - 2 * p) * (n - 2 - 2 * p), 8) * lnI[p];
    }
    return out;
  }

  QSeries tail() const {
    QSeries out = zero();
    for (int p = 2; p <= n - 2; ++p) out += c[n - 2 - p] * ell[p];
    return make_rational(n, 24) * out;
  }
};

std::vector<Rational> degrees_1_to_D(const QSeries& s) {
  std::vector<Rational> out;
  for (int d = 1; d <= s.order(); ++d) out.push_back(s[d]);
  return out;
}

void expect_tpoly_equal(IdentityReport& rep, const TPoly& a, const TPoly& b, const std::string& what) {
  for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k)
    rep.expect_equal(a.coefficient(k), b.coefficient(k), what + ", t^" + std::to_string(k));
}

const Rational& need(const std::optional<Rational>& v, const char* column, int d) {
  if (!v) throw Error(ErrorKind::MissingColumn, std::string(column) + " missing at d=" + std::to_string(d));
  return *v;
}

}  // namespace

GWTable GWTable::empty(int n, int D) {
  GWTable t{n, D, {}};
  for (int d = 1; d <= D; ++d) {
    GWRow r;
    r.d = d;
    t.rows.push_back(r);
  }
  return t;
}

QSeries theorem2_series(const HyperSpec& spec) {
  spec.validate();
  const Pieces P(spec);
  const int n = spec.n;
  QSeries out = P.coef_T() * P.g + P.coef_lnI0() * P.lnI[0];
  const Rational om_coef = n % 2 ? make_rational(n - 1, 48) : make_rational(n - 4, 48);
  out -= om_coef * P.ln_om + P.parity_block();
  out += P.tail();
  return out;
}

std::vector<Rational> extract_invariants(const QSeries& G, const HyperSpec& spec) {
  return degrees_1_to_D(change_variable_expT(G, mirror_map(spec)));
}

QSeries in_q(const std::vector<Rational>& coeffs, const QSeries& g) {
  const int D = g.order();
  const QSeries Q = shift(exp(g), 1);
  QSeries out(D), power = QSeries::constant(1, D);
  for (int d = 1; d <= D; ++d) {
    power = power * Q;
    if (d <= static_cast<int>(coeffs.size()) && coeffs[d - 1] != 0) out += coeffs[d - 1] * power;
  }
  return out;
}

IdentityReport appendix_b_closure(const std::vector<Rational>& N0, int D) {
  const HyperSpec spec = HyperSpec::make(5, D);
  const ITable tab(spec, 3);
  const QSeries g = mirror_map(spec);
  std::vector<Rational> dN;
  for (std::size_t i = 0; i < N0.size(); ++i) dN.push_back(Rational(static_cast<long>(i + 1)) * N0[i]);
  const QSeries S0 = in_q(N0, g), S1 = in_q(dN, g);
  const TPoly T = TPoly::t(D) + TPoly(g);
  const TPoly one(QSeries::constant(1, D));
  std::vector<TPoly> J;
  for (int k = 0; k <= 3; ++k) J.push_back(tab.I(0, k) / tab.diagonal(0));

  IdentityReport rep("(B.7) closure", {{"n", "5"}}, D);
  expect_tpoly_equal(rep, J[0], one, "H^0");
  expect_tpoly_equal(rep, J[1], T, "H^1");
  expect_tpoly_equal(rep, J[2], make_rational(1, 2) * (T * T) + TPoly(make_rational(1, 5) * S1), "H^2");
  expect_tpoly_equal(rep, J[3],
                     make_rational(1, 6) * (T * T * T) + make_rational(1, 5) * (S1 * T - TPoly(Rational(2) * S0)),
                     "H^3");
  return rep;
}

Genus0Result genus0_quintic(int D) {
  const HyperSpec spec = HyperSpec::make(5, D);
  const ITable tab(spec, 3);
  std::vector<TPoly> J;
  for (int k = 0; k <= 3; ++k) J.push_back(tab.I(0, k) / tab.diagonal(0));
  const TPoly& T = J[1];
  const TPoly h = make_rational(5, 2) * (J[1] * J[2] - J[3]) - make_rational(5, 6) * (T * T * T);
  const QSeries h0 = h.t_free_part();  // throws NotTFree
  IdentityReport cancel("(0.4) t-cancellation", {{"n", "5"}}, D);
  cancel.expect(h.degree() == 0, "positive t-powers survive");

  Genus0Result out;
  out.N0 = degrees_1_to_D(change_variable_expT(h0, mirror_map(spec)));
  out.report = merge("genus 0 quintic", {{"n", "5"}}, {cancel, appendix_b_closure(out.N0, D)});
  return out;
}

Genus1Result theorem1_quintic(int D) {
  const HyperSpec spec = HyperSpec::make(5, D);
  const ITable tab(spec, 3);
  const QSeries g = mirror_map(spec);
  const QSeries G = make_rational(1, 2) * (make_rational(25, 6) * g - make_rational(62, 3) * log(tab.diagonal(0)) -
                                           make_rational(1, 6) * log(one_minus_nn_q(spec)) - log(tab.diagonal(1)));
  Genus1Result out;
  out.N1 = extract_invariants(G, spec);

  const Params params{{"n", "5"}};
  const std::vector<Rational> N0 = genus0_quintic(D).N0;
  const std::vector<Rational> reduced = extract_invariants(theorem2_series(spec), spec);
  IdentityReport r13("(0.13) with the reduced formula", params, D);
  for (int d = 1; d <= D; ++d)
    r13.expect(out.N1[d - 1] == reduced[d - 1] + N0[d - 1] / 12,
               "degree " + std::to_string(d) + ": " + to_string(out.N1[d - 1]) + " vs " +
                   to_string(reduced[d - 1] + N0[d - 1] / 12));

  std::vector<TPoly> J;
  for (int k = 0; k <= 3; ++k) J.push_back(tab.I(0, k) / tab.diagonal(0));
  const TPoly lhs = make_rational(5, 24) * (J[3] - J[1] * J[2] + make_rational(1, 3) * (J[1] * J[1] * J[1]));
  IdentityReport r22("(0.22)", params, D);
  r22.expect(lhs.is_t_free(), "J-combination is not t-free");
  r22.expect_equal(lhs.coefficient(0), make_rational(-1, 12) * in_q(N0, g), "against -N0/12");
  r22.expect_equal(Pieces(spec).tail(), lhs.coefficient(0), "against the w-derivative tail");
  out.report = merge("theorem 1", params, {r13, r22});
  return out;
}

GWTable reduced_to_standard(const GWTable& table) {
  GWTable out = table;
  for (GWRow& r : out.rows) r.N1 = need(r.GW1_reduced, "GW1_reduced", r.d) + need(r.N0, "N0", r.d) / 12;
  return out;
}

GWTable standard_to_reduced(const GWTable& table) {
  GWTable out = table;
  for (GWRow& r : out.rows) r.GW1_reduced = need(r.N1, "N1", r.d) - need(r.N0, "N0", r.d) / 12;
  return out;
}

Integer divisor_sum(int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "divisor sum needs r >= 1");
  Integer s = 0;
  for (int k = 1; k <= r; ++k)
    if (r % k == 0) s += k;
  return s;
}

namespace {

// Rows by degree; rows must be d = 1..truncation in order.
void check_rows(const GWTable& t) {
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.rows[i].d != static_cast<int>(i + 1)) throw Error(ErrorKind::InvalidArgument, "rows must be d = 1, 2, ...");
}

Rational k3(int k) { return Rational(Integer(k) * k * k); }

}  // namespace

GWTable instanton_inversion(const GWTable& table, int genus) {
  check_rows(table);
  if (genus != 0 && genus != 1) throw Error(ErrorKind::InvalidArgument, "genus must be 0 or 1");
  GWTable out = table;
  auto& rows = out.rows;
  for (GWRow& r : rows) {
    const int d = r.d;
    if (genus == 0) {
      Rational v = need(r.N0, "N0", d);
      for (int k = 2; k <= d; ++k)
        if (d % k == 0) v -= *rows[d / k - 1].n0 / k3(k);
      r.n0 = v;
    } else {
      Rational v = need(r.N1, "N1", d);
      for (int k = 1; k <= d; ++k) {
        if (d % k) continue;
        v -= need(rows[d / k - 1].n0, "n0", d / k) / (12 * k);
        if (k > 1) v -= *rows[d / k - 1].n1 * Rational(divisor_sum(k)) / k;
      }
      r.n1 = v;
    }
  }
  return out;
}

GWTable instanton_forward(const GWTable& table, int genus) {
  check_rows(table);
  if (genus != 0 && genus != 1) throw Error(ErrorKind::InvalidArgument, "genus must be 0 or 1");
  GWTable out = table;
  for (GWRow& r : out.rows) {
    const int d = r.d;
    Rational v = 0;
    for (int k = 1; k <= d; ++k) {
      if (d % k) continue;
      const GWRow& s = table.rows[d / k - 1];
      if (genus == 0) {
        v += need(s.n0, "n0", s.d) / k3(k);
      } else {
        v += need(s.n1, "n1", s.d) * Rational(divisor_sum(k)) / k + need(s.n0, "n0", s.d) / (12 * k);
      }
    }
    (genus == 0 ? r.N0 : r.N1) = v;
  }
  return out;
}

GWTable compute_table(const HyperSpec& spec) {
  spec.validate();
  GWTable t = GWTable::empty(spec.n, spec.D);
  const std::vector<Rational> reduced = extract_invariants(theorem2_series(spec), spec);
  for (int d = 1; d <= spec.D; ++d) t.rows[d - 1].GW1_reduced = reduced[d - 1];
  if (spec.n != 5) return t;

  const Genus0Result g0 = genus0_quintic(spec.D);
  if (!g0.report.pass) throw Error(ErrorKind::Internal, to_string(g0.report));
  const Genus1Result g1 = theorem1_quintic(spec.D);
  if (!g1.report.pass) throw Error(ErrorKind::Internal, to_string(g1.report));
  for (int d = 1; d <= spec.D; ++d) {
    t.rows[d - 1].N0 = g0.N0[d - 1];
    t.rows[d - 1].N1 = g1.N1[d - 1];
  }
  return instanton_inversion(instanton_inversion(t, 0), 1);
}

QSeries A_tilde_form1(const HyperSpec& spec) {
  const Pieces P(spec);
  const int n = spec.n;
  QSeries s = make_rational((n - 2) * (n + 1), 24) * P.mu - make_rational((n - 2) * (3 * n - 5), 24) * P.ln_om;
  for (int p = 0; p <= n - 3; ++p) s -= Rational(binomial(n - 1 - p, 2)) * P.lnI[p];
  return make_rational(1, 2) * s;
}

QSeries A_tilde_form2(const HyperSpec& spec) {
  const Pieces P(spec);
  const int n = spec.n;
  const Rational om_coef = n % 2 ? make_rational(n + 1, 48) : make_rational(n - 2, 48);
  return make_rational((n - 2) * (n + 1), 48) * P.mu - (om_coef * P.ln_om + P.parity_block());
}

QSeries B_tilde_closed(const HyperSpec& spec) {
  const Pieces P(spec);
  const int n = spec.n;
  return P.coef_T() * P.g - make_rational((n - 2) * (n + 1), 48) * P.mu + make_rational(1, 24) * P.ln_om +
         P.coef_lnI0() * P.lnI[0] + P.tail();
}

namespace {

// K(h) = ((1+h)^n - 1) / ((n+h) h^2)
RatFunc b_kernel(int n) {
  const Poly num = Poly(std::vector<Rational>{n, 1});
  Poly top(Rational(1));
  for (int i = 0; i < n; ++i) top = top * Poly(std::vector<Rational>{1, 1});
  return RatFunc(top - Poly(Rational(1)), num * Poly::monomial(2));
}

// -n/24 Res_{h=a} K(h) (-g/h + ln Y(h)) with Y = F(1/h)/I_{0,0}.
QSeries b_residue_at(const HyperSpec& spec, const QSeries& g, const Rational& a) {
  const int D = spec.D, top = D + 3;
  const RatFunc K = b_kernel(spec.n);
  const RatFunc inv_h = RatFunc(Poly(Rational(1)), Poly::monomial(1));
  const int kpole = pole_order_at(K, a);
  const HLaurent k = laurent_at(K, a, kpole, top);
  const HLaurent ih = laurent_at(inv_h, a, pole_order_at(inv_h, a), top);

  LaurentUSeries X = log(y_p_laurent(spec, 0, a, top));
  for (int d = 1; d <= D; ++d) X[d] = X[d] + (-g[d]) * ih;
  return make_rational(-spec.n, 24) * (k * X).residue();
}

}  // namespace

QSeries B_tilde_residue(const HyperSpec& spec, BPoint z) {
  spec.validate();
  if (spec.n < 2) throw Error(ErrorKind::InvalidArgument, "B~ needs n >= 2");
  const QSeries g = mirror_map(spec);
  switch (z) {
    case BPoint::Zero:
      return b_residue_at(spec, g, 0);
    case BPoint::MinusN:
      return b_residue_at(spec, g, -spec.n);
    case BPoint::Infinity: {
      // h = 1/w: n/24 [w^{n-2}] ((1+w)^n - w^n)/(1+nw) (-g w + ln(F/I00))
      const int n = spec.n, W = spec.W, D = spec.D;
      const WSeries F = build_F(spec);
      WSeries X = log(inverse(F[0]) * F);
      X[1] -= g;
      std::vector<Rational> num;
      for (int j = 0; j < n; ++j) num.push_back(Rational(binomial(n, j)));
      const QSeries cs = taylor_rational(num, {1, n}, W);
      WSeries C(W, D);
      for (int k = 0; k <= W; ++k) C[k] = QSeries::constant(cs[k], D);
      return make_rational(n, 24) * (C * X)[n - 2];
    }
  }
  throw Error(ErrorKind::Internal, "unreachable");
}

IdentityReport theorem3_check(const HyperSpec& spec) {
  spec.validate();
  const int n = spec.n, D = spec.D;
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "theorem 3 check needs n >= 2");
  const Params params = n_param(spec);
  const Pieces P(spec);

  IdentityReport ra("A~ printed forms", params, D);
  const QSeries A = A_tilde_form1(spec);
  ra.expect_equal(A, A_tilde_form2(spec), "form 1 vs form 2");

  const QSeries b0 = B_tilde_residue(spec, BPoint::Zero);
  const QSeries bn = B_tilde_residue(spec, BPoint::MinusN);
  const QSeries binf = B_tilde_residue(spec, BPoint::Infinity);
  const Rational nn = n;
  const QSeries b0_closed = make_rational(-n, 24) * (make_rational((n - 2) * (n + 1), 2 * n) * (P.mu - P.g) -
                                                      (1 / nn) * P.ln_om - P.lnI[0]);
  const QSeries bn_closed = make_rational(-n, 24) * (Rational(int_pow(1 - n, n) - 1) / (nn * nn)) *
                            ((1 / nn) * P.g - P.lnI[0]);
  IdentityReport rb("B~ residues", params, D);
  rb.expect_equal(b0, b0_closed, "h = 0 against (3.48)");
  rb.expect_equal(bn, bn_closed, "h = -n against (3.47)");
  rb.expect_equal(binf, P.tail(), "h = infinity against (3.49)");
  const QSeries B = B_tilde_closed(spec);
  rb.expect_equal(b0 + bn + binf, B, "sum against (3.3)");

  IdentityReport rt("A~ + B~ = reduced genus 1 series", params, D);
  rt.expect_equal(A + B, theorem2_series(spec), "sum");
  return merge("theorem 3", params, {ra, rb, rt});
}

IdentityReport special_cases(int D) {
  if (D < 3) throw Error(ErrorKind::InvalidArgument, "special cases need D >= 3");
  // n = 3
  const HyperSpec s3 = HyperSpec::make(3, D);
  const Pieces P3(s3);
  const QSeries cubic = make_rational(1, 8) * P3.g - make_rational(1, 24) * P3.ln_om - make_rational(1, 2) * P3.lnI[0];
  IdentityReport r19("(0.19)", {{"n", "3"}}, D);
  r19.expect_equal(theorem2_series(s3), cubic, "reduced series vs cubic formula");
  IdentityReport r20("(0.20)", {{"n", "3"}}, D);
  const std::vector<Rational> inv = extract_invariants(cubic, s3);
  for (int d = 1; d <= D; ++d) {
    const Rational expected = d % 3 ? Rational(0) : Rational(divisor_sum(d / 3)) / (d / 3);
    r20.expect(inv[d - 1] == expected, "degree " + std::to_string(d) + ": " + to_string(inv[d - 1]) + " vs " +
                                           to_string(expected));
  }

  // n = 4
  const HyperSpec s4 = HyperSpec::make(4, D);
  const ITable tab(s4, 3);
  const TPoly J1 = tab.I(0, 1) / tab.diagonal(0), J2 = tab.I(0, 2) / tab.diagonal(0);
  const TPoly K = J2 - make_rational(1, 2) * (J1 * J1);
  const QSeries J1p = J1.d_dt().t_free_part();
  const TPoly ratio = J2.d_dt() / J1p;
  IdentityReport r21("(0.21)", {{"n", "4"}}, D);
  const TPoly zero{QSeries(D)};
  expect_tpoly_equal(r21, K, zero, "J2 - J1^2/2");
  expect_tpoly_equal(r21, K.d_dt(), J1p * (ratio - J1), "first derivative");
  expect_tpoly_equal(r21, ratio.d_dt() - TPoly(J1p), TPoly(tab.diagonal(2) - tab.diagonal(1)), "second derivative");
  r21.expect_equal(tab.diagonal(2), tab.diagonal(1), "I22 = I11");
  r21.expect_equal(theorem2_series(s4), QSeries(D), "reduced series vanishes");
  return merge("special cases", {{"n", "3,4"}}, {r19, r20, r21});
}

USeriesRF bridge_Z(const HyperSpec& spec) {
  if (spec.n < 2) throw Error(ErrorKind::InvalidArgument, "bridge series needs n >= 2");
  const USeriesRF y = y_p(spec, 0);
  std::vector<RatFunc> c{RatFunc(Rational(0))};
  for (int d = 1; d <= spec.D; ++d) c.push_back(y[d]);
  return USeriesRF::without_constant(std::move(c));
}

IdentityReport bridge_check(const HyperSpec& spec) {
  const Params params = n_param(spec);
  const USeriesRF Z = bridge_Z(spec);
  const Regularization reg = regularize(Z);
  IdentityReport rr("bridge regularization", params, spec.D);
  rr.expect(reg.regular, "Zbar is not regular at h = 0");
  rr.expect_equal(reg.eta, mu(spec, MuMethod::ClosedForm), "eta against mu");
  if (reg.regular) {
    QSeries one_plus = reg.zbar_at_zero();
    one_plus[0] += 1;
    rr.expect_equal(one_plus, phi0(spec) / ITable(spec, 0).diagonal(0), "1 + Zbar(0) against Phi0/I00");
  }
  std::vector<IdentityReport> parts{rr};
  for (int a = 0; a <= 4; ++a) parts.push_back(check_lemma_2_2(Z, a, Lemma22Form::Eq23));
  for (int a = 0; a <= 3; ++a) parts.push_back(check_lemma_2_2(Z, a, Lemma22Form::Eq24));
  return merge("bridge Z", params, parts);
}

}  // namespace hypergw

#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "hypergw/error.hpp"
#include "hypergw/laurent.hpp"
#include "hypergw/ratfunc.hpp"

using namespace hypergw;
using namespace testing_support;

namespace {
Poly P(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }
const RatFunc h = RatFunc::variable();
}  // namespace

TEST_CASE("polynomial gcd") {
  Poly a = Poly::from_roots({1, 2, R(1, 3), 0});
  Poly b = Poly::from_roots({2, R(1, 3), 5, 0, 0});
  CHECK(gcd(a, b) == Poly::from_roots({2, R(1, 3), 0}));
  CHECK(gcd(a, Poly(Rational(3))) == Poly(Rational(1)));
  CHECK(gcd(Poly(), b) == monic(b));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> ra, rb, common;
    for (int i = 0; i < 1 + trial % 4; ++i) common.push_back(random_rational(rng, 6));
    for (int i = 0; i < trial % 5; ++i) ra.push_back(R(100 + i));
    for (int i = 0; i < trial % 3; ++i) rb.push_back(R(-100 - i));
    Poly c = Poly::from_roots(common);
    Poly x = R(7, 3) * c * Poly::from_roots(ra), y = R(-2, 5) * c * Poly::from_roots(rb);
    Poly g = gcd(x, y);
    CHECK(divmod(x, g).second.is_zero());
    CHECK(divmod(y, g).second.is_zero());
    CHECK(g.degree() == c.degree());
  }
}

TEST_CASE("rational functions are canonical") {
  RatFunc f(P({-1, 0, 1}), P({2, -2}));  // (x^2-1)/(2-2x) = -(x+1)/2
  CHECK(f == RatFunc(P({R(-1, 2), R(-1, 2)})));
  CHECK(f.den() == Poly(Rational(1)));
  RatFunc g = RatFunc(1) / (h - RatFunc(3));
  CHECK(g.den() == P({-3, 1}));
  CHECK(g + (-g) == RatFunc());
  CHECK((g * (h - RatFunc(3))) == RatFunc(1));
  CHECK(invert_variable(RatFunc(1) / h) == h);
  CHECK(shift(h, 2) == h + RatFunc(2));
  CHECK(derivative(RatFunc(1) / h) == RatFunc(-1) / (h * h));
}

TEST_CASE("laurent windows") {
  HLaurent a = laurent_at_zero((RatFunc(1) + h) / h, 1, 1);
  CHECK(a.low() == -1);
  CHECK(a.high() == 1);
  CHECK(a.coefficient(-1) == 1);
  CHECK(a.coefficient(0) == 1);
  CHECK(a.coefficient(1) == 0);
  CHECK_THROWS_AS((void)a.coefficient(2), Error);

  HLaurent b = laurent_at_zero(RatFunc(1) / (RatFunc(1) - h), 0, 3);
  for (int k = 0; k <= 3; ++k) CHECK(b.coefficient(k) == 1);

  HLaurent c = laurent_at_zero(h / (h - RatFunc(2)), 0, 2);
  CHECK(c.coefficient(0) == 0);
  CHECK(c.coefficient(1) == R(-1, 2));
  CHECK(c.coefficient(2) == R(-1, 4));

  try {
    (void)laurent_at_zero(RatFunc(1) / (h * h), 1, 3);
    FAIL("expected WindowTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WindowTooSmall);
  }

  // window of a product: [lo_a + lo_b, min(hi_a + lo_b, hi_b + lo_a)]
  HLaurent p = a * b;
  CHECK(p.low() == -1);
  CHECK(p.high() == 1);
  CHECK(p.coefficient(-1) == 1);
  CHECK(p.coefficient(1) == 2);
  CHECK_THROWS_AS((void)p.coefficient(2), Error);
}

#include "hypergw/residue.hpp"

namespace {

// exp(c u / h) (1 + u h + extra) - 1 truncated at u^D
USeriesRF constructed_regularizable(const Rational& c, int D, const USeriesRF* extra = nullptr) {
  USeriesRF E(D);
  for (int d = 0; d <= D; ++d) {
    Rational coef = 1;
    for (int i = 0; i < d; ++i) coef *= c;
    coef /= Rational(factorial(d));
    E[d] = RatFunc(Poly(coef), Poly::monomial(d));
  }
  USeriesRF onep(D);
  onep[0] = RatFunc(1);
  if (D >= 1) onep[1] = h;
  if (extra) onep = onep + *extra;
  USeriesRF Z = E * onep;
  Z[0] = Z[0] - RatFunc(1);
  return Z;
}

USeriesRF u_over_h(int D) {
  USeriesRF Z(D);
  Z[1] = RatFunc(1) / h;
  return Z;
}

RatFunc random_ratfunc(std::mt19937& rng, std::vector<Rational>& poles) {
  std::uniform_int_distribution<int> count(1, 3), mult(1, 3), deg(0, 5);
  Poly den(Rational(1));
  poles.clear();
  const int k = count(rng);
  while (static_cast<int>(poles.size()) < k) {
    Rational a = random_rational(rng, 5);
    bool seen = false;
    for (const auto& p : poles) seen = seen || p == a;
    if (seen) continue;
    poles.push_back(a);
    for (int m = mult(rng); m > 0; --m) den = den * P({-a, 1});
  }
  std::vector<Rational> num;
  for (int i = deg(rng); i >= 0; --i) num.push_back(random_rational(rng, 7));
  return RatFunc(Poly(num), random_rational(rng, 4) == 0 ? den : R(3) * den);
}

}  // namespace

TEST_CASE("residues at points and at infinity") {
  CHECK(residue_at(RatFunc(1) / (h - RatFunc(3)), 3) == 1);
  CHECK(residue_at(RatFunc(1) / (h - RatFunc(3)), 0) == 0);
  RatFunc two_poles = RatFunc(1) / ((h - RatFunc(1)) * (h - RatFunc(2)));
  CHECK(residue_at(two_poles, 1) == -1);
  CHECK(residue_at(two_poles, 2) == 1);
  CHECK(residue_at_infinity(RatFunc(1) / h) == -1);
  CHECK(residue_at_infinity(RatFunc(R(5, 7))) == 0);
  CHECK(residue_at_infinity(two_poles) == 0);
  CHECK(residue_at_infinity(h) == 0);
  // f = h^2/(h-1): at infinity -Res_{w=0} 1/(w^3 (1-w)) = -1
  CHECK(residue_at_infinity(h * h / (h - RatFunc(1))) == -1);
}

TEST_CASE("property: residue theorem on 200 random rational functions") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> poles;
    RatFunc f = random_ratfunc(rng, poles);
    Rational total = residue_at_infinity(f);
    for (const auto& a : poles) total += residue_at(f, a);
    CHECK(total == 0);
  }
}

TEST_CASE("regularize examples") {
  const int D = 5;
  USeriesRF trivial(D);
  trivial[1] = RatFunc(1);
  Regularization r0 = regularize(trivial);
  CHECK(r0.eta == QSeries(D));
  CHECK(r0.regular);
  CHECK(r0.zbar == trivial);

  for (Rational c : {R(3), R(-2, 5), R(0)}) {
    Regularization r = regularize(constructed_regularizable(c, D));
    CHECK(r.eta == QSeries::monomial(1, c, D));
    CHECK(r.eta_from_log == r.eta);
    CHECK(r.regular);
    USeriesRF expected(D);
    expected[1] = h;
    CHECK(r.zbar == expected);
  }

  Regularization bad = regularize(u_over_h(D));
  CHECK(bad.eta == QSeries::monomial(1, 1, D));
  CHECK_FALSE(bad.regular);
  CHECK(bad.zbar[2] == R(-1, 2) * RatFunc(1) / (h * h));
  CHECK_THROWS_AS((void)bad.zbar_at_zero(), Error);

  USeriesRF with_constant(D);
  with_constant[0] = RatFunc(1);
  try {
    (void)regularize(with_constant);
    FAIL("expected NonzeroConstant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonzeroConstant);
  }
}

TEST_CASE("property: regularize reproduces its own pair") {
  const int D = 5;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    USeriesRF bump(D);
    bump[1 + trial % 3] = RatFunc(random_rational(rng)) / (RatFunc(1) - random_rational(rng, 3) * h);
    const Rational c = random_rational(rng, 4);
    USeriesRF Z = constructed_regularizable(c, D, &bump);
    Regularization r = regularize(Z);
    CHECK(r.eta == QSeries::monomial(1, c, D));
    REQUIRE(r.regular);
    // rebuild exp(eta/h) (1 + Zbar) - 1 and split it again
    USeriesRF E(D);
    E[0] = RatFunc(1);
    for (int d = 1; d <= D; ++d) {
      RatFunc acc;
      for (int k = 1; k <= d; ++k) acc = acc + Rational(k) * RatFunc(Poly(r.eta[k]), Poly::monomial(1)) * E[d - k];
      E[d] = R(1, d) * acc;
    }
    USeriesRF onep = r.zbar;
    onep[0] = onep[0] + RatFunc(1);
    USeriesRF rebuilt = E * onep;
    rebuilt[0] = rebuilt[0] - RatFunc(1);
    CHECK(rebuilt == Z);
    Regularization again = regularize(rebuilt);
    CHECK(again.eta == r.eta);
    CHECK(again.zbar == r.zbar);
  }
}

TEST_CASE("regularizability criterion on constructed and counter examples") {
  const int D = 6;
  USeriesRF Z = constructed_regularizable(R(3, 2), D);
  for (int a = 0; a <= 4; ++a) {
    IdentityReport rep = check_lemma_2_2(Z, a, Lemma22Form::Eq23);
    CHECK_MESSAGE(rep.pass, to_string(rep));
  }
  for (int a = 0; a <= 3; ++a) {
    IdentityReport rep = check_lemma_2_2(Z, a, Lemma22Form::Eq24);
    CHECK_MESSAGE(rep.pass, to_string(rep));
  }
  bool some_fail = false;
  for (int a = 0; a <= 4; ++a) some_fail = some_fail || !check_lemma_2_2(u_over_h(D), a, Lemma22Form::Eq23).pass;
  CHECK(some_fail);
  try {
    (void)check_lemma_2_2(u_over_h(D), 0, Lemma22Form::Eq24);
    FAIL("expected NotRegularizable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRegularizable);
  }
}

TEST_CASE("residue of h^a Z for a = -3..3") {
  const int D = 6;
  USeriesRF bump(D);
  bump[2] = (RatFunc(2) + h) / (RatFunc(1) - RatFunc(3) * h);
  bump[3] = h * h;
  for (const USeriesRF& s : {constructed_regularizable(R(-4, 3), D), constructed_regularizable(R(-4, 3), D, &bump)})
    for (int a = -3; a <= 3; ++a) {
      IdentityReport rep = check_eq_2_6(s, a);
      CHECK_MESSAGE(rep.pass, to_string(rep));
    }
}

TEST_CASE("residues of products of simple-pole functions") {
  CHECK(lemma_2_4_check({}).pass);
  RatFunc f1 = RatFunc(R(3)) / h + RatFunc(R(2)) / (RatFunc(1) - h);
  CHECK(lemma_2_4_check({f1}).pass);
  RatFunc a = RatFunc(R(2)) / h + RatFunc(5) + R(7) * h;
  RatFunc b = RatFunc(R(-1, 3)) / h + RatFunc(R(1, 2)) + R(-4) * h;
  CHECK(lemma_2_4_check({a, b}).pass);
  CHECK(residue_at(a * b, 0) == R(2) * R(1, 2) + R(-1, 3) * R(5));
  try {
    (void)lemma_2_4_check({RatFunc(1) / (h * h)});
    FAIL("expected PoleTooHigh");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleTooHigh);
  }
}

TEST_CASE("property: product residue formula on 200 random tuples") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> size(1, 5), deg(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RatFunc> fs;
    for (int e = size(rng); e > 0; --e) {
      std::vector<Rational> poles;
      RatFunc g = random_ratfunc(rng, poles);
      // keep g regular at 0, then add r/h
      if (g.den().coefficient(0) == 0) g = RatFunc(g.num(), g.den() + Poly(Rational(1)));
      if (g.den()(0) == 0) g = RatFunc(1);
      fs.push_back(g + RatFunc(random_rational(rng, 5)) / h);
    }
    IdentityReport rep = lemma_2_4_check(fs);
    CHECK_MESSAGE(rep.pass, to_string(rep));
  }
}

TEST_CASE("binomial identities exhaustively") {
  CHECK(appendix_a2(0, 5).pass);
  CHECK(appendix_a2(1, 1).pass);
  CHECK(appendix_a3(1, 2, 1).pass);
  int checked = 0;
  for (int q = 0; q <= 8; ++q)
    for (int a = 0; a <= 8; ++a) {
      if (a >= 1) CHECK(appendix_a2(q, a).pass);
      for (int s = 0; s <= 8; ++s) CHECK(appendix_a3(q, a, s).pass);
      ++checked;
    }
  std::vector<int> qs;
  std::function<void(int)> tuples = [&](int len) {
    if (static_cast<int>(qs.size()) == len) {
      for (int b = 0; b <= 8; ++b) CHECK(appendix_a1(b, qs).pass);
      return;
    }
    for (int v = 0; v <= 5; ++v) {
      qs.push_back(v);
      tuples(len);
      qs.pop_back();
    }
  };
  for (int len = 0; len <= 4; ++len) tuples(len);
  CHECK(checked == 81);
  CHECK_THROWS_AS((void)appendix_a2(1, 0), Error);
}

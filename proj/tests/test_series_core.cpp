#include <doctest.h>

#include "helpers.hpp"
#include "hypergw/error.hpp"
#include "hypergw/tpoly.hpp"
#include "hypergw/wseries.hpp"

using namespace hypergw;
using namespace testing_support;

TEST_CASE("rational formatting and parsing") {
  CHECK(to_string(R(6, -4)) == "-3/2");
  CHECK(to_string(R(8, 4)) == "2");
  CHECK(parse_rational("10/-4") == R(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(1, 2) == 0);
  CHECK(binomial(3, -1) == 0);
}

TEST_CASE("qseries arithmetic") {
  CHECK(series({1, 1, 0}) * series({1, -1, 0}) == series({1, 0, -1}));
  CHECK(QSeries::constant(1, 5) / series({1, -1, 0, 0, 0, 0}) == series({1, 1, 1, 1, 1, 1}));
  // 1/(1+120q) = 1 - 120q + 14400q^2, so the q^1 terms cancel and q^2 keeps 113400
  CHECK(series({1, 120, 113400}) / series({1, 120, 0}) == series({1, 0, 113400}));
  CHECK_THROWS_AS(series({1, 2}) / series({0, 1}), Error);
  try {
    (void)(series({1, 2}) / series({0, 1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivByNonUnit);
  }
}

TEST_CASE("truncation is the minimum and never extrapolated") {
  QSeries a = series({1, 2, 3, 4});
  QSeries b = series({1, 1});
  CHECK((a + b).order() == 1);
  CHECK((a * b).order() == 1);
  CHECK_THROWS_AS((void)(a * b)[2], Error);
  try {
    (void)b[5];
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfTruncation);
  }
  CHECK_THROWS_AS((void)b.truncated(3), Error);
}

TEST_CASE("transcendental functions") {
  // log(1/(1-q)) = sum q^d / d
  QSeries geo = QSeries::constant(1, 4) / series({1, -1, 0, 0, 0});
  CHECK(log(geo) == series({0, 1, R(1, 2), R(1, 3), R(1, 4)}));
  CHECK(pow(series({1, -4, 0, 0}), R(-1, 2)) == series({1, 2, 6, 20}));
  CHECK(exp(QSeries(3)) == QSeries::constant(1, 3));
  try {
    (void)log(series({2, 1}));
    FAIL("expected BadConstantTerm");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadConstantTerm);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
  CHECK_THROWS_AS((void)exp(series({1, 1})), Error);
}

TEST_CASE("q d/dq") {
  CHECK(derivative(series({0, 1})) == series({0, 1}));
  CHECK(derivative(series({1, 0, 3})) == series({0, 0, 6}));
  CHECK(derivative(series({0, 1, R(1, 2), R(1, 3), R(1, 4)})) == series({0, 1, 1, 1, 1}));
}

TEST_CASE("t-polynomials") {
  const int D = 3;
  const QSeries q = QSeries::monomial(1, 1, D);
  TPoly tq = TPoly::t(D) * TPoly(q);
  CHECK(tq.d_dt() == TPoly(q) + TPoly::t(D) * TPoly(q));
  TPoly t2 = TPoly::t(D) * TPoly::t(D);
  CHECK(t2.d_dt() == Rational(2) * TPoly::t(D));
  TPoly mixed({series({1, 1, 0, 0}), QSeries(D)});
  CHECK(mixed.is_t_free());
  CHECK(mixed.degree() == 0);
  CHECK(mixed.t_free_part() == series({1, 1, 0, 0}));
  CHECK(TPoly(QSeries(D)).is_zero());
  CHECK(TPoly(QSeries(D)).degree() == 0);

  TPoly bad({series({1, 0, 0, 0}), series({0, 0, 7, 0})});
  try {
    (void)bad.t_free_part();
    FAIL("expected NotTFree");
  } catch (const NotTFreeError& e) {
    CHECK(e.kind() == ErrorKind::NotTFree);
    CHECK(e.t_power() == 1);
    CHECK(e.q_degree() == 2);
    CHECK(e.value() == 7);
  }
}

TEST_CASE("w-series log") {
  WSeries onew(3, 2);
  onew[0] = QSeries::constant(1, 2);
  onew[1] = QSeries::constant(1, 2);
  WSeries l = log(onew);
  CHECK(l[0] == QSeries(2));
  CHECK(l[1] == QSeries::constant(1, 2));
  CHECK(l[2] == QSeries::constant(R(-1, 2), 2));
  CHECK(l[3] == QSeries::constant(R(1, 3), 2));

  WSeries one(3, 2);
  one[0] = QSeries::constant(1, 2);
  CHECK(log(one) == WSeries(3, 2));

  // (1+w)^5 / (1+5w): the w^1 coefficient vanishes
  std::vector<Rational> num{1, 5, 10, 10, 5, 1};
  QSeries k = taylor_rational(num, {1, 5}, 4);
  CHECK(k[0] == 1);
  CHECK(k[1] == 0);
  CHECK(exp(log(onew)) == onew);

  WSeries bad(2, 2);
  bad[0] = QSeries::constant(3, 2);
  CHECK_THROWS_AS((void)log(bad), Error);
}

TEST_CASE("change of variable") {
  std::mt19937 rng(7);
  QSeries F = random_series(rng, 5);
  CHECK(change_variable_expT(F, QSeries(5)) == F);

  const QSeries q = QSeries::monomial(1, 1, 3);
  CHECK(change_variable_expT(q, q) == series({0, 1, -1, R(3, 2)}));
  CHECK(change_variable_expT(QSeries::constant(1, 3), q) == QSeries::constant(1, 3));
  // Lagrange inversion: (-1)^{d-1} d^{d-1} / d!
  QSeries q6 = QSeries::monomial(1, 1, 6);
  QSeries inv = change_variable_expT(q6, q6);
  for (int d = 1; d <= 6; ++d) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), d, d - 1);
    CHECK(inv[d] == (d % 2 == 1 ? 1 : -1) * Rational(p) / Rational(factorial(d)));
  }
  try {
    (void)change_variable_expT(q, series({1, 0, 0, 0}));
    FAIL("expected BadMirrorMap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadMirrorMap);
  }
}

TEST_CASE("property: ring axioms, exp/log, pow, Leibniz") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 40; ++trial) {
    const int D = 1 + trial % 7;
    QSeries a = random_series(rng, D), b = random_series(rng, D), c = random_series(rng, D);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(derivative(a * b) == derivative(a) * b + a * derivative(b));

    QSeries f = a;
    f[0] = 1;
    QSeries g = b;
    g[0] = 0;
    CHECK(exp(log(f)) == f);
    CHECK(log(exp(g)) == g);
    const Rational r = random_rational(rng), s = random_rational(rng);
    CHECK(pow(f, r) * pow(f, s) == pow(f, r + s));
    if (a[0] != 0) CHECK((b / a) * a == b);
  }
}

TEST_CASE("property: change of variable round trip") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int D = 1 + trial % 6;
    QSeries F = random_series(rng, D), g = random_series(rng, D, 4);
    g[0] = 0;
    QSeries forward = change_variable_expT(F, g);
    CHECK(change_variable_expT(forward, inverse_mirror(g)) == F);
  }
}

TEST_CASE("property: d/dt is a derivation on t-polynomials") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const int D = 1 + trial % 5;
    std::vector<QSeries> ca, cb;
    for (int k = 0; k <= trial % 3; ++k) ca.push_back(random_series(rng, D));
    for (int k = 0; k <= (trial + 1) % 4; ++k) cb.push_back(random_series(rng, D));
    TPoly a(ca), b(cb);
    CHECK((a * b).d_dt() == a.d_dt() * b + a * b.d_dt());
  }
}

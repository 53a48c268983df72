#include <doctest.h>

#include "helpers.hpp"
#include "hypergw/error.hpp"
#include "hypergw/gw_invariants.hpp"

using namespace hypergw;
using namespace testing_support;

namespace {

void require_pass(const IdentityReport& rep) {
  INFO(to_string(rep));
  CHECK(rep.pass);
}

std::vector<Rational> rats(std::initializer_list<const char*> v) {
  std::vector<Rational> out;
  for (const char* s : v) out.push_back(RS(s));
  return out;
}

std::vector<Rational> head(const std::vector<Rational>& v, std::size_t k) { return {v.begin(), v.begin() + k}; }

// Values from tests/oracle/quintic_oracle.py
const auto kN0 = rats({"2875", "4876875/8", "8564575000/27", "15517926796875/64", "229305888887648"});
const auto kN1 = rats({"2875/12", "407125/8", "243388750/9", "382833353125/16", "93716201322650/3"});
const auto kn0 = rats({"2875", "609250", "317206375", "242467530000", "229305888887625"});
const auto kn1 = rats({"0", "0", "609250", "3721431625", "12129909700200"});

}  // namespace

TEST_CASE("reduced genus 1 series") {
  for (int n : {1, 2, 4}) CHECK(theorem2_series(HyperSpec::make(n, 8)).is_zero());
  const HyperSpec s5 = HyperSpec::make(5, 4);
  const QSeries G = theorem2_series(s5);
  CHECK(G[0] == 0);
  const auto inv = extract_invariants(G, s5);
  CHECK(inv.size() == 4);
  CHECK(inv[0] == 0);
  CHECK(extract_invariants(QSeries(4), s5) == std::vector<Rational>(4, Rational(0)));
  // with a zero mirror map the re-expansion is the identity
  const QSeries r = series({0, 3, R(-1, 2), 7});
  CHECK(change_variable_expT(r, QSeries(3)) == r);
}

TEST_CASE("quintic genus 0") {
  const Genus0Result g = genus0_quintic(10);
  require_pass(g.report);
  CHECK(g.N0.size() == 10);
  CHECK(head(g.N0, 5) == kN0);
  CHECK(g.N0[1] == 609250 + R(2875, 8));
  CHECK(g.N0[2] == 317206375 + R(2875, 27));
}

TEST_CASE("quintic genus 1") {
  const Genus1Result g = theorem1_quintic(8);
  require_pass(g.report);
  CHECK(head(g.N1, 5) == kN1);
  CHECK(g.N1[0] == R(2875, 12));
}

TEST_CASE("reduced and standard columns") {
  GWTable t = GWTable::empty(5, 1);
  t.rows[0].GW1_reduced = 0;
  t.rows[0].N0 = 2875;
  const GWTable s = reduced_to_standard(t);
  CHECK(*s.rows[0].N1 == R(2875, 12));
  CHECK(standard_to_reduced(s).rows[0].GW1_reduced == t.rows[0].GW1_reduced);

  GWTable z = GWTable::empty(5, 3);
  for (GWRow& r : z.rows) r.GW1_reduced = r.N0 = 0;
  for (const GWRow& r : reduced_to_standard(z).rows) CHECK(*r.N1 == 0);

  GWTable missing = GWTable::empty(5, 2);
  missing.rows[0].GW1_reduced = 1;
  try {
    reduced_to_standard(missing);
    FAIL("expected MissingColumn");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingColumn);
  }
}

TEST_CASE("instanton numbers") {
  CHECK(divisor_sum(1) == 1);
  CHECK(divisor_sum(2) == 3);
  CHECK(divisor_sum(4) == 7);
  CHECK(divisor_sum(6) == 12);

  const GWTable t = compute_table(HyperSpec::make(5, 5));
  for (int d = 1; d <= 5; ++d) {
    const GWRow& r = t.rows[d - 1];
    CHECK(*r.N0 == kN0[d - 1]);
    CHECK(*r.N1 == kN1[d - 1]);
    CHECK(*r.n0 == kn0[d - 1]);
    CHECK(*r.n1 == kn1[d - 1]);
    CHECK(*r.N1 == *r.GW1_reduced + *r.N0 / 12);
  }
  GWTable no_n0 = GWTable::empty(5, 2);
  for (GWRow& r : no_n0.rows) r.N1 = 1;
  CHECK_THROWS_AS(instanton_inversion(no_n0, 1), Error);
}

TEST_CASE("property: instanton inversions round trip on random tables") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int D = 1 + trial % 12;
    GWTable t = GWTable::empty(5, D);
    for (GWRow& r : t.rows) {
      r.N0 = random_rational(rng, 50);
      r.N1 = random_rational(rng, 50);
    }
    const GWTable inv = instanton_inversion(instanton_inversion(t, 0), 1);
    CHECK(instanton_forward(instanton_forward(inv, 0), 1) == inv);
    GWTable base = t;
    for (GWRow& r : base.rows) r.N0.reset(), r.N1.reset(), r.n0 = random_rational(rng), r.n1 = random_rational(rng);
    const GWTable fwd = instanton_forward(instanton_forward(base, 0), 1);
    CHECK(instanton_inversion(instanton_inversion(fwd, 0), 1) == fwd);
  }
}

TEST_CASE("fixed-locus decomposition") {
  const HyperSpec s5 = HyperSpec::make(5, 6);
  CHECK(B_tilde_residue(s5, BPoint::MinusN)[0] == 0);
  CHECK(A_tilde_form1(s5) == A_tilde_form2(s5));
  const IdentityReport r3 = theorem3_check(HyperSpec::make(3, 6));
  require_pass(r3);
  CHECK_THROWS_AS(theorem3_check(HyperSpec::make(1, 4)), Error);
}

TEST_CASE("property: fixed-locus decomposition for n = 2..6") {
  for (int n = 2; n <= 6; ++n) require_pass(theorem3_check(HyperSpec::make(n, 6)));
}

TEST_CASE("cubic and quartic") {
  require_pass(special_cases(9));
  const HyperSpec s3 = HyperSpec::make(3, 9);
  const auto inv = extract_invariants(theorem2_series(s3), s3);
  for (int d = 1; d <= 9; ++d)
    if (d % 3) CHECK(inv[d - 1] == 0);
  CHECK(inv[2] == 1);
  CHECK(inv[5] == R(3, 2));
  CHECK(inv[8] == R(4, 3));
  for (const Rational& x : extract_invariants(theorem2_series(HyperSpec::make(4, 8)), HyperSpec::make(4, 8)))
    CHECK(x == 0);
  CHECK_THROWS_AS(special_cases(2), Error);
}

TEST_CASE("bridge series") {
  const HyperSpec s = HyperSpec::make(5, 6);
  const USeriesRF Z = bridge_Z(s);
  CHECK(Z[0] == RatFunc(Rational(0)));
  const Regularization reg = regularize(Z);
  CHECK(reg.regular);
  CHECK(reg.eta == mu(s, MuMethod::ClosedForm));
  require_pass(bridge_check(s));
  require_pass(bridge_check(HyperSpec::make(3, 5)));
}

TEST_CASE("cohomology-component closure detects a wrong table") {
  const Genus0Result g = genus0_quintic(8);
  require_pass(appendix_b_closure(g.N0, 8));
  std::vector<Rational> bad = g.N0;
  bad[3] += 1;
  const IdentityReport rep = appendix_b_closure(bad, 8);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.first_failure);
  CHECK(rep.first_failure->find("H^2, t^0 at degree 4") != std::string::npos);
}

TEST_CASE("table serialization") {
  const GWTable t = compute_table(HyperSpec::make(5, 3));
  const std::string js = to_json(t);
  CHECK(js.find("\"N0\": \"4876875/8\"") != std::string::npos);
  CHECK(table_from_json(js) == t);
  CHECK(to_json(table_from_json(js)) == js);
  const std::string csv = to_csv(t);
  CHECK(csv.rfind("n,truncation,d,N0,GW1_reduced,N1,n0,n1\n", 0) == 0);
  CHECK(table_from_csv(csv) == t);

  const GWTable r = compute_table(HyperSpec::make(3, 6));
  CHECK(table_from_json(to_json(r)) == r);
  CHECK(table_from_csv(to_csv(r)) == r);
  CHECK(to_csv(r).find("N0") == std::string::npos);
  CHECK_THROWS_AS(table_from_json("{\"n\": 5}"), Error);
  CHECK_THROWS_AS(table_from_csv("a,b\n"), Error);
}

// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hypergw/error.hpp"
#include "hypergw/gw_invariants.hpp"
#include "hypergw/suites.hpp"

using namespace hypergw;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
  void require(const IdentityReport& r) { require(r.pass, to_string(r)); }
};

Rational q(const char* s) { return parse_rational(s); }

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs >= limit_s) {
    out.ok = false;
    out.note = "over the time limit";
  }
  if (!out.ok) ++failures;
  std::printf("criterion %d: %s  %s  (%.2f s, limit %.0f s)%s%s\n", id, out.ok ? "PASS" : "FAIL", title, secs, limit_s,
              out.note.empty() ? "" : "  -- ", out.note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "quintic genus-0 table and instanton numbers", 5, [](Outcome& o) {
    const Genus0Result g = genus0_quintic(10);
    o.require(g.report);
    o.require(g.N0[0] == 2875 && g.N0[1] == q("4876875/8") && g.N0[2] == q("8564575000/27"), "N0 values");
    GWTable t = GWTable::empty(5, 10);
    for (int d = 1; d <= 10; ++d) t.rows[d - 1].N0 = g.N0[d - 1];
    const GWTable inv = instanton_inversion(t, 0);
    o.require(*inv.rows[0].n0 == 2875 && *inv.rows[1].n0 == 609250 && *inv.rows[2].n0 == 317206375, "n0 values");
  });

  criterion(2, "quintic genus 1: N1, n1 and agreement with the reduced formula", 10, [](Outcome& o) {
    const Genus1Result g1 = theorem1_quintic(8);
    o.require(g1.report);
    o.require(g1.N1[0] == q("2875/12"), "N1 at d=1");
    const Genus0Result g0 = genus0_quintic(8);
    GWTable t = GWTable::empty(5, 8);
    for (int d = 1; d <= 8; ++d) {
      t.rows[d - 1].N0 = g0.N0[d - 1];
      t.rows[d - 1].N1 = g1.N1[d - 1];
    }
    const GWTable inv = instanton_inversion(instanton_inversion(t, 0), 1);
    o.require(*inv.rows[0].n1 == 0 && *inv.rows[1].n1 == 0, "n1 at d=1,2");
    const HyperSpec s = HyperSpec::make(5, 8);
    const auto reduced = extract_invariants(theorem2_series(s), s);
    for (int d = 1; d <= 8; ++d)
      o.require(g1.N1[d - 1] == reduced[d - 1] + g0.N0[d - 1] / 12, "degree " + std::to_string(d));
  });

  criterion(3, "degenerate dimensions n = 2, 3, 4", 5, [](Outcome& o) {
    o.require(theorem2_series(HyperSpec::make(2, 8)).is_zero(), "n=2 series is not zero");
    const HyperSpec s4 = HyperSpec::make(4, 8);
    for (const Rational& x : extract_invariants(theorem2_series(s4), s4)) o.require(x == 0, "n=4 invariant nonzero");
    const HyperSpec s3 = HyperSpec::make(3, 9);
    const auto inv = extract_invariants(theorem2_series(s3), s3);
    for (int d = 1; d <= 9; ++d) {
      const Rational expected = d % 3 ? Rational(0) : Rational(divisor_sum(d / 3)) / (d / 3);
      o.require(inv[d - 1] == expected, "n=3 degree " + std::to_string(d));
    }
    o.require(special_cases(9));
  });

  criterion(4, "I-tower structure and diagonal identities, n = 2..8, q^10", 30, [](Outcome& o) {
    for (int n = 2; n <= 8; ++n) {
      const HyperSpec s = HyperSpec::make(n, 10);
      o.require(diagonal_identities(s));
      o.require(prop31_structure(s));
    }
  });

  criterion(5, "mu routes and regularity of Q, n = 2..8, q^8", 30, [](Outcome& o) {
    for (int n = 2; n <= 8; ++n) o.require(prop32_check(HyperSpec::make(n, 8)));
  });

  criterion(6, "regularization suite", 20, [](Outcome& o) {
    for (const IdentityReport& r : regularization_examples(6)) o.require(r);
    const HyperSpec s = HyperSpec::make(5, 6);
    o.require(regularize(bridge_Z(s)).eta == mu(s, MuMethod::ClosedForm), "eta differs from mu");
    o.require(bridge_check(s));
  });

  criterion(7, "residue sums, product residues, binomial identities", 10, [](Outcome& o) {
    o.require(residue_theorem_random(200, 1234));
    o.require(lemma_2_4_random(200, 42));
    for (const IdentityReport& r : appendix_a_exhaustive(8)) o.require(r);
  });

  criterion(8, "fixed-locus decomposition and theta identities, n = 3..6, q^6", 60, [](Outcome& o) {
    for (int n = 3; n <= 6; ++n) {
      const HyperSpec s = HyperSpec::make(n, 6);
      o.require(theorem3_check(s));
      o.require(theta_and_3_44(s));
    }
  });

  criterion(9, "H^0..H^3 reconstruction from N0 to q^8", 5, [](Outcome& o) {
    o.require(appendix_b_closure(genus0_quintic(8).N0, 8));
  });

  return failures == 0 ? 0 : 1;
}

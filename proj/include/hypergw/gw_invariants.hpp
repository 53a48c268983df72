#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypergw/hypergeometric.hpp"
#include "hypergw/residue.hpp"

namespace hypergw {

struct GWRow {
  int d = 0;
  std::optional<Rational> N0;
  std::optional<Rational> GW1_reduced;
  std::optional<Rational> N1;
  std::optional<Rational> n0;
  std::optional<Rational> n1;

  friend bool operator==(const GWRow&, const GWRow&) = default;
};

/// Per-degree invariants for d = 1..truncation. Columns are optional;
/// only the quintic has the genus-0 and standard genus-1 ones.
struct GWTable {
  int n = 0;
  int truncation = 0;
  std::vector<GWRow> rows;

  static GWTable empty(int n, int D);
  friend bool operator==(const GWTable&, const GWTable&) = default;
};

/// Right-hand side of the reduced genus-1 formula as a series in q = e^t.
QSeries theorem2_series(const HyperSpec& spec);
/// Coefficients d = 1..D of G after re-expanding in Q = e^T via the mirror map.
std::vector<Rational> extract_invariants(const QSeries& G, const HyperSpec& spec);

/// sum_d N_d Q^d written back as a series in q, Q = q exp(g(q)).
QSeries in_q(const std::vector<Rational>& coeffs, const QSeries& g);

struct Genus0Result {
  std::vector<Rational> N0;  // d = 1..D
  IdentityReport report;     // t-cancellation and the H^0..H^3 reconstruction
};
/// Quintic genus-0 invariants. Throws NotTFree if the t-powers of
/// (5/2)(J1 J2 - J3) - (5/6) T^3 fail to cancel.
Genus0Result genus0_quintic(int D);

struct Genus1Result {
  std::vector<Rational> N1;  // d = 1..D
  IdentityReport report;     // agreement with the reduced formula and the J3 identity
};
Genus1Result theorem1_quintic(int D);

/// N1 = GW1_reduced + N0/12; the inverse direction fills GW1_reduced.
GWTable reduced_to_standard(const GWTable& table);
GWTable standard_to_reduced(const GWTable& table);

/// sigma_r, the sum of the divisors of r.
Integer divisor_sum(int r);
/// genus 0: n0 from N0; genus 1: n1 from N1 and n0.
GWTable instanton_inversion(const GWTable& table, int genus);
/// The forward substitutions, rebuilding N0 (genus 0) or N1 (genus 1).
GWTable instanton_forward(const GWTable& table, int genus);

/// Complete table for (n, D): reduced genus 1 for every n, all columns for n = 5.
GWTable compute_table(const HyperSpec& spec);

/// The two forms of A~, residue-route B~ against the closed forms and
/// A~ + B~ against the reduced genus-1 series.
IdentityReport theorem3_check(const HyperSpec& spec);

/// Individual pieces, exposed for inspection.
QSeries A_tilde_form1(const HyperSpec& spec);
QSeries A_tilde_form2(const HyperSpec& spec);
QSeries B_tilde_closed(const HyperSpec& spec);
enum class BPoint { Zero, MinusN, Infinity };
QSeries B_tilde_residue(const HyperSpec& spec, BPoint z);

/// Cubic (n = 3) and quartic (n = 4) degenerations.
IdentityReport special_cases(int D);

/// F(1/h, q)/I_{0,0} - 1 as a u-series (u = q).
USeriesRF bridge_Z(const HyperSpec& spec);
/// regularize(bridge_Z) against mu and Phi0/I00, plus the regularizability identities.
IdentityReport bridge_check(const HyperSpec& spec);

/// J_0..J_3 rebuilt from N0 and T, against I_{0,k}/I_{0,0}.
IdentityReport appendix_b_closure(const std::vector<Rational>& N0, int D);

/// JSON and CSV with rationals as "p/q" strings.
std::string to_json(const GWTable& t);
GWTable table_from_json(const std::string& text);
std::string to_csv(const GWTable& t);
GWTable table_from_csv(const std::string& text);
std::string to_text(const GWTable& t);

}  // namespace hypergw

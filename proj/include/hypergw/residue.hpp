#pragma once

#include <vector>

#include "hypergw/laurent.hpp"
#include "hypergw/ratfunc.hpp"
#include "hypergw/report.hpp"
#include "hypergw/useries.hpp"

namespace hypergw {

/// Coefficient of (h - a)^{-1} in the expansion of f at a; 0 at regular points.
Rational residue_at(const RatFunc& f, const Rational& a);
/// -Res_{w=0} w^{-2} f(1/w)
Rational residue_at_infinity(const RatFunc& f);
/// Order of the pole of f at a (0 when f is regular there).
int pole_order_at(const RatFunc& f, const Rational& a);

/// Result of splitting 1 + Z = exp(eta/h) (1 + Zbar).
struct Regularization {
  QSeries eta;              // fixed-point iteration on the Laurent coefficients of Z
  QSeries eta_from_log;     // Res_{h=0} log(1 + Z)
  USeriesRF zbar;
  bool regular = false;     // every u-coefficient of zbar is regular at h = 0

  /// Zbar(0, u); requires regular.
  QSeries zbar_at_zero() const;
};

/// Z must have no u^0 term (NonzeroConstant otherwise). eta is the unique
/// series making Res_{h=0} Zbar vanish; when Zbar comes out regular it must
/// also equal Res log(1+Z), and a disagreement raises Internal.
Regularization regularize(const USeriesRF& Z);

enum class Lemma22Form { Eq23, Eq24 };

/// Both sides of the regularizability identities, per u-degree up to the
/// truncation of Z. The Eq24 form needs a regularizable Z.
IdentityReport check_lemma_2_2(const USeriesRF& Z, int a, Lemma22Form which);
/// Res_{h=0} h^a Z against the expression in eta and the Taylor
/// coefficients of Zbar; needs a regularizable Z.
IdentityReport check_eq_2_6(const USeriesRF& Z, int a);

/// Residue at 0 of a product of functions with at most simple poles at 0,
/// against the subset expansion. The empty subset contributes 0.
IdentityReport lemma_2_4_check(const std::vector<RatFunc>& fs);

/// Binomial identities used in the proof of the regularizability lemma.
IdentityReport appendix_a1(int b, const std::vector<int>& qs);
IdentityReport appendix_a2(int q, int a);
IdentityReport appendix_a3(int q, int a, int s);

}  // namespace hypergw

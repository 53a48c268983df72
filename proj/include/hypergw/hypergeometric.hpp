#pragma once

#include <vector>

#include "hypergw/laurent.hpp"
#include "hypergw/report.hpp"
#include "hypergw/tpoly.hpp"
#include "hypergw/useries.hpp"
#include "hypergw/wseries.hpp"

namespace hypergw {

/// Degree n of the hypersurface, q-truncation D, w-truncation W >= n.
struct HyperSpec {
  int n = 5;
  int D = 8;
  int W = 7;

  /// W defaults to n + 2.
  static HyperSpec make(int n, int D, int W = -1);
  void validate() const;
};

/// F(w, q) = sum_d q^d prod_{r<=nd} (nw + r) / prod_{r<=d} ((w + r)^n - w^n)
WSeries build_F(const HyperSpec& spec);

/// The tower I_{p,k}(t) for 0 <= p <= k <= kmax (kmax <= W).
class ITable {
 public:
  explicit ITable(const HyperSpec& spec, int kmax = -1);

  int kmax() const noexcept { return kmax_; }
  const TPoly& I(int p, int k) const;
  /// I_{p,p}, t-free with constant term 1.
  const QSeries& diagonal(int p) const;

 private:
  int kmax_;
  std::vector<std::vector<TPoly>> rows_;  // rows_[p][k - p]
  std::vector<QSeries> diag_;
};

TPoly I_series(const HyperSpec& spec, int p, int k);

/// T - t = I_{0,1}/I_{0,0} - t
QSeries mirror_map(const HyperSpec& spec);

enum class MuMethod { ClosedForm, Residue };
QSeries mu(const HyperSpec& spec, MuMethod method);

/// (1 - n^n q)^{-1/n} and the h-derivative series Phi_1.
QSeries phi0(const HyperSpec& spec);
QSeries phi1(const HyperSpec& spec);
/// L = (1 - n^n q)^{1/n}
QSeries L_series(const HyperSpec& spec);

/// prod_{r<=nd} (n + r h), the numerator of F_d(1/h) after clearing h.
Poly kernel_num_hbar(int n, int d);
/// prod_{r<=d} ((1 + r h)^n - 1)
Poly kernel_den_hbar(int n, int d);
/// F_d(1/h) as a reduced rational function of h.
RatFunc kernel_hbar(int n, int d);

/// F(1/h, q) expanded at h = at; degree d gets the window up to top - d.
LaurentUSeries kernel_laurent(const HyperSpec& spec, const Rational& at, int top);

/// exp(-mu/h) F(1/h, q), coefficientwise regular at h = 0. Throws
/// RegularityViolation if some coefficient has a pole there.
USeriesRF q_hbar_series(const HyperSpec& spec);
RatFunc q_hbar(const HyperSpec& spec, int d);

/// Y_p(h, 1, q) for 0 <= p <= n-1, Y_0 = F(1/h, q)/I_{0,0}.
USeriesRF y_p(const HyperSpec& spec, int p);
/// Laurent windows of Y_p at h = at (degree d up to top - d).
LaurentUSeries y_p_laurent(const HyperSpec& spec, int p, const Rational& at, int top);

/// Structure of the I-tower: t-degrees, the decomposition series and
/// their constant terms, for 0 <= p <= k <= n-1.
IdentityReport prop31_structure(const HyperSpec& spec);
/// The product, weighted product and symmetry identities of the diagonal
/// series, plus the consistency of deriving one from the other two.
IdentityReport diagonal_identities(const HyperSpec& spec);
/// Both routes to mu, regularity of every Q-coefficient, its value and
/// h-derivative at h = 0.
IdentityReport prop32_check(const HyperSpec& spec);
/// Y_1 = (dt/dT + h d/dT) Y
IdentityReport y1_mirror_check(const HyperSpec& spec);
/// Theta^(0), Theta^(1) from residues against the closed products, and
/// the double residue of the symmetrized Y-product.
IdentityReport theta_and_3_44(const HyperSpec& spec);

}  // namespace hypergw

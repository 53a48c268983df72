#include "hypergw/ratfunc.hpp"

#include "hypergw/error.hpp"

namespace hypergw {

RatFunc RatFunc::from_reduced(Poly num, Poly den) {
  RatFunc out;
  if (num.is_zero()) return out;
  const Rational lead = den.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num = inv * num;
    den = inv * den;
  }
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivByNonUnit, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  *this = from_reduced(std::move(num), std::move(den));
}

RatFunc RatFunc::variable() { return RatFunc(Poly::monomial(1)); }

int RatFunc::pole_order_at_zero() const {
  if (num_.is_zero()) return 0;
  return den_.valuation() - num_.valuation();
}

Rational RatFunc::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d == 0) throw Error(ErrorKind::DivByNonUnit, "evaluation at a pole x = " + to_string(x));
  return num_(x) / d;
}

RatFunc operator-(const RatFunc& a) { return Rational(-1) * a; }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den() == b.den()) return RatFunc(a.num() + b.num(), a.den());
  const Poly g = gcd(a.den(), b.den());
  if (g.degree() == 0) return RatFunc::from_reduced(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
  const Poly ca = exact_quotient(a.den(), g);
  const Poly cb = exact_quotient(b.den(), g);
  // Only factors of g can cancel against the new numerator.
  Poly num = a.num() * cb + b.num() * ca;
  if (num.is_zero()) return RatFunc();
  Poly den = ca * b.den();
  const Poly h = gcd(num, g);
  if (h.degree() > 0) {
    num = exact_quotient(num, h);
    den = exact_quotient(den, h);
  }
  return RatFunc::from_reduced(std::move(num), std::move(den));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  Poly an = a.num(), ad = a.den(), bn = b.num(), bd = b.den();
  if (ad.degree() > 0 && bn.degree() > 0) {
    const Poly g = gcd(bn, ad);
    if (g.degree() > 0) {
      bn = exact_quotient(bn, g);
      ad = exact_quotient(ad, g);
    }
  }
  if (bd.degree() > 0 && an.degree() > 0) {
    const Poly g = gcd(an, bd);
    if (g.degree() > 0) {
      an = exact_quotient(an, g);
      bd = exact_quotient(bd, g);
    }
  }
  return RatFunc::from_reduced(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivByNonUnit, "division by the zero rational function");
  return a * RatFunc(b.den(), b.num());
}

RatFunc operator*(const Rational& c, const RatFunc& a) {
  if (c == 0 || a.is_zero()) return RatFunc();
  return RatFunc(c * a.num(), a.den());
}

RatFunc shift(const RatFunc& f, const Rational& s) {
  return RatFunc(taylor_shift(f.num(), s), taylor_shift(f.den(), s));
}

RatFunc invert_variable(const RatFunc& f) {
  if (f.is_zero()) return f;
  // num(1/x)/den(1/x) = x^{dd-dn} rev(num)/rev(den)
  const int dn = f.num().degree(), dd = f.den().degree();
  Poly num = reversed(f.num(), dn), den = reversed(f.den(), dd);
  if (dd > dn)
    num = num * Poly::monomial(dd - dn);
  else if (dn > dd)
    den = den * Poly::monomial(dn - dd);
  return RatFunc(std::move(num), std::move(den));
}

RatFunc derivative(const RatFunc& f) {
  if (f.is_zero()) return f;
  return RatFunc(derivative(f.num()) * f.den() - f.num() * derivative(f.den()), f.den() * f.den());
}

std::string to_string(const RatFunc& f, const std::string& var) {
  if (f.den().degree() == 0) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace hypergw

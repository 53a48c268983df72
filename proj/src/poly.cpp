#include "hypergw/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hypergw/error.hpp"

namespace hypergw {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly Poly::monomial(int degree, const Rational& c) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Rational>& roots) {
  Poly out(Rational(1));
  for (const auto& r : roots) out = out * Poly(std::vector<Rational>{-r, 1});
  return out;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

int Poly::valuation() const {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "valuation of the zero polynomial");
  int k = 0;
  while (coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly operator-(const Poly& a) { return Rational(-1) * a; }

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1));
  for (int i = 0; i <= a.degree(); ++i) out[i] += a.coefficients()[i];
  for (int i = 0; i <= b.degree(); ++i) out[i] += b.coefficients()[i];
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1));
  for (int i = 0; i <= a.degree(); ++i) out[i] += a.coefficients()[i];
  for (int i = 0; i <= b.degree(); ++i) out[i] -= b.coefficients()[i];
  return Poly(std::move(out));
}

namespace {

// Integer image c * a with c the lcm of the coefficient denominators.
std::vector<Integer> clear_denominators(const Poly& a, Integer& scale) {
  scale = 1;
  for (const auto& c : a.coefficients()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(a.coefficients().size());
  for (const auto& c : a.coefficients()) out.push_back(c.get_num() * (scale / c.get_den()));
  return out;
}

Integer content(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::vector<Integer> primitive_part(std::vector<Integer> v) {
  Integer g = content(v);
  if (g != 0 && g != 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (!v.empty() && v.back() < 0)
    for (auto& c : v) c = -c;
  return v;
}

std::vector<Integer> int_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

// v * mul / div
Poly from_integers(const std::vector<Integer>& v, const Integer& div, const Integer& mul = 1) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(make_rational(c * mul, div));
  return Poly(std::move(out));
}

// Exact division over Z; false if h does not divide f.
bool int_divides(const std::vector<Integer>& h, std::vector<Integer> f, std::vector<Integer>* quotient) {
  if (h.empty()) return false;
  const std::size_t dh = h.size() - 1;
  if (f.size() < h.size()) {
    const bool zero = std::all_of(f.begin(), f.end(), [](const Integer& c) { return c == 0; });
    if (zero && quotient) quotient->clear();
    return zero;
  }
  std::vector<Integer> q(f.size() - dh);
  Integer r;
  for (std::size_t k = f.size(); k-- > dh;) {
    if (f[k] == 0) continue;
    mpz_tdiv_qr(q[k - dh].get_mpz_t(), r.get_mpz_t(), f[k].get_mpz_t(), h.back().get_mpz_t());
    if (r != 0) return false;
    for (std::size_t j = 0; j <= dh; ++j)
      mpz_submul(f[k - dh + j].get_mpz_t(), q[k - dh].get_mpz_t(), h[j].get_mpz_t());
  }
  for (std::size_t k = 0; k < dh; ++k)
    if (f[k] != 0) return false;
  if (quotient) *quotient = std::move(q);
  return true;
}

Integer eval(const std::vector<Integer>& f, const Integer& x) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Integer max_norm(const std::vector<Integer>& f) {
  Integer m = 0;
  for (const auto& c : f)
    if (abs(c) > m) m = abs(c);
  return m;
}

// Heuristic gcd of primitive integer polynomials (evaluate at a large point,
// take the integer gcd, read the polynomial back from its balanced base-x
// digits, and accept it only if it divides both inputs).
bool heuristic_gcd(const std::vector<Integer>& f, const std::vector<Integer>& g, std::vector<Integer>& out) {
  const Integer fn = max_norm(f), gn = max_norm(g);
  Integer b = 2 * std::min(fn, gn) + 29;
  Integer lead_bound =
      2 * std::min(Integer(fn / abs(f.back())), Integer(gn / abs(g.back()))) + 2;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), b.get_mpz_t());
  Integer x = std::max(std::min(b, Integer(99 * root)), lead_bound);
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Integer fx = eval(f, x), gx = eval(g, x);
    if (fx != 0 && gx != 0) {
      Integer h;
      mpz_gcd(h.get_mpz_t(), fx.get_mpz_t(), gx.get_mpz_t());
      std::vector<Integer> cand;
      Integer half = x / 2;
      while (h != 0) {
        Integer digit;
        mpz_fdiv_r(digit.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
        if (digit > half) digit -= x;
        cand.push_back(digit);
        h = (h - digit) / x;
      }
      cand = primitive_part(std::move(cand));
      if (!cand.empty() && int_divides(cand, f, nullptr) && int_divides(cand, g, nullptr)) {
        out = std::move(cand);
        return true;
      }
    }
    Integer r1, r2;
    mpz_sqrt(r1.get_mpz_t(), x.get_mpz_t());
    mpz_sqrt(r2.get_mpz_t(), r1.get_mpz_t());
    x = 73794 * x * r2 / 27011;
  }
  return false;
}

Poly euclid_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.degree() == 0) return a.coefficients()[0] * b;
  if (b.degree() == 0) return b.coefficients()[0] * a;
  // Multiply the integer images; one normalization per output coefficient.
  Integer sa, sb;
  auto ia = clear_denominators(a, sa);
  auto ib = clear_denominators(b, sb);
  return from_integers(int_mul(ia, ib), sa * sb);
}

Poly operator*(const Rational& c, const Poly& a) {
  if (c == 0) return Poly();
  std::vector<Rational> out = a.coefficients();
  for (auto& x : out) x *= c;
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivByNonUnit, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational inv_lead = 1 / b.leading();
  const int db = b.degree();
  Rational tmp;
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    const Rational c = rem[k] * inv_lead;
    quo[k - db] = c;
    for (int j = 0; j <= db; ++j) {
      tmp = c * b.coefficients()[j];
      rem[k - db + j] -= tmp;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivByNonUnit, "polynomial division by zero");
  if (a.is_zero()) return Poly();
  Integer sa, sb;
  auto ia = clear_denominators(a, sa);
  auto ib = clear_denominators(b, sb);
  // Make the divisor primitive so the integer division is exact.
  Integer cb = content(ib);
  for (auto& c : ib) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
  std::vector<Integer> q;
  if (int_divides(ib, ia, &q)) return from_integers(q, sa * cb, sb);
  auto [quo, rem] = divmod(a, b);
  if (!rem.is_zero()) throw Error(ErrorKind::Internal, "exact_quotient: divisor does not divide");
  return quo;
}

Poly monic(const Poly& a) {
  if (a.is_zero()) return a;
  return (1 / a.leading()) * a;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.degree() == 0 || b.degree() == 0) return Poly(Rational(1));
  // Common power of x first; the heuristic is fastest on the rest.
  const int shift = std::min(a.valuation(), b.valuation());
  Integer s;
  auto ia = clear_denominators(a, s);
  auto ib = clear_denominators(b, s);
  ia = primitive_part(std::vector<Integer>(ia.begin() + a.valuation(), ia.end()));
  ib = primitive_part(std::vector<Integer>(ib.begin() + b.valuation(), ib.end()));
  Poly core;
  if (ia.size() == 1 || ib.size() == 1) {
    core = Poly(Rational(1));
  } else {
    std::vector<Integer> g;
    if (heuristic_gcd(ia, ib, g))
      core = from_integers(g, 1);
    else
      core = euclid_gcd(from_integers(ia, 1), from_integers(ib, 1));
  }
  return monic(core * Poly::monomial(shift));
}

Poly derivative(const Poly& a) {
  if (a.degree() <= 0) return Poly();
  std::vector<Rational> out(static_cast<std::size_t>(a.degree()));
  for (int k = 1; k <= a.degree(); ++k) out[k - 1] = k * a.coefficients()[k];
  return Poly(std::move(out));
}

Poly taylor_shift(const Poly& a, const Rational& s) {
  if (s == 0 || a.degree() <= 0) return a;
  // Horner with (x + s).
  Poly out;
  const Poly lin(std::vector<Rational>{s, 1});
  for (int k = a.degree(); k >= 0; --k) out = out * lin + Poly(a.coefficients()[k]);
  return out;
}

Poly reversed(const Poly& a, int deg) {
  if (deg < a.degree()) throw Error(ErrorKind::InvalidArgument, "reversal degree below polynomial degree");
  std::vector<Rational> out(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= a.degree(); ++k) out[deg - k] = a.coefficients()[k];
  return Poly(std::move(out));
}

Poly truncated(const Poly& a, int k) {
  if (k <= 0) return Poly();
  if (a.degree() < k) return a;
  return Poly(std::vector<Rational>(a.coefficients().begin(), a.coefficients().begin() + k));
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficients()[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << to_string(c);
    } else {
      if (c != 1) os << to_string(c) << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace hypergw

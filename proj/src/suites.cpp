#include "hypergw/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "hypergw/error.hpp"
#include "hypergw/gw_invariants.hpp"
#include "hypergw/residue.hpp"

namespace hypergw {

namespace {

Rational random_rational(std::mt19937& rng, int height) {
  std::uniform_int_distribution<int> num(-height, height), den(1, height);
  return make_rational(num(rng), den(rng));
}

// A random rational function together with the list of its possible poles.
RatFunc random_ratfunc(std::mt19937& rng, std::vector<Rational>& poles) {
  std::uniform_int_distribution<int> count(1, 4), mult(1, 3), deg(0, 6);
  Poly den(Rational(1));
  poles.clear();
  const int k = count(rng);
  while (static_cast<int>(poles.size()) < k) {
    const Rational a = random_rational(rng, 6);
    if (std::find(poles.begin(), poles.end(), a) != poles.end()) continue;
    poles.push_back(a);
    for (int m = mult(rng); m > 0; --m) den = den * Poly(std::vector<Rational>{-a, 1});
  }
  std::vector<Rational> num;
  for (int i = deg(rng); i >= 0; --i) num.push_back(random_rational(rng, 9));
  return RatFunc(Poly(num), den);
}

// Z = exp(c u/h) (1 + u h) - 1
USeriesRF constructed(const Rational& c, int D) {
  const RatFunc h = RatFunc::variable();
  USeriesRF E(D), onep(D);
  Rational coef = 1;
  for (int d = 0; d <= D; ++d) {
    if (d > 0) coef = coef * c / d;
    E[d] = RatFunc(Poly(coef), Poly::monomial(d));
  }
  onep[0] = RatFunc(Rational(1));
  onep[1] = h;
  USeriesRF Z = E * onep;
  Z[0] = RatFunc(Rational(0));
  return Z;
}

IdentityReport merged(const std::string& name, const std::vector<std::pair<std::string, std::string>>& params,
                      const std::vector<IdentityReport>& parts) {
  IdentityReport out = merge(name, params, parts);
  int top = 0;
  for (const IdentityReport& p : parts) top = std::max(top, p.max_order_checked);
  out.max_order_checked = top;
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"props31",   "props32",   "regularize", "residues",
                                              "appendixA", "appendixB", "theorem3",   "special"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& v = suite_names();
  return std::find(v.begin(), v.end(), name) != v.end();
}

IdentityReport residue_theorem_random(int samples, unsigned seed) {
  std::mt19937 rng(seed);
  IdentityReport rep("residue theorem", {{"samples", std::to_string(samples)}}, 0);
  for (int i = 0; i < samples; ++i) {
    std::vector<Rational> poles;
    const RatFunc f = random_ratfunc(rng, poles);
    Rational total = residue_at_infinity(f);
    for (const Rational& a : poles) total += residue_at(f, a);
    rep.expect(total == 0, "sample " + std::to_string(i) + ": " + to_string(f) + " sums to " + to_string(total));
  }
  return rep;
}

IdentityReport lemma_2_4_random(int samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> size(1, 5);
  const RatFunc h = RatFunc::variable();
  std::vector<IdentityReport> parts;
  for (int i = 0; i < samples; ++i) {
    std::vector<RatFunc> fs;
    for (int e = size(rng); e > 0; --e) {
      std::vector<Rational> poles;
      RatFunc g = random_ratfunc(rng, poles);
      if (!g.regular_at_zero()) g = RatFunc(g.num(), g.den() + Poly(Rational(1)));
      if (!g.regular_at_zero()) g = RatFunc(Rational(1));
      fs.push_back(g + RatFunc(random_rational(rng, 5)) / h);
    }
    parts.push_back(lemma_2_4_check(fs));
  }
  return merged("lemma 2.4", {{"samples", std::to_string(samples)}}, parts);
}

std::vector<IdentityReport> appendix_a_exhaustive(int bound) {
  const std::vector<std::pair<std::string, std::string>> params{{"bound", std::to_string(bound)}};
  std::vector<IdentityReport> a1, a2, a3;
  for (int q = 0; q <= bound; ++q)
    for (int a = 0; a <= bound; ++a) {
      if (a >= 1) a2.push_back(appendix_a2(q, a));
      for (int s = 0; s <= bound; ++s) a3.push_back(appendix_a3(q, a, s));
    }
  std::vector<int> qs;
  std::function<void(int)> walk = [&](int len) {
    if (static_cast<int>(qs.size()) == len) {
      for (int b = 0; b <= bound; ++b) a1.push_back(appendix_a1(b, qs));
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      qs.push_back(v);
      walk(len);
      qs.pop_back();
    }
  };
  for (int len = 0; len <= 4; ++len) walk(len);
  return {merged("(A.1)", params, a1), merged("(A.2)", params, a2), merged("(A.3)", params, a3)};
}

std::vector<IdentityReport> regularization_examples(int D) {
  const std::vector<std::pair<std::string, std::string>> params{{"c", "3/2"}};
  const USeriesRF Z = constructed(make_rational(3, 2), D);
  std::vector<IdentityReport> e23, e24, e26;
  for (int a = 0; a <= 4; ++a) e23.push_back(check_lemma_2_2(Z, a, Lemma22Form::Eq23));
  for (int a = 0; a <= 3; ++a) e24.push_back(check_lemma_2_2(Z, a, Lemma22Form::Eq24));
  for (int a = -3; a <= 3; ++a) e26.push_back(check_eq_2_6(Z, a));

  USeriesRF bad(D);
  bad[1] = RatFunc(Poly(Rational(1)), Poly::monomial(1));
  IdentityReport counter("(2.3) rejects u/h", {}, D);
  bool detected = false;
  for (int a = 0; a <= 4 && !detected; ++a) detected = !check_lemma_2_2(bad, a, Lemma22Form::Eq23).pass;
  counter.expect(detected, "no failure of (2.3) for a = 0..4");

  return {merged("(2.3) constructed, a=0..4", params, e23), merged("(2.4) constructed, a=0..3", params, e24),
          merged("(2.6) constructed, a=-3..3", params, e26), counter};
}

std::vector<IdentityReport> run_suite(const std::string& name, const HyperSpec& spec) {
  spec.validate();
  const int D = spec.D;
  if (name == "props31") return {prop31_structure(spec), diagonal_identities(spec)};
  if (name == "props32") {
    std::vector<IdentityReport> out{prop32_check(spec)};
    if (spec.n >= 2) out.push_back(y1_mirror_check(spec));
    return out;
  }
  if (name == "regularize") {
    std::vector<IdentityReport> out = regularization_examples(D);
    if (spec.n >= 2) out.push_back(bridge_check(spec));
    return out;
  }
  if (name == "residues") return {residue_theorem_random(200, 1234), lemma_2_4_random(200, 42)};
  if (name == "appendixA") return appendix_a_exhaustive(D);
  if (name == "appendixB") return {genus0_quintic(D).report};
  if (name == "theorem3") {
    if (spec.n < 2) throw Error(ErrorKind::InvalidArgument, "theorem3 suite needs n >= 2");
    return {theorem3_check(spec), theta_and_3_44(spec)};
  }
  if (name == "special") return {special_cases(std::max(D, 3))};
  throw Error(ErrorKind::InvalidArgument, "unknown suite " + name);
}

}  // namespace hypergw

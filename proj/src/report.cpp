#include "hypergw/report.hpp"

#include <algorithm>
#include <sstream>

namespace hypergw {

void IdentityReport::fail(const std::string& locus) {
  if (pass) first_failure = locus;
  pass = false;
}

void IdentityReport::expect(bool ok, const std::string& locus) {
  if (!ok) fail(locus);
}

void IdentityReport::expect_equal(const QSeries& lhs, const QSeries& rhs, const std::string& what) {
  const int top = std::min({max_order_checked, lhs.order(), rhs.order()});
  if (top < max_order_checked) {
    fail(what + ": only available to order " + std::to_string(top));
    return;
  }
  for (int d = 0; d <= top; ++d) {
    if (lhs[d] != rhs[d]) {
      fail(what + " at degree " + std::to_string(d) + ": " + to_string(lhs[d]) + " vs " + to_string(rhs[d]));
      return;
    }
  }
}

IdentityReport merge(std::string name, std::vector<std::pair<std::string, std::string>> params,
                     const std::vector<IdentityReport>& parts) {
  int order = 0;
  for (const auto& p : parts) order = std::max(order, p.max_order_checked);
  IdentityReport out(std::move(name), std::move(params), order);
  for (const auto& p : parts)
    if (!p.pass) out.fail(p.identity + ": " + p.first_failure.value_or("failed"));
  return out;
}

std::string to_string(const IdentityReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.identity;
  if (!r.parameters.empty()) {
    os << " [";
    for (std::size_t i = 0; i < r.parameters.size(); ++i)
      os << (i ? ", " : "") << r.parameters[i].first << "=" << r.parameters[i].second;
    os << "]";
  }
  os << " order " << r.max_order_checked;
  if (r.first_failure) os << " -- " << *r.first_failure;
  return os.str();
}

}  // namespace hypergw

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypergw/qseries.hpp"

namespace hypergw {

/// Outcome of one exact identity check.
struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  int max_order_checked = 0;
  bool pass = true;
  std::optional<std::string> first_failure;

  IdentityReport() = default;
  IdentityReport(std::string name, std::vector<std::pair<std::string, std::string>> params, int max_order)
      : identity(std::move(name)), parameters(std::move(params)), max_order_checked(max_order) {}

  /// Records a failure; only the first locus is kept.
  void fail(const std::string& locus);
  /// Compares two series coefficientwise up to max_order_checked.
  void expect_equal(const QSeries& lhs, const QSeries& rhs, const std::string& what);
  void expect(bool ok, const std::string& locus);
};

/// Combines a group of reports into one that passes iff all of them do.
IdentityReport merge(std::string name, std::vector<std::pair<std::string, std::string>> params,
                     const std::vector<IdentityReport>& parts);

std::string to_string(const IdentityReport& r);

}  // namespace hypergw

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hypergw/error.hpp"
#include "hypergw/gw_invariants.hpp"
#include "hypergw/suites.hpp"

using namespace hypergw;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

struct RunConfig {
  int n = 5;
  int order = -1;  // command-specific default
  std::vector<std::string> suites;
  std::string format = "text";
  std::string output;
  std::string what;
};

std::vector<std::string> split_commas(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const std::string& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

int emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) {
    std::cerr << "cannot write " << cfg.output << "\n";
    return kUsage;
  }
  f << text;
  return 0;
}

std::string report_line(const IdentityReport& r) { return to_string(r) + "\n"; }

json report_json(const IdentityReport& r) {
  json j;
  j["identity"] = r.identity;
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["max_order_checked"] = r.max_order_checked;
  j["pass"] = r.pass;
  j["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
  return j;
}

int cmd_invariants(const RunConfig& cfg) {
  const GWTable t = compute_table(HyperSpec::make(cfg.n, cfg.order));
  if (cfg.format == "json") return emit(cfg, to_json(t));
  if (cfg.format == "csv") return emit(cfg, to_csv(t));
  return emit(cfg, to_text(t));
}

int cmd_verify(const RunConfig& cfg) {
  const HyperSpec spec = HyperSpec::make(cfg.n, cfg.order);
  const std::vector<std::string> suites = cfg.suites.empty() ? suite_names() : cfg.suites;
  std::vector<std::pair<std::string, IdentityReport>> results;
  for (const std::string& s : suites)
    for (IdentityReport& r : run_suite(s, spec)) results.emplace_back(s, std::move(r));

  bool all = true;
  std::string out;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& [s, r] : results) {
      json j = report_json(r);
      j["suite"] = s;
      arr.push_back(std::move(j));
      all = all && r.pass;
    }
    out = arr.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    out = "suite,identity,max_order_checked,pass,first_failure\n";
    for (const auto& [s, r] : results) {
      std::string locus = r.first_failure.value_or("");
      for (char& c : locus)
        if (c == ',' || c == '\n') c = ';';
      out += s + "," + r.identity + "," + std::to_string(r.max_order_checked) + "," + (r.pass ? "pass" : "fail") +
             "," + locus + "\n";
      all = all && r.pass;
    }
  } else {
    for (const auto& [s, r] : results) {
      out += "[" + s + "] " + report_line(r);
      all = all && r.pass;
    }
  }
  if (const int rc = emit(cfg, out)) return rc;
  return all ? 0 : kFailure;
}

std::vector<std::pair<std::string, std::string>> dump_lines(const RunConfig& cfg) {
  const HyperSpec spec = HyperSpec::make(cfg.n, cfg.order);
  std::vector<std::pair<std::string, std::string>> lines;
  auto add_series = [&](const QSeries& s) {
    for (int d = 0; d <= s.order(); ++d) lines.emplace_back("q^" + std::to_string(d), to_string(s[d]));
  };
  if (cfg.what == "I") {
    add_series(ITable(spec, 0).diagonal(0));
  } else if (cfg.what == "mirror") {
    add_series(mirror_map(spec));
  } else if (cfg.what == "mu") {
    add_series(mu(spec, MuMethod::ClosedForm));
  } else if (cfg.what == "theorem2_rhs") {
    add_series(theorem2_series(spec));
  } else if (cfg.what == "F") {
    const WSeries F = build_F(spec);
    for (int k = 0; k <= F.w_order(); ++k)
      for (int d = 0; d <= F.q_order(); ++d)
        lines.emplace_back("w^" + std::to_string(k) + " q^" + std::to_string(d), to_string(F[k][d]));
  } else if (cfg.what == "Q") {
    const USeriesRF Q = q_hbar_series(spec);
    for (int d = 0; d <= Q.order(); ++d) lines.emplace_back("q^" + std::to_string(d), to_string(Q[d]));
  }
  return lines;
}

int cmd_dump(const RunConfig& cfg) {
  const auto lines = dump_lines(cfg);
  std::string out;
  if (cfg.format == "json") {
    json coeffs = json::object();
    for (const auto& [k, v] : lines) coeffs[k] = v;
    json doc;
    doc["series"] = cfg.what;
    doc["n"] = cfg.n;
    doc["truncation"] = cfg.order;
    doc["coefficients"] = coeffs;
    out = doc.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    out = "term,value\n";
    for (const auto& [k, v] : lines) out += k + "," + v + "\n";
  } else {
    for (const auto& [k, v] : lines) out += k + ": " + v + "\n";
  }
  return emit(cfg, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact genus-0 and genus-1 invariants of projective Calabi-Yau hypersurfaces"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::vector<std::string> raw_suites;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "hypersurface degree n >= 1")->check(CLI::Range(1, 1000000));
    sub->add_option("--order", cfg.order, "q-truncation D >= 1")->check(CLI::Range(1, 1000000));
    sub->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", cfg.output, "write to this file instead of standard output");
  };
  CLI::App* inv = app.add_subcommand("invariants", "per-degree invariant table");
  common(inv);
  CLI::App* ver = app.add_subcommand("verify", "run identity suites");
  common(ver);
  ver->add_option("--suite", raw_suites, "comma-separated suites (default: all)");
  CLI::App* dmp = app.add_subcommand("dump", "print an intermediate series");
  common(dmp);
  dmp->add_option("--what", cfg.what, "I, mirror, mu, F, Q or theorem2_rhs")
      ->required()
      ->check(CLI::IsMember({"I", "mirror", "mu", "F", "Q", "theorem2_rhs"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  cfg.suites = split_commas(raw_suites);
  for (const std::string& s : cfg.suites)
    if (!is_suite(s)) {
      std::cerr << "unknown suite '" << s << "'; expected one of:";
      for (const std::string& k : suite_names()) std::cerr << ' ' << k;
      std::cerr << "\n";
      return kUsage;
    }
  if (cfg.order < 0) cfg.order = inv->parsed() && cfg.n == 5 ? 10 : 8;

  try {
    if (inv->parsed()) return cmd_invariants(cfg);
    if (ver->parsed()) return cmd_verify(cfg);
    return cmd_dump(cfg);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? kUsage : kFailure;
  }
}

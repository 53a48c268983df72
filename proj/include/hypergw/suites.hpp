#pragma once

#include <string>
#include <vector>

#include "hypergw/hypergeometric.hpp"
#include "hypergw/report.hpp"

namespace hypergw {

/// props31, props32, regularize, residues, appendixA, appendixB, theorem3, special
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one named suite at (n, D). Suites that do not depend on n ignore it;
/// appendixB always uses the quintic. Randomized parts use fixed seeds.
std::vector<IdentityReport> run_suite(const std::string& name, const HyperSpec& spec);

/// Individual pieces of the suites, shared with the acceptance harness.
IdentityReport residue_theorem_random(int samples, unsigned seed);
IdentityReport lemma_2_4_random(int samples, unsigned seed);
std::vector<IdentityReport> appendix_a_exhaustive(int bound);
std::vector<IdentityReport> regularization_examples(int D);

}  // namespace hypergw

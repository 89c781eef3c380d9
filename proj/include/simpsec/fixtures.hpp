#pragma once
// Shipped fixtures: the canonical demonstration models, the machine-checked
// derivation library, and the default formula pools. The JSON files under
// fixtures/ are generated from these builders and must stay in sync.

#include <string>
#include <utility>
#include <vector>

#include "simpsec/model.hpp"
#include "simpsec/proof.hpp"

namespace simpsec {

// Named derivations of the core derived principles. Every entry checks; the
// test suite fails otherwise.
std::vector<Derivation> fixture_library();

// 3x3 two-agent grid with one secret event at the first a-vertex.
RawModel running_model();

// Same geometry; the secret's own truth set is not designated again, so
// iterated secrecy fails.
RawModel nonnormal1_model();

// Same geometry with three atoms; secrecy fails closure under conjunction,
// distribution over implication, and monotone weakening.
RawModel nonnormal2_model();

// Small models over agents plus the reserved colour, for the share pipeline.
std::vector<std::pair<std::string, RawModel>> aux_fixture_models();

// Twelve formulas of modal depth at most two over atoms {p, r}, agents {a, b}.
std::vector<std::string> default_pool();

// Subset of the pool mentioning no agent but "a".
std::vector<std::string> single_agent_pool();

// Ten formulas for the share representation checks.
std::vector<std::string> share_pool();

} // namespace simpsec

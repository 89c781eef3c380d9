#pragma once
// Satisfaction over secrecy models: point checks, whole-model truth sets and
// validity. The secrecy clause tests the truth set of the body against the
// events designated at the owner's vertex in the current facet, by exact set
// equality.

#include <string>
#include <vector>

#include "simpsec/formula.hpp"
#include "simpsec/model.hpp"

namespace simpsec {

// Direct recursive evaluation at one facet. Truth sets needed by secrecy
// subformulas are memoized for the duration of the call.
bool satisfies(const SecrecyModel& m, int facet, const Formula& f);
bool satisfies(const SecrecyModel& m, const std::string& facet_key, const Formula& f);

// Bottom-up evaluation over all facets; each subformula is visited once.
Bitset truth_set(const SecrecyModel& m, const Formula& f);
std::vector<std::string> truth_set_keys(const SecrecyModel& m, const Formula& f);

bool valid_on(const SecrecyModel& m, const Formula& f);

// Throws UnknownAgent if the formula mentions an agent the model lacks; the
// reserved colour never counts as a model agent.
void require_agents(const SecrecyModel& m, const Formula& f);

} // namespace simpsec

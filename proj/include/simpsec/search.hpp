#pragma once
// Bounded model generation: deterministic enumeration of a documented model
// class, seeded random sampling of general models, and validity checking up
// to the enumerated bound.
//
// The enumerated class keeps countermodel search tractable:
//   - agents are named a, b, c, ... and carry `states` local states each;
//   - facets form the full product grid (or, under the subsets policy, every
//     nonempty subfamily of grid cells);
//   - atom truth sets are unions of first-agent stars, so valuations are
//     decided row by row of the designated owner;
//   - candidate events are the truth sets of boolean atom combinations, each
//     filtered by external uncertainty at its vertex;
//   - at most one vertex carries a nonempty event family per model.
// Random sampling is not restricted this way: valuations are arbitrary and
// events are rejection-sampled against the frame condition.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "simpsec/formula.hpp"
#include "simpsec/model.hpp"

namespace simpsec {

enum class FacetPolicy { FullGrid, AllNonemptySubsets };

struct SearchBounds {
    int agents = 2;
    int states = 3; // local states per agent
    std::vector<std::string> atoms = {"p", "r"};
    int max_events = 2; // events per vertex
    FacetPolicy policy = FacetPolicy::FullGrid;
    std::uint64_t cap = 10'000'000; // refuse enumerations estimated above this
};

struct SearchResult {
    bool valid; // no countermodel within the enumerated class
    std::optional<SecrecyModel> countermodel;
    std::string facet; // falsifying facet key
    std::uint64_t models_examined = 0;
    double elapsed_seconds = 0.0;
};

// Upper estimate of the stream length; enumerate_models refuses to start
// when it exceeds the cap.
std::uint64_t estimate_model_count(const SearchBounds& b);

// Deterministic stream over the documented class. The visitor returns false
// to stop early. Throws BoundsTooLarge or BadBounds.
void enumerate_models(const SearchBounds& b,
                      const std::function<bool(const SecrecyModel&)>& visit);

// Seeded general-model sampler: grid subfamily, arbitrary valuation, events
// rejection-sampled against external uncertainty (a slot that keeps failing
// is dropped rather than failing the call). Identical seeds give identical
// models.
SecrecyModel random_model(std::uint64_t seed, const SearchBounds& b);

// Valid-up-to-bound iff the formula holds on every enumerated model;
// otherwise the first countermodel in stream order. Atoms mentioned by the
// formula extend the bounds' atom list.
SearchResult check_validity_bounded(const Formula& f, SearchBounds b);

} // namespace simpsec

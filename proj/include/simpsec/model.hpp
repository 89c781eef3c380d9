#pragma once
// Secrecy models: a chromatic complex plus a facet valuation and per-vertex
// secrecy neighborhoods, validated against the external-uncertainty frame
// condition. Vertices of the reserved colour "*" never carry neighborhoods
// and never act as blocking agents.

#include <map>
#include <string>
#include <vector>

#include "simpsec/bitset.hpp"
#include "simpsec/complex.hpp"

namespace simpsec {

// A concrete failure of external uncertainty: at the event designated for
// this vertex, the blocked agent has no indistinguishable facet outside it.
struct SNViolation {
    std::string vertex;
    std::vector<std::string> event; // sorted facet keys
    std::string facet;
    std::string blocked_agent;
};

// One chosen witness per (vertex, event, facet, agent) tuple on a valid model.
struct SNWitness {
    std::string vertex;
    std::vector<std::string> event;
    std::string facet;
    std::string agent;
    std::string witness;
};

using Valuation = std::map<std::string, std::vector<std::string>>;
using Neighborhoods = std::map<std::string, std::vector<std::vector<std::string>>>;

struct RawModel {
    RawComplex complex;
    Valuation valuation;         // facet key -> atoms; missing keys mean {}
    Neighborhoods neighborhoods; // vertex -> events as facet-key lists
};

class SecrecyModel {
public:
    // Empty placeholder; real models only come out of the validators below.
    SecrecyModel() = default;

    // Throws ValidationError listing structural defects and every concrete
    // SN violation.
    static SecrecyModel validate(ChromaticComplex complex, const Valuation& valuation,
                                 const Neighborhoods& neighborhoods);
    static SecrecyModel validate(const RawModel& raw);

    // Construction bypassing the SN check, for building rejected candidates
    // in diagnostics and tests. Structure must still be well formed.
    static SecrecyModel assemble_unchecked(ChromaticComplex complex,
                                           const Valuation& valuation,
                                           const Neighborhoods& neighborhoods);

    const ChromaticComplex& complex() const { return complex_; }

    const std::vector<std::string>& facet_atoms(int facet) const {
        return valuation_[facet];
    }
    bool atom_true(int facet, const std::string& atom) const;
    Bitset atom_truth_set(const std::string& atom) const;

    // all atoms appearing in the valuation, sorted unique
    const std::vector<std::string>& atom_names() const { return atom_names_; }

    // events at a vertex, canonically ordered
    const std::vector<Bitset>& neighborhood(int vertex) const {
        return neighborhoods_[vertex];
    }
    const std::vector<Bitset>& neighborhood(const std::string& vertex) const;
    const std::vector<std::vector<Bitset>>& neighborhoods_by_vertex() const {
        return neighborhoods_;
    }
    bool has_events() const;

    // Drops every event that does not contain the star of its vertex.
    // Truth-preserving; idempotent; never adds events.
    SecrecyModel normalize_owner_local() const;

    RawModel to_raw() const;

private:
    ChromaticComplex complex_;
    std::vector<std::vector<std::string>> valuation_; // per facet, sorted atoms
    std::vector<std::vector<Bitset>> neighborhoods_;  // per vertex
    std::vector<std::string> atom_names_;
};

// Empty result iff external uncertainty holds for every designated event.
std::vector<SNViolation> check_sn(const SecrecyModel& m);

// One witness per (vertex, event, star facet, other agent), first facet in
// canonical order. Only meaningful when check_sn is empty.
std::vector<SNWitness> sn_witnesses(const SecrecyModel& m);

} // namespace simpsec

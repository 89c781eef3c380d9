#pragma once
// Share construction: wrap a model with an auxiliary colour, split every
// facet's identity into per-agent residues over Z_m that sum to the facet's
// code, and lift valuation and secrecy neighborhoods along the base map. The
// resulting model is a plain secrecy model over the real agents and agrees
// with the source on every formula.

#include <string>
#include <utility>
#include <vector>

#include "simpsec/formula.hpp"
#include "simpsec/model.hpp"

namespace simpsec {

class AuxModel {
public:
    AuxModel() = default;

    // The model must already carry the reserved colour and pass validation.
    static AuxModel wrap(SecrecyModel m);

    const SecrecyModel& model() const { return model_; }
    const std::vector<std::string>& agents() const { return agents_; } // real only

private:
    SecrecyModel model_;
    std::vector<std::string> agents_;
};

// Adds one fresh reserved-colour vertex per facet; valuation and
// neighborhoods carry over. Throws ReservedColourInUse when the model
// already uses the reserved colour.
AuxModel to_aux(const SecrecyModel& m);

struct ShareAssignment {
    std::vector<std::pair<std::string, int>> shares; // agent -> residue, sorted
};

class ShareModel {
public:
    const SecrecyModel& model() const { return model_; }
    const AuxModel& aux() const { return aux_; }
    int modulus() const { return modulus_; }

    // facet code: the canonical index of an aux facet
    int code(int aux_facet) const { return aux_facet; }

    int base_facet(int share_facet) const { return base_[share_facet]; }
    const std::vector<int>& shares(int share_facet) const { return sigma_[share_facet]; }

    // share facet for a given base facet and residue tuple; -1 when the
    // residues do not sum to the facet code
    int find_facet(int aux_facet, const std::vector<int>& sigma) const;

private:
    friend ShareModel build_share_model(const AuxModel& aux, int modulus);
    ShareModel() = default;

    SecrecyModel model_;
    AuxModel aux_;
    int modulus_ = 0;
    std::vector<int> base_;               // per share facet (canonical order)
    std::vector<std::vector<int>> sigma_; // per share facet, residue per agent
};

// Throws SingleAgent when the aux model has fewer than two real agents and
// ModulusTooSmall when the modulus cannot embed the facets injectively.
ShareModel build_share_model(const AuxModel& aux, int modulus);

struct RepresentationReport {
    struct Disagreement {
        std::string share_facet;
        std::string formula;
        bool aux_value;
        bool share_value;
    };
    std::vector<Disagreement> disagreements;
    std::size_t checks = 0;

    bool ok() const { return disagreements.empty(); }
};

// Compares every pool formula at every share facet against its base facet.
RepresentationReport check_representation(const AuxModel& aux, const ShareModel& sh,
                                          const std::vector<Formula>& pool);

// Residues that place the target facet inside the given agent's star while
// keeping that agent's share fixed. Remaining agents take zero; one chosen
// co-agent absorbs the difference.
ShareAssignment share_completion_witness(const ShareModel& sh,
                                         const std::string& share_facet_key,
                                         const std::string& agent,
                                         const std::string& aux_facet_key);

} // namespace simpsec

#pragma once
// Hilbert-style proof kernel: axiom-scheme instance matching and step-by-step
// derivation checking. The kernel accepts exactly the eight schemes, modus
// ponens, knowledge necessitation, and replacement of equivalents under the
// secrecy operator (which requires the biconditional as a prior step of the
// same derivation).

#include <optional>
#include <string>
#include <vector>

#include "simpsec/formula.hpp"

namespace simpsec {

enum class Scheme { A1, K, T, Four, Five, S1, S2, S4 };

const char* to_string(Scheme s);
std::optional<Scheme> scheme_from_string(const std::string& s);

struct Justification {
    enum class Kind { Axiom, MP, Nec, RE };

    Kind kind;
    Scheme scheme = Scheme::A1; // Axiom
    int i = 0;                  // 1-based step references
    int j = 0;
    std::string agent;          // Nec / RE

    static Justification axiom(Scheme s) { return {Kind::Axiom, s, 0, 0, ""}; }
    static Justification mp(int i, int j) { return {Kind::MP, Scheme::A1, i, j, ""}; }
    static Justification nec(int i, std::string agent) {
        return {Kind::Nec, Scheme::A1, i, 0, std::move(agent)};
    }
    static Justification re(int i, std::string agent) {
        return {Kind::RE, Scheme::A1, i, 0, std::move(agent)};
    }
};

struct Step {
    Formula formula;
    Justification by;
};

struct Derivation {
    std::string name;
    std::vector<Step> steps;

    const Formula& conclusion() const { return steps.back().formula; }
};

enum class StepFailure { ForwardReference, BadAxiomMatch, BadMP, BadNec, BadRE };

const char* to_string(StepFailure f);

struct StepError {
    int index; // 1-based
    StepFailure reason;
    std::string detail;
};

// True iff the formula matches the scheme under some assignment of formulas
// and agents to its metavariables, honouring side conditions. False, never an
// error, on mismatch.
bool check_axiom_instance(Scheme s, const Formula& f);

// First failing step, or nullopt when the whole derivation checks.
std::optional<StepError> check_derivation(const Derivation& d);

} // namespace simpsec

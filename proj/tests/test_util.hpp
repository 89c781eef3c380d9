#pragma once
// Shared helpers for the test suites: a deterministic rng, a random formula
// generator, and the derivation mutation generator.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "simpsec/formula.hpp"
#include "simpsec/proof.hpp"

namespace simpsec::test {

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed ^ 0x6a09e667f3bcc909ULL) {}

    std::uint64_t next() { return engine(); }
    int uniform(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline Formula random_formula(Rng& rng, int depth,
                              const std::vector<std::string>& agents,
                              const std::vector<std::string>& atoms) {
    if (depth <= 0 || rng.uniform(5) == 0) {
        int pick = rng.uniform(static_cast<int>(atoms.size()) + 2);
        if (pick == static_cast<int>(atoms.size())) return Formula::top();
        if (pick == static_cast<int>(atoms.size()) + 1) return Formula::bot();
        return Formula::atom(atoms[static_cast<std::size_t>(pick)]);
    }
    switch (rng.uniform(7)) {
    case 0: return Formula::lnot(random_formula(rng, depth - 1, agents, atoms));
    case 1:
        return Formula::land(random_formula(rng, depth - 1, agents, atoms),
                             random_formula(rng, depth - 1, agents, atoms));
    case 2:
        return Formula::lor(random_formula(rng, depth - 1, agents, atoms),
                            random_formula(rng, depth - 1, agents, atoms));
    case 3:
        return Formula::imp(random_formula(rng, depth - 1, agents, atoms),
                            random_formula(rng, depth - 1, agents, atoms));
    case 4:
        return Formula::iff(random_formula(rng, depth - 1, agents, atoms),
                            random_formula(rng, depth - 1, agents, atoms));
    case 5:
        return Formula::know(agents[static_cast<std::size_t>(
                                 rng.uniform(static_cast<int>(agents.size())))],
                             random_formula(rng, depth - 1, agents, atoms));
    default:
        return Formula::secret(agents[static_cast<std::size_t>(
                                   rng.uniform(static_cast<int>(agents.size())))],
                               random_formula(rng, depth - 1, agents, atoms));
    }
}

// A single-step corruption of a fixture derivation that provably fails at the
// mutated index. Returns the mutated derivation and the index.
struct Mutation {
    Derivation derivation;
    int index;
};

inline Mutation random_mutation(Rng& rng, const std::vector<Derivation>& fixtures) {
    for (;;) {
        const Derivation& base =
            fixtures[static_cast<std::size_t>(rng.uniform(static_cast<int>(fixtures.size())))];
        Derivation d = base;
        int k = 1 + rng.uniform(static_cast<int>(d.steps.size()));
        Step& step = d.steps[static_cast<std::size_t>(k - 1)];

        switch (rng.uniform(3)) {
        case 0: // negate the step's formula
            step.formula = Formula::lnot(step.formula);
            break;
        case 1: // swap modus ponens operands
            if (step.by.kind != Justification::Kind::MP) continue;
            std::swap(step.by.i, step.by.j);
            break;
        default: // reassign the axiom scheme
            if (step.by.kind != Justification::Kind::Axiom) continue;
            {
                Scheme all[] = {Scheme::A1, Scheme::K,  Scheme::T,  Scheme::Four,
                                Scheme::Five, Scheme::S1, Scheme::S2, Scheme::S4};
                Scheme pick = all[rng.uniform(8)];
                if (pick == step.by.scheme) continue;
                step.by.scheme = pick;
            }
            break;
        }

        auto err = check_derivation(d);
        if (err && err->index == k) return {std::move(d), k};
        // coincidentally still valid at k, or the formula check tripped a
        // limit; draw again
    }
}

} // namespace simpsec::test

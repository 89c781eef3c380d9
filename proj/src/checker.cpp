#include "simpsec/checker.hpp"

#include <unordered_map>

namespace simpsec {

void require_agents(const SecrecyModel& m, const Formula& f) {
    for (const auto& a : f.agents()) {
        int idx = m.complex().agent_index(a);
        if (idx < 0 || a == kAuxColour)
            throw Error(ErrorKind::UnknownAgent, "unknown agent '" + a + "'");
    }
}

namespace {

bool event_designated(const SecrecyModel& m, int vertex, const Bitset& set) {
    for (const Bitset& event : m.neighborhood(vertex))
        if (event == set) return true;
    return false;
}

struct Evaluator {
    const SecrecyModel& m;
    std::unordered_map<Formula, Bitset, FormulaHash> cache;

    const Bitset& whole_set(const Formula& f) {
        auto it = cache.find(f);
        if (it != cache.end()) return it->second;
        Bitset bits(m.complex().facet_count());
        for (std::size_t x = 0; x < m.complex().facet_count(); ++x)
            if (sat(static_cast<int>(x), f)) bits.set(x);
        return cache.emplace(f, std::move(bits)).first->second;
    }

    bool sat(int x, const Formula& f) {
        using K = Formula::Kind;
        switch (f.kind()) {
        case K::Atom: return m.atom_true(x, f.label());
        case K::Top: return true;
        case K::Bot: return false;
        case K::Not: return !sat(x, f.lhs());
        case K::And: return sat(x, f.lhs()) && sat(x, f.rhs());
        case K::Or: return sat(x, f.lhs()) || sat(x, f.rhs());
        case K::Imp: return !sat(x, f.lhs()) || sat(x, f.rhs());
        case K::Iff: return sat(x, f.lhs()) == sat(x, f.rhs());
        case K::Know: {
            int v = m.complex().vertex_of_colour(x, m.complex().require_agent(f.label()));
            for (int y : m.complex().star(v))
                if (!sat(y, f.lhs())) return false;
            return true;
        }
        case K::Secret: {
            int v = m.complex().vertex_of_colour(x, m.complex().require_agent(f.label()));
            for (int y : m.complex().star(v))
                if (!sat(y, f.lhs())) return false;
            return event_designated(m, v, whole_set(f.lhs()));
        }
        }
        return false; // unreachable
    }
};

} // namespace

bool satisfies(const SecrecyModel& m, int facet, const Formula& f) {
    require_agents(m, f);
    Evaluator ev{m, {}};
    return ev.sat(facet, f);
}

bool satisfies(const SecrecyModel& m, const std::string& facet_key, const Formula& f) {
    return satisfies(m, m.complex().require_facet(facet_key), f);
}

Bitset truth_set(const SecrecyModel& m, const Formula& f) {
    require_agents(m, f);
    const ChromaticComplex& c = m.complex();
    std::size_t n = c.facet_count();

    std::unordered_map<Formula, Bitset, FormulaHash> sets;
    for (const Formula& g : subformulas(f)) {
        using K = Formula::Kind;
        Bitset bits(n);
        switch (g.kind()) {
        case K::Atom:
            bits = m.atom_truth_set(g.label());
            break;
        case K::Top:
            bits = Bitset::full(n);
            break;
        case K::Bot:
            break;
        case K::Not:
            bits = sets.at(g.lhs()).complement();
            break;
        case K::And:
            bits = sets.at(g.lhs());
            bits &= sets.at(g.rhs());
            break;
        case K::Or:
            bits = sets.at(g.lhs());
            bits |= sets.at(g.rhs());
            break;
        case K::Imp:
            bits = sets.at(g.lhs()).complement();
            bits |= sets.at(g.rhs());
            break;
        case K::Iff: {
            const Bitset& l = sets.at(g.lhs());
            const Bitset& r = sets.at(g.rhs());
            for (std::size_t x = 0; x < n; ++x)
                if (l.test(x) == r.test(x)) bits.set(x);
            break;
        }
        case K::Know:
        case K::Secret: {
            // stars of same-coloured vertices partition the facets, so the
            // truth value is constant across each block
            int a = c.require_agent(g.label());
            const Bitset& body = sets.at(g.lhs());
            for (std::size_t v = 0; v < c.vertex_count(); ++v) {
                if (c.vertex_colour(static_cast<int>(v)) != a) continue;
                const Bitset& star = c.star_bits(static_cast<int>(v));
                if (!star.is_subset_of(body)) continue;
                if (g.kind() == K::Secret &&
                    !event_designated(m, static_cast<int>(v), body))
                    continue;
                bits |= star;
            }
            break;
        }
        }
        sets.emplace(g, std::move(bits));
    }
    return sets.at(f);
}

std::vector<std::string> truth_set_keys(const SecrecyModel& m, const Formula& f) {
    Bitset bits = truth_set(m, f);
    std::vector<std::string> keys;
    for (std::size_t x : bits.members())
        keys.push_back(m.complex().facet_key(static_cast<int>(x)));
    return keys;
}

bool valid_on(const SecrecyModel& m, const Formula& f) {
    return truth_set(m, f) == Bitset::full(m.complex().facet_count());
}

} // namespace simpsec

#include "simpsec/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "simpsec/checker.hpp"

namespace simpsec {

namespace {

constexpr std::uint64_t kSaturated = UINT64_MAX;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) out = sat_mul(out, base);
    return out;
}

std::uint64_t sat_choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        out = sat_mul(out, n - i);
        out /= i + 1;
    }
    return out;
}

std::vector<std::string> make_agent_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return names;
}

void check_bounds(const SearchBounds& b) {
    if (b.agents < 1 || b.agents > 26)
        throw Error(ErrorKind::BadBounds, "agent count must lie in [1, 26]");
    if (b.states < 1 || b.states > 16)
        throw Error(ErrorKind::BadBounds, "state count must lie in [1, 16]");
    if (b.max_events < 0)
        throw Error(ErrorKind::BadBounds, "max events must be nonnegative");
    std::set<std::string> seen;
    for (const auto& atom : b.atoms) {
        if (!is_atom_token(atom))
            throw Error(ErrorKind::BadBounds, "bad atom name '" + atom + "'");
        if (!seen.insert(atom).second)
            throw Error(ErrorKind::BadBounds, "duplicate atom '" + atom + "'");
    }
}

// (SN) for a single candidate event at a single vertex; the frame condition
// quantifies per event, so per-event filtering is exact.
bool sn_admissible(const ChromaticComplex& c, int vertex, const Bitset& event) {
    int owner = c.vertex_colour(vertex);
    std::vector<int> others;
    for (const auto& name : c.real_agents()) {
        int a = c.agent_index(name);
        if (a != owner) others.push_back(a);
    }
    for (int x : c.star(vertex)) {
        for (int b : others) {
            bool witness = false;
            for (int y : c.star(c.vertex_of_colour(x, b)))
                if (!event.test(static_cast<std::size_t>(y))) {
                    witness = true;
                    break;
                }
            if (!witness) return false;
        }
    }
    return true;
}

// distinct truth sets of boolean combinations of the atoms: all unions of
// atom-profile equivalence classes, in canonical order
std::vector<Bitset> combination_events(const ChromaticComplex& c,
                                       const std::vector<Bitset>& atom_sets) {
    std::size_t n = c.facet_count();
    std::map<std::vector<bool>, Bitset> classes;
    for (std::size_t f = 0; f < n; ++f) {
        std::vector<bool> profile;
        profile.reserve(atom_sets.size());
        for (const Bitset& s : atom_sets) profile.push_back(s.test(f));
        classes.try_emplace(std::move(profile), Bitset(n)).first->second.set(f);
    }
    std::vector<Bitset> blocks;
    for (auto& [profile, bits] : classes) blocks.push_back(std::move(bits));
    if (blocks.size() > 20)
        throw Error(ErrorKind::BoundsTooLarge,
                    "too many atom-profile classes for event enumeration");

    std::set<Bitset> pool;
    for (std::uint32_t mask = 0; mask < (1u << blocks.size()); ++mask) {
        Bitset u(n);
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if ((mask >> i) & 1u) u |= blocks[i];
        pool.insert(std::move(u));
    }
    return {pool.begin(), pool.end()};
}

std::vector<std::string> event_to_keys(const ChromaticComplex& c, const Bitset& event) {
    std::vector<std::string> keys;
    for (std::size_t f : event.members()) keys.push_back(c.facet_key(static_cast<int>(f)));
    return keys;
}

struct GridCell {
    std::vector<int> state; // per agent
};

std::vector<GridCell> grid_cells(int agents, const std::vector<int>& states) {
    std::vector<GridCell> cells;
    GridCell cur{std::vector<int>(static_cast<std::size_t>(agents), 0)};
    while (true) {
        cells.push_back(cur);
        int i = 0;
        while (i < agents && ++cur.state[static_cast<std::size_t>(i)] ==
                                 states[static_cast<std::size_t>(i)])
            cur.state[static_cast<std::size_t>(i++)] = 0;
        if (i == agents) break;
    }
    return cells;
}

std::string state_vertex(const std::string& agent, int state) {
    return agent + std::to_string(state);
}

RawComplex family_complex(const std::vector<std::string>& names,
                          const std::vector<GridCell>& cells,
                          const std::vector<std::size_t>& picked) {
    RawComplex raw;
    raw.agents = names;
    std::set<std::pair<std::string, std::string>> used;
    for (std::size_t idx : picked) {
        std::vector<std::string> facet;
        for (std::size_t i = 0; i < names.size(); ++i) {
            std::string v = state_vertex(names[i], cells[idx].state[i]);
            used.emplace(v, names[i]);
            facet.push_back(std::move(v));
        }
        raw.facets.push_back(std::move(facet));
    }
    for (const auto& [v, colour] : used) raw.vertices.emplace_back(v, colour);
    return raw;
}

} // namespace

std::uint64_t estimate_model_count(const SearchBounds& b) {
    check_bounds(b);
    std::uint64_t cells = sat_pow(static_cast<std::uint64_t>(b.states),
                                  static_cast<std::uint64_t>(b.agents));
    std::uint64_t families = 1;
    if (b.policy == FacetPolicy::AllNonemptySubsets) {
        if (cells >= 63) return kSaturated;
        families = (std::uint64_t{1} << cells) - 1;
    }
    std::uint64_t valuations =
        sat_pow(std::uint64_t{1} << b.states, static_cast<std::uint64_t>(b.atoms.size()));
    std::uint64_t pool = std::uint64_t{1} << b.states; // combination events bound
    std::uint64_t per_vertex = 0;
    for (int s = 1; s <= b.max_events; ++s)
        per_vertex = sat_add(per_vertex, sat_choose(pool, static_cast<std::uint64_t>(s)));
    std::uint64_t vertices = sat_mul(static_cast<std::uint64_t>(b.agents),
                                     static_cast<std::uint64_t>(b.states));
    std::uint64_t choices = sat_add(1, sat_mul(vertices, per_vertex));
    return sat_mul(families, sat_mul(valuations, choices));
}

void enumerate_models(const SearchBounds& b,
                      const std::function<bool(const SecrecyModel&)>& visit) {
    check_bounds(b);
    std::uint64_t estimate = estimate_model_count(b);
    if (estimate > b.cap)
        throw Error(ErrorKind::BoundsTooLarge,
                    "estimated stream length " +
                        (estimate == kSaturated ? std::string("overflows")
                                                : std::to_string(estimate)) +
                        " exceeds the cap of " + std::to_string(b.cap));

    std::vector<std::string> names = make_agent_names(b.agents);
    std::vector<std::string> atoms = b.atoms;
    std::sort(atoms.begin(), atoms.end());
    std::vector<int> states(static_cast<std::size_t>(b.agents), b.states);
    std::vector<GridCell> cells = grid_cells(b.agents, states);

    std::vector<std::vector<std::size_t>> families;
    if (b.policy == FacetPolicy::FullGrid) {
        std::vector<std::size_t> all(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) all[i] = i;
        families.push_back(std::move(all));
    } else {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cells.size()); ++mask) {
            std::vector<std::size_t> picked;
            for (std::size_t i = 0; i < cells.size(); ++i)
                if ((mask >> i) & 1u) picked.push_back(i);
            families.push_back(std::move(picked));
        }
    }

    for (const auto& picked : families) {
        ChromaticComplex complex =
            ChromaticComplex::validate(family_complex(names, cells, picked));

        // rows of the designated owner (the first agent), canonical order
        std::vector<int> owner_vertices;
        for (std::size_t v = 0; v < complex.vertex_count(); ++v)
            if (complex.vertex_colour_name(static_cast<int>(v)) == names[0])
                owner_vertices.push_back(static_cast<int>(v));
        std::size_t rows = owner_vertices.size();

        // valuations assign each atom a union of owner rows
        std::vector<std::uint32_t> row_mask(atoms.size(), 0);
        while (true) {
            Valuation valuation;
            std::vector<Bitset> atom_sets;
            for (std::size_t ai = 0; ai < atoms.size(); ++ai) {
                Bitset bits(complex.facet_count());
                for (std::size_t ri = 0; ri < rows; ++ri)
                    if ((row_mask[ai] >> ri) & 1u)
                        bits |= complex.star_bits(owner_vertices[ri]);
                atom_sets.push_back(std::move(bits));
            }
            for (std::size_t f = 0; f < complex.facet_count(); ++f) {
                std::vector<std::string> here;
                for (std::size_t ai = 0; ai < atoms.size(); ++ai)
                    if (atom_sets[ai].test(f)) here.push_back(atoms[ai]);
                if (!here.empty())
                    valuation[complex.facet_key(static_cast<int>(f))] = std::move(here);
            }

            if (!visit(SecrecyModel::validate(complex, valuation, {})))
                return;

            std::vector<Bitset> pool = combination_events(complex, atom_sets);
            for (std::size_t v = 0; v < complex.vertex_count(); ++v) {
                std::vector<const Bitset*> admissible;
                for (const Bitset& u : pool)
                    if (sn_admissible(complex, static_cast<int>(v), u))
                        admissible.push_back(&u);

                // nonempty families of up to max_events admissible events at
                // this single vertex, in lexicographic index order
                std::vector<std::size_t> idx;
                std::function<bool(std::size_t, int)> emit =
                    [&](std::size_t from, int remaining) -> bool {
                    if (!idx.empty()) {
                        std::vector<std::vector<std::string>> events;
                        for (std::size_t i : idx)
                            events.push_back(event_to_keys(complex, *admissible[i]));
                        Neighborhoods nbhd;
                        nbhd[complex.vertex_name(static_cast<int>(v))] = events;
                        if (!visit(SecrecyModel::validate(complex, valuation, nbhd)))
                            return false;
                    }
                    if (remaining == 0) return true;
                    for (std::size_t i = from; i < admissible.size(); ++i) {
                        idx.push_back(i);
                        if (!emit(i + 1, remaining - 1)) return false;
                        idx.pop_back();
                    }
                    return true;
                };
                if (!emit(0, b.max_events)) return;
            }

            // odometer over per-atom row masks; rows <= 16 by check_bounds
            std::size_t ai = 0;
            std::uint32_t limit = 1u << rows;
            while (ai < atoms.size() && ++row_mask[ai] == limit) row_mask[ai++] = 0;
            if (ai == atoms.size() || atoms.empty()) break;
        }
    }
}

namespace {

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed ^ 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() { return engine(); }
    int uniform(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    bool chance(int percent) { return uniform(100) < percent; }
};

} // namespace

SecrecyModel random_model(std::uint64_t seed, const SearchBounds& b) {
    check_bounds(b);
    Rng rng(seed);
    std::vector<std::string> names = make_agent_names(b.agents);
    std::vector<std::string> atoms = b.atoms;
    std::sort(atoms.begin(), atoms.end());

    std::vector<int> states(static_cast<std::size_t>(b.agents));
    std::uint64_t total = 1;
    for (auto& s : states) {
        s = 1 + rng.uniform(b.states);
        total = sat_mul(total, static_cast<std::uint64_t>(s));
    }
    if (total > 4096)
        throw Error(ErrorKind::BadBounds, "sampled grid is too large");
    std::vector<GridCell> cells = grid_cells(b.agents, states);

    std::vector<std::size_t> picked;
    if (b.policy == FacetPolicy::AllNonemptySubsets || rng.chance(35)) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (rng.chance(75)) picked.push_back(i);
        if (picked.empty()) picked.push_back(static_cast<std::size_t>(
            rng.uniform(static_cast<int>(cells.size()))));
    } else {
        picked.resize(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) picked[i] = i;
    }

    ChromaticComplex complex =
        ChromaticComplex::validate(family_complex(names, cells, picked));
    std::size_t n = complex.facet_count();

    Valuation valuation;
    std::vector<Bitset> atom_sets(atoms.size(), Bitset(n));
    for (std::size_t f = 0; f < n; ++f) {
        std::vector<std::string> here;
        for (std::size_t ai = 0; ai < atoms.size(); ++ai)
            if (rng.chance(50)) {
                atom_sets[ai].set(f);
                here.push_back(atoms[ai]);
            }
        if (!here.empty()) valuation[complex.facet_key(static_cast<int>(f))] = here;
    }

    std::vector<Bitset> combo_pool;
    if (!atoms.empty() && atoms.size() <= 4)
        combo_pool = combination_events(complex, atom_sets);

    Neighborhoods nbhd;
    for (std::size_t v = 0; v < complex.vertex_count(); ++v) {
        if (b.max_events == 0) break;
        int roll = rng.uniform(100);
        int target = roll < 35 ? 0 : roll < 75 ? 1 : std::min(2, b.max_events);
        if (target == 0) continue;

        std::vector<Bitset> family;
        for (int slot = 0; slot < target; ++slot) {
            for (int attempt = 0; attempt < 24; ++attempt) {
                Bitset u(n);
                int mode = rng.uniform(10);
                if (mode < 5) {
                    u = complex.star_bits(static_cast<int>(v));
                    for (std::size_t f = 0; f < n; ++f)
                        if (!u.test(f) && rng.chance(25)) u.set(f);
                } else if (mode < 8 && !combo_pool.empty()) {
                    u = combo_pool[static_cast<std::size_t>(
                        rng.uniform(static_cast<int>(combo_pool.size())))];
                } else {
                    for (std::size_t f = 0; f < n; ++f)
                        if (rng.chance(50)) u.set(f);
                }
                if (std::find(family.begin(), family.end(), u) != family.end())
                    continue;
                if (sn_admissible(complex, static_cast<int>(v), u)) {
                    family.push_back(std::move(u));
                    break;
                }
            } // unlucky slots are dropped rather than failing the sample
        }
        if (family.empty()) continue;
        std::vector<std::vector<std::string>> events;
        for (const Bitset& u : family) events.push_back(event_to_keys(complex, u));
        nbhd[complex.vertex_name(static_cast<int>(v))] = std::move(events);
    }

    return SecrecyModel::validate(complex, valuation, nbhd);
}

SearchResult check_validity_bounded(const Formula& f, SearchBounds b) {
    std::set<std::string> atom_set(b.atoms.begin(), b.atoms.end());
    for (const auto& atom : f.atoms()) atom_set.insert(atom);
    b.atoms.assign(atom_set.begin(), atom_set.end());

    std::set<std::string> allowed;
    for (const auto& name : make_agent_names(b.agents)) allowed.insert(name);
    for (const auto& agent : f.agents())
        if (!allowed.count(agent))
            throw Error(ErrorKind::BadBounds,
                        "agent '" + agent + "' lies outside the search bounds");

    SearchResult result;
    result.valid = true;
    auto start = std::chrono::steady_clock::now();
    enumerate_models(b, [&](const SecrecyModel& m) {
        ++result.models_examined;
        Bitset truth = truth_set(m, f);
        if (truth == Bitset::full(m.complex().facet_count())) return true;
        int falsifier = -1;
        for (std::size_t x = 0; x < m.complex().facet_count(); ++x)
            if (!truth.test(x)) {
                falsifier = static_cast<int>(x);
                break;
            }
        // confirm through the direct recursive route before reporting
        if (satisfies(m, falsifier, f))
            throw Error(ErrorKind::BadBounds,
                        "internal: evaluation routes disagree on a countermodel");
        result.facet = m.complex().facet_key(falsifier);
        result.valid = false;
        result.countermodel = m;
        return false;
    });
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace simpsec

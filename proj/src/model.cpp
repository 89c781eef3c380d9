#include "simpsec/model.hpp"

#include <algorithm>
#include <set>

#include "simpsec/formula.hpp"

namespace simpsec {

namespace {

std::vector<std::string> event_keys(const ChromaticComplex& c, const Bitset& event) {
    std::vector<std::string> keys;
    for (std::size_t f : event.members())
        keys.push_back(c.facet_key(static_cast<int>(f)));
    return keys;
}

// Core of the frame condition: for every facet of the vertex's star and
// every other real agent there must be an indistinguishable facet outside
// the event.
void sn_scan(const ChromaticComplex& c, const std::vector<std::vector<Bitset>>& nbhd,
             std::vector<SNViolation>* violations, std::vector<SNWitness>* witnesses) {
    std::vector<int> real_agents;
    for (const auto& a : c.real_agents()) real_agents.push_back(c.agent_index(a));

    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        int owner = c.vertex_colour(static_cast<int>(v));
        for (const Bitset& event : nbhd[v]) {
            for (int x : c.star(static_cast<int>(v))) {
                for (int b : real_agents) {
                    if (b == owner) continue;
                    int bv = c.vertex_of_colour(x, b);
                    int witness = -1;
                    for (int y : c.star(bv)) {
                        if (!event.test(static_cast<std::size_t>(y))) {
                            witness = y;
                            break;
                        }
                    }
                    if (witness < 0 && violations)
                        violations->push_back({c.vertex_name(static_cast<int>(v)),
                                               event_keys(c, event), c.facet_key(x),
                                               c.agent_name(b)});
                    if (witness >= 0 && witnesses)
                        witnesses->push_back({c.vertex_name(static_cast<int>(v)),
                                              event_keys(c, event), c.facet_key(x),
                                              c.agent_name(b), c.facet_key(witness)});
                }
            }
        }
    }
}

struct Assembled {
    std::vector<std::vector<std::string>> valuation;
    std::vector<std::vector<Bitset>> neighborhoods;
    std::vector<std::string> atom_names;
};

Assembled assemble(const ChromaticComplex& c, const Valuation& valuation,
                   const Neighborhoods& neighborhoods,
                   std::vector<Diagnostic>& errs) {
    Assembled out;
    out.valuation.assign(c.facet_count(), {});
    std::set<std::string> atoms;
    for (const auto& [key, atom_list] : valuation) {
        int f = c.facet_index(key);
        if (f < 0) {
            errs.push_back({ErrorKind::UnknownFacetInValuation, "facet '" + key + "'"});
            continue;
        }
        std::set<std::string> uniq;
        for (const auto& atom : atom_list) {
            if (!is_atom_token(atom)) {
                errs.push_back({ErrorKind::BadAtomName,
                                "atom '" + atom + "' at facet " + key});
                continue;
            }
            uniq.insert(atom);
            atoms.insert(atom);
        }
        out.valuation[f].assign(uniq.begin(), uniq.end());
    }
    out.atom_names.assign(atoms.begin(), atoms.end());

    out.neighborhoods.assign(c.vertex_count(), {});
    for (const auto& [vname, events] : neighborhoods) {
        int v = c.vertex_index(vname);
        if (v < 0) {
            errs.push_back({ErrorKind::UnknownNeighborhoodVertex, "vertex '" + vname + "'"});
            continue;
        }
        if (c.vertex_colour_name(v) == kAuxColour) {
            errs.push_back({ErrorKind::ReservedVertexNeighborhood,
                            "vertex '" + vname + "' has the reserved colour"});
            continue;
        }
        std::vector<Bitset> family;
        for (const auto& event : events) {
            Bitset bits(c.facet_count());
            bool ok = true;
            for (const auto& key : event) {
                int f = c.facet_index(key);
                if (f < 0) {
                    errs.push_back({ErrorKind::UnknownFacetInEvent,
                                    "facet '" + key + "' in an event at " + vname});
                    ok = false;
                    continue;
                }
                bits.set(static_cast<std::size_t>(f));
            }
            if (ok) family.push_back(std::move(bits));
        }
        std::sort(family.begin(), family.end());
        family.erase(std::unique(family.begin(), family.end()), family.end());
        out.neighborhoods[v] = std::move(family);
    }
    return out;
}

} // namespace

SecrecyModel SecrecyModel::assemble_unchecked(ChromaticComplex complex,
                                              const Valuation& valuation,
                                              const Neighborhoods& neighborhoods) {
    std::vector<Diagnostic> errs;
    Assembled a = assemble(complex, valuation, neighborhoods, errs);
    if (!errs.empty()) throw ValidationError(std::move(errs));
    SecrecyModel m;
    m.complex_ = std::move(complex);
    m.valuation_ = std::move(a.valuation);
    m.neighborhoods_ = std::move(a.neighborhoods);
    m.atom_names_ = std::move(a.atom_names);
    return m;
}

SecrecyModel SecrecyModel::validate(ChromaticComplex complex, const Valuation& valuation,
                                    const Neighborhoods& neighborhoods) {
    std::vector<Diagnostic> errs;
    Assembled a = assemble(complex, valuation, neighborhoods, errs);
    if (!errs.empty()) throw ValidationError(std::move(errs));

    SecrecyModel m;
    m.complex_ = std::move(complex);
    m.valuation_ = std::move(a.valuation);
    m.neighborhoods_ = std::move(a.neighborhoods);
    m.atom_names_ = std::move(a.atom_names);

    std::vector<SNViolation> violations;
    sn_scan(m.complex_, m.neighborhoods_, &violations, nullptr);
    if (!violations.empty()) {
        for (const auto& v : violations) {
            std::string detail = "vertex " + v.vertex + ", facet " + v.facet +
                                 ", blocked agent " + v.blocked_agent + ", event {";
            for (std::size_t i = 0; i < v.event.size(); ++i) {
                if (i) detail += ',';
                detail += v.event[i];
            }
            detail += '}';
            errs.push_back({ErrorKind::SNViolated, std::move(detail)});
        }
        throw ValidationError(std::move(errs));
    }
    return m;
}

SecrecyModel SecrecyModel::validate(const RawModel& raw) {
    return validate(ChromaticComplex::validate(raw.complex), raw.valuation,
                    raw.neighborhoods);
}

bool SecrecyModel::atom_true(int facet, const std::string& atom) const {
    const auto& atoms = valuation_[facet];
    return std::binary_search(atoms.begin(), atoms.end(), atom);
}

Bitset SecrecyModel::atom_truth_set(const std::string& atom) const {
    Bitset b(complex_.facet_count());
    for (std::size_t f = 0; f < complex_.facet_count(); ++f)
        if (atom_true(static_cast<int>(f), atom)) b.set(f);
    return b;
}

const std::vector<Bitset>& SecrecyModel::neighborhood(const std::string& vertex) const {
    return neighborhoods_[complex_.require_vertex(vertex)];
}

bool SecrecyModel::has_events() const {
    for (const auto& family : neighborhoods_)
        if (!family.empty()) return true;
    return false;
}

SecrecyModel SecrecyModel::normalize_owner_local() const {
    SecrecyModel out = *this;
    for (std::size_t v = 0; v < complex_.vertex_count(); ++v) {
        const Bitset& star = complex_.star_bits(static_cast<int>(v));
        std::vector<Bitset> kept;
        for (const Bitset& event : neighborhoods_[v])
            if (star.is_subset_of(event)) kept.push_back(event);
        out.neighborhoods_[v] = std::move(kept);
    }
    return out;
}

RawModel SecrecyModel::to_raw() const {
    RawModel raw;
    raw.complex = complex_.to_raw();
    for (std::size_t f = 0; f < complex_.facet_count(); ++f)
        raw.valuation[complex_.facet_key(static_cast<int>(f))] = valuation_[f];
    for (std::size_t v = 0; v < complex_.vertex_count(); ++v) {
        if (neighborhoods_[v].empty()) continue;
        std::vector<std::vector<std::string>> events;
        for (const Bitset& e : neighborhoods_[v])
            events.push_back(event_keys(complex_, e));
        raw.neighborhoods[complex_.vertex_name(static_cast<int>(v))] = std::move(events);
    }
    return raw;
}

std::vector<SNViolation> check_sn(const SecrecyModel& m) {
    std::vector<SNViolation> out;
    sn_scan(m.complex(), m.neighborhoods_by_vertex(), &out, nullptr);
    return out;
}

std::vector<SNWitness> sn_witnesses(const SecrecyModel& m) {
    std::vector<SNWitness> out;
    sn_scan(m.complex(), m.neighborhoods_by_vertex(), nullptr, &out);
    return out;
}

} // namespace simpsec

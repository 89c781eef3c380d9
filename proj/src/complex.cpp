#include "simpsec/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "simpsec/formula.hpp"

namespace simpsec {

std::string ChromaticComplex::make_facet_key(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    std::string key;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) key += '+';
        key += names[i];
    }
    return key;
}

ChromaticComplex ChromaticComplex::validate(const RawComplex& raw) {
    std::vector<Diagnostic> errs;
    auto bad = [&](ErrorKind k, std::string detail) {
        errs.push_back({k, std::move(detail)});
    };

    // agent set
    std::set<std::string> agent_set;
    for (const auto& a : raw.agents) {
        if (!is_agent_token(a))
            bad(ErrorKind::BadToken, "agent '" + a + "'");
        else if (!agent_set.insert(a).second)
            bad(ErrorKind::DuplicateAgent, "agent '" + a + "'");
    }
    if (agent_set.empty()) bad(ErrorKind::EmptyAgentSet, "no agents declared");

    // vertices and colouring
    std::map<std::string, std::string> colour_of;
    for (const auto& [id, colour] : raw.vertices) {
        if (!is_vertex_token(id)) {
            bad(ErrorKind::BadToken, "vertex '" + id + "'");
            continue;
        }
        if (!agent_set.count(colour))
            bad(ErrorKind::UnknownColour, "vertex '" + id + "' has colour '" + colour + "'");
        if (!colour_of.emplace(id, colour).second)
            bad(ErrorKind::DuplicateVertex, "vertex '" + id + "'");
    }

    if (!errs.empty()) throw ValidationError(std::move(errs));

    // canonicalize facets: sorted vertex lists, keyed, deduplicated
    std::map<std::string, std::vector<std::string>> facet_map;
    for (const auto& facet : raw.facets) {
        if (facet.empty()) {
            bad(ErrorKind::EmptyFacet, "facet []");
            continue;
        }
        std::vector<std::string> names(facet.begin(), facet.end());
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
        bool ok = true;
        for (const auto& v : names) {
            if (!colour_of.count(v)) {
                bad(ErrorKind::UnknownVertexInFacet,
                    "facet contains unknown vertex '" + v + "'");
                ok = false;
            }
        }
        if (!ok) continue;
        std::string key = make_facet_key(names);
        facet_map.emplace(std::move(key), std::move(names));
    }

    // per-facet invariants
    for (const auto& [key, names] : facet_map) {
        std::map<std::string, int> seen_colour;
        for (const auto& v : names) seen_colour[colour_of.at(v)]++;
        for (const auto& [c, n] : seen_colour)
            if (n > 1)
                bad(ErrorKind::DuplicateColourInFacet,
                    "facet " + key + " has " + std::to_string(n) +
                        " vertices of colour '" + c + "'");
        if (seen_colour.size() != agent_set.size()) {
            bool pure = true;
            for (const auto& a : agent_set)
                if (!seen_colour.count(a)) pure = false;
            if (!pure)
                bad(ErrorKind::ImpureFacet, "facet " + key + " misses a colour");
        }
    }

    // maximality: with duplicate-colour errors absent all facets have size
    // |A|, but report subset violations for malformed inputs anyway
    for (auto it = facet_map.begin(); it != facet_map.end(); ++it) {
        for (auto jt = facet_map.begin(); jt != facet_map.end(); ++jt) {
            if (it == jt) continue;
            if (it->second.size() < jt->second.size() &&
                std::includes(jt->second.begin(), jt->second.end(),
                              it->second.begin(), it->second.end()))
                bad(ErrorKind::NonMaximalFacet,
                    "facet " + it->first + " is contained in " + jt->first);
        }
    }

    // vertex coverage
    std::set<std::string> covered;
    for (const auto& [key, names] : facet_map)
        covered.insert(names.begin(), names.end());
    for (const auto& [v, c] : colour_of)
        if (!covered.count(v))
            bad(ErrorKind::OrphanVertex, "vertex '" + v + "' occurs in no facet");

    if (facet_map.empty()) bad(ErrorKind::EmptyFacet, "no facets declared");

    if (!errs.empty()) throw ValidationError(std::move(errs));

    ChromaticComplex c;
    c.agents_.assign(agent_set.begin(), agent_set.end());
    for (std::size_t i = 0; i < c.agents_.size(); ++i)
        c.agent_by_name_[c.agents_[i]] = static_cast<int>(i);

    for (const auto& [v, col] : colour_of) c.vertex_names_.push_back(v);
    std::sort(c.vertex_names_.begin(), c.vertex_names_.end());
    c.vertex_colour_.resize(c.vertex_names_.size());
    for (std::size_t i = 0; i < c.vertex_names_.size(); ++i) {
        c.vertex_by_name_[c.vertex_names_[i]] = static_cast<int>(i);
        c.vertex_colour_[i] = c.agent_by_name_.at(colour_of.at(c.vertex_names_[i]));
    }

    for (const auto& [key, names] : facet_map) {
        std::vector<int> vs;
        vs.reserve(names.size());
        for (const auto& v : names) vs.push_back(c.vertex_by_name_.at(v));
        std::sort(vs.begin(), vs.end());
        c.facet_by_key_[key] = static_cast<int>(c.facets_.size());
        c.facet_keys_.push_back(key);
        c.facets_.push_back(std::move(vs));
    }

    c.facet_vertex_of_agent_.assign(c.facets_.size(),
                                    std::vector<int>(c.agents_.size(), -1));
    c.star_.assign(c.vertex_names_.size(), {});
    for (std::size_t f = 0; f < c.facets_.size(); ++f) {
        for (int v : c.facets_[f]) {
            c.facet_vertex_of_agent_[f][c.vertex_colour_[v]] = v;
            c.star_[v].push_back(static_cast<int>(f));
        }
    }
    c.star_bits_.reserve(c.vertex_names_.size());
    for (std::size_t v = 0; v < c.vertex_names_.size(); ++v) {
        Bitset b(c.facets_.size());
        for (int f : c.star_[v]) b.set(static_cast<std::size_t>(f));
        c.star_bits_.push_back(std::move(b));
    }
    return c;
}

std::vector<std::string> ChromaticComplex::real_agents() const {
    std::vector<std::string> out;
    for (const auto& a : agents_)
        if (a != kAuxColour) out.push_back(a);
    return out;
}

bool ChromaticComplex::has_aux_colour() const {
    return agent_by_name_.count(kAuxColour) > 0;
}

int ChromaticComplex::agent_index(const std::string& name) const {
    auto it = agent_by_name_.find(name);
    return it == agent_by_name_.end() ? -1 : it->second;
}

int ChromaticComplex::vertex_index(const std::string& name) const {
    auto it = vertex_by_name_.find(name);
    return it == vertex_by_name_.end() ? -1 : it->second;
}

int ChromaticComplex::facet_index(const std::string& key) const {
    auto it = facet_by_key_.find(key);
    return it == facet_by_key_.end() ? -1 : it->second;
}

int ChromaticComplex::require_vertex(const std::string& name) const {
    int v = vertex_index(name);
    if (v < 0) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + name + "'");
    return v;
}

int ChromaticComplex::require_facet(const std::string& key) const {
    int f = facet_index(key);
    if (f < 0) throw Error(ErrorKind::UnknownFacet, "unknown facet '" + key + "'");
    return f;
}

int ChromaticComplex::require_agent(const std::string& name) const {
    int a = agent_index(name);
    if (a < 0) throw Error(ErrorKind::UnknownAgent, "unknown agent '" + name + "'");
    return a;
}

const std::string& ChromaticComplex::vertex_colour_name(int v) const {
    return agents_[vertex_colour_[v]];
}

std::vector<std::string> ChromaticComplex::facet_vertex_names(int f) const {
    std::vector<std::string> out;
    out.reserve(facets_[f].size());
    for (int v : facets_[f]) out.push_back(vertex_names_[v]);
    return out;
}

int ChromaticComplex::vertex_of_colour(int facet, int agent) const {
    return facet_vertex_of_agent_[facet][agent];
}

std::string ChromaticComplex::vertex_of_colour(const std::string& facet_key,
                                               const std::string& agent) const {
    int f = require_facet(facet_key);
    int a = require_agent(agent);
    return vertex_names_[facet_vertex_of_agent_[f][a]];
}

std::vector<std::string> ChromaticComplex::star(const std::string& vertex) const {
    int v = require_vertex(vertex);
    std::vector<std::string> out;
    out.reserve(star_[v].size());
    for (int f : star_[v]) out.push_back(facet_keys_[f]);
    return out;
}

bool ChromaticComplex::indistinguishable(int agent, int x, int y) const {
    return facet_vertex_of_agent_[x][agent] == facet_vertex_of_agent_[y][agent];
}

bool ChromaticComplex::indistinguishable(const std::string& agent,
                                         const std::string& x,
                                         const std::string& y) const {
    return indistinguishable(require_agent(agent), require_facet(x),
                             require_facet(y));
}

std::vector<std::vector<int>> ChromaticComplex::equivalence_classes(int agent) const {
    std::vector<std::vector<int>> blocks;
    std::vector<bool> placed(facets_.size(), false);
    for (std::size_t f = 0; f < facets_.size(); ++f) {
        if (placed[f]) continue;
        int v = facet_vertex_of_agent_[f][agent];
        std::vector<int> block = star_[v];
        for (int g : block) placed[g] = true;
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::vector<std::vector<std::string>>
ChromaticComplex::equivalence_classes(const std::string& agent) const {
    auto blocks = equivalence_classes(require_agent(agent));
    std::vector<std::vector<std::string>> out;
    for (const auto& block : blocks) {
        std::vector<std::string> keys;
        keys.reserve(block.size());
        for (int f : block) keys.push_back(facet_keys_[f]);
        out.push_back(std::move(keys));
    }
    return out;
}

RawComplex ChromaticComplex::to_raw() const {
    RawComplex raw;
    raw.agents = agents_;
    for (std::size_t v = 0; v < vertex_names_.size(); ++v)
        raw.vertices.emplace_back(vertex_names_[v], agents_[vertex_colour_[v]]);
    for (std::size_t f = 0; f < facets_.size(); ++f)
        raw.facets.push_back(facet_vertex_names(static_cast<int>(f)));
    return raw;
}

} // namespace simpsec

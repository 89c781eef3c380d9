#pragma once
// Pure chromatic complexes: validated vertex/facet structure and the derived
// epistemic structure (stars, indistinguishability, equivalence classes).
//
// Only facets are stored; faces are implied by downward closure. A complex is
// immutable once validated and safe to share across threads.

#include <string>
#include <unordered_map>
#include <vector>

#include "simpsec/bitset.hpp"
#include "simpsec/error.hpp"

namespace simpsec {

// Reserved auxiliary colour. Allowed as a vertex colour in model documents,
// never as an agent in formulas, and its vertices carry no secrecy structure.
inline constexpr const char* kAuxColour = "*";

struct RawComplex {
    std::vector<std::string> agents;
    std::vector<std::pair<std::string, std::string>> vertices; // id, colour
    std::vector<std::vector<std::string>> facets;
};

class ChromaticComplex {
public:
    // Empty placeholder; real complexes only come out of validate().
    ChromaticComplex() = default;

    // Throws ValidationError carrying every violated invariant; duplicate
    // facets collapse (facet identity is the sorted vertex list).
    static ChromaticComplex validate(const RawComplex& raw);

    const std::vector<std::string>& agents() const { return agents_; }
    std::vector<std::string> real_agents() const; // agents minus "*"
    bool has_aux_colour() const;

    std::size_t vertex_count() const { return vertex_names_.size(); }
    std::size_t facet_count() const { return facets_.size(); }

    int agent_index(const std::string& name) const;
    int vertex_index(const std::string& name) const;
    int facet_index(const std::string& key) const;
    int require_vertex(const std::string& name) const;
    int require_facet(const std::string& key) const;
    int require_agent(const std::string& name) const;

    const std::string& agent_name(int a) const { return agents_[a]; }
    const std::string& vertex_name(int v) const { return vertex_names_[v]; }
    const std::string& vertex_colour_name(int v) const;
    int vertex_colour(int v) const { return vertex_colour_[v]; }
    const std::string& facet_key(int f) const { return facet_keys_[f]; }
    const std::vector<int>& facet_vertices(int f) const { return facets_[f]; }
    std::vector<std::string> facet_vertex_names(int f) const;

    // v_a(X): the unique vertex of the given colour in the facet
    int vertex_of_colour(int facet, int agent) const;
    std::string vertex_of_colour(const std::string& facet_key,
                                 const std::string& agent) const;

    // St(v): facets containing v, in canonical order; never empty
    const std::vector<int>& star(int vertex) const { return star_[vertex]; }
    std::vector<std::string> star(const std::string& vertex) const;
    const Bitset& star_bits(int vertex) const { return star_bits_[vertex]; }

    bool indistinguishable(int agent, int x, int y) const;
    bool indistinguishable(const std::string& agent, const std::string& x,
                           const std::string& y) const;

    // Partition of facets by shared agent-coloured vertex; blocks ordered by
    // their smallest facet, facets canonical within each block.
    std::vector<std::vector<int>> equivalence_classes(int agent) const;
    std::vector<std::vector<std::string>>
    equivalence_classes(const std::string& agent) const;

    RawComplex to_raw() const;

    static std::string make_facet_key(std::vector<std::string> vertex_names);

private:
    std::vector<std::string> agents_;       // sorted unique
    std::vector<std::string> vertex_names_; // sorted unique
    std::vector<int> vertex_colour_;        // per vertex, index into agents_
    std::vector<std::vector<int>> facets_;  // sorted vertex indices, facets in key order
    std::vector<std::string> facet_keys_;
    std::vector<std::vector<int>> facet_vertex_of_agent_; // [facet][agent] -> vertex
    std::vector<std::vector<int>> star_;
    std::vector<Bitset> star_bits_;
    std::unordered_map<std::string, int> agent_by_name_;
    std::unordered_map<std::string, int> vertex_by_name_;
    std::unordered_map<std::string, int> facet_by_key_;
};

} // namespace simpsec

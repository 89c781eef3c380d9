#include "simpsec/share.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "simpsec/checker.hpp"

namespace simpsec {

AuxModel AuxModel::wrap(SecrecyModel m) {
    if (!m.complex().has_aux_colour())
        throw Error(ErrorKind::BadDocument,
                    "model lacks the reserved colour and cannot feed the share "
                    "construction directly");
    AuxModel aux;
    aux.agents_ = m.complex().real_agents();
    aux.model_ = std::move(m);
    return aux;
}

AuxModel to_aux(const SecrecyModel& m) {
    const ChromaticComplex& c = m.complex();
    if (c.has_aux_colour())
        throw Error(ErrorKind::ReservedColourInUse,
                    "model already uses the reserved colour");

    RawModel raw;
    raw.complex.agents = c.agents();
    raw.complex.agents.push_back(kAuxColour);
    for (std::size_t v = 0; v < c.vertex_count(); ++v)
        raw.complex.vertices.emplace_back(c.vertex_name(static_cast<int>(v)),
                                          c.vertex_colour_name(static_cast<int>(v)));

    // one fresh reserved vertex per facet, keyed by canonical facet index
    std::vector<std::string> fresh(c.facet_count());
    for (std::size_t f = 0; f < c.facet_count(); ++f) {
        std::string name = "*" + std::to_string(f);
        while (c.vertex_index(name) >= 0) name += "_";
        fresh[f] = name;
        raw.complex.vertices.emplace_back(name, kAuxColour);
    }

    std::vector<std::string> new_key(c.facet_count());
    for (std::size_t f = 0; f < c.facet_count(); ++f) {
        std::vector<std::string> names = c.facet_vertex_names(static_cast<int>(f));
        names.push_back(fresh[f]);
        new_key[f] = ChromaticComplex::make_facet_key(names);
        raw.complex.facets.push_back(std::move(names));
    }

    for (std::size_t f = 0; f < c.facet_count(); ++f)
        raw.valuation[new_key[f]] = m.facet_atoms(static_cast<int>(f));

    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        const auto& family = m.neighborhood(static_cast<int>(v));
        if (family.empty()) continue;
        std::vector<std::vector<std::string>> events;
        for (const Bitset& event : family) {
            std::vector<std::string> keys;
            for (std::size_t f : event.members()) keys.push_back(new_key[f]);
            events.push_back(std::move(keys));
        }
        raw.neighborhoods[c.vertex_name(static_cast<int>(v))] = std::move(events);
    }

    return AuxModel::wrap(SecrecyModel::validate(raw));
}

namespace {

std::string share_vertex_name(const std::string& agent, const std::string& vertex,
                              int residue) {
    return agent + "@" + vertex + "#" + std::to_string(residue);
}

} // namespace

int ShareModel::find_facet(int aux_facet, const std::vector<int>& sigma) const {
    const ChromaticComplex& ac = aux_.model().complex();
    const auto& agents = aux_.agents();
    std::vector<std::string> names;
    names.reserve(agents.size());
    for (std::size_t i = 0; i < agents.size(); ++i) {
        int av = ac.vertex_of_colour(aux_facet, ac.require_agent(agents[i]));
        names.push_back(share_vertex_name(agents[i], ac.vertex_name(av), sigma[i]));
    }
    return model_.complex().facet_index(ChromaticComplex::make_facet_key(names));
}

ShareModel build_share_model(const AuxModel& aux, int modulus) {
    const SecrecyModel& am = aux.model();
    const ChromaticComplex& ac = am.complex();
    const auto& agents = aux.agents();
    int n = static_cast<int>(agents.size());
    int facets = static_cast<int>(ac.facet_count());

    if (n < 2)
        throw Error(ErrorKind::SingleAgent,
                    "the share construction needs at least two real agents");
    if (modulus < facets)
        throw Error(ErrorKind::ModulusTooSmall,
                    "modulus " + std::to_string(modulus) + " cannot embed " +
                        std::to_string(facets) + " facets injectively");

    std::vector<int> agent_idx(n);
    for (int i = 0; i < n; ++i) agent_idx[i] = ac.require_agent(agents[i]);

    RawModel raw;
    raw.complex.agents = agents;

    std::set<std::string> seen_vertices;
    auto add_vertex = [&](const std::string& name, const std::string& colour) {
        if (seen_vertices.insert(name).second)
            raw.complex.vertices.emplace_back(name, colour);
    };

    // every residue tuple summing to the facet code, one facet each
    std::map<std::string, std::pair<int, std::vector<int>>> origin; // key -> (base, sigma)
    std::vector<int> sigma(static_cast<std::size_t>(n), 0);
    for (int fx = 0; fx < facets; ++fx) {
        std::vector<std::string> owner_vertex(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            owner_vertex[i] = ac.vertex_name(ac.vertex_of_colour(fx, agent_idx[i]));

        // agents after the first range freely; the first absorbs the rest
        std::vector<int> free(static_cast<std::size_t>(n - 1), 0);
        while (true) {
            int sum = 0;
            for (int i = 1; i < n; ++i) {
                sigma[i] = free[i - 1];
                sum += free[i - 1];
            }
            sigma[0] = ((fx - sum) % modulus + modulus) % modulus;

            std::vector<std::string> names(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                names[i] = share_vertex_name(agents[i], owner_vertex[i], sigma[i]);
                add_vertex(names[i], agents[i]);
            }
            std::string key = ChromaticComplex::make_facet_key(names);
            raw.complex.facets.push_back(names);
            raw.valuation[key] = am.facet_atoms(fx);
            origin.emplace(std::move(key), std::make_pair(fx, sigma));

            int carry = 0;
            while (carry < n - 1 && ++free[carry] == modulus) free[carry++] = 0;
            if (carry == n - 1) break;
        }
    }

    // lifted neighborhoods: the same family at every residue copy of a vertex
    for (std::size_t v = 0; v < ac.vertex_count(); ++v) {
        const auto& family = am.neighborhood(static_cast<int>(v));
        if (family.empty()) continue;
        const std::string& colour = ac.vertex_colour_name(static_cast<int>(v));

        std::vector<std::vector<std::string>> lifted;
        for (const Bitset& event : family) {
            std::vector<std::string> keys;
            for (const auto& [key, from] : origin)
                if (event.test(static_cast<std::size_t>(from.first)))
                    keys.push_back(key);
            lifted.push_back(std::move(keys));
        }
        for (int g = 0; g < modulus; ++g) {
            std::string name =
                share_vertex_name(colour, ac.vertex_name(static_cast<int>(v)), g);
            if (seen_vertices.count(name)) raw.neighborhoods[name] = lifted;
        }
    }

    ShareModel sh;
    sh.model_ = SecrecyModel::validate(raw);
    sh.aux_ = aux;
    sh.modulus_ = modulus;
    sh.base_.resize(sh.model_.complex().facet_count());
    sh.sigma_.resize(sh.model_.complex().facet_count());
    for (std::size_t f = 0; f < sh.model_.complex().facet_count(); ++f) {
        const auto& from = origin.at(sh.model_.complex().facet_key(static_cast<int>(f)));
        sh.base_[f] = from.first;
        sh.sigma_[f] = from.second;
    }
    return sh;
}

RepresentationReport check_representation(const AuxModel& aux, const ShareModel& sh,
                                          const std::vector<Formula>& pool) {
    RepresentationReport report;
    const SecrecyModel& am = aux.model();
    const SecrecyModel& sm = sh.model();
    for (const Formula& f : pool) {
        Bitset aux_set = truth_set(am, f);
        Bitset share_set = truth_set(sm, f);
        std::string text = print_formula(f);
        for (std::size_t x = 0; x < sm.complex().facet_count(); ++x) {
            ++report.checks;
            bool av = aux_set.test(static_cast<std::size_t>(sh.base_facet(static_cast<int>(x))));
            bool sv = share_set.test(x);
            if (av != sv)
                report.disagreements.push_back(
                    {sm.complex().facet_key(static_cast<int>(x)), text, av, sv});
        }
    }
    return report;
}

ShareAssignment share_completion_witness(const ShareModel& sh,
                                         const std::string& share_facet_key,
                                         const std::string& agent,
                                         const std::string& aux_facet_key) {
    const auto& agents = sh.aux().agents();
    int n = static_cast<int>(agents.size());
    if (n < 2)
        throw Error(ErrorKind::SingleAgent,
                    "share completion needs at least two real agents");

    const ChromaticComplex& ac = sh.aux().model().complex();
    int sf = sh.model().complex().require_facet(share_facet_key);
    int target = ac.require_facet(aux_facet_key);
    int base = sh.base_facet(sf);

    auto pos = std::find(agents.begin(), agents.end(), agent);
    if (pos == agents.end())
        throw Error(ErrorKind::UnknownAgent, "unknown agent '" + agent + "'");
    int ai = static_cast<int>(pos - agents.begin());

    if (!ac.indistinguishable(ac.require_agent(agent), base, target))
        throw Error(ErrorKind::NotIndistinguishable,
                    "facets " + ac.facet_key(base) + " and " + aux_facet_key +
                        " differ at agent '" + agent + "'");

    int m = sh.modulus();
    int kept = sh.shares(sf)[static_cast<std::size_t>(ai)];
    int bi = ai == 0 ? 1 : 0; // first co-agent absorbs the difference
    std::vector<int> tau(static_cast<std::size_t>(n), 0);
    tau[static_cast<std::size_t>(ai)] = kept;
    tau[static_cast<std::size_t>(bi)] = ((sh.code(target) - kept) % m + m) % m;

    ShareAssignment out;
    for (int i = 0; i < n; ++i)
        out.shares.emplace_back(agents[static_cast<std::size_t>(i)],
                                tau[static_cast<std::size_t>(i)]);
    return out;
}

} // namespace simpsec

#include "simpsec/json_io.hpp"

#include <fstream>
#include <sstream>

namespace simpsec {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
    out << content;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

Json parse_json(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::BadDocument, origin + ": " + e.what());
    }
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw Error(ErrorKind::BadDocument,
                    std::string("missing field '") + name + "'");
    return j.at(name);
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
    if (!j.is_array())
        throw Error(ErrorKind::BadDocument, what + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string())
            throw Error(ErrorKind::BadDocument, what + " must hold strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

} // namespace

RawModel raw_model_from_json(const Json& j) {
    RawModel m;
    m.complex.agents = string_list(field(j, "agents"), "agents");

    for (const auto& v : field(j, "vertices")) {
        if (!v.is_object() || !v.contains("id") || !v.contains("colour"))
            throw Error(ErrorKind::BadDocument,
                        "each vertex needs 'id' and 'colour'");
        m.complex.vertices.emplace_back(v.at("id").get<std::string>(),
                                        v.at("colour").get<std::string>());
    }

    for (const auto& f : field(j, "facets"))
        m.complex.facets.push_back(string_list(f, "facet"));

    if (j.contains("valuation")) {
        const Json& val = j.at("valuation");
        if (!val.is_object())
            throw Error(ErrorKind::BadDocument, "valuation must be an object");
        for (const auto& [key, atoms] : val.items())
            m.valuation[key] = string_list(atoms, "valuation entry");
    }

    if (j.contains("neighborhoods")) {
        const Json& nb = j.at("neighborhoods");
        if (!nb.is_object())
            throw Error(ErrorKind::BadDocument, "neighborhoods must be an object");
        for (const auto& [vertex, events] : nb.items()) {
            if (!events.is_array())
                throw Error(ErrorKind::BadDocument,
                            "events at '" + vertex + "' must be an array");
            std::vector<std::vector<std::string>> family;
            for (const auto& event : events)
                family.push_back(string_list(event, "event"));
            m.neighborhoods[vertex] = std::move(family);
        }
    }
    return m;
}

Json model_to_json(const SecrecyModel& m) {
    const ChromaticComplex& c = m.complex();
    Json j = Json::object();

    j["agents"] = c.agents();

    Json vertices = Json::array();
    for (std::size_t v = 0; v < c.vertex_count(); ++v)
        vertices.push_back({{"colour", c.vertex_colour_name(static_cast<int>(v))},
                            {"id", c.vertex_name(static_cast<int>(v))}});
    j["vertices"] = std::move(vertices);

    Json facets = Json::array();
    for (std::size_t f = 0; f < c.facet_count(); ++f)
        facets.push_back(c.facet_vertex_names(static_cast<int>(f)));
    j["facets"] = std::move(facets);

    Json valuation = Json::object();
    for (std::size_t f = 0; f < c.facet_count(); ++f)
        valuation[c.facet_key(static_cast<int>(f))] =
            m.facet_atoms(static_cast<int>(f));
    j["valuation"] = std::move(valuation);

    Json neighborhoods = Json::object();
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        const auto& family = m.neighborhood(static_cast<int>(v));
        if (family.empty()) continue;
        Json events = Json::array();
        for (const Bitset& event : family) {
            Json keys = Json::array();
            for (std::size_t f : event.members())
                keys.push_back(c.facet_key(static_cast<int>(f)));
            events.push_back(std::move(keys));
        }
        neighborhoods[c.vertex_name(static_cast<int>(v))] = std::move(events);
    }
    j["neighborhoods"] = std::move(neighborhoods);
    return j;
}

RawModel load_raw_model_file(const std::string& path) {
    return raw_model_from_json(parse_json(read_file(path), path));
}

SecrecyModel load_model_file(const std::string& path) {
    return SecrecyModel::validate(load_raw_model_file(path));
}

SecrecyModel load_model_string(const std::string& text) {
    return SecrecyModel::validate(raw_model_from_json(parse_json(text, "<string>")));
}

void save_model_file(const SecrecyModel& m, const std::string& path) {
    write_file(path, canonical_dump(model_to_json(m)));
}

Json violation_to_json(const SNViolation& v) {
    return {{"blocked_agent", v.blocked_agent},
            {"event", v.event},
            {"facet", v.facet},
            {"vertex", v.vertex}};
}

Json witness_to_json(const SNWitness& w) {
    return {{"agent", w.agent},
            {"event", w.event},
            {"facet", w.facet},
            {"vertex", w.vertex},
            {"witness", w.witness}};
}

// ---------------------------------------------------------------------------
// Derivations

Derivation derivation_from_json(const Json& j) {
    Derivation d;
    d.name = field(j, "name").get<std::string>();
    for (const auto& step : field(j, "steps")) {
        Formula f = parse_formula(field(step, "formula").get<std::string>());
        const Json& by = field(step, "by");
        Justification just = Justification::axiom(Scheme::A1);
        if (by.is_string()) {
            auto scheme = scheme_from_string(by.get<std::string>());
            if (!scheme)
                throw Error(ErrorKind::BadDocument,
                            "unknown scheme '" + by.get<std::string>() + "'");
            just = Justification::axiom(*scheme);
        } else if (by.is_object() && by.contains("mp")) {
            const Json& refs = by.at("mp");
            if (!refs.is_array() || refs.size() != 2)
                throw Error(ErrorKind::BadDocument, "mp needs [i, j]");
            just = Justification::mp(refs[0].get<int>(), refs[1].get<int>());
        } else if (by.is_object() && by.contains("nec")) {
            const Json& refs = by.at("nec");
            if (!refs.is_array() || refs.size() != 2)
                throw Error(ErrorKind::BadDocument, "nec needs [i, agent]");
            just = Justification::nec(refs[0].get<int>(), refs[1].get<std::string>());
        } else if (by.is_object() && by.contains("re")) {
            const Json& refs = by.at("re");
            if (!refs.is_array() || refs.size() != 2)
                throw Error(ErrorKind::BadDocument, "re needs [i, agent]");
            just = Justification::re(refs[0].get<int>(), refs[1].get<std::string>());
        } else {
            throw Error(ErrorKind::BadDocument, "unrecognized justification");
        }
        d.steps.push_back({std::move(f), just});
    }
    if (d.steps.empty())
        throw Error(ErrorKind::BadDocument, "derivation has no steps");
    return d;
}

Json derivation_to_json(const Derivation& d) {
    Json steps = Json::array();
    for (const Step& s : d.steps) {
        Json by;
        switch (s.by.kind) {
        case Justification::Kind::Axiom:
            by = to_string(s.by.scheme);
            break;
        case Justification::Kind::MP:
            by = Json{{"mp", {s.by.i, s.by.j}}};
            break;
        case Justification::Kind::Nec:
            by = Json{{"nec", {s.by.i, s.by.agent}}};
            break;
        case Justification::Kind::RE:
            by = Json{{"re", {s.by.i, s.by.agent}}};
            break;
        }
        steps.push_back({{"by", std::move(by)}, {"formula", print_formula(s.formula)}});
    }
    return {{"name", d.name}, {"steps", std::move(steps)}};
}

Derivation load_derivation_file(const std::string& path) {
    return derivation_from_json(parse_json(read_file(path), path));
}

Derivation load_derivation_string(const std::string& text) {
    return derivation_from_json(parse_json(text, "<string>"));
}

std::vector<Formula> parse_pool(const std::string& text) {
    std::vector<Formula> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        out.push_back(parse_formula(line.substr(start, end - start + 1)));
    }
    return out;
}

std::vector<Formula> load_pool_file(const std::string& path) {
    return parse_pool(read_file(path));
}

} // namespace simpsec

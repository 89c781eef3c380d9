// Command-line front end. Exit codes: 0 ok/true, 1 false/violations found/
// countermodel found, 2 input error, 3 internal limit.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "simpsec/checker.hpp"
#include "simpsec/fixtures.hpp"
#include "simpsec/json_io.hpp"
#include "simpsec/search.hpp"
#include "simpsec/share.hpp"

namespace {

using namespace simpsec;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;
constexpr int kLimit = 3;

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::TooManyAtoms:
    case ErrorKind::BoundsTooLarge:
        return kLimit;
    default:
        return kInputError;
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& model_path) {
    RawModel raw = load_raw_model_file(model_path);
    ChromaticComplex complex;
    try {
        complex = ChromaticComplex::validate(raw.complex);
    } catch (const ValidationError& e) {
        for (const auto& d : e.diagnostics())
            std::cout << to_string(d.kind) << ": " << d.detail << "\n";
        return kFalse;
    }
    SecrecyModel candidate;
    try {
        candidate = SecrecyModel::assemble_unchecked(std::move(complex),
                                                     raw.valuation, raw.neighborhoods);
    } catch (const ValidationError& e) {
        for (const auto& d : e.diagnostics())
            std::cout << to_string(d.kind) << ": " << d.detail << "\n";
        return kFalse;
    }
    auto violations = check_sn(candidate);
    for (const auto& v : violations)
        std::cout << "SNViolated: " << violation_to_json(v).dump() << "\n";
    if (!violations.empty()) return kFalse;
    std::cout << "valid\n";
    return kOk;
}

int cmd_check(const std::string& model_path, const std::string& facet,
              const std::string& formula_text) {
    SecrecyModel m = load_model_file(model_path);
    Formula f = parse_formula(formula_text);
    bool value = satisfies(m, facet, f);
    std::cout << (value ? "true" : "false") << "\n";
    return value ? kOk : kFalse;
}

int cmd_truthset(const std::string& model_path, const std::string& formula_text) {
    SecrecyModel m = load_model_file(model_path);
    auto keys = truth_set_keys(m, parse_formula(formula_text));
    for (std::size_t i = 0; i < keys.size(); ++i)
        std::cout << keys[i] << (i + 1 == keys.size() ? "" : " ");
    std::cout << "\n";
    return kOk;
}

int cmd_normalize(const std::string& model_path, const std::string& out_path) {
    SecrecyModel m = load_model_file(model_path);
    emit(canonical_dump(model_to_json(m.normalize_owner_local())), out_path);
    return kOk;
}

int cmd_sn_check(const std::string& model_path, bool witnesses) {
    RawModel raw = load_raw_model_file(model_path);
    SecrecyModel candidate = SecrecyModel::assemble_unchecked(
        ChromaticComplex::validate(raw.complex), raw.valuation, raw.neighborhoods);
    auto violations = check_sn(candidate);
    for (const auto& v : violations)
        std::cout << "SNViolated: " << violation_to_json(v).dump() << "\n";
    if (!violations.empty()) return kFalse;
    std::cout << "no violations\n";
    if (witnesses)
        for (const auto& w : sn_witnesses(candidate))
            std::cout << "witness: " << witness_to_json(w).dump() << "\n";
    return kOk;
}

int cmd_share(const std::string& model_path, int modulus,
              const std::string& pool_path, const std::string& out_path) {
    SecrecyModel m = load_model_file(model_path);
    AuxModel aux = m.complex().has_aux_colour() ? AuxModel::wrap(std::move(m))
                                                : to_aux(m);
    int facets = static_cast<int>(aux.model().complex().facet_count());
    if (modulus == 0) modulus = facets;
    ShareModel sh = build_share_model(aux, modulus);

    std::ostream& report = out_path.empty() ? std::cerr : std::cout;
    report << "share model: " << sh.model().complex().facet_count() << " facets ("
           << facets << " base facets, modulus " << modulus << ")\n";

    bool agreed = true;
    if (!pool_path.empty()) {
        auto pool = load_pool_file(pool_path);
        RepresentationReport rep = check_representation(aux, sh, pool);
        report << "representation check: " << rep.checks << " checks, "
               << rep.disagreements.size() << " disagreements\n";
        for (const auto& d : rep.disagreements)
            report << "disagree: " << d.formula << " at " << d.share_facet
                   << " (base " << (d.aux_value ? "true" : "false") << ", share "
                   << (d.share_value ? "true" : "false") << ")\n";
        agreed = rep.ok();
    }
    emit(canonical_dump(model_to_json(sh.model())), out_path);
    return agreed ? kOk : kFalse;
}

int cmd_prove(const std::string& derivation_path) {
    Derivation d = load_derivation_file(derivation_path);
    auto err = check_derivation(d);
    if (err) {
        std::cout << d.name << ": step " << err->index << ": "
                  << to_string(err->reason) << " (" << err->detail << ")\n";
        return kFalse;
    }
    std::cout << d.name << ": ok (" << d.steps.size() << " steps)\n";
    return kOk;
}

// minimal key = value config reader: ints, quoted strings, string lists
void apply_config(const std::string& path, SearchBounds& b) {
    std::istringstream in(read_file(path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto complain = [&](const std::string& why) {
            throw Error(ErrorKind::BadDocument,
                        path + ":" + std::to_string(lineno) + ": " + why);
        };
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) complain("expected key = value");
        std::string key = line.substr(start, eq - start);
        key.erase(key.find_last_not_of(" \t") + 1);
        std::string value = line.substr(eq + 1);
        std::size_t vstart = value.find_first_not_of(" \t");
        if (vstart == std::string::npos) complain("missing value");
        value = value.substr(vstart);

        auto parse_int = [&]() {
            std::size_t used = 0;
            long long n = std::stoll(value, &used);
            (void)used;
            return n;
        };
        auto parse_string = [&]() {
            if (value.empty() || value[0] != '"') complain("expected a quoted string");
            std::size_t close = value.find('"', 1);
            if (close == std::string::npos) complain("unterminated string");
            return value.substr(1, close - 1);
        };
        auto parse_list = [&]() {
            std::vector<std::string> items;
            if (value.empty() || value[0] != '[') complain("expected a list");
            std::size_t pos = 1;
            while (true) {
                std::size_t open = value.find('"', pos);
                if (open == std::string::npos) break;
                std::size_t close = value.find('"', open + 1);
                if (close == std::string::npos) complain("unterminated string");
                items.push_back(value.substr(open + 1, close - open - 1));
                pos = close + 1;
            }
            return items;
        };

        if (key == "agents") b.agents = static_cast<int>(parse_int());
        else if (key == "states") b.states = static_cast<int>(parse_int());
        else if (key == "max_events") b.max_events = static_cast<int>(parse_int());
        else if (key == "cap") b.cap = static_cast<std::uint64_t>(parse_int());
        else if (key == "atoms") b.atoms = parse_list();
        else if (key == "policy") {
            std::string p = parse_string();
            if (p == "full-grid") b.policy = FacetPolicy::FullGrid;
            else if (p == "subsets") b.policy = FacetPolicy::AllNonemptySubsets;
            else complain("policy must be \"full-grid\" or \"subsets\"");
        } else complain("unknown key '" + key + "'");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"model checking and proof checking for secrecy over chromatic "
                 "simplicial models"};
    app.require_subcommand(1);

    std::string model_path, facet, formula_text, out_path, pool_path;
    std::string derivation_path, config_path;
    bool witnesses = false;
    int modulus = 0;

    SearchBounds bounds;
    std::string policy_name = "full-grid";
    std::uint64_t seed = 0;
    std::string atoms_csv;

    auto* validate = app.add_subcommand("validate", "validate a model document");
    validate->add_option("model", model_path, "model JSON file")->required();

    auto* check = app.add_subcommand("check", "evaluate a formula at a facet");
    check->add_option("model", model_path)->required();
    check->add_option("facet", facet, "facet key, e.g. u0+w1")->required();
    check->add_option("formula", formula_text)->required();

    auto* truthset = app.add_subcommand("truthset", "facets satisfying a formula");
    truthset->add_option("model", model_path)->required();
    truthset->add_option("formula", formula_text)->required();

    auto* normalize =
        app.add_subcommand("normalize", "restrict events to owner-local ones");
    normalize->add_option("model", model_path)->required();
    normalize->add_option("--out", out_path, "output file (default stdout)");

    auto* sn = app.add_subcommand("sn-check", "report external-uncertainty violations");
    sn->add_option("model", model_path)->required();
    sn->add_flag("--witnesses", witnesses, "list one witness per facet/agent pair");

    auto* share = app.add_subcommand("share", "build the share expansion of a model");
    share->add_option("model", model_path)->required();
    share->add_option("--modulus", modulus, "group modulus (default: facet count)");
    share->add_option("--pool", pool_path, "formula pool for the agreement check");
    share->add_option("--out", out_path, "output file for the share document");

    auto* prove = app.add_subcommand("prove", "check a derivation document");
    prove->add_option("derivation", derivation_path)->required();

    auto* search = app.add_subcommand("search", "look for a countermodel within bounds");
    search->add_option("formula", formula_text)->required();
    search->add_option("--agents", bounds.agents, "agent count (default 2)");
    search->add_option("--states", bounds.states, "local states per agent (default 3)");
    search->add_option("--atoms", atoms_csv, "comma-separated atom list (default p,r)");
    search->add_option("--max-events", bounds.max_events, "events per vertex (default 2)");
    search->add_option("--cap", bounds.cap, "enumeration cap (default 10^7)");
    search->add_option("--policy", policy_name, "full-grid or subsets");
    search->add_option("--seed", seed,
                       "seed for sampling commands; the enumeration itself is "
                       "deterministic");
    search->add_option("--config", config_path, "bounds config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError; // --help stays 0, bad usage is 2
    }

    try {
        if (validate->parsed()) return cmd_validate(model_path);
        if (check->parsed()) return cmd_check(model_path, facet, formula_text);
        if (truthset->parsed()) return cmd_truthset(model_path, formula_text);
        if (normalize->parsed()) return cmd_normalize(model_path, out_path);
        if (sn->parsed()) return cmd_sn_check(model_path, witnesses);
        if (share->parsed()) return cmd_share(model_path, modulus, pool_path, out_path);
        if (prove->parsed()) return cmd_prove(derivation_path);
        if (search->parsed()) {
            if (!config_path.empty()) {
                // flags win over config values
                SearchBounds from_flags = bounds;
                SearchBounds merged;
                apply_config(config_path, merged);
                if (search->count("--agents")) merged.agents = from_flags.agents;
                if (search->count("--states")) merged.states = from_flags.states;
                if (search->count("--max-events"))
                    merged.max_events = from_flags.max_events;
                if (search->count("--cap")) merged.cap = from_flags.cap;
                bounds = merged;
            }
            if (!atoms_csv.empty()) {
                bounds.atoms.clear();
                std::size_t pos = 0;
                while (pos <= atoms_csv.size()) {
                    std::size_t comma = atoms_csv.find(',', pos);
                    if (comma == std::string::npos) comma = atoms_csv.size();
                    if (comma > pos)
                        bounds.atoms.push_back(atoms_csv.substr(pos, comma - pos));
                    pos = comma + 1;
                }
            }
            if (policy_name == "subsets")
                bounds.policy = FacetPolicy::AllNonemptySubsets;
            else if (policy_name != "full-grid")
                throw Error(ErrorKind::BadBounds,
                            "policy must be full-grid or subsets");

            SearchResult r = check_validity_bounded(parse_formula(formula_text), bounds);
            if (r.valid) {
                std::cout << "valid up to bounds (" << r.models_examined
                          << " models, " << r.elapsed_seconds << " s)\n";
                return kOk;
            }
            std::cout << "countermodel found at facet " << r.facet << " after "
                      << r.models_examined << " models\n";
            std::cout << canonical_dump(model_to_json(*r.countermodel));
            return kFalse;
        }
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        for (const auto& d : e.diagnostics())
            std::cerr << "  " << to_string(d.kind) << ": " << d.detail << "\n";
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kInputError;
}

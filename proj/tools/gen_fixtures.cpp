// Regenerates the files under fixtures/ from the in-code builders. The test
// suite diffs the checked-in files against this output, so run it after any
// change to src/fixtures.cpp.

#include <filesystem>
#include <iostream>

#include "simpsec/fixtures.hpp"
#include "simpsec/json_io.hpp"

using namespace simpsec;

int main(int argc, char** argv) {
    std::filesystem::path root = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(root / "derivations");

    auto write_model = [&](const std::string& name, const RawModel& raw) {
        SecrecyModel m = SecrecyModel::validate(raw);
        write_file((root / (name + ".json")).string(),
                   canonical_dump(model_to_json(m)));
        std::cout << name << ".json: " << m.complex().facet_count() << " facets\n";
    };

    write_model("running", running_model());
    write_model("nonnormal1", nonnormal1_model());
    write_model("nonnormal2", nonnormal2_model());
    for (const auto& [name, raw] : aux_fixture_models()) write_model(name, raw);

    for (const Derivation& d : fixture_library()) {
        if (auto err = check_derivation(d)) {
            std::cerr << d.name << " does not check: step " << err->index << " "
                      << to_string(err->reason) << "\n";
            return 1;
        }
        write_file((root / "derivations" / (d.name + ".json")).string(),
                   canonical_dump(derivation_to_json(d)));
        std::cout << "derivations/" << d.name << ".json: " << d.steps.size()
                  << " steps\n";
    }

    auto write_pool = [&](const std::string& name,
                          const std::vector<std::string>& pool) {
        std::string text;
        for (const auto& line : pool) text += line + "\n";
        write_file((root / name).string(), text);
        std::cout << name << ": " << pool.size() << " formulas\n";
    };
    write_pool("pool.txt", default_pool());
    write_pool("share_pool.txt", share_pool());
    return 0;
}

// End-to-end checks against the built command-line binary: every shipped
// fixture passes its designated command, exit codes follow the contract, and
// the checked-in fixture files match their in-code builders.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

#include "simpsec/fixtures.hpp"
#include "simpsec/json_io.hpp"

using namespace simpsec;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run_cmd(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

Run cli(const std::string& args) {
    return run_cmd(std::string(SIMPSEC_CLI_PATH) + " " + args);
}

std::string fixture(const std::string& name) {
    return std::string(SIMPSEC_FIXTURES_DIR) + "/" + name;
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "simpsec_e2e";
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("validate accepts every shipped model fixture") {
    for (const char* name : {"running.json", "nonnormal1.json", "nonnormal2.json",
                             "aux1.json", "aux2.json", "aux3.json", "aux4.json",
                             "aux5.json"}) {
        Run r = cli("validate " + fixture(name));
        CAPTURE(name);
        CAPTURE(r.out);
        CHECK(r.code == 0);
        CHECK(r.out.find("valid") != std::string::npos);
    }
}

TEST_CASE("validate reports violations and bad input distinctly") {
    fs::path dir = scratch_dir();

    RawModel raw = running_model();
    std::vector<std::string> everything;
    for (const char* u : {"u0", "u1", "u2"})
        for (const char* w : {"w1", "w2", "w3"})
            everything.push_back(std::string(u) + "+" + w);
    raw.neighborhoods["u0"] = {everything};
    SecrecyModel loose = SecrecyModel::assemble_unchecked(
        ChromaticComplex::validate(raw.complex), raw.valuation, raw.neighborhoods);
    fs::path bad = dir / "universal_event.json";
    write_file(bad.string(), canonical_dump(model_to_json(loose)));

    Run r = cli("validate " + bad.string());
    CHECK(r.code == 1);
    CHECK(r.out.find("SNViolated") != std::string::npos);

    fs::path truncated = dir / "truncated.json";
    write_file(truncated.string(), "{\"agents\": [\"a\"");
    r = cli("validate " + truncated.string());
    CHECK(r.code == 2);
}

TEST_CASE("check prints a verdict and maps it onto the exit code") {
    Run r = cli("check " + fixture("running.json") + " u0+w1 'S{a} p'");
    CHECK(r.code == 0);
    CHECK(r.out.find("true") != std::string::npos);

    r = cli("check " + fixture("nonnormal1.json") + " u0+w1 'S{a} S{a} p'");
    CHECK(r.code == 1);
    CHECK(r.out.find("false") != std::string::npos);

    r = cli("check " + fixture("running.json") + " u0+w1 'K{c} p'");
    CHECK(r.code == 2);
    CHECK(r.out.find("UnknownAgent") != std::string::npos);

    r = cli("check " + fixture("running.json") + " u9+w9 'p'");
    CHECK(r.code == 2);

    r = cli("check " + fixture("running.json") + " u0+w1 'p &'");
    CHECK(r.code == 2);
}

TEST_CASE("truthset lists the satisfying facets in canonical order") {
    Run r = cli("truthset " + fixture("running.json") + " p");
    CHECK(r.code == 0);
    CHECK(r.out == "u0+w1 u0+w2 u0+w3 u1+w1\n");

    r = cli("truthset " + fixture("running.json") + " '#f'");
    CHECK(r.code == 0);
    CHECK(r.out == "\n");
}

TEST_CASE("normalize writes a loadable canonical document") {
    fs::path out = scratch_dir() / "normalized.json";
    Run r = cli("normalize " + fixture("running.json") + " --out " + out.string());
    CHECK(r.code == 0);
    SecrecyModel m = load_model_file(out.string());
    CHECK(m.neighborhood("u0").size() == 1);
    CHECK(read_file(out.string()) == canonical_dump(model_to_json(m)));
}

TEST_CASE("sn-check surfaces the expected witnesses") {
    Run r = cli("sn-check " + fixture("running.json") + " --witnesses");
    CHECK(r.code == 0);
    CHECK(r.out.find("no violations") != std::string::npos);
    CHECK(r.out.find("\"witness\":\"u2+w1\"") != std::string::npos);
    CHECK(r.out.find("\"witness\":\"u1+w2\"") != std::string::npos);
    CHECK(r.out.find("\"witness\":\"u1+w3\"") != std::string::npos);
}

TEST_CASE("prove accepts every shipped derivation") {
    fs::path dir = fs::path(SIMPSEC_FIXTURES_DIR) / "derivations";
    std::size_t count = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        Run r = cli("prove " + entry.path().string());
        CAPTURE(entry.path().filename().string());
        CAPTURE(r.out);
        CHECK(r.code == 0);
        CHECK(r.out.find("ok") != std::string::npos);
        ++count;
    }
    CHECK(count >= 12);
}

TEST_CASE("prove pinpoints a corrupted step") {
    Derivation d = fixture_library().front();
    REQUIRE(d.steps.size() >= 3);
    d.steps[2].formula = Formula::lnot(d.steps[2].formula);
    fs::path bad = scratch_dir() / "broken_derivation.json";
    write_file(bad.string(), canonical_dump(derivation_to_json(d)));
    Run r = cli("prove " + bad.string());
    CHECK(r.code == 1);
    CHECK(r.out.find("step 3") != std::string::npos);
}

TEST_CASE("share reports agreement for the shipped aux fixtures") {
    for (const char* name : {"aux1.json", "aux2.json", "aux3.json", "aux4.json",
                             "aux5.json"}) {
        fs::path out = scratch_dir() / (std::string("share_") + name);
        Run r = cli("share " + fixture(name) + " --pool " +
                    fixture("share_pool.txt") + " --out " + out.string());
        CAPTURE(name);
        CAPTURE(r.out);
        CHECK(r.code == 0);
        CHECK(r.out.find(" 0 disagreements") != std::string::npos);
        // the emitted document is a valid model again
        Run v = cli("validate " + out.string());
        CHECK(v.code == 0);
    }
}

TEST_CASE("share wraps plain models on the fly") {
    fs::path out = scratch_dir() / "share_running.json";
    Run r = cli("share " + fixture("running.json") + " --pool " +
                fixture("pool.txt") + " --out " + out.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("81 facets") != std::string::npos);
    CHECK(r.out.find(" 0 disagreements") != std::string::npos);
}

TEST_CASE("share honours an explicit modulus") {
    fs::path out = scratch_dir() / "share_m3.json";
    Run r = cli("share " + fixture("aux5.json") + " --modulus 3 --pool " +
                fixture("share_pool.txt") + " --out " + out.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("6 facets") != std::string::npos);

    r = cli("share " + fixture("aux3.json") + " --modulus 2");
    CHECK(r.code == 2); // below the facet count
}

TEST_CASE("search finds the classic countermodels and respects soundness") {
    Run r = cli("search 'S{a} p -> S{a} S{a} p'");
    CHECK(r.code == 1);
    CHECK(r.out.find("countermodel") != std::string::npos);

    r = cli("search 'S{a} p -> K{a} p'");
    CHECK(r.code == 0);
    CHECK(r.out.find("valid up to bounds") != std::string::npos);
}

TEST_CASE("search accepts a bounds config file") {
    fs::path cfg = scratch_dir() / "bounds.cfg";
    write_file(cfg.string(),
               "# small search\nagents = 2\nstates = 2\natoms = [\"p\"]\n"
               "max_events = 1\npolicy = \"full-grid\"\n");
    Run r = cli("search 'S{a} p -> K{a} p' --config " + cfg.string());
    CHECK(r.code == 0);

    // flags override the config
    r = cli("search 'S{a} p -> S{a} S{a} p' --config " + cfg.string() +
            " --states 3");
    CHECK(r.code == 1);
}

TEST_CASE("bounds that cannot be enumerated exit with the limit code") {
    Run r = cli("search 'p -> p' --atoms p,q,r,s --cap 10");
    CHECK(r.code == 3);
}

TEST_CASE("usage errors and help map onto the exit contract") {
    CHECK(cli("").code == 2);
    CHECK(cli("frobnicate x").code == 2);
    CHECK(cli("check " + fixture("running.json")).code == 2); // missing args
    CHECK(cli("--help").code == 0);
}

TEST_CASE("checked-in fixtures match their builders") {
    fs::path dir = scratch_dir() / "regen";
    fs::create_directories(dir);
    Run r = run_cmd(std::string(SIMPSEC_GEN_PATH) + " " + dir.string());
    REQUIRE(r.code == 0);
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        fs::path rel = fs::relative(entry.path(), dir);
        fs::path shipped = fs::path(SIMPSEC_FIXTURES_DIR) / rel;
        CAPTURE(rel.string());
        REQUIRE(fs::exists(shipped));
        CHECK(read_file(entry.path().string()) == read_file(shipped.string()));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "simpsec/checker.hpp"
#include "simpsec/fixtures.hpp"
#include "simpsec/proof.hpp"
#include "simpsec/search.hpp"
#include "test_util.hpp"

using namespace simpsec;

TEST_CASE("axiom instances match and side conditions bite") {
    CHECK(check_axiom_instance(Scheme::S1, parse_formula("S{a} p -> K{a} p")));
    CHECK_FALSE(check_axiom_instance(Scheme::S1, parse_formula("S{a} p -> K{b} p")));
    // the blocked agent must differ from the owner
    CHECK(check_axiom_instance(Scheme::S2, parse_formula("S{a} p -> ~K{b} p")));
    CHECK_FALSE(check_axiom_instance(Scheme::S2, parse_formula("S{a} p -> ~K{a} p")));
    CHECK(check_axiom_instance(Scheme::A1, parse_formula("S{a} p -> S{a} p")));
    CHECK_FALSE(check_axiom_instance(Scheme::A1, parse_formula("K{a} p -> p")));
    CHECK(check_axiom_instance(Scheme::T, parse_formula("K{a} p -> p")));
    CHECK(check_axiom_instance(Scheme::K,
                               parse_formula("K{b} (p -> q) -> (K{b} p -> K{b} q)")));
    CHECK_FALSE(check_axiom_instance(
        Scheme::K, parse_formula("K{b} (p -> q) -> (K{a} p -> K{b} q)")));
    CHECK(check_axiom_instance(Scheme::Four,
                               parse_formula("K{a} p -> K{a} K{a} p")));
    CHECK(check_axiom_instance(Scheme::Five,
                               parse_formula("~K{a} p -> K{a} ~K{a} p")));
    CHECK(check_axiom_instance(Scheme::S4,
                               parse_formula("S{a} p -> K{a} S{a} p")));
    CHECK_FALSE(check_axiom_instance(Scheme::S4,
                                     parse_formula("S{a} p -> K{a} S{a} q")));
    // schemes instantiate with arbitrary formulas, not just atoms
    CHECK(check_axiom_instance(
        Scheme::T, parse_formula("K{b} (S{a} p & ~q) -> (S{a} p & ~q)")));
}

TEST_CASE("every fixture derivation checks") {
    auto fixtures = fixture_library();
    CHECK(fixtures.size() >= 12);
    std::set<std::string> names;
    for (const auto& d : fixtures) {
        CAPTURE(d.name);
        CHECK(names.insert(d.name).second);
        auto err = check_derivation(d);
        if (err)
            FAIL(d.name << ": step " << err->index << " " << to_string(err->reason)
                        << " (" << err->detail << ")");
    }
}

TEST_CASE("fixture conclusions read as expected") {
    std::map<std::string, std::string> expected = {
        {"ssl-truth", "S{a} p -> p"},
        {"secrecy-implies-possible", "S{a} p -> ~K{b} ~p"},
        {"negative-owner-locality", "~S{a} p -> K{a} ~S{a} p"},
        {"owner-locality-positive", "S{a} p <-> K{a} S{a} p"},
        {"owner-locality-negative", "~S{a} p <-> K{a} ~S{a} p"},
        {"owner-knows-ignorance-positive", "S{a} p -> K{a} ~K{b} p"},
        {"owner-knows-ignorance-negative", "S{a} p -> K{a} ~K{b} ~p"},
        {"higher-order-opacity-positive", "S{a} p -> ~K{b} S{a} p"},
        {"higher-order-opacity-negative", "S{a} p -> ~K{b} ~S{a} p"},
        {"no-foreign-secret-knowledge", "~S{a} K{b} q"},
        {"no-foreign-secret-ignorance", "~S{a} ~K{b} q"},
        {"no-foreign-secret-secret", "~S{a} S{b} q"},
        {"no-foreign-secret-nonsecret", "~S{a} ~S{b} q"},
        {"no-secret-top", "~S{a} #t"},
        {"knowledge-conjunction", "K{a} p & K{a} q -> K{a} (p & q)"},
    };
    auto fixtures = fixture_library();
    for (const auto& [name, text] : expected) {
        bool found = false;
        for (const auto& d : fixtures)
            if (d.name == name) {
                found = true;
                CHECK(print_formula(d.conclusion()) == text);
            }
        CHECK_MESSAGE(found, name);
    }
}

TEST_CASE("prefixes of a checking derivation check") {
    for (const auto& d : fixture_library()) {
        Derivation prefix{d.name, {}};
        for (const auto& step : d.steps) {
            prefix.steps.push_back(step);
            CHECK_FALSE(check_derivation(prefix).has_value());
        }
    }
}

TEST_CASE("swapping modus ponens operands is caught at the right step") {
    auto fixtures = fixture_library();
    for (const auto& d : fixtures) {
        for (std::size_t k = 0; k < d.steps.size(); ++k) {
            if (d.steps[k].by.kind != Justification::Kind::MP) continue;
            Derivation bad = d;
            std::swap(bad.steps[k].by.i, bad.steps[k].by.j);
            auto err = check_derivation(bad);
            REQUIRE(err.has_value());
            CHECK(err->index == static_cast<int>(k) + 1);
            CHECK(err->reason == StepFailure::BadMP);
            break; // one per fixture keeps this quick
        }
    }
}

TEST_CASE("forward and self references are rejected") {
    Derivation d{"loop",
                 {{parse_formula("p -> p"), Justification::mp(1, 1)}}};
    auto err = check_derivation(d);
    REQUIRE(err.has_value());
    CHECK(err->reason == StepFailure::ForwardReference);

    Derivation e{"ahead",
                 {{parse_formula("p"), Justification::mp(2, 3)},
                  {parse_formula("p -> p"), Justification::axiom(Scheme::A1)}}};
    err = check_derivation(e);
    REQUIRE(err.has_value());
    CHECK(err->index == 1);
}

TEST_CASE("necessitation must wrap the referenced step") {
    Derivation d{"bad-nec",
                 {{parse_formula("p -> p"), Justification::axiom(Scheme::A1)},
                  {parse_formula("K{a} (p -> q)"), Justification::nec(1, "a")}}};
    auto err = check_derivation(d);
    REQUIRE(err.has_value());
    CHECK(err->index == 2);
    CHECK(err->reason == StepFailure::BadNec);

    Derivation e{"wrong-agent",
                 {{parse_formula("p -> p"), Justification::axiom(Scheme::A1)},
                  {parse_formula("K{a} (p -> p)"), Justification::nec(1, "b")}}};
    err = check_derivation(e);
    REQUIRE(err.has_value());
    CHECK(err->reason == StepFailure::BadNec);
}

TEST_CASE("replacement of equivalents needs the biconditional and owner") {
    Derivation good{"re",
                    {{parse_formula("p & q <-> q & p"), Justification::axiom(Scheme::A1)},
                     {parse_formula("S{a} (p & q) <-> S{a} (q & p)"),
                      Justification::re(1, "a")}}};
    CHECK_FALSE(check_derivation(good).has_value());

    Derivation bad = good;
    bad.steps[1].formula = parse_formula("S{a} (p & q) <-> S{b} (q & p)");
    auto err = check_derivation(bad);
    REQUIRE(err.has_value());
    CHECK(err->index == 2);
    CHECK(err->reason == StepFailure::BadRE);

    bad = good;
    bad.steps[0].formula = parse_formula("p & q -> q & p");
    bad.steps[0].by = Justification::axiom(Scheme::A1);
    err = check_derivation(bad);
    REQUIRE(err.has_value());
    CHECK(err->reason == StepFailure::BadRE);
}

TEST_CASE("seeded mutations fail at the mutated step") {
    auto fixtures = fixture_library();
    test::Rng rng(2024);
    for (int i = 0; i < 30; ++i) {
        auto mut = test::random_mutation(rng, fixtures);
        auto err = check_derivation(mut.derivation);
        REQUIRE(err.has_value());
        CHECK(err->index == mut.index);
    }
}

// ---------------------------------------------------------------------------
// Brute-force scheme matcher: try every subterm/agent assignment.

namespace {

std::vector<std::string> agents_of(const Formula& f) {
    auto out = f.agents();
    if (out.empty()) out.push_back("a");
    return out;
}

Formula know(const std::string& a, const Formula& f) { return Formula::know(a, f); }

bool brute_match(Scheme s, const Formula& f) {
    auto subs = subformulas(f);
    auto agents = agents_of(f);
    for (const auto& a : agents) {
        for (const Formula& phi : subs) {
            switch (s) {
            case Scheme::T:
                if (f == Formula::imp(know(a, phi), phi)) return true;
                break;
            case Scheme::Four:
                if (f == Formula::imp(know(a, phi), know(a, know(a, phi))))
                    return true;
                break;
            case Scheme::Five:
                if (f == Formula::imp(Formula::lnot(know(a, phi)),
                                      know(a, Formula::lnot(know(a, phi)))))
                    return true;
                break;
            case Scheme::S1:
                if (f == Formula::imp(Formula::secret(a, phi), know(a, phi)))
                    return true;
                break;
            case Scheme::S4:
                if (f == Formula::imp(Formula::secret(a, phi),
                                      know(a, Formula::secret(a, phi))))
                    return true;
                break;
            case Scheme::S2:
                for (const auto& b : agents)
                    if (b != a &&
                        f == Formula::imp(Formula::secret(a, phi),
                                          Formula::lnot(know(b, phi))))
                        return true;
                break;
            case Scheme::K:
                for (const Formula& psi : subs)
                    if (f == Formula::imp(know(a, Formula::imp(phi, psi)),
                                          Formula::imp(know(a, phi), know(a, psi))))
                        return true;
                break;
            case Scheme::A1:
                break;
            }
        }
    }
    return false;
}

} // namespace

TEST_CASE("the production matcher agrees with the brute-force one") {
    test::Rng rng(99);
    Scheme schemes[] = {Scheme::K,  Scheme::T,  Scheme::Four, Scheme::Five,
                        Scheme::S1, Scheme::S2, Scheme::S4};
    int positives = 0;
    for (int i = 0; i < 400; ++i) {
        Formula f = test::random_formula(rng, 4, {"a", "b"}, {"p", "q"});
        for (Scheme s : schemes) {
            bool got = check_axiom_instance(s, f);
            CHECK(got == brute_match(s, f));
            positives += got;
        }
    }
    // random trees rarely hit a scheme; force positives through instances
    test::Rng rng2(100);
    for (int i = 0; i < 60; ++i) {
        Formula phi = test::random_formula(rng2, 2, {"a", "b"}, {"p", "q"});
        Formula psi = test::random_formula(rng2, 2, {"a", "b"}, {"p", "q"});
        std::string a = rng2.uniform(2) ? "a" : "b";
        std::string b = a == "a" ? "b" : "a";
        std::vector<std::pair<Scheme, Formula>> cases = {
            {Scheme::T, Formula::imp(know(a, phi), phi)},
            {Scheme::Four, Formula::imp(know(a, phi), know(a, know(a, phi)))},
            {Scheme::Five, Formula::imp(Formula::lnot(know(a, phi)),
                                        know(a, Formula::lnot(know(a, phi))))},
            {Scheme::S1, Formula::imp(Formula::secret(a, phi), know(a, phi))},
            {Scheme::S2, Formula::imp(Formula::secret(a, phi),
                                      Formula::lnot(know(b, phi)))},
            {Scheme::S4, Formula::imp(Formula::secret(a, phi),
                                      know(a, Formula::secret(a, phi)))},
            {Scheme::K, Formula::imp(know(a, Formula::imp(phi, psi)),
                                     Formula::imp(know(a, phi), know(a, psi)))},
        };
        for (const auto& [s, inst] : cases) {
            CHECK(check_axiom_instance(s, inst));
            CHECK(brute_match(s, inst));
            ++positives;
        }
    }
    CHECK(positives > 400);
}

TEST_CASE("fixture conclusions hold on generated models") {
    auto fixtures = fixture_library();

    SearchBounds small;
    small.agents = 2;
    small.states = 2;
    small.atoms = {"p", "q"};
    small.max_events = 1;
    for (const auto& d : fixtures) {
        CAPTURE(d.name);
        SearchResult r = check_validity_bounded(d.conclusion(), small);
        CHECK(r.valid);
    }

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SearchBounds b;
        b.atoms = {"p", "q"};
        SecrecyModel m = random_model(seed, b);
        for (const auto& d : fixtures) {
            CAPTURE(d.name);
            CHECK(valid_on(m, d.conclusion()));
        }
    }
}

TEST_CASE("knowledge conjunction holds on the running model") {
    SecrecyModel m = SecrecyModel::validate(running_model());
    for (const auto& d : fixture_library())
        if (d.name == "knowledge-conjunction") CHECK(valid_on(m, d.conclusion()));
}

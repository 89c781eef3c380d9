#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simpsec/formula.hpp"
#include "test_util.hpp"

using namespace simpsec;

TEST_CASE("parsing the concrete syntax") {
    Formula f = parse_formula("S{a} p");
    CHECK(f == Formula::secret("a", Formula::atom("p")));

    f = parse_formula("S{a} p -> ~K{b} p");
    CHECK(f == Formula::imp(Formula::secret("a", Formula::atom("p")),
                            Formula::lnot(Formula::know("b", Formula::atom("p")))));

    f = parse_formula("K{a}(p & r)");
    CHECK(f == Formula::know("a", Formula::land(Formula::atom("p"),
                                                Formula::atom("r"))));

    CHECK(parse_formula("#t") == Formula::top());
    CHECK(parse_formula("#f") == Formula::bot());
}

TEST_CASE("precedence and associativity") {
    // ~, K, S bind tightest, then &, |, ->, <->
    CHECK(parse_formula("~p & q | r -> s <-> t") ==
          Formula::iff(
              Formula::imp(
                  Formula::lor(Formula::land(Formula::lnot(Formula::atom("p")),
                                             Formula::atom("q")),
                               Formula::atom("r")),
                  Formula::atom("s")),
              Formula::atom("t")));

    // -> associates right, & and | left
    CHECK(parse_formula("p -> q -> r") ==
          Formula::imp(Formula::atom("p"),
                       Formula::imp(Formula::atom("q"), Formula::atom("r"))));
    CHECK(parse_formula("p & q & r") ==
          Formula::land(Formula::land(Formula::atom("p"), Formula::atom("q")),
                        Formula::atom("r")));
}

TEST_CASE("syntax errors carry offset and expectations") {
    try {
        parse_formula("S{a} p ->");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 9);
        CHECK(!e.expected().empty());
    }
    CHECK_THROWS_AS(parse_formula("K{} p"), ParseError);
    CHECK_THROWS_AS(parse_formula("p q"), ParseError);
    CHECK_THROWS_AS(parse_formula("P"), ParseError); // atoms are lowercase
    CHECK_THROWS_AS(parse_formula(""), ParseError);
}

TEST_CASE("printing uses minimal parentheses") {
    CHECK(print_formula(Formula::secret("a", Formula::atom("p"))) == "S{a} p");
    CHECK(print_formula(parse_formula("S{a} p -> ~K{b} p")) == "S{a} p -> ~K{b} p");
    CHECK(print_formula(Formula::land(Formula::land(Formula::atom("p"),
                                                    Formula::atom("q")),
                                      Formula::atom("r"))) == "p & q & r");
    CHECK(print_formula(Formula::land(Formula::atom("p"),
                                      Formula::land(Formula::atom("q"),
                                                    Formula::atom("r")))) ==
          "p & (q & r)");
    CHECK(print_formula(parse_formula("K{a}(p & r)")) == "K{a} (p & r)");
    CHECK(print_formula(parse_formula("~(p | q)")) == "~(p | q)");
}

TEST_CASE("parse after print is the identity on random trees") {
    test::Rng rng(7);
    std::vector<std::string> agents = {"a", "b", "c"};
    std::vector<std::string> atoms = {"p", "q", "r", "s"};
    for (int i = 0; i < 500; ++i) {
        Formula f = test::random_formula(rng, 6, agents, atoms);
        CHECK(parse_formula(print_formula(f)) == f);
    }
}

TEST_CASE("subformulas are deduplicated and child-first") {
    auto subs = subformulas(parse_formula("S{a} p"));
    REQUIRE(subs.size() == 2);
    CHECK(subs[0] == Formula::atom("p"));
    CHECK(subs[1] == parse_formula("S{a} p"));

    subs = subformulas(parse_formula("p & p"));
    REQUIRE(subs.size() == 2);
    CHECK(subs[0] == Formula::atom("p"));

    subs = subformulas(parse_formula("K{a} ~p"));
    REQUIRE(subs.size() == 3);
    CHECK(subs[0] == Formula::atom("p"));
    CHECK(subs[1] == parse_formula("~p"));
    CHECK(subs[2] == parse_formula("K{a} ~p"));
}

TEST_CASE("desugaring commutes with parsing") {
    CHECK(desugar(parse_formula("p | q")) == parse_formula("~(~p & ~q)"));
    CHECK(desugar(parse_formula("p -> q")) == parse_formula("~(p & ~q)"));
    CHECK(desugar(parse_formula("p <-> q")) ==
          parse_formula("~(p & ~q) & ~(q & ~p)"));
    CHECK(desugar(parse_formula("#t")) == parse_formula("~(p & ~p)"));
    CHECK(desugar(parse_formula("#f")) == parse_formula("p & ~p"));
    CHECK(desugar(parse_formula("S{a} (p | q)")) ==
          Formula::secret("a", desugar(parse_formula("p | q"))));

    // idempotent on sugar-free input
    test::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Formula f = test::random_formula(rng, 5, {"a", "b"}, {"p", "q"});
        CHECK(desugar(desugar(f)) == desugar(f));
    }
}

TEST_CASE("propositional tautology over the modal skeleton") {
    CHECK(propositional_tautology(parse_formula("p -> p")));
    CHECK(propositional_tautology(parse_formula("S{a} p -> (q -> S{a} p)")));
    // a modal truth, but not a propositional one
    CHECK_FALSE(propositional_tautology(parse_formula("K{a} p -> p")));
    CHECK(propositional_tautology(parse_formula("#t")));
    CHECK_FALSE(propositional_tautology(parse_formula("#f")));
    // K{a} p and p are distinct variables, and so are K{a} p and K{b} p
    CHECK(propositional_tautology(parse_formula("K{a} p -> K{a} p")));
    CHECK_FALSE(propositional_tautology(parse_formula("K{a} p -> K{b} p")));
}

TEST_CASE("tautology cap") {
    std::string big = "p0";
    for (int i = 1; i < 20; ++i) big += " | p" + std::to_string(i);
    CHECK_THROWS_AS(propositional_tautology(parse_formula(big)), Error);
    // a raised cap evaluates instead of throwing
    CHECK_FALSE(propositional_tautology(parse_formula(big), 20));
    CHECK(propositional_tautology(parse_formula(big + " | ~p0"), 20));
}

namespace {

// independent route: desugar first, then evaluate the {Atom, Not, And,
// modal-atom} tree under every assignment
bool desugared_eval(const Formula& f, const std::vector<Formula>& vars,
                    std::uint32_t assignment) {
    if (f.kind() == Formula::Kind::Atom || f.is_modal()) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == f) return (assignment >> i) & 1u;
        REQUIRE(false);
    }
    if (f.kind() == Formula::Kind::Not)
        return !desugared_eval(f.lhs(), vars, assignment);
    REQUIRE(f.kind() == Formula::Kind::And);
    return desugared_eval(f.lhs(), vars, assignment) &&
           desugared_eval(f.rhs(), vars, assignment);
}

void collect_leaves(const Formula& f, std::vector<Formula>& vars) {
    if (f.kind() == Formula::Kind::Atom || f.is_modal()) {
        for (const auto& v : vars)
            if (v == f) return;
        vars.push_back(f);
        return;
    }
    for (std::size_t i = 0; i < f.arity(); ++i)
        collect_leaves(i == 0 ? f.lhs() : f.rhs(), vars);
}

} // namespace

TEST_CASE("tautology checker agrees with the desugared brute-force route") {
    test::Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        Formula f = test::random_formula(rng, 4, {"a", "b"}, {"p", "q", "r"});
        Formula flat = desugar(f);
        std::vector<Formula> vars;
        collect_leaves(flat, vars);
        if (vars.size() > 12) continue;
        bool expected = true;
        for (std::uint32_t a = 0; a < (1u << vars.size()); ++a)
            if (!desugared_eval(flat, vars, a)) {
                expected = false;
                break;
            }
        CHECK(propositional_tautology(f) == expected);
    }
}

TEST_CASE("token classes") {
    CHECK(is_atom_token("p"));
    CHECK(is_atom_token("atom_1"));
    CHECK_FALSE(is_atom_token("P"));
    CHECK_FALSE(is_atom_token("1p"));
    CHECK(is_agent_token("*"));
    CHECK(is_agent_token("Agent_9"));
    CHECK_FALSE(is_agent_token("a b"));
    CHECK(is_vertex_token("a@u0#3"));
    CHECK(is_vertex_token("*0"));
    CHECK_FALSE(is_vertex_token("u0+w1"));
}

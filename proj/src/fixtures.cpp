#include "simpsec/fixtures.hpp"

#include "simpsec/formula.hpp"

namespace simpsec {

namespace {

// Incremental derivation builder. Steps are 1-based; helpers append the
// standard propositional glue as explicit tautology instances plus modus
// ponens, so the kernel only ever sees the eight schemes and three rules.
struct Builder {
    Derivation d;

    explicit Builder(std::string name) { d.name = std::move(name); }

    const Formula& at(int i) const { return d.steps[static_cast<std::size_t>(i - 1)].formula; }

    int add(Formula f, Justification by) {
        d.steps.push_back({std::move(f), by});
        return static_cast<int>(d.steps.size());
    }

    int taut(Formula f) { return add(std::move(f), Justification::axiom(Scheme::A1)); }
    int taut(const std::string& text) { return taut(parse_formula(text)); }

    int ax(Scheme s, Formula f) { return add(std::move(f), Justification::axiom(s)); }
    int ax(Scheme s, const std::string& text) { return ax(s, parse_formula(text)); }

    // step j must read (at(i) -> x); appends x
    int mp(int i, int j) { return add(at(j).rhs(), Justification::mp(i, j)); }

    int nec(int i, const std::string& agent) {
        return add(Formula::know(agent, at(i)), Justification::nec(i, agent));
    }

    int re(int i, const std::string& agent) {
        const Formula& eq = at(i);
        return add(Formula::iff(Formula::secret(agent, eq.lhs()),
                                Formula::secret(agent, eq.rhs())),
                   Justification::re(i, agent));
    }

    // hypothetical syllogism: from i: X->Y and j: Y->Z conclude X->Z
    int chain(int i, int j) {
        Formula xy = at(i);
        Formula yz = at(j);
        Formula goal = Formula::imp(xy.lhs(), yz.rhs());
        int t = taut(Formula::imp(xy, Formula::imp(yz, goal)));
        int u = mp(i, t);
        return mp(j, u);
    }

    // from i: X->Y conclude ~Y->~X
    int contrapose(int i) {
        Formula xy = at(i);
        Formula goal = Formula::imp(Formula::lnot(xy.rhs()), Formula::lnot(xy.lhs()));
        int t = taut(Formula::imp(xy, goal));
        return mp(i, t);
    }

    // from i: X->Y and j: Y->X conclude X<->Y
    int iff_intro(int i, int j) {
        Formula fwd = at(i);
        Formula goal = Formula::iff(fwd.lhs(), fwd.rhs());
        int t = taut(Formula::imp(at(i), Formula::imp(at(j), goal)));
        int u = mp(i, t);
        return mp(j, u);
    }
};

// S{x}phi -> phi
int derive_secrecy_truth(Builder& b, const std::string& x, const Formula& phi) {
    Formula s = Formula::secret(x, phi);
    Formula k = Formula::know(x, phi);
    int s1 = b.ax(Scheme::S1, Formula::imp(s, k));
    int t = b.ax(Scheme::T, Formula::imp(k, phi));
    return b.chain(s1, t);
}

// ~S{x}phi -> K{x}~S{x}phi
int derive_negative_locality(Builder& b, const std::string& x, const Formula& phi) {
    Formula s = Formula::secret(x, phi);
    Formula ks = Formula::know(x, s);
    int t = b.ax(Scheme::T, Formula::imp(ks, s));
    int c1 = b.contrapose(t); // ~S -> ~K{x}S
    int five = b.ax(Scheme::Five,
                    Formula::imp(Formula::lnot(ks),
                                 Formula::know(x, Formula::lnot(ks))));
    int s4 = b.ax(Scheme::S4, Formula::imp(s, ks));
    int c2 = b.contrapose(s4); // ~K{x}S -> ~S
    int n = b.nec(c2, x);
    int k = b.ax(Scheme::K,
                 Formula::imp(b.at(n),
                              Formula::imp(Formula::know(x, Formula::lnot(ks)),
                                           Formula::know(x, Formula::lnot(s)))));
    int dist = b.mp(n, k); // K{x}~K{x}S -> K{x}~S
    int h = b.chain(five, dist);
    return b.chain(c1, h);
}

// ~S{owner}chi, given a prior step t: chi -> K{other}chi
int derive_no_foreign_secret(Builder& b, const std::string& owner,
                             const std::string& other, const Formula& chi, int t) {
    Formula s = Formula::secret(owner, chi);
    int truth = derive_secrecy_truth(b, owner, chi); // S -> chi
    int up = b.chain(truth, t);                      // S -> K{other}chi
    int s2 = b.ax(Scheme::S2,
                  Formula::imp(s, Formula::lnot(Formula::know(other, chi))));
    int big = b.taut(Formula::imp(
        b.at(up), Formula::imp(b.at(s2), Formula::lnot(s))));
    int u = b.mp(up, big);
    return b.mp(s2, u);
}

Derivation fx_ssl_truth() {
    Builder b("ssl-truth");
    derive_secrecy_truth(b, "a", Formula::atom("p"));
    return b.d;
}

Derivation fx_secrecy_implies_possible() {
    Builder b("secrecy-implies-possible");
    Formula p = Formula::atom("p");
    Formula s = Formula::secret("a", p);
    Formula kbn = Formula::know("b", Formula::lnot(p));
    int truth = derive_secrecy_truth(b, "a", p); // S{a}p -> p
    int t = b.ax(Scheme::T, Formula::imp(kbn, Formula::lnot(p)));
    int big = b.taut(Formula::imp(
        b.at(truth), Formula::imp(b.at(t), Formula::imp(s, Formula::lnot(kbn)))));
    int u = b.mp(truth, big);
    b.mp(t, u);
    return b.d;
}

Derivation fx_negative_owner_locality() {
    Builder b("negative-owner-locality");
    derive_negative_locality(b, "a", Formula::atom("p"));
    return b.d;
}

Derivation fx_owner_locality_positive() {
    Builder b("owner-locality-positive");
    Formula s = Formula::secret("a", Formula::atom("p"));
    Formula ks = Formula::know("a", s);
    int s4 = b.ax(Scheme::S4, Formula::imp(s, ks));
    int t = b.ax(Scheme::T, Formula::imp(ks, s));
    b.iff_intro(s4, t);
    return b.d;
}

Derivation fx_owner_locality_negative() {
    Builder b("owner-locality-negative");
    Formula s = Formula::secret("a", Formula::atom("p"));
    Formula goal_rhs = Formula::know("a", Formula::lnot(s));
    int fwd = derive_negative_locality(b, "a", Formula::atom("p"));
    int t = b.ax(Scheme::T, Formula::imp(goal_rhs, Formula::lnot(s)));
    b.iff_intro(fwd, t);
    return b.d;
}

Derivation fx_owner_knows_ignorance(bool negated_body) {
    Builder b(negated_body ? "owner-knows-ignorance-negative"
                           : "owner-knows-ignorance-positive");
    Formula p = Formula::atom("p");
    Formula s = Formula::secret("a", p);
    int lemma;
    if (!negated_body) {
        lemma = b.ax(Scheme::S2,
                     Formula::imp(s, Formula::lnot(Formula::know("b", p))));
    } else {
        Formula kbn = Formula::know("b", Formula::lnot(p));
        int truth = derive_secrecy_truth(b, "a", p);
        int t = b.ax(Scheme::T, Formula::imp(kbn, Formula::lnot(p)));
        int big = b.taut(Formula::imp(
            b.at(truth),
            Formula::imp(b.at(t), Formula::imp(s, Formula::lnot(kbn)))));
        int u = b.mp(truth, big);
        lemma = b.mp(t, u); // S{a}p -> ~K{b}~p
    }
    int n = b.nec(lemma, "a");
    Formula inner = b.at(lemma).rhs();
    int k = b.ax(Scheme::K,
                 Formula::imp(b.at(n),
                              Formula::imp(Formula::know("a", s),
                                           Formula::know("a", inner))));
    int dist = b.mp(n, k);
    int s4 = b.ax(Scheme::S4, Formula::imp(s, Formula::know("a", s)));
    b.chain(s4, dist);
    return b.d;
}

Derivation fx_higher_order_opacity_positive() {
    Builder b("higher-order-opacity-positive");
    Formula p = Formula::atom("p");
    Formula s = Formula::secret("a", p);
    Formula kbs = Formula::know("b", s);
    int truth = derive_secrecy_truth(b, "a", p);
    int n = b.nec(truth, "b");
    int k = b.ax(Scheme::K,
                 Formula::imp(b.at(n),
                              Formula::imp(kbs, Formula::know("b", p))));
    int lift = b.mp(n, k); // K{b}S{a}p -> K{b}p
    int s2 = b.ax(Scheme::S2,
                  Formula::imp(s, Formula::lnot(Formula::know("b", p))));
    int big = b.taut(Formula::imp(
        b.at(lift), Formula::imp(b.at(s2), Formula::imp(s, Formula::lnot(kbs)))));
    int u = b.mp(lift, big);
    b.mp(s2, u);
    return b.d;
}

Derivation fx_higher_order_opacity_negative() {
    Builder b("higher-order-opacity-negative");
    Formula s = Formula::secret("a", Formula::atom("p"));
    Formula kbn = Formula::know("b", Formula::lnot(s));
    int t = b.ax(Scheme::T, Formula::imp(kbn, Formula::lnot(s)));
    int big = b.taut(Formula::imp(b.at(t), Formula::imp(s, Formula::lnot(kbn))));
    b.mp(t, big);
    return b.d;
}

Derivation fx_no_foreign_secret(const std::string& name, Scheme lemma_scheme) {
    Builder b(name);
    Formula q = Formula::atom("q");
    Formula chi = Formula::top(); // reassigned below
    int t = 0;
    switch (lemma_scheme) {
    case Scheme::Four:
        chi = Formula::know("b", q);
        t = b.ax(Scheme::Four, Formula::imp(chi, Formula::know("b", chi)));
        break;
    case Scheme::Five:
        chi = Formula::lnot(Formula::know("b", q));
        t = b.ax(Scheme::Five, Formula::imp(chi, Formula::know("b", chi)));
        break;
    case Scheme::S4:
        chi = Formula::secret("b", q);
        t = b.ax(Scheme::S4, Formula::imp(chi, Formula::know("b", chi)));
        break;
    default: // the negated-secret case runs on the derived locality lemma
        chi = Formula::lnot(Formula::secret("b", q));
        t = derive_negative_locality(b, "b", q);
        break;
    }
    derive_no_foreign_secret(b, "a", "b", chi, t);
    return b.d;
}

Derivation fx_no_secret_top() {
    Builder b("no-secret-top");
    Formula s = Formula::secret("a", Formula::top());
    Formula kb = Formula::know("b", Formula::top());
    int top = b.taut(Formula::top());
    int n = b.nec(top, "b");
    int s2 = b.ax(Scheme::S2, Formula::imp(s, Formula::lnot(kb)));
    int big = b.taut(Formula::imp(kb, Formula::imp(b.at(s2), Formula::lnot(s))));
    int u = b.mp(n, big);
    b.mp(s2, u);
    return b.d;
}

Derivation fx_knowledge_conjunction() {
    Builder b("knowledge-conjunction");
    Formula p = Formula::atom("p");
    Formula q = Formula::atom("q");
    Formula pq = Formula::land(p, q);
    int t = b.taut(Formula::imp(p, Formula::imp(q, pq)));
    int n = b.nec(t, "a");
    int k1 = b.ax(Scheme::K,
                  Formula::imp(b.at(n),
                               Formula::imp(Formula::know("a", p),
                                            Formula::know("a", Formula::imp(q, pq)))));
    int lift = b.mp(n, k1); // K{a}p -> K{a}(q -> p&q)
    int k2 = b.ax(Scheme::K,
                  Formula::imp(Formula::know("a", Formula::imp(q, pq)),
                               Formula::imp(Formula::know("a", q),
                                            Formula::know("a", pq))));
    int curried = b.chain(lift, k2); // K{a}p -> (K{a}q -> K{a}(p&q))
    Formula goal = Formula::imp(Formula::land(Formula::know("a", p),
                                              Formula::know("a", q)),
                                Formula::know("a", pq));
    int big = b.taut(Formula::imp(b.at(curried), goal));
    b.mp(curried, big);
    return b.d;
}

Derivation fx_secrecy_profile() {
    Builder b("secrecy-profile");
    Formula p = Formula::atom("p");
    Formula s = Formula::secret("a", p);
    Formula kap = Formula::know("a", p);
    Formula kbp = Formula::know("b", p);
    Formula kbn = Formula::know("b", Formula::lnot(p));

    int s1 = b.ax(Scheme::S1, Formula::imp(s, kap));
    int t = b.ax(Scheme::T, Formula::imp(kap, p));
    int truth = b.chain(s1, t); // S -> p
    int s2 = b.ax(Scheme::S2, Formula::imp(s, Formula::lnot(kbp)));
    int tb = b.ax(Scheme::T, Formula::imp(kbn, Formula::lnot(p)));
    int big1 = b.taut(Formula::imp(
        b.at(truth), Formula::imp(b.at(tb), Formula::imp(s, Formula::lnot(kbn)))));
    int u = b.mp(truth, big1);
    int poss = b.mp(tb, u); // S -> ~K{b}~p

    Formula profile =
        Formula::land(Formula::land(Formula::land(kap, p), Formula::lnot(kbp)),
                      Formula::lnot(kbn));
    Formula goal = Formula::imp(s, profile);
    int big2 = b.taut(Formula::imp(
        b.at(s1),
        Formula::imp(b.at(truth),
                     Formula::imp(b.at(s2), Formula::imp(b.at(poss), goal)))));
    int v1 = b.mp(s1, big2);
    int v2 = b.mp(truth, v1);
    int v3 = b.mp(s2, v2);
    b.mp(poss, v3);
    return b.d;
}

Derivation fx_secrecy_extensional_conjunction() {
    Builder b("secrecy-commutes-conjunction");
    Formula p = Formula::atom("p");
    Formula q = Formula::atom("q");
    int eq = b.taut(Formula::iff(Formula::land(p, q), Formula::land(q, p)));
    b.re(eq, "a");
    return b.d;
}

} // namespace

std::vector<Derivation> fixture_library() {
    std::vector<Derivation> out;
    out.push_back(fx_ssl_truth());
    out.push_back(fx_secrecy_implies_possible());
    out.push_back(fx_negative_owner_locality());
    out.push_back(fx_owner_locality_positive());
    out.push_back(fx_owner_locality_negative());
    out.push_back(fx_owner_knows_ignorance(false));
    out.push_back(fx_owner_knows_ignorance(true));
    out.push_back(fx_higher_order_opacity_positive());
    out.push_back(fx_higher_order_opacity_negative());
    out.push_back(fx_no_foreign_secret("no-foreign-secret-knowledge", Scheme::Four));
    out.push_back(fx_no_foreign_secret("no-foreign-secret-ignorance", Scheme::Five));
    out.push_back(fx_no_foreign_secret("no-foreign-secret-secret", Scheme::S4));
    out.push_back(fx_no_foreign_secret("no-foreign-secret-nonsecret", Scheme::A1));
    out.push_back(fx_no_secret_top());
    out.push_back(fx_knowledge_conjunction());
    out.push_back(fx_secrecy_profile());
    out.push_back(fx_secrecy_extensional_conjunction());
    return out;
}

// ---------------------------------------------------------------------------
// Model fixtures

namespace {

RawComplex grid_3x3() {
    RawComplex c;
    c.agents = {"a", "b"};
    c.vertices = {{"u0", "a"}, {"u1", "a"}, {"u2", "a"},
                  {"w1", "b"}, {"w2", "b"}, {"w3", "b"}};
    for (const char* u : {"u0", "u1", "u2"})
        for (const char* w : {"w1", "w2", "w3"})
            c.facets.push_back({u, w});
    return c;
}

std::vector<std::string> row(const std::string& u) {
    return {u + "+w1", u + "+w2", u + "+w3"};
}

} // namespace

RawModel running_model() {
    RawModel m;
    m.complex = grid_3x3();
    std::vector<std::string> secret_event = {"u0+w1", "u0+w2", "u0+w3", "u1+w1"};
    for (const auto& key : secret_event) m.valuation[key] = {"p"};
    m.neighborhoods["u0"] = {secret_event};
    return m;
}

RawModel nonnormal1_model() {
    // identical data; the failure of iterated secrecy is a property of the
    // same model, queried differently
    return running_model();
}

RawModel nonnormal2_model() {
    RawModel m;
    m.complex = grid_3x3();
    for (const auto& key : row("u0")) m.valuation[key] = {"p", "q", "r"};
    for (const auto& key : row("u1")) m.valuation[key] = {"p"};
    for (const auto& key : row("u2")) m.valuation[key] = {"r"};
    std::vector<std::string> p_set = row("u0");
    for (const auto& k : row("u1")) p_set.push_back(k);
    std::vector<std::string> r_set = row("u0");
    for (const auto& k : row("u2")) r_set.push_back(k);
    m.neighborhoods["u0"] = {p_set, r_set};
    return m;
}

std::vector<std::pair<std::string, RawModel>> aux_fixture_models() {
    std::vector<std::pair<std::string, RawModel>> out;

    { // single facet; the empty set as a designated event
        RawModel m;
        m.complex.agents = {"*", "a", "b"};
        m.complex.vertices = {{"a0", "a"}, {"b0", "b"}, {"s0", "*"}};
        m.complex.facets = {{"a0", "b0", "s0"}};
        m.valuation["a0+b0+s0"] = {"p"};
        m.neighborhoods["a0"] = {{}};
        out.emplace_back("aux1", std::move(m));
    }
    { // three facets, one event not containing the owner's whole star
        RawModel m;
        m.complex.agents = {"*", "a", "b"};
        m.complex.vertices = {{"a0", "a"}, {"a1", "a"}, {"b0", "b"},
                              {"b1", "b"}, {"s0", "*"}, {"s1", "*"}, {"s2", "*"}};
        m.complex.facets = {{"a0", "b0", "s0"}, {"a0", "b1", "s1"}, {"a1", "b0", "s2"}};
        m.valuation["a0+b0+s0"] = {"p", "q"};
        m.valuation["a0+b1+s1"] = {"p"};
        m.neighborhoods["a0"] = {{"a0+b0+s0"}};
        out.emplace_back("aux2", std::move(m));
    }
    { // 2x2 grid; events for both agents
        RawModel m;
        m.complex.agents = {"*", "a", "b"};
        m.complex.vertices = {{"a0", "a"}, {"a1", "a"}, {"b0", "b"}, {"b1", "b"},
                              {"s0", "*"}, {"s1", "*"}, {"s2", "*"}, {"s3", "*"}};
        m.complex.facets = {{"a0", "b0", "s0"},
                            {"a0", "b1", "s1"},
                            {"a1", "b0", "s2"},
                            {"a1", "b1", "s3"}};
        m.valuation["a0+b0+s0"] = {"p", "r"};
        m.valuation["a0+b1+s1"] = {"p"};
        m.valuation["a1+b0+s2"] = {"r"};
        m.neighborhoods["a0"] = {{"a0+b0+s0", "a0+b1+s1"}};
        m.neighborhoods["b0"] = {{"a0+b0+s0", "a1+b0+s2"}};
        out.emplace_back("aux3", std::move(m));
    }
    { // three real agents, two facets
        RawModel m;
        m.complex.agents = {"*", "a", "b", "c"};
        m.complex.vertices = {{"a0", "a"}, {"a1", "a"}, {"b0", "b"},
                              {"c0", "c"}, {"s0", "*"}, {"s1", "*"}};
        m.complex.facets = {{"a0", "b0", "c0", "s0"}, {"a1", "b0", "c0", "s1"}};
        m.valuation["a0+b0+c0+s0"] = {"p"};
        m.neighborhoods["a0"] = {{"a0+b0+c0+s0"}};
        out.emplace_back("aux4", std::move(m));
    }
    { // no secrecy structure at all
        RawModel m;
        m.complex.agents = {"*", "a", "b"};
        m.complex.vertices = {{"a0", "a"}, {"b0", "b"}, {"b1", "b"},
                              {"s0", "*"}, {"s1", "*"}};
        m.complex.facets = {{"a0", "b0", "s0"}, {"a0", "b1", "s1"}};
        m.valuation["a0+b0+s0"] = {"p"};
        out.emplace_back("aux5", std::move(m));
    }
    return out;
}

std::vector<std::string> default_pool() {
    return {
        "p",
        "r",
        "~p",
        "p & r",
        "p | ~r",
        "p -> r",
        "K{a} p",
        "K{b} r",
        "~K{b} p",
        "S{a} p",
        "S{b} (p | r)",
        "S{a} K{a} p",
    };
}

std::vector<std::string> single_agent_pool() {
    std::vector<std::string> out;
    for (const auto& text : default_pool()) {
        Formula f = parse_formula(text);
        bool only_a = true;
        for (const auto& agent : f.agents())
            if (agent != "a") only_a = false;
        if (only_a) out.push_back(text);
    }
    return out;
}

std::vector<std::string> share_pool() {
    return {
        "p",
        "r",
        "~p",
        "p & r",
        "p | r",
        "K{a} p",
        "K{b} p",
        "S{a} p",
        "S{b} r",
        "S{a} K{a} p",
    };
}

} // namespace simpsec

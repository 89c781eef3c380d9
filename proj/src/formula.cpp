#include "simpsec/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace simpsec {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Formula Formula::make(Kind kind, std::string label, std::vector<Formula> children) {
    std::size_t h = hash_combine(0x51ec0de5u, static_cast<std::size_t>(kind));
    h = hash_combine(h, std::hash<std::string>{}(label));
    for (const auto& c : children) h = hash_combine(h, c.hash());
    auto node = std::make_shared<const Node>(Node{kind, std::move(label), std::move(children), h});
    return Formula(std::move(node));
}

Formula Formula::atom(std::string name) { return make(Kind::Atom, std::move(name), {}); }
Formula Formula::top() { return make(Kind::Top, "", {}); }
Formula Formula::bot() { return make(Kind::Bot, "", {}); }
Formula Formula::lnot(Formula f) { return make(Kind::Not, "", {std::move(f)}); }
Formula Formula::land(Formula l, Formula r) { return make(Kind::And, "", {std::move(l), std::move(r)}); }
Formula Formula::lor(Formula l, Formula r) { return make(Kind::Or, "", {std::move(l), std::move(r)}); }
Formula Formula::imp(Formula l, Formula r) { return make(Kind::Imp, "", {std::move(l), std::move(r)}); }
Formula Formula::iff(Formula l, Formula r) { return make(Kind::Iff, "", {std::move(l), std::move(r)}); }
Formula Formula::know(std::string agent, Formula f) {
    return make(Kind::Know, std::move(agent), {std::move(f)});
}
Formula Formula::secret(std::string agent, Formula f) {
    return make(Kind::Secret, std::move(agent), {std::move(f)});
}

std::size_t Formula::arity() const { return node_->lhs.size(); }

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (node_->hash != other.node_->hash) return false;
    if (node_->kind != other.node_->kind || node_->label != other.node_->label ||
        node_->lhs.size() != other.node_->lhs.size())
        return false;
    for (std::size_t i = 0; i < node_->lhs.size(); ++i)
        if (node_->lhs[i] != other.node_->lhs[i]) return false;
    return true;
}

namespace {

void collect_names(const Formula& f, std::set<std::string>& agents,
                   std::set<std::string>& atoms) {
    switch (f.kind()) {
    case Formula::Kind::Atom:
        atoms.insert(f.label());
        break;
    case Formula::Kind::Know:
    case Formula::Kind::Secret:
        agents.insert(f.label());
        collect_names(f.lhs(), agents, atoms);
        break;
    default:
        for (std::size_t i = 0; i < f.arity(); ++i)
            collect_names(i == 0 ? f.lhs() : f.rhs(), agents, atoms);
        break;
    }
}

} // namespace

std::vector<std::string> Formula::agents() const {
    std::set<std::string> ag, at;
    collect_names(*this, ag, at);
    return {ag.begin(), ag.end()};
}

std::vector<std::string> Formula::atoms() const {
    std::set<std::string> ag, at;
    collect_names(*this, ag, at);
    return {at.begin(), at.end()};
}

bool is_atom_token(std::string_view s) {
    if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
    for (char c : s)
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'))
            return false;
    return true;
}

bool is_agent_token(std::string_view s) {
    if (s == "*") return true;
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

bool is_vertex_token(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
              c == '@' || c == '#' || c == '*'))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(std::vector<std::string> expected) {
        std::string found = pos < text.size()
                                ? std::string(1, text[pos])
                                : std::string("end of input");
        throw ParseError(pos, std::move(expected), found);
    }

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(std::string_view tok) {
        skip_ws();
        if (text.substr(pos, tok.size()) == tok) {
            // "-" of "->" must not swallow the arrow of "<->" etc.; all our
            // tokens are prefix-free except "-": handled by full-token match
            pos += tok.size();
            return true;
        }
        return false;
    }

    bool peek(std::string_view tok) {
        skip_ws();
        return text.substr(pos, tok.size()) == tok;
    }

    std::string ident(bool lowercase_only) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size()) {
            char c = text[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++pos;
            else
                break;
        }
        if (pos == start) fail({lowercase_only ? "atom" : "agent name"});
        std::string s(text.substr(start, pos - start));
        if (lowercase_only && !is_atom_token(s)) {
            pos = start;
            fail({"lowercase atom"});
        }
        return s;
    }

    Formula modality(char op) {
        ++pos; // 'K' or 'S'
        skip_ws();
        if (!eat("{")) fail({"{"});
        std::string agent = ident(false);
        if (!eat("}")) fail({"}"});
        Formula body = unary();
        return op == 'K' ? Formula::know(std::move(agent), std::move(body))
                         : Formula::secret(std::move(agent), std::move(body));
    }

    Formula unary() {
        skip_ws();
        if (pos >= text.size())
            fail({"~", "K{", "S{", "(", "atom", "#t", "#f"});
        char c = text[pos];
        if (c == '~') {
            ++pos;
            return Formula::lnot(unary());
        }
        if (c == 'K' || c == 'S') return modality(c);
        if (c == '(') {
            ++pos;
            Formula f = formula();
            if (!eat(")")) fail({")"});
            return f;
        }
        if (c == '#') {
            if (eat("#t")) return Formula::top();
            if (eat("#f")) return Formula::bot();
            fail({"#t", "#f"});
        }
        if (c >= 'a' && c <= 'z') return Formula::atom(ident(true));
        fail({"~", "K{", "S{", "(", "atom", "#t", "#f"});
    }

    Formula conjunction() {
        Formula f = unary();
        while (peek("&")) {
            eat("&");
            f = Formula::land(std::move(f), unary());
        }
        return f;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (peek("|")) {
            eat("|");
            f = Formula::lor(std::move(f), conjunction());
        }
        return f;
    }

    Formula implication() {
        Formula f = disjunction();
        skip_ws();
        if (peek("->")) {
            eat("->");
            return Formula::imp(std::move(f), implication());
        }
        return f;
    }

    Formula formula() {
        Formula f = implication();
        while (peek("<->")) {
            eat("<->");
            f = Formula::iff(std::move(f), implication());
        }
        return f;
    }
};

} // namespace

Formula parse_formula(std::string_view text) {
    Parser p{text};
    Formula f = p.formula();
    p.skip_ws();
    if (p.pos != text.size()) p.fail({"end of input"});
    return f;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// binding strength: higher binds tighter
int level(Formula::Kind k) {
    switch (k) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Imp: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not:
    case Formula::Kind::Know:
    case Formula::Kind::Secret: return 5;
    default: return 6;
    }
}

void render(const Formula& f, int ctx, std::string& out) {
    int lv = level(f.kind());
    bool parens = lv < ctx;
    if (parens) out += '(';
    switch (f.kind()) {
    case Formula::Kind::Atom:
        out += f.label();
        break;
    case Formula::Kind::Top:
        out += "#t";
        break;
    case Formula::Kind::Bot:
        out += "#f";
        break;
    case Formula::Kind::Not:
        out += '~';
        render(f.lhs(), lv, out);
        break;
    case Formula::Kind::Know:
    case Formula::Kind::Secret:
        out += f.kind() == Formula::Kind::Know ? 'K' : 'S';
        out += '{';
        out += f.label();
        out += "} ";
        render(f.lhs(), lv, out);
        break;
    case Formula::Kind::And:
        render(f.lhs(), lv, out);
        out += " & ";
        render(f.rhs(), lv + 1, out);
        break;
    case Formula::Kind::Or:
        render(f.lhs(), lv, out);
        out += " | ";
        render(f.rhs(), lv + 1, out);
        break;
    case Formula::Kind::Imp:
        render(f.lhs(), lv + 1, out);
        out += " -> ";
        render(f.rhs(), lv, out);
        break;
    case Formula::Kind::Iff:
        render(f.lhs(), lv, out);
        out += " <-> ";
        render(f.rhs(), lv + 1, out);
        break;
    }
    if (parens) out += ')';
}

} // namespace

std::string print_formula(const Formula& f) {
    std::string out;
    render(f, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Structural utilities

Formula desugar(const Formula& f) {
    using K = Formula::Kind;
    static const Formula contradiction =
        Formula::land(Formula::atom("p"), Formula::lnot(Formula::atom("p")));
    switch (f.kind()) {
    case K::Atom: return f;
    case K::Top: return Formula::lnot(contradiction);
    case K::Bot: return contradiction;
    case K::Not: return Formula::lnot(desugar(f.lhs()));
    case K::And: return Formula::land(desugar(f.lhs()), desugar(f.rhs()));
    case K::Or:
        return Formula::lnot(Formula::land(Formula::lnot(desugar(f.lhs())),
                                           Formula::lnot(desugar(f.rhs()))));
    case K::Imp:
        return Formula::lnot(Formula::land(desugar(f.lhs()),
                                           Formula::lnot(desugar(f.rhs()))));
    case K::Iff: {
        Formula fwd = desugar(Formula::imp(f.lhs(), f.rhs()));
        Formula bwd = desugar(Formula::imp(f.rhs(), f.lhs()));
        return Formula::land(std::move(fwd), std::move(bwd));
    }
    case K::Know: return Formula::know(f.label(), desugar(f.lhs()));
    case K::Secret: return Formula::secret(f.label(), desugar(f.lhs()));
    }
    return f; // unreachable
}

namespace {

void postorder(const Formula& f, std::vector<Formula>& out,
               std::unordered_map<Formula, bool, FormulaHash>& seen) {
    if (seen.count(f)) return;
    for (std::size_t i = 0; i < f.arity(); ++i)
        postorder(i == 0 ? f.lhs() : f.rhs(), out, seen);
    if (!seen.count(f)) {
        seen.emplace(f, true);
        out.push_back(f);
    }
}

} // namespace

std::vector<Formula> subformulas(const Formula& f) {
    std::vector<Formula> out;
    std::unordered_map<Formula, bool, FormulaHash> seen;
    postorder(f, out, seen);
    return out;
}

namespace {

// Atoms and maximal modal subterms become truth-table variables.
void collect_vars(const Formula& f, std::vector<Formula>& vars,
                  std::unordered_map<Formula, int, FormulaHash>& index) {
    if (f.kind() == Formula::Kind::Atom || f.is_modal()) {
        if (!index.count(f)) {
            index.emplace(f, static_cast<int>(vars.size()));
            vars.push_back(f);
        }
        return;
    }
    for (std::size_t i = 0; i < f.arity(); ++i)
        collect_vars(i == 0 ? f.lhs() : f.rhs(), vars, index);
}

bool eval_skeleton(const Formula& f, std::uint32_t assignment,
                   const std::unordered_map<Formula, int, FormulaHash>& index) {
    using K = Formula::Kind;
    if (f.kind() == K::Atom || f.is_modal())
        return (assignment >> index.at(f)) & 1u;
    switch (f.kind()) {
    case K::Top: return true;
    case K::Bot: return false;
    case K::Not: return !eval_skeleton(f.lhs(), assignment, index);
    case K::And:
        return eval_skeleton(f.lhs(), assignment, index) &&
               eval_skeleton(f.rhs(), assignment, index);
    case K::Or:
        return eval_skeleton(f.lhs(), assignment, index) ||
               eval_skeleton(f.rhs(), assignment, index);
    case K::Imp:
        return !eval_skeleton(f.lhs(), assignment, index) ||
               eval_skeleton(f.rhs(), assignment, index);
    case K::Iff:
        return eval_skeleton(f.lhs(), assignment, index) ==
               eval_skeleton(f.rhs(), assignment, index);
    default: return false; // unreachable
    }
}

} // namespace

bool propositional_tautology(const Formula& f, int max_vars) {
    std::vector<Formula> vars;
    std::unordered_map<Formula, int, FormulaHash> index;
    collect_vars(f, vars, index);
    if (static_cast<int>(vars.size()) > max_vars)
        throw Error(ErrorKind::TooManyAtoms,
                    "tautology check over " + std::to_string(vars.size()) +
                        " variables exceeds the cap of " + std::to_string(max_vars));
    std::uint32_t n = static_cast<std::uint32_t>(vars.size());
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
        if (!eval_skeleton(f, static_cast<std::uint32_t>(a), index))
            return false;
    return true;
}

} // namespace simpsec

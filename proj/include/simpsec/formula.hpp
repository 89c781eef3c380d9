#pragma once
// The formula language: immutable AST, recursive-descent parser,
// minimal-parenthesis printer, and structural utilities.
//
// Concrete syntax:
//   formula := iff
//   iff     := imp ("<->" imp)*          left associative
//   imp     := or ("->" imp)?            right associative
//   or      := and ("|" and)*            left associative
//   and     := unary ("&" unary)*        left associative
//   unary   := "~" unary | "K{" agent "}" unary | "S{" agent "}" unary
//            | "(" formula ")" | atom | "#t" | "#f"
// Atoms are lowercase identifiers ([a-z][a-z0-9_]*); agent names are tokens
// over [A-Za-z0-9_].

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "simpsec/error.hpp"

namespace simpsec {

class Formula {
public:
    enum class Kind { Atom, Top, Bot, Not, And, Or, Imp, Iff, Know, Secret };

    static Formula atom(std::string name);
    static Formula top();
    static Formula bot();
    static Formula lnot(Formula f);
    static Formula land(Formula l, Formula r);
    static Formula lor(Formula l, Formula r);
    static Formula imp(Formula l, Formula r);
    static Formula iff(Formula l, Formula r);
    static Formula know(std::string agent, Formula f);
    static Formula secret(std::string agent, Formula f);

    Kind kind() const { return node_->kind; }

    // atom name for Atom nodes, agent name for Know/Secret nodes
    const std::string& label() const { return node_->label; }

    // unary child or left operand
    const Formula& lhs() const { return node_->lhs[0]; }
    const Formula& rhs() const { return node_->lhs[1]; }

    bool is_modal() const {
        return kind() == Kind::Know || kind() == Kind::Secret;
    }

    std::size_t arity() const;
    std::size_t hash() const { return node_->hash; }

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

    // names mentioned anywhere in the formula, sorted unique
    std::vector<std::string> agents() const;
    std::vector<std::string> atoms() const;

private:
    struct Node {
        Kind kind;
        std::string label;
        std::vector<Formula> lhs; // 0, 1 or 2 children
        std::size_t hash;
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Formula make(Kind kind, std::string label, std::vector<Formula> children);

    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Throws ParseError with byte offset and expected-token set.
Formula parse_formula(std::string_view text);

// Minimal-parenthesis rendering; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

// Equivalent formula over {Atom, Not, And, Know, Secret} only. Sugar expands
// to the usual abbreviations; #t becomes ~(p & ~p) and #f becomes p & ~p.
Formula desugar(const Formula& f);

// Every distinct subterm exactly once, children before parents.
std::vector<Formula> subformulas(const Formula& f);

// True iff f is a tautology when atoms and maximal modal subformulas are
// treated as independent propositional variables; decided by truth table.
// Throws TooManyAtoms when the variable count exceeds max_vars.
bool propositional_tautology(const Formula& f, int max_vars = 16);

bool is_atom_token(std::string_view s);
bool is_agent_token(std::string_view s);  // accepts the reserved colour "*"
bool is_vertex_token(std::string_view s);

} // namespace simpsec

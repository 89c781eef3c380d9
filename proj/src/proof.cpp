#include "simpsec/proof.hpp"

namespace simpsec {

const char* to_string(Scheme s) {
    switch (s) {
    case Scheme::A1: return "A1";
    case Scheme::K: return "K";
    case Scheme::T: return "T";
    case Scheme::Four: return "4";
    case Scheme::Five: return "5";
    case Scheme::S1: return "S1";
    case Scheme::S2: return "S2";
    case Scheme::S4: return "S4";
    }
    return "?";
}

std::optional<Scheme> scheme_from_string(const std::string& s) {
    if (s == "A1") return Scheme::A1;
    if (s == "K") return Scheme::K;
    if (s == "T") return Scheme::T;
    if (s == "4") return Scheme::Four;
    if (s == "5") return Scheme::Five;
    if (s == "S1") return Scheme::S1;
    if (s == "S2") return Scheme::S2;
    if (s == "S4") return Scheme::S4;
    return std::nullopt;
}

const char* to_string(StepFailure f) {
    switch (f) {
    case StepFailure::ForwardReference: return "ForwardReference";
    case StepFailure::BadAxiomMatch: return "BadAxiomMatch";
    case StepFailure::BadMP: return "BadMP";
    case StepFailure::BadNec: return "BadNec";
    case StepFailure::BadRE: return "BadRE";
    }
    return "?";
}

namespace {

using K = Formula::Kind;

bool is_imp(const Formula& f) { return f.kind() == K::Imp; }

// K{a}(p -> q) -> (K{a}p -> K{a}q)
bool match_distribution(const Formula& f) {
    if (!is_imp(f)) return false;
    const Formula& l = f.lhs();
    const Formula& r = f.rhs();
    if (l.kind() != K::Know || !is_imp(r)) return false;
    if (!is_imp(l.lhs())) return false;
    const Formula& kp = r.lhs();
    const Formula& kq = r.rhs();
    if (kp.kind() != K::Know || kq.kind() != K::Know) return false;
    if (kp.label() != l.label() || kq.label() != l.label()) return false;
    return l.lhs().lhs() == kp.lhs() && l.lhs().rhs() == kq.lhs();
}

// K{a}p -> p
bool match_truth(const Formula& f) {
    if (!is_imp(f)) return false;
    const Formula& l = f.lhs();
    return l.kind() == K::Know && l.lhs() == f.rhs();
}

// K{a}p -> K{a}K{a}p
bool match_positive_introspection(const Formula& f) {
    if (!is_imp(f)) return false;
    const Formula& l = f.lhs();
    const Formula& r = f.rhs();
    return l.kind() == K::Know && r.kind() == K::Know &&
           r.label() == l.label() && r.lhs() == l;
}

// ~K{a}p -> K{a}~K{a}p
bool match_negative_introspection(const Formula& f) {
    if (!is_imp(f)) return false;
    const Formula& l = f.lhs();
    const Formula& r = f.rhs();
    if (l.kind() != K::Not || l.lhs().kind() != K::Know) return false;
    return r.kind() == K::Know && r.label() == l.lhs().label() && r.lhs() == l;
}

// S{a}p -> K{a}p
bool match_secrecy_knowledge(const Formula& f) {
    if (!is_imp(f)) return false;
    const Formula& l = f.lhs();
    const Formula& r = f.rhs();
    return l.kind() == K::Secret && r.kind() == K::Know &&
           r.label() == l.label() && r.lhs() == l.lhs();
}

// S{a}p -> ~K{b}p with b distinct from a
bool match_external_ignorance(const Formula& f) {
    if (!is_imp(f)) return false;
    const Formula& l = f.lhs();
    const Formula& r = f.rhs();
    if (l.kind() != K::Secret || r.kind() != K::Not) return false;
    const Formula& kb = r.lhs();
    return kb.kind() == K::Know && kb.label() != l.label() &&
           kb.lhs() == l.lhs();
}

// S{a}p -> K{a}S{a}p
bool match_owner_locality(const Formula& f) {
    if (!is_imp(f)) return false;
    const Formula& l = f.lhs();
    const Formula& r = f.rhs();
    return l.kind() == K::Secret && r.kind() == K::Know &&
           r.label() == l.label() && r.lhs() == l;
}

} // namespace

bool check_axiom_instance(Scheme s, const Formula& f) {
    switch (s) {
    case Scheme::A1: return propositional_tautology(f);
    case Scheme::K: return match_distribution(f);
    case Scheme::T: return match_truth(f);
    case Scheme::Four: return match_positive_introspection(f);
    case Scheme::Five: return match_negative_introspection(f);
    case Scheme::S1: return match_secrecy_knowledge(f);
    case Scheme::S2: return match_external_ignorance(f);
    case Scheme::S4: return match_owner_locality(f);
    }
    return false;
}

std::optional<StepError> check_derivation(const Derivation& d) {
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
        int index = static_cast<int>(k) + 1;
        const Step& step = d.steps[k];
        const Justification& by = step.by;

        auto in_range = [&](int ref) { return ref >= 1 && ref < index; };

        switch (by.kind) {
        case Justification::Kind::Axiom:
            if (!check_axiom_instance(by.scheme, step.formula))
                return StepError{index, StepFailure::BadAxiomMatch,
                                 std::string("not an instance of (") +
                                     to_string(by.scheme) + ")"};
            break;
        case Justification::Kind::MP: {
            if (!in_range(by.i) || !in_range(by.j))
                return StepError{index, StepFailure::ForwardReference,
                                 "mp references a step at or after this one"};
            const Formula& minor = d.steps[by.i - 1].formula;
            const Formula& major = d.steps[by.j - 1].formula;
            if (major.kind() != Formula::Kind::Imp || major.lhs() != minor ||
                major.rhs() != step.formula)
                return StepError{index, StepFailure::BadMP,
                                 "step " + std::to_string(by.j) +
                                     " is not (step " + std::to_string(by.i) +
                                     " -> this step)"};
            break;
        }
        case Justification::Kind::Nec: {
            if (!in_range(by.i))
                return StepError{index, StepFailure::ForwardReference,
                                 "nec references a step at or after this one"};
            const Formula& prev = d.steps[by.i - 1].formula;
            if (step.formula.kind() != Formula::Kind::Know ||
                step.formula.label() != by.agent || step.formula.lhs() != prev)
                return StepError{index, StepFailure::BadNec,
                                 "this step is not K{" + by.agent + "} of step " +
                                     std::to_string(by.i)};
            break;
        }
        case Justification::Kind::RE: {
            if (!in_range(by.i))
                return StepError{index, StepFailure::ForwardReference,
                                 "re references a step at or after this one"};
            const Formula& prev = d.steps[by.i - 1].formula;
            const Formula& cur = step.formula;
            bool ok = prev.kind() == Formula::Kind::Iff &&
                      cur.kind() == Formula::Kind::Iff &&
                      cur.lhs().kind() == Formula::Kind::Secret &&
                      cur.rhs().kind() == Formula::Kind::Secret &&
                      cur.lhs().label() == by.agent &&
                      cur.rhs().label() == by.agent &&
                      cur.lhs().lhs() == prev.lhs() &&
                      cur.rhs().lhs() == prev.rhs();
            if (!ok)
                return StepError{index, StepFailure::BadRE,
                                 "this step is not the secrecy image of the "
                                 "biconditional at step " +
                                     std::to_string(by.i)};
            break;
        }
        }
    }
    return std::nullopt;
}

} // namespace simpsec

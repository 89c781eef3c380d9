#include "simpsec/error.hpp"

#include <sstream>

namespace simpsec {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::EmptyAgentSet: return "EmptyAgentSet";
    case ErrorKind::DuplicateAgent: return "DuplicateAgent";
    case ErrorKind::BadToken: return "BadToken";
    case ErrorKind::UnknownColour: return "UnknownColour";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::EmptyFacet: return "EmptyFacet";
    case ErrorKind::UnknownVertexInFacet: return "UnknownVertexInFacet";
    case ErrorKind::DuplicateColourInFacet: return "DuplicateColourInFacet";
    case ErrorKind::ImpureFacet: return "ImpureFacet";
    case ErrorKind::NonMaximalFacet: return "NonMaximalFacet";
    case ErrorKind::OrphanVertex: return "OrphanVertex";
    case ErrorKind::UnknownFacetInValuation: return "UnknownFacetInValuation";
    case ErrorKind::BadAtomName: return "BadAtomName";
    case ErrorKind::UnknownNeighborhoodVertex: return "UnknownNeighborhoodVertex";
    case ErrorKind::ReservedVertexNeighborhood: return "ReservedVertexNeighborhood";
    case ErrorKind::UnknownFacetInEvent: return "UnknownFacetInEvent";
    case ErrorKind::SNViolated: return "SNViolated";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownFacet: return "UnknownFacet";
    case ErrorKind::UnknownAgent: return "UnknownAgent";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::BadDocument: return "BadDocument";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::TooManyAtoms: return "TooManyAtoms";
    case ErrorKind::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorKind::BadBounds: return "BadBounds";
    case ErrorKind::ReservedColourInUse: return "ReservedColourInUse";
    case ErrorKind::SingleAgent: return "SingleAgent";
    case ErrorKind::ModulusTooSmall: return "ModulusTooSmall";
    case ErrorKind::NotIndistinguishable: return "NotIndistinguishable";
    }
    return "Unknown";
}

namespace {

std::string summarize(const std::vector<Diagnostic>& diags) {
    std::ostringstream out;
    out << diags.size() << " violation" << (diags.size() == 1 ? "" : "s");
    if (!diags.empty())
        out << ", first: " << to_string(diags.front().kind) << " ("
            << diags.front().detail << ")";
    return out.str();
}

std::string describe(std::size_t offset, const std::vector<std::string>& expected,
                     const std::string& found) {
    std::ostringstream out;
    out << "syntax error at byte " << offset << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) out << (i + 1 == expected.size() ? " or " : ", ");
        out << expected[i];
    }
    out << ", found " << found;
    return out.str();
}

} // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diags)
    : Error(diags.empty() ? ErrorKind::BadDocument : diags.front().kind,
            summarize(diags)),
      diags_(std::move(diags)) {}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& found)
    : Error(ErrorKind::SyntaxError, describe(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)) {}

} // namespace simpsec

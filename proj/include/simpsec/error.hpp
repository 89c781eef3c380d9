#pragma once
// Error kinds and exception types shared across the toolkit.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace simpsec {

enum class ErrorKind {
    // complex validation
    EmptyAgentSet,
    DuplicateAgent,
    BadToken,
    UnknownColour,
    DuplicateVertex,
    EmptyFacet,
    UnknownVertexInFacet,
    DuplicateColourInFacet,
    ImpureFacet,
    NonMaximalFacet,
    OrphanVertex,
    // model validation
    UnknownFacetInValuation,
    BadAtomName,
    UnknownNeighborhoodVertex,
    ReservedVertexNeighborhood,
    UnknownFacetInEvent,
    SNViolated,
    // lookups and evaluation
    UnknownVertex,
    UnknownFacet,
    UnknownAgent,
    // input parsing
    SyntaxError,
    BadDocument,
    IoError,
    // limits
    TooManyAtoms,
    BoundsTooLarge,
    BadBounds,
    // share pipeline
    ReservedColourInUse,
    SingleAgent,
    ModulusTooSmall,
    NotIndistinguishable,
};

const char* to_string(ErrorKind k);

// One violated invariant; validation reports all of them, not just the first.
struct Diagnostic {
    ErrorKind kind;
    std::string detail;
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Diagnostic> diags);

    const std::vector<Diagnostic>& diagnostics() const { return diags_; }

private:
    std::vector<Diagnostic> diags_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected,
               const std::string& found);

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

} // namespace simpsec

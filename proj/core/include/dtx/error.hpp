#ifndef DTX_ERROR_HPP
#define DTX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dtx {

enum class ErrorKind {
    Syntax,              // malformed JSON / CSV text
    Schema,              // well-formed text with missing or mistyped fields
    UnknownFeature,
    UnknownValue,
    UnknownClass,
    DuplicateName,
    DomainTooSmall,
    OverlappingEdges,
    NonCoveringEdges,
    Cycle,
    DanglingChild,
    MultipleParents,
    UnreachableNode,
    EmptyPath,           // a root-leaf path whose aggregated literal is empty
    UnsupportedLiteral,  // ordinal / threshold tests
    InvalidInstance,
    InconsistentLiterals,
    ForeignPath,         // path does not belong to the tree it is used with
    SourceInconsistency, // a contrary path with nothing to hit
    BudgetExceeded,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace dtx

#endif

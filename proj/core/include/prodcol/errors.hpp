#pragma once

#include <stdexcept>
#include <string>

namespace prodcol {

// Base class for everything thrown by the library. kind() is a stable
// machine-readable name; what() reads "<kind>: <detail>".
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define PRODCOL_ERROR(Name)                                                  \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& detail) : Error(#Name, detail) {}   \
    }

// Input and parameter rejections.
PRODCOL_ERROR(SelfLoop);
PRODCOL_ERROR(DuplicateEdge);
PRODCOL_ERROR(CycleDetected);
PRODCOL_ERROR(Disconnected);
PRODCOL_ERROR(TooSmall);
PRODCOL_ERROR(InvalidParams);
PRODCOL_ERROR(InvalidDelta);
PRODCOL_ERROR(OutOfRange);
PRODCOL_ERROR(TooLarge);
PRODCOL_ERROR(MissingColour);
PRODCOL_ERROR(ParseError);

// Defect signals. These mean a library invariant broke, not bad input.
PRODCOL_ERROR(SpanBoundViolated);
PRODCOL_ERROR(InternalError);
PRODCOL_ERROR(OffsetExhausted);

#undef PRODCOL_ERROR

// True for errors that indicate a broken invariant rather than bad input.
inline bool is_defect(const Error& e) noexcept {
    const std::string& k = e.kind();
    return k == "SpanBoundViolated" || k == "InternalError" ||
           k == "OffsetExhausted";
}

}  // namespace prodcol

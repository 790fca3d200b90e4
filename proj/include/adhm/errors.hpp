#ifndef ADHM_ERRORS_HPP
#define ADHM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adhm {

enum class ErrorCode {
    InvalidArgument,
    ShapeMismatch,
    Singular,
    NonSplitSpectrum,
    NotInP,
    NotScalar,
    SizeMismatch,
    InvalidPartition,
    InvalidDiagram,
    NotNilpotent,
    NoMatch,
    NotCI,
    InhomogeneousGenerators,
    UnsupportedSize,
    UnsupportedGroup,
    UnsupportedSetting,
    BudgetExceeded,
    SpectraOverlap,
    DegenerateRestriction,
    BlockMomentNonzero,
    TooLarge,
    UnknownCheck,
    Parse,
    Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace adhm

#endif

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace starkdyn {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;

    /// Short machine-readable tag, e.g. "ParameterError".
    virtual const char* kind() const noexcept { return "Error"; }
};

#define STARKDYN_ERROR(Name)                                                  \
    class Name : public Error                                                 \
    {                                                                         \
    public:                                                                   \
        using Error::Error;                                                   \
        const char* kind() const noexcept override { return #Name; }          \
    }

STARKDYN_ERROR(ParameterError);
STARKDYN_ERROR(NotResonant);
STARKDYN_ERROR(DegenerateBasis);
STARKDYN_ERROR(WeakCouplingViolation);
STARKDYN_ERROR(StepSizeError);
STARKDYN_ERROR(GridMismatch);
STARKDYN_ERROR(IoError);

#undef STARKDYN_ERROR

/// Raised by the config parser. Carries every problem found, not just the
/// first one; each entry is already prefixed with its line number when the
/// problem is tied to a line.
class ConfigError : public Error
{
public:
    explicit ConfigError(std::vector<std::string> problems);

    const char* kind() const noexcept override { return "ConfigError"; }
    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    std::vector<std::string> problems_;
};

} // namespace starkdyn

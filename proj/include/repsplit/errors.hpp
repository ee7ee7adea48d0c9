#ifndef REPSPLIT_ERRORS_HPP
#define REPSPLIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace repsplit {

// Error categories map to process exit codes: input -> 1, algorithm -> 2,
// resource -> 3.
enum class errc { input = 1, algorithm = 2, resource = 3 };

class Error : public std::runtime_error {
public:
    Error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    errc kind() const { return kind_; }

private:
    errc kind_;
};

#define REPSPLIT_DEFINE_ERROR(Name, Kind)                                     \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& msg) : Error(errc::Kind, msg) {}     \
    }

REPSPLIT_DEFINE_ERROR(MalformedInput, input);
REPSPLIT_DEFINE_ERROR(NotABijection, input);
REPSPLIT_DEFINE_ERROR(DegreeMismatch, input);
REPSPLIT_DEFINE_ERROR(NotTransitive, input);
REPSPLIT_DEFINE_ERROR(ArtifactMismatch, input);

REPSPLIT_DEFINE_ERROR(DivisionByZero, algorithm);
REPSPLIT_DEFINE_ERROR(NotIrreducible, algorithm);
REPSPLIT_DEFINE_ERROR(BoxNotIsolating, algorithm);
REPSPLIT_DEFINE_ERROR(SelectionFailure, algorithm);
REPSPLIT_DEFINE_ERROR(IncompleteDecomposition, algorithm);
REPSPLIT_DEFINE_ERROR(CheckFailure, algorithm);

REPSPLIT_DEFINE_ERROR(ResourceLimit, resource);
REPSPLIT_DEFINE_ERROR(ExtensionFailure, resource);
REPSPLIT_DEFINE_ERROR(DegreeCap, resource);

#undef REPSPLIT_DEFINE_ERROR

} // namespace repsplit

#endif

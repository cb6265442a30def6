#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmodels {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid group specification (non-prime q, unknown action id, bad file).
struct SpecError : Error {
    using Error::Error;
};

/// Text that does not match the group-spec grammar.
struct ParseError : SpecError {
    ParseError(const std::string& what, std::size_t offset)
        : SpecError(what + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

/// A configured order or enumeration cap was exceeded.
struct CapExceeded : Error {
    using Error::Error;
};

/// A mathematical check that must hold did not (bad prime, non-character
/// input, structure mismatch).
struct CheckFailure : Error {
    using Error::Error;
};

} // namespace gmodels

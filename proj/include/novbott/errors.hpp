// Error types shared across the library. The CLI maps these onto exit codes:
// invalid_input -> 2, truncation_error -> 3 (inconclusive), negative
// certificates are ordinary results and never throw.
#ifndef NOVBOTT_ERRORS_HPP
#define NOVBOTT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace novbott {

// Malformed documents, dimension mismatches, invalid points, flatness
// violations, bad configuration.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// Spectral-sequence requests that exceed the truncation order of a family.
struct truncation_error : std::runtime_error {
    explicit truncation_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace novbott

#endif

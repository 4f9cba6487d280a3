#pragma once

#include <stdexcept>
#include <string>

namespace treelab {

// Bad arguments, malformed files, violated preconditions. CLI exit code 2.
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// An eigenvalue (or other numeric certificate) could not be produced within
// the iteration budget. CLI exit code 3.
struct CertificationError : std::runtime_error {
    explicit CertificationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A prefix code failed its validity check while decomposing; carries a witness.
struct MalformedCodeError : std::runtime_error {
    std::string witness;
    MalformedCodeError(const std::string& msg, std::string w)
        : std::runtime_error(msg + " (witness: " + w + ")"), witness(std::move(w)) {}
};

// reconstruct() was handed data no Dyck path realizes.
struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace treelab

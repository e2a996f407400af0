#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsturan {

// Inputs outside a formula's stated range. The message names the violated bound.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input exceeds a hard implementation ceiling (canonical forms, exhaustive
// searches, graph6 vertex counts).
class unsupported_size : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed serialized graph. offset() is the byte position of the offending
// input byte.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A degree sequence or construction step that cannot be realized.
class construction_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dsturan

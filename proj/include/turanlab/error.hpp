#pragma once

#include <stdexcept>
#include <string>

namespace turan {

enum class errc {
    size_cap,         // graph exceeds a documented vertex cap
    parse,            // malformed graph6 / edge list / JSON / rational
    invalid_argument, // parameter outside its documented domain
    invalid_pair,     // vertex sets do not form a valid split pair
    invalid_type,     // graph is not of the required structural type
    provenance,       // certificate gadget lacks a registry justification
    unverified,       // operation requires a verified certificate
    internal,         // invariant breach inside the library itself
};

class error : public std::runtime_error {
public:
    error(errc c, const std::string& what) : std::runtime_error(what), code(c) {}
    errc code;
};

} // namespace turan

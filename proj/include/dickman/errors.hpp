#pragma once

#include <stdexcept>
#include <string>

namespace dickman {

// Inputs outside an operation's mathematical domain (e.g. u < ell for an
// asymptotic expansion, negative u for rho).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Work, depth or table extents beyond the configured caps.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dickman

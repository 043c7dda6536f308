#pragma once

#include <stdexcept>
#include <string>

namespace stratexp {

// Malformed user input (word text, rational text, flag values).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource limit was exceeded (enumeration size, decomposition
// word length or term count, simulation budget).
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stratexp

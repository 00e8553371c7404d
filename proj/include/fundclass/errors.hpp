#pragma once

#include <stdexcept>
#include <string>

namespace fundclass {

/// Bad arguments or malformed input data. CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size bound would be exceeded. CLI exit code 2.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Not enough p-adic digits survive to honor the request. CLI exit code 3.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated an operation's contract (e.g. passed a non-cocycle).
struct contract_error : std::runtime_error {
    explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

/// An identity that the theory guarantees failed to verify. Never swallowed.
struct pipeline_error : std::runtime_error {
    explicit pipeline_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fundclass

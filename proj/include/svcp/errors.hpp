#pragma once

#include <stdexcept>
#include <string>

namespace svcp {

// Bad parameters, malformed input, precondition violations.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured guardrail (enumeration size, distribution count, search states) was hit.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DisconnectedGraph : public InvalidArgument {
public:
    DisconnectedGraph() : InvalidArgument("pebbling operations require a connected graph") {}
};

}  // namespace svcp

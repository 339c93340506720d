#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace svcp::cli {

enum class OutputFormat { json, csv, plain };

struct RunConfig {
    std::string command;
    std::string graph_path;
    std::string family;
    std::string n;      // single value or a..b range
    std::string parts;  // "2,2,1"
    std::string rim;    // single value or a..b range
    std::string left, right;
    int enumeration_cap = 24;
    std::uint64_t distribution_cap = 100'000'000;
    std::uint64_t state_cap = 0;
    OutputFormat format = OutputFormat::json;
    int jobs = 0;
    std::uint64_t seed = 20240601;
    bool timing = false;
};

// Exit codes: 0 success, 1 a checked property was violated, 2 usage, input
// or cap errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svcp::cli

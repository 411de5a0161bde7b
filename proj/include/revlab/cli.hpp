#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace revlab {

/// One command per process. Sources are either "builtin:<name>" or a file
/// path. Exit codes: 0 all checks passed / command succeeded, 1 a check
/// failed, 2 input error.
struct RunConfig {
    std::string command;            // info|audit|extract|lift|loops|represent|demo
    std::string logic_source;
    std::string operator_source;    // optional, default builtin:full-meet
    std::string assignment_source;  // optional
    std::string base;               // comma-separated sentence names; empty = empty base
    bool base_given = false;
    bool json_output = false;
    std::uint64_t seed = 0;
    int max_classes = 4096;
    int loop_limit = 10;
    bool syntax_sensitive = false;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace revlab

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace sympbranch {

// Outcome of one CLI command.
struct Report {
    std::string command;
    nlohmann::json inputs;
    nlohmann::json results;
    bool ok = true;
    long long elapsed_ms = 0;
};

// Runs `sympbranch <subcommand> ...`; returns the process exit code
// (0 exactly when the report status is OK).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sympbranch

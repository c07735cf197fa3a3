#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace shv::cli {

// warn: a failed check that does not affect the exit code
enum class Status { pass, fail, warn };
const char* status_name(Status s);

struct Check {
    std::string name;
    std::string ref;  // the statement the check exercises
    Status status = Status::pass;
    std::vector<std::string> details;
    double seconds = 0;

    void note(std::string line) { details.push_back(std::move(line)); }
    // records a sub-result and downgrades the status on failure
    void expect(bool ok, const std::string& line, bool fatal = true);
};

struct Report {
    std::string command;
    nlohmann::ordered_json params;
    std::vector<Check> checks;
    double elapsed_ms = 0;
    bool timing = true;

    bool passed() const;
    int exit_code() const { return passed() ? 0 : 1; }
    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
};

}  // namespace shv::cli

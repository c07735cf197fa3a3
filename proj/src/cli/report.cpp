#include <shv/cli/report.hpp>

#include <cstdio>
#include <sstream>

namespace shv::cli {

const char* status_name(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::warn: return "warn";
    }
    return "?";
}

void Check::expect(bool ok, const std::string& line, bool fatal) {
    details.push_back(std::string(ok ? "ok: " : "FAILED: ") + line);
    if (!ok) {
        if (fatal) status = Status::fail;
        else if (status == Status::pass) status = Status::warn;
    }
}

bool Report::passed() const {
    for (const auto& c : checks)
        if (c.status == Status::fail) return false;
    return true;
}

namespace {

std::string seconds_text(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream os;
    os << "shv " << command;
    for (const auto& [k, v] : params.items()) os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    os << "\n";
    for (const auto& c : checks) {
        std::string tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "WARN";
        os << "[" << tag << "] " << c.name;
        if (timing) os << " (" << seconds_text(c.seconds) << ")";
        os << "\n";
        for (const auto& d : c.details) os << "    " << d << "\n";
    }
    os << (passed() ? "result: pass" : "result: FAIL");
    if (timing) os << "  elapsed " << seconds_text(elapsed_ms / 1000);
    os << "\n";
    return os.str();
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["params"] = params;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["ref"] = c.ref;
        e["status"] = status_name(c.status);
        e["details"] = c.details;
        j["checks"].push_back(std::move(e));
    }
    j["elapsed_ms"] = timing ? static_cast<long long>(elapsed_ms) : 0;
    return j;
}

}  // namespace shv::cli

#include <shv/cli/config.hpp>

#include <shv/algebra/generator.hpp>

namespace shv::cli {

Rational parse_rational(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": not a rational \"" + text + "\"");
    }
}

int parse_twice_half_integer(const std::string& text, const char* flag) {
    const Rational q = parse_rational(text, flag);
    if (!(q * Rational(2)).is_integer()) throw UsageError(std::string(flag) + ": not a half-integer \"" + text + "\"");
    return q.twice();
}

void validate(const RunConfig& cfg) {
    if (cfg.cLa.is_zero()) throw UsageError("--cLa must be non-zero");
    if (cfg.twice_max_degree < 0) throw UsageError("--max-degree must be non-negative");
    if (cfg.twice_max_degree > cfg.twice_hard_cap)
        throw UsageError("--max-degree " + algebra::HalfInt(cfg.twice_max_degree).to_string() + " exceeds the cap " +
                         algebra::HalfInt(cfg.twice_hard_cap).to_string());
    if (cfg.twice_mode_bound < 0 || cfg.twice_mode_bound > 16) throw UsageError("--bound must lie in [0, 8]");
}

const char* mode_name(Mode m) { return m == Mode::symbolic ? "symbolic" : "specialized"; }

nlohmann::ordered_json params_json(const RunConfig& cfg) {
    nlohmann::ordered_json j;
    j["p"] = cfg.p.to_string();
    j["r"] = cfg.r.to_string();
    j["cL"] = cfg.cL.to_string();
    j["cLa"] = cfg.cLa.to_string();
    j["cA"] = cfg.cA.to_string();
    j["max_degree"] = algebra::HalfInt(cfg.twice_max_degree).to_string();
    j["mode"] = mode_name(cfg.mode);
    if (cfg.command == "relations") j["bound"] = algebra::HalfInt(cfg.twice_mode_bound).to_string();
    if (cfg.command == "singular" || cfg.command == "subsingular")
        j["kind"] = cfg.kind == SingularKind::subsingular ? "subsingular" : "singular";
    if (cfg.corrupt_bracket) j["corrupt_bracket"] = true;
    return j;
}

}  // namespace shv::cli

#pragma once

#include <shv/scalars/rational.hpp>

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace shv::cli {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Mode { specialized, symbolic };
enum class Format { text, json };
enum class SingularKind { singular, subsingular };

struct RunConfig {
    std::string command;
    Rational p{1};
    Rational r{1, 3};
    Rational cL{11, 2};
    Rational cLa{2, 3};
    Rational cA{0};
    int twice_max_degree = 8;
    int twice_hard_cap = 12;
    // |2*mode| bound for the relation suites
    int twice_mode_bound = 8;
    Mode mode = Mode::specialized;
    Format format = Format::text;
    SingularKind kind = SingularKind::singular;
    std::optional<std::string> out;
    std::optional<std::string> cache_dir;
    bool timing = true;
    bool corrupt_bracket = false;
};

// Rationals as "a/b" or "a"; half-integers as "n/2" or "n".
Rational parse_rational(const std::string& text, const char* flag);
int parse_twice_half_integer(const std::string& text, const char* flag);

// Throws UsageError when the configuration violates an invariant.
void validate(const RunConfig& cfg);

nlohmann::ordered_json params_json(const RunConfig& cfg);

const char* mode_name(Mode m);

}  // namespace shv::cli

#include <shv/cli/commands.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct RawFlags {
    std::string p = "1", r = "1/3", cL = "11/2", cLa = "2/3", cA = "0";
    std::string max_degree = "4", bound = "4", mode = "specialized", format = "text", kind = "singular";
    std::string out, cache_dir;
    bool no_timing = false, corrupt_bracket = false;
};

void add_flags(CLI::App* sub, RawFlags& f) {
    sub->add_option("--p", f.p, "parameter p (rational, a/b)");
    sub->add_option("--r", f.r, "parameter r (rational)");
    sub->add_option("--cL", f.cL, "central charge c_L");
    sub->add_option("--cLa", f.cLa, "central charge c_{L,alpha} (non-zero)");
    sub->add_option("--cA", f.cA, "central charge c_alpha (level; 0 for the free field realization)");
    sub->add_option("--max-degree", f.max_degree, "truncation degree (half-integer, n/2)");
    sub->add_option("--mode", f.mode, "specialized | symbolic");
    sub->add_option("--format", f.format, "text | json");
    sub->add_option("--out", f.out, "write the report to this file");
    sub->add_option("--cache-dir", f.cache_dir, "directory for cached Gram ranks");
    sub->add_flag("--no-timing", f.no_timing, "omit wall-clock times (byte-identical reports)");
}

shv::cli::RunConfig to_config(const std::string& command, const RawFlags& f) {
    using namespace shv::cli;
    RunConfig cfg;
    cfg.command = command;
    cfg.p = parse_rational(f.p, "--p");
    cfg.r = parse_rational(f.r, "--r");
    cfg.cL = parse_rational(f.cL, "--cL");
    cfg.cLa = parse_rational(f.cLa, "--cLa");
    cfg.cA = parse_rational(f.cA, "--cA");
    cfg.twice_max_degree = parse_twice_half_integer(f.max_degree, "--max-degree");
    cfg.twice_mode_bound = parse_twice_half_integer(f.bound, "--bound");
    if (f.mode == "specialized") cfg.mode = Mode::specialized;
    else if (f.mode == "symbolic") cfg.mode = Mode::symbolic;
    else throw UsageError("--mode must be specialized or symbolic");
    if (f.format == "text") cfg.format = Format::text;
    else if (f.format == "json") cfg.format = Format::json;
    else throw UsageError("--format must be text or json");
    if (command == "subsingular" || f.kind == "subsingular") cfg.kind = SingularKind::subsingular;
    else if (f.kind != "singular") throw UsageError("--kind must be singular or subsingular");
    if (!f.out.empty()) cfg.out = f.out;
    if (!f.cache_dir.empty()) cfg.cache_dir = f.cache_dir;
    cfg.timing = !f.no_timing;
    cfg.corrupt_bracket = f.corrupt_bracket;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification kernel for the N=1 super Heisenberg-Virasoro algebra at level zero"};
    app.require_subcommand(1);
    RawFlags flags;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"relations", "super-antisymmetry and super-Jacobi identities of the brackets"},
        {"realize", "free field realization on F_{p,r}"},
        {"singular", "explicit singular vectors for integral p"},
        {"subsingular", "subsingular vectors for odd positive p"},
        {"char", "characters of irreducible quotients"},
        {"det", "vanishing locus of the Gram determinant in p"},
        {"diagram", "embedding diagram of V(p, r)"},
        {"acceptance", "full acceptance battery with pinned parameters"}};
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_flags(sub, flags);
        if (name == "relations") {
            sub->add_option("--bound", flags.bound, "largest |mode| of the generators checked (half-integer)");
            sub->add_flag("--corrupt-bracket", flags.corrupt_bracket)->group("");
        }
        if (name == "singular") sub->add_option("--kind", flags.kind, "singular | subsingular");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    std::string command;
    for (const auto* sub : app.get_subcommands()) command = sub->get_name();

    try {
        const shv::cli::RunConfig cfg = to_config(command, flags);
        const shv::cli::Report rep = shv::cli::run_command(cfg);
        const std::string text = shv::cli::render(rep, cfg.format);
        if (cfg.out) {
            std::ofstream out(*cfg.out);
            if (!out) {
                std::cerr << "error: cannot write " << *cfg.out << "\n";
                return 2;
            }
            out << text;
        } else {
            std::cout << text;
        }
        return rep.exit_code();
    } catch (const shv::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

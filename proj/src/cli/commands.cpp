#include <shv/cli/commands.hpp>

#include <shv/cli/checks.hpp>
#include <shv/verma/diagram.hpp>

#include <chrono>
#include <sstream>

namespace shv::cli {

namespace {

FreeFieldParams params(const RunConfig& cfg) { return {cfg.cL, cfg.cLa}; }

int integral_p(const RunConfig& cfg, bool allow_zero = false) {
    if (!cfg.p.is_integer()) throw UsageError(cfg.command + " needs an integer --p");
    const long p = cfg.p.to_long();
    if (!allow_zero && p == 0) throw UsageError(cfg.command + " needs a non-zero --p");
    if (p > 64 || p < -64) throw UsageError("--p is out of range");
    return static_cast<int>(p);
}

void require_level_zero(const RunConfig& cfg) {
    if (!cfg.cA.is_zero()) throw UsageError(cfg.command + " is defined only at level zero (--cA 0)");
}

Report make(const RunConfig& cfg) {
    Report r;
    r.command = cfg.command;
    r.params = params_json(cfg);
    r.timing = cfg.timing;
    return r;
}

Cache cache_for(const RunConfig& cfg) { return Cache(cfg.cache_dir); }

}  // namespace

Report cmd_relations(const RunConfig& cfg) {
    Report rep = make(cfg);
    algebra::BracketTable table = algebra::BracketTable::standard();
    if (cfg.corrupt_bracket) {
        const algebra::Gen x = algebra::Gen::L(2), y = algebra::Gen::L(-2);
        table.override_pair(x, y, table(x, y) + algebra::RElement::generator(algebra::Gen::L(0)));
    }
    rep.checks.push_back(check_relations(table, cfg.twice_mode_bound));
    return rep;
}

Report cmd_realize(const RunConfig& cfg) {
    require_level_zero(cfg);
    Report rep = make(cfg);
    const Cache cache = cache_for(cfg);
    rep.checks.push_back(check_realization(cfg.p, cfg.r, params(cfg), 6, cfg.twice_max_degree, cache));
    return rep;
}

Report cmd_singular(const RunConfig& cfg) {
    require_level_zero(cfg);
    const int p = integral_p(cfg);
    const auto prm = params(cfg);
    Report rep = make(cfg);
    const int tm = cfg.twice_max_degree;
    if (cfg.kind == SingularKind::subsingular) {
        if (p < 0 || p % 2 == 0) throw UsageError("subsingular vectors are built for odd positive p only");
        Check c{"subsingular vectors, p = " + std::to_string(p), "subsingular vectors w^(1) for odd p"};
        certify_subsingular(c, p, cfg.r, prm);
        rep.checks.push_back(std::move(c));
        return rep;
    }
    if (cfg.mode == Mode::symbolic) {
        Check c{"raising kernel for generic r, p = " + std::to_string(p), "singular vectors of Verma modules"};
        certify_generic_kernel(c, p, prm, tm);
        rep.checks.push_back(std::move(c));
        return rep;
    }
    Check c{"singular vectors, p = " + std::to_string(p), "singular vectors of Verma modules"};
    if (p < 0) {
        certify_phi(c, p, cfg.r, prm);
    } else if (p % 2 == 1) {
        certify_sing_nep(c, p, cfg.r, prm, tm);
        for (int n = 1; n <= 2; ++n) certify_family(c, p, cfg.r, n, prm, tm);
    } else {
        certify_sing_par(c, p, cfg.r, prm, tm);
        certify_family(c, p, cfg.r, 2, prm, tm);
        const int inj = std::max(0, std::min(6, tm - 2 * p));
        const Cache cache = cache_for(cfg);
        certify_even_injectivity(c, p, cfg.r, prm, inj, cache);
    }
    rep.checks.push_back(std::move(c));
    return rep;
}

Report cmd_char(const RunConfig& cfg) {
    require_level_zero(cfg);
    const int p = integral_p(cfg);
    Report rep = make(cfg);
    const Cache cache = cache_for(cfg);
    const bool sym = cfg.mode == Mode::symbolic;
    rep.checks.push_back(check_characters({p}, cfg.r, params(cfg), cfg.twice_max_degree, cache, sym));
    rep.checks.push_back(check_duality({p}, cfg.r, params(cfg), cfg.twice_max_degree, cache, sym));
    return rep;
}

Report cmd_det(const RunConfig& cfg) {
    require_level_zero(cfg);
    Report rep = make(cfg);
    rep.checks.push_back(check_determinant(cfg.twice_max_degree, cfg.r, params(cfg)));
    return rep;
}

Report cmd_diagram(const RunConfig& cfg) {
    require_level_zero(cfg);
    Report rep = make(cfg);
    const auto dg = verma::embedding_diagram(cfg.p, cfg.r, cfg.twice_max_degree, cfg.cL, cfg.cLa);
    const auto pat = classify_diagram(dg);
    Check c{"embedding diagram", "embedding diagrams of Verma modules"};
    std::istringstream lines(dg.to_text());
    for (std::string line; std::getline(lines, line);) c.note(line);
    c.expect(pat.matches, "pattern: " + pat.identifier, false);
    for (const auto& n : pat.notes) c.note(n);
    rep.checks.push_back(std::move(c));
    return rep;
}

Report cmd_acceptance(const RunConfig& cfg) {
    Report rep = make(cfg);
    const Cache cache = cache_for(cfg);
    AcceptanceOptions opt;
    opt.twice_max = cfg.twice_max_degree;
    opt.cache = &cache;
    rep.checks = acceptance_battery(opt);
    return rep;
}

Report run_command(const RunConfig& cfg) {
    validate(cfg);
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    if (cfg.command == "relations") rep = cmd_relations(cfg);
    else if (cfg.command == "realize") rep = cmd_realize(cfg);
    else if (cfg.command == "singular" || cfg.command == "subsingular") rep = cmd_singular(cfg);
    else if (cfg.command == "char") rep = cmd_char(cfg);
    else if (cfg.command == "det") rep = cmd_det(cfg);
    else if (cfg.command == "diagram") rep = cmd_diagram(cfg);
    else if (cfg.command == "acceptance") rep = cmd_acceptance(cfg);
    else throw UsageError("unknown command \"" + cfg.command + "\"");
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!cfg.timing)
        for (auto& c : rep.checks) c.seconds = 0;
    return rep;
}

std::string render(const Report& report, Format format) {
    if (format == Format::json) return report.to_json().dump(2) + "\n";
    return report.to_text();
}

}  // namespace shv::cli

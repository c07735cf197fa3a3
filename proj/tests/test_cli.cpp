#include <doctest.h>

#include <shv/cli/checks.hpp>
#include <shv/cli/commands.hpp>

#include <filesystem>

using namespace shv;
using namespace shv::cli;

namespace {

RunConfig config(const std::string& command) {
    RunConfig cfg;
    cfg.command = command;
    cfg.timing = false;
    return cfg;
}

std::filesystem::path temp_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("flag parsing") {
    CHECK(parse_rational("-3/4", "--p") == Rational(-3, 4));
    CHECK_THROWS_AS(parse_rational("0.5", "--p"), UsageError);
    CHECK(parse_twice_half_integer("5/2", "--max-degree") == 5);
    CHECK(parse_twice_half_integer("3", "--max-degree") == 6);
    CHECK_THROWS_AS(parse_twice_half_integer("1/3", "--max-degree"), UsageError);
}

TEST_CASE("configuration invariants") {
    RunConfig cfg = config("char");
    cfg.cLa = Rational(0);
    CHECK_THROWS_AS(validate(cfg), UsageError);
    cfg = config("char");
    cfg.twice_max_degree = 14;
    CHECK_THROWS_AS(validate(cfg), UsageError);
    cfg = config("char");
    cfg.p = Rational(1, 2);
    CHECK_THROWS_AS(run_command(cfg), UsageError);
    cfg = config("realize");
    cfg.cA = Rational(1);
    CHECK_THROWS_AS(run_command(cfg), UsageError);
    cfg = config("frobnicate");
    CHECK_THROWS_AS(run_command(cfg), UsageError);
}

TEST_CASE("cache round trip") {
    const auto dir = temp_dir("shv-cache-test");
    Cache cache(dir.string());
    CHECK_FALSE(cache.get("a").has_value());
    cache.put("a", 42);
    REQUIRE(cache.get("a").has_value());
    CHECK(cache.get("a")->get<int>() == 42);
    CHECK(Cache::hash_key("a") == Cache::hash_key("a"));
    CHECK(Cache::hash_key("a") != Cache::hash_key("b"));
    CHECK(Cache::hash_key("").size() == 16);
    Cache off;
    off.put("a", 1);
    CHECK_FALSE(off.get("a").has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("relations: default passes, corrupted table fails naming the pair") {
    RunConfig cfg = config("relations");
    cfg.twice_mode_bound = 4;
    auto rep = run_command(cfg);
    CHECK(rep.exit_code() == 0);
    cfg.corrupt_bracket = true;
    rep = run_command(cfg);
    CHECK(rep.exit_code() == 1);
    CHECK(render(rep, Format::text).find("[L(2), L(-2)]") != std::string::npos);
}

TEST_CASE("json report schema") {
    RunConfig cfg = config("det");
    cfg.twice_max_degree = 2;
    const auto j = run_command(cfg).to_json();
    CHECK(j.at("command") == "det");
    CHECK(j.at("params").at("max_degree") == "1");
    REQUIRE(j.at("checks").size() == 1);
    const auto& c = j.at("checks")[0];
    for (const char* key : {"name", "ref", "status", "details"}) CHECK(c.contains(key));
    CHECK(c.at("status") == "pass");
    CHECK(j.at("elapsed_ms") == 0);
}

TEST_CASE("reports are deterministic and independent of the cache") {
    RunConfig cfg = config("char");
    cfg.p = Rational(-2);
    cfg.twice_max_degree = 6;
    const std::string plain = render(run_command(cfg), Format::json);
    CHECK(plain == render(run_command(cfg), Format::json));
    const auto dir = temp_dir("shv-cache-report");
    cfg.cache_dir = dir.string();
    const std::string cold = render(run_command(cfg), Format::json);
    const std::string warm = render(run_command(cfg), Format::json);
    CHECK(cold == plain);
    CHECK(warm == plain);
    CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator()) == 14);  // 7 degrees for (p, r) and for (-p, -r)
    std::filesystem::remove_all(dir);
}

TEST_CASE("character examples") {
    RunConfig cfg = config("char");
    cfg.p = Rational(3);
    cfg.twice_max_degree = 4;
    const auto rep = run_command(cfg);
    CHECK(rep.exit_code() == 0);
    CHECK(render(rep, Format::text).find("(1, 2, 3, 5, 9)") != std::string::npos);
}

TEST_CASE("singular command for p = 1 and p = -1") {
    RunConfig cfg = config("singular");
    cfg.p = Rational(1);
    cfg.twice_max_degree = 4;
    auto rep = run_command(cfg);
    CHECK(rep.exit_code() == 0);
    CHECK(render(rep, Format::text).find("(1)*P(-1/2)v") != std::string::npos);
    cfg.kind = SingularKind::subsingular;
    cfg.p = Rational(2);
    CHECK_THROWS_AS(run_command(cfg), UsageError);
}

TEST_CASE("generic-r kernel in symbolic mode") {
    Check c{"kernel", ""};
    certify_generic_kernel(c, 2, FreeFieldParams{Rational(11, 2), Rational(2, 3)}, 4);
    CHECK(c.status == Status::pass);
}

TEST_CASE("diagram patterns") {
    const FreeFieldParams prm{Rational(11, 2), Rational(2, 3)};
    CHECK(classify_diagram(verma::embedding_diagram(Rational(-2), Rational(1, 3), 8, prm.cL, prm.cLa)).matches);
    CHECK(classify_diagram(verma::embedding_diagram(Rational(2), Rational(1, 3), 6, prm.cL, prm.cLa)).matches);
    CHECK(classify_diagram(verma::embedding_diagram(Rational(1), Rational(1, 3), 4, prm.cL, prm.cLa)).matches);
    const auto generic = classify_diagram(verma::embedding_diagram(Rational(1, 2), Rational(1, 3), 4, prm.cL, prm.cLa));
    CHECK(generic.matches);
    CHECK(generic.identifier.find("single node") != std::string::npos);
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <unistd.h>

#include "cclab/cache.hpp"
#include "cclab/runner.hpp"
#include "support.hpp"

using namespace cclab;
using namespace cclab::testing;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("cclab-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_SUITE("cli-reports") {

TEST_CASE("group spec grammar") {
    GroupSpec sp = parse_group_spec("Sp(4,3)");
    CHECK(sp.family == Family::Sp);
    CHECK(sp.dim == 4);
    CHECK(sp.q == 3);
    CHECK(sp.witt_index() == 2);
    GroupSpec om = parse_group_spec("Omega+(4,3)");
    CHECK(om.family == Family::Omega);
    CHECK(om.sign == 1);
    CHECK(parse_group_spec(" SO-( 4 , 3 ) ").sign == -1);
    CHECK(parse_group_spec("O+(4,3)").family == Family::GO);
    for (const char* s : {"Sp(4,3)", "SO+(4,3)", "SO(5,3)", "GU(2,2)", "Omega-(4,3)", "GO+(4,3)"})
        CHECK(parse_group_spec(parse_group_spec(s).str()) == parse_group_spec(s));

    try {
        parse_group_spec("SO(5,2)");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("odd q") != std::string::npos);
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse_group_spec("Sp(3,3)"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("SO(4,3)"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("SO+(5,3)"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("GL(2,6)"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("Foo(2,3)"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("GL(2,3"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("GL(2,3)x"), ParseError);
}

TEST_CASE("run config parsing") {
    RunConfig c = parse_run_config(R"(
# comment
groups = Sp(4,3), SO+(4,3)
suites = main3, delta
workers = 3
gamma = 0.95
delta_claims = 0.99:0.0011
format = csv
)");
    REQUIRE(c.groups.size() == 2);
    CHECK(c.groups[1] == parse_group_spec("SO+(4,3)"));
    CHECK(c.suites == std::vector<Suite>{Suite::Main3, Suite::Delta});
    CHECK(c.workers == 3);
    CHECK(c.gammas == std::vector<BigRational>{BigRational(95, 100)});
    CHECK(c.format == OutputFormat::Csv);
    CHECK_THROWS_AS(parse_run_config("suites = level, bogus"), ParseError);
    CHECK_THROWS_AS(parse_run_config("workers = 0"), ParseError);
    CHECK_THROWS_AS(parse_run_config("model_budget = -4"), ParseError);
    CHECK_THROWS_AS(parse_run_config("nonsense = 1"), ParseError);
    CHECK_THROWS_AS(parse_run_config("workers = 1\nworkers = 2"), ParseError);
    CHECK(split_top_level("Sp(4,3), GL(2,3),x") == std::vector<std::string>{"Sp(4,3)", "GL(2,3)", "x"});
}

TEST_CASE("empty suite list") {
    RunConfig c;
    c.groups = {parse_group_spec("Sp(4,3)")};
    ReportBundle b = run_suite(c);
    CHECK(b.sections.empty());
    CHECK(b.exit_code() == 0);
}

TEST_CASE("main3 on Sp(4,3) passes for every character") {
    RunConfig c;
    c.groups = {parse_group_spec("Sp(4,3)")};
    c.suites = {Suite::Main3};
    ReportBundle b = run_suite(c);
    REQUIRE(b.sections.size() == 1);
    CHECK(b.sections[0].status == "ok");
    std::set<std::string> chars;
    for (const auto& r : b.sections[0].reports) {
        CHECK(r.verdict == Verdict::Pass);
        for (const auto& [k, v] : r.params)
            if (k == "chi") chars.insert(v);
    }
    CHECK(chars.size() == 34);
    CHECK(b.exit_code() == 0);
}

TEST_CASE("delta suite reports the claim") {
    RunConfig c;
    c.suites = {Suite::Delta};
    c.gammas = {BigRational(99, 100)};
    ReportBundle b = run_suite(c);
    auto rs = with_id(b.sections.at(0).reports, "delta-max-covers-claim");
    REQUIRE(!rs.empty());
    CHECK(rs[0].verdict == Verdict::Pass);
    CHECK(b.exit_code() == 0);
}

TEST_CASE("out-of-scope and over-budget items are not fatal") {
    RunConfig c;
    c.groups = {parse_group_spec("GL(2,3)"), parse_group_spec("Sp(4,3)")};
    c.suites = {Suite::Level, Suite::WeilModel};
    c.enumeration_budget = 1000;
    ReportBundle b = run_suite(c);
    REQUIRE(b.sections.size() == 4);
    CHECK(b.sections[0].status == "not-applicable");
    CHECK(b.sections[1].status == "budget");
    CHECK(b.exit_code() == 0);
}

TEST_CASE("JSON report schema and determinism across worker counts") {
    RunConfig c;
    c.groups = {parse_group_spec("SL(2,3)"), parse_group_spec("Sp(2,3)")};
    c.suites = {Suite::Level, Suite::Walk, Suite::ProductOne, Suite::Centralizer};
    std::string one = to_json(run_suite(c), c);
    c.workers = 4;
    std::string four = to_json(run_suite(c), c);
    c.workers = 1;
    CHECK(one == four);
    auto doc = nlohmann::json::parse(one);
    CHECK(doc["schema"] == kReportSchema);
    CHECK(doc["summary"]["exit_code"] == 0);
    const auto& rep = doc["sections"][0]["reports"][0];
    CHECK(rep.contains("lhs"));
    CHECK(rep["lhs"].contains("num"));
    CHECK(rep["lhs"].contains("den"));
    CHECK(rep["lhs"].contains("decimal"));
    CHECK(rep.contains("verdict"));
    CHECK(to_csv(run_suite(c)).rfind("suite,", 0) == 0);
}

TEST_CASE("failing records give exit code 1") {
    ReportBundle b;
    SuiteSection s;
    s.suite = "delta";
    BoundReport r;
    decide(r, 2, Relation::LE, 1);
    s.reports.push_back(r);
    b.sections.push_back(s);
    CHECK(b.exit_code() == 1);
}

TEST_CASE("cache roundtrip") {
    auto t = table_for("Sp(4,3)");
    std::string text = serialize_table(*t);
    auto back = restore_table(text, t->classes);
    CHECK(serialize_table(*back) == text);
    CHECK(serialized_hash(serialize_table(*back)) == serialized_hash(text));
    REQUIRE(back->size() == t->size());
    for (int i = 0; i < t->size(); ++i) CHECK(back->irr[i] == t->irr[i]);

    std::string tampered = text;
    tampered[tampered.size() / 2] = tampered[tampered.size() / 2] == '1' ? '2' : '1';
    try {
        restore_table(tampered, t->classes);
        FAIL("tampered table accepted");
    } catch (const CacheError& e) {
        CHECK(e.kind() == CacheError::Kind::Tampered);
    }
    std::string old = text;
    old.replace(old.find("/1 "), 3, "/0 ");
    try {
        restore_table(old, t->classes);
        FAIL("stale schema accepted");
    } catch (const CacheError& e) {
        CHECK(e.kind() == CacheError::Kind::Schema);
    }
    CHECK_THROWS_AS(restore_table(text, classes_for("SO(5,3)")), CacheError);
}

TEST_CASE("table cache on disk") {
    fs::path dir = scratch_dir("cache");
    TableCache cache(dir.string());
    GroupSpec s = parse_group_spec("SL(2,5)");
    CacheEvent ev;
    auto first = cache.table(s, kDefaultEnumerationBudget, &ev);
    CHECK(ev.status == CacheEvent::Status::Miss);
    REQUIRE(fs::exists(ev.path));
    auto second = cache.table(s, kDefaultEnumerationBudget, &ev);
    CHECK(ev.status == CacheEvent::Status::Hit);
    CHECK(serialize_table(*first) == serialize_table(*second));

    std::string text = slurp(ev.path);
    text[text.size() - 10] ^= 1;
    std::ofstream(ev.path, std::ios::binary | std::ios::trunc) << text;
    CacheEvent bad;
    auto third = cache.table(s, kDefaultEnumerationBudget, &bad);
    CHECK(bad.status == CacheEvent::Status::Rebuilt);
    CHECK(bad.warning.find("rebuilding") != std::string::npos);
    CHECK(verify_table(*third).ok());
    CacheEvent again;
    cache.table(s, kDefaultEnumerationBudget, &again);
    CHECK(again.status == CacheEvent::Status::Hit);
    CHECK(cache.path_for(s) != cache.path_for(parse_group_spec("SL(2,3)")));
    fs::remove_all(dir);
}

}

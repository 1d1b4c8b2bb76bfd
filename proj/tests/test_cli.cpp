#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tschakaloff/cli.hpp"
#include "tschakaloff/errors.hpp"
#include "tschakaloff/report.hpp"
#include "tschakaloff/series.hpp"

using namespace tschakaloff;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("exit 0: eval")
{
    const auto r = run_cli({"eval", "--q", "2", "--z", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto lo = parse_rational(j["lo"].get<std::string>());
    const auto hi = parse_rational(j["hi"].get<std::string>());
    CHECK(lo <= hi);
    CHECK(hi - lo <= pow2(-64));
    CHECK(lo.to_double() == doctest::Approx(2.6416325606).epsilon(1e-10));
}

TEST_CASE("negative arguments")
{
    const auto r = run_cli({"eval", "--q", "-3", "--z", "-2", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.starts_with("q,z,lo,hi,width,lo_approx,hi_approx\n-3,-2,"));
    const auto r2 = run_cli({"eval", "--q=-3", "--z=-2", "--format", "csv"});
    CHECK(r2.out == r.out);
}

TEST_CASE("exit 1: hypothesis fails")
{
    const auto r = run_cli({"prove", "--q", "3/2", "--z", "1", "--b", "10"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("method inapplicable") != std::string::npos);
}

TEST_CASE("exit 2: exhausted")
{
    SUBCASE("series budget")
    {
        const auto r = run_cli({"eval", "--q", "1000001/1000000", "--z", "1", "--max-terms", "50"});
        CHECK(r.code == 2);
        CHECK(r.out.empty());
    }
    SUBCASE("witness search")
    {
        const auto r = run_cli({"prove", "--q", "2", "--z", "1", "--b", "1000000000000", "--n-max", "3"});
        CHECK(r.code == 2);
        CHECK(r.out.empty());
    }
}

TEST_CASE("exit 3: usage and domain errors")
{
    for (const auto &args : std::vector<std::vector<std::string>>{
             {},
             {"eval"},
             {"eval", "--q", "2"},
             {"eval", "--q", "1.5", "--z", "1"},
             {"eval", "--q", "2", "--z", "0"},
             {"eval", "--q", "1/2", "--z", "1"},
             {"eval", "--q", "-1", "--z", "1"},
             {"eval", "--q", "2", "--z", "1", "--format", "xml"},
             {"eval", "--q", "2", "--z", "1", "--width", "0"},
             {"table", "--q", "2", "--z", "1", "--n-max", "0"},
             {"prove", "--q", "2", "--z", "1"},
             {"prove", "--q", "2", "--z", "1", "--b", "0"},
             {"prove", "--q", "2", "--z", "1", "--b", "1/2"},
             {"frobnicate", "--q", "2", "--z", "1"},
         }) {
        std::string joined;
        for (const auto &a : args) {
            joined += a + " ";
        }
        CAPTURE(joined);
        const auto r = run_cli(args);
        CHECK(r.code == 3);
        CHECK(r.out.empty());
    }
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("exit 4 is reserved for internal invariant failures")
{
    CHECK(cli::exit_code_for(std::make_exception_ptr(InvariantViolation("non-integral B_n"))) == 4);
    CHECK(cli::exit_code_for(std::make_exception_ptr(std::bad_alloc())) == 4);
    CHECK(cli::exit_code_for(std::make_exception_ptr(DomainError("x"))) == 3);
    CHECK(cli::exit_code_for(std::make_exception_ptr(ParseError("x"))) == 3);
    CHECK(cli::exit_code_for(std::make_exception_ptr(NotFound("x"))) == 2);
    CHECK(cli::exit_code_for(std::make_exception_ptr(PrecisionExhausted("x", std::nullopt))) == 2);
}

TEST_CASE("table JSON round trip")
{
    const auto r = run_cli({"table", "--q", "7/2", "--z", "3/7", "--n-max", "8", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto records = records_from_json_text(r.out);
    REQUIRE(records.size() == 8);
    CHECK(records_to_json_text(records) == r.out);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].n == static_cast<long>(i + 1));
        CHECK(records[i].nonzero_certified);
    }
    CHECK_THROWS_AS(records_from_json_text("[{\"n\": 1}]"), ParseError);
    CHECK_THROWS_AS(records_from_json_text("not json"), ParseError);
}

TEST_CASE("table CSV")
{
    const auto r = run_cli({"table", "--q", "2", "--z", "1", "--n-max", "3", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.starts_with("n,m,A,B,I_lo,I_hi,nonzero"));
    CHECK(r.out.find("\n1,0,-3,-1,") != std::string::npos);
    CHECK(r.out.find("\n2,1,140,53,") != std::string::npos);
    std::size_t lines = 0;
    for (char c : r.out) {
        lines += c == '\n';
    }
    CHECK(lines == 4);
}

TEST_CASE("table output does not depend on the worker count")
{
    const auto a = run_cli({"table", "--q", "-3", "--z", "1/2", "--n-max", "15", "--format", "json", "--jobs", "1"});
    const auto b = run_cli({"table", "--q", "-3", "--z", "1/2", "--n-max", "15", "--format", "json", "--jobs", "4"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("--out writes the file and leaves stdout empty")
{
    const auto path = std::filesystem::temp_directory_path() / "tschakaloff_cli_out.json";
    std::filesystem::remove(path);
    const auto r = run_cli({"eval", "--q", "2", "--z", "1", "--format", "json", "--out", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(nlohmann::json::parse(ss.str()).contains("lo"));
    std::filesystem::remove(path);
}

TEST_CASE("prove")
{
    SUBCASE("text")
    {
        const auto r = run_cli({"prove", "--q", "2", "--z", "1", "--b", "1000"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("0 < |b·Ĩ_n| < 1, hence T_q(z) ≠ a/b for all integers a") != std::string::npos);
        CHECK(r.out.find("witness n = 3") != std::string::npos);
    }
    SUBCASE("json")
    {
        const auto r = run_cli({"prove", "--q", "7/2", "--z", "3/7", "--b", "123456789", "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        const auto lo = parse_rational(j["bI_lo"].get<std::string>());
        const auto hi = parse_rational(j["bI_hi"].get<std::string>());
        CHECK(lo <= hi);
        CHECK((lo.sign() > 0 || hi.sign() < 0));
        CHECK(abs(lo) < Rational(1));
        CHECK(abs(hi) < Rational(1));
        CHECK(j["b"] == "123456789");
    }
}

TEST_CASE("asymptotics")
{
    SUBCASE("hypothesis holds")
    {
        const auto r = run_cli({"asymptotics", "--q", "2", "--z", "1", "--n-max", "20", "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["verdict"] == "γ < γ0: Theorem hypothesis holds");
        CHECK(j["reports"].size() == 20);
        CHECK_FALSE(j["measure"].is_null());
    }
    SUBCASE("hypothesis fails")
    {
        const auto r = run_cli({"asymptotics", "--q", "3/2", "--z", "1", "--n-max", "12"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("γ ≥ γ0: Theorem hypothesis fails") != std::string::npos);
    }
    SUBCASE("csv")
    {
        const auto r = run_cli({"asymptotics", "--q", "2", "--z", "1", "--n-max", "10", "--format", "csv"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("\nn,empirical_B,empirical_I,") != std::string::npos);
    }
}

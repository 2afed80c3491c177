#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exbound/card_io.hpp"
#include "exbound/cli.hpp"
#include "exbound/report.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace exbound;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "exbound_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

void write_file(const fs::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

json read_json(const fs::path& p)
{
    std::ifstream in(p);
    return json::parse(in);
}

}  // namespace

TEST_CASE("exit codes")
{
    unsetenv(cli::kConfigEnv);
    const fs::path bad = scratch("bad.json");
    write_file(bad, "{\"degree\": 2,");

    struct Row {
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Row> table = {
        {{}, cli::input_error},
        {{"--help"}, cli::ok},
        {{"frobnicate"}, cli::input_error},
        {{"weil", "--n", "0"}, cli::input_error},
        {{"weil", "--n", "x"}, cli::input_error},
        {{"invariants", "--quadratic", "-20"}, cli::input_error},
        {{"invariants", "--quadratic", "1"}, cli::input_error},
        {{"invariants", "--card", scratch("missing.json").string()}, cli::input_error},
        {{"invariants", "--card", bad.string()}, cli::input_error},
        {{"invariants", "--quadratic", "-5", "--card", bad.string()}, cli::input_error},
        {{"quaternion", "--disc", "30"}, cli::input_error},
        {{"quaternion", "--disc", "4"}, cli::input_error},
        {{"bound", "--quadratic", "-5", "--A1", "1"}, cli::input_error},
        {{"bound", "--quadratic", "-5", "--delta", "-1"}, cli::input_error},
        {{"exceptional", "--quadratic", "-5", "--threads", "0"}, cli::input_error},
        {{"exceptional", "--quadratic", "-5", "--test-prime", "8"}, cli::input_error},
        {{"certify", "--quadratic", "-1", "--disc", "6"}, cli::refused},
        {{"certify", "--quadratic", "-5", "--disc", "6", "--list-limit", "1000"}, cli::ok},
        {{"exceptional", "--quadratic", "-5", "--scan-limit", "2"}, cli::refused},
    };
    for (const auto& row : table) {
        std::string joined;
        for (const auto& a : row.args)
            joined += a + " ";
        INFO(joined);
        const Result r = run(row.args);
        CHECK(r.code == row.code);
        if (r.code == cli::input_error && !row.args.empty())
            CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("malformed card diagnostics name the problem")
{
    const fs::path bad = scratch("bad2.json");
    write_file(bad, "{\"degree\": 2,");
    const Result r = run({"invariants", "--card", bad.string()});
    CHECK(r.code == cli::input_error);
    CHECK(r.err.find("malformed field card") != std::string::npos);

    const fs::path wrong = scratch("wrong.json");
    write_file(wrong, "{\"degree\": \"two\"}");
    const Result w = run({"invariants", "--card", wrong.string()});
    CHECK(w.code == cli::input_error);
    CHECK(w.err.find("degree") != std::string::npos);
}

TEST_CASE("card round trip through --emit-card")
{
    for (long D : {-5L, -23L, 2L, 10L}) {
        const fs::path card_path = scratch("card" + std::to_string(D) + ".json");
        const fs::path report_path = scratch("inv" + std::to_string(D) + ".json");
        REQUIRE(run({"invariants", "--quadratic", std::to_string(D), "--emit-card", card_path.string(), "--output",
                     report_path.string()})
                    .code == cli::ok);
        const FieldCard loaded = load_card(card_path.string());
        const FieldCard built = build_card(D);
        CHECK(card_to_json(loaded).dump() == card_to_json(built).dump());
        CHECK(validate_report(read_json(report_path)).empty());

        const Result again = run({"invariants", "--card", card_path.string()});
        REQUIRE(again.code == cli::ok);
        CHECK(json::parse(again.out)["field"] == read_json(report_path)["field"]);
    }
}

TEST_CASE("weil --n 2 marks the a with beta^24 = n^12")
{
    const Result r = run({"weil", "--n", "2"});
    REQUIRE(r.code == cli::ok);
    const json j = json::parse(r.out);
    CHECK(validate_report(j).empty());
    std::vector<std::string> flagged;
    for (const auto& t : j["traces"])
        for (const auto& root : t["roots"])
            if (root["beta24_equals_n12"].get<bool>())
                flagged.push_back(t["a"].get<std::string>());
    CHECK(flagged == std::vector<std::string>{"-2", "-2", "0", "0", "2", "2"});
    CHECK(j["traces"].size() == 5);
}

TEST_CASE("exceptional and certify reports")
{
    const fs::path exc = scratch("exc.json");
    const Result r = run({"exceptional", "--quadratic", "-5", "--test-prime", "7", "--test-prime", "1009",
                          "--list-limit", "5000", "--output", exc.string()});
    REQUIRE(r.code == cli::ok);
    CHECK(r.out.find("p = 7: member = true, sources = N0") != std::string::npos);
    CHECK(validate_report(read_json(exc)).empty());

    const fs::path cert = scratch("cert.json");
    const fs::path text = scratch("cert.txt");
    const Result c = run({"certify", "--quadratic", "-1", "--disc", "6", "--output", cert.string(), "--text",
                          text.string()});
    CHECK(c.code == cli::refused);
    REQUIRE(fs::exists(cert));
    const json cj = read_json(cert);
    CHECK(cj["refused"] == true);
    CHECK(validate_report(cj).empty());
    CHECK(fs::file_size(text) > 0);

    const Result q = run({"quaternion", "--disc", "6", "--quadratic", "-5"});
    REQUIRE(q.code == cli::ok);
    const json qj = json::parse(q.out);
    CHECK(qj["admissible_q"] == "7");
    CHECK(qj["rejected"] == json::array({"3"}));
    CHECK(validate_report(qj).empty());

    const Result b = run({"bound", "--quadratic", "-5"});
    REQUIRE(b.code == cli::ok);
    CHECK(validate_report(json::parse(b.out)).empty());
}

TEST_CASE("config file defaults and precedence")
{
    const fs::path cfg = scratch("config.json");
    write_file(cfg, R"({"threads": 3, "list_limit": 100, "A1": "41"})");
    setenv(cli::kConfigEnv, cfg.c_str(), 1);

    Result r = run({"bound", "--quadratic", "-5"});
    REQUIRE(r.code == cli::ok);
    json j = json::parse(r.out);
    CHECK(j["config"]["threads"] == 3);
    CHECK(j["config"]["list_limit"] == 100);
    CHECK(j["config"]["A1"] == "41");

    r = run({"bound", "--quadratic", "-5", "--threads", "2"});
    j = json::parse(r.out);
    CHECK(j["config"]["threads"] == 2);

    write_file(cfg, R"({"thread": 3})");
    CHECK(run({"bound", "--quadratic", "-5"}).code == cli::input_error);
    write_file(cfg, R"({"threads": "many"})");
    CHECK(run({"bound", "--quadratic", "-5"}).code == cli::input_error);
    write_file(cfg, "[1, 2]");
    CHECK(run({"bound", "--quadratic", "-5"}).code == cli::input_error);
    unsetenv(cli::kConfigEnv);

    const fs::path other = scratch("other.json");
    write_file(other, R"({"enum_cap": 4})");
    r = run({"--config", other.string(), "bound", "--quadratic", "-5"});
    REQUIRE(r.code == cli::ok);
    CHECK(json::parse(r.out)["config"]["enumeration_cap"] == 4);
}

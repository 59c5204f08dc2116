#include <catch2/catch_amalgamated.hpp>

#include "support/fixtures.hpp"

#include <alo_ipcm_cli.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using alo::testing::fixture_path;
using Catch::Matchers::ContainsSubstring;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = alo::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

double json_number(const std::string& text, const char* key) { return nlohmann::json::parse(text).at(key).get<double>(); }

} // namespace

TEST_CASE("check", "[cli]")
{
    const Run a = run({"check", fixture_path("approx_additive"), "--mode", "approx"});
    REQUIRE(a.code == 0);
    REQUIRE(a.out == "approx\tpass\twitness 1 3 2\n");

    REQUIRE(run({"check", fixture_path("liu_additive_permuted"), "--mode", "liu"}).code == 1);
    REQUIRE(run({"check", fixture_path("liu_additive"), "--mode", "liu"}).code == 0);
    REQUIRE(run({"check", fixture_path("full_not_reciprocal_multiplicative"), "--mode", "full"}).code == 0);
    REQUIRE(run({"check", fixture_path("full_not_reciprocal_multiplicative"), "--mode", "reciprocity"}).code == 1);

    const Run nr = run({"check", fixture_path("full_not_reciprocal_multiplicative"), "--mode", "liu"});
    REQUIRE(nr.code == 2);
    REQUIRE_THAT(nr.err, ContainsSubstring("NotReciprocal"));

    const Run all = run({"check", fixture_path("full_not_reciprocal_multiplicative")});
    REQUIRE(all.code == 1);
    REQUIRE_THAT(all.out, ContainsSubstring("liu\tn/a"));
    REQUIRE_THAT(all.out, ContainsSubstring("full\tpass"));
}

TEST_CASE("check as JSON", "[cli]")
{
    const Run r = run({"--format", "json", "check", fixture_path("approx_additive")});
    REQUIRE(r.code == 1); // not Liu consistent as labelled
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["checks"]["reciprocity"] == true);
    REQUIRE(doc["checks"]["liu"] == false);
    REQUIRE(doc["checks"]["approx"]["consistent"] == true);
    REQUIRE(doc["checks"]["approx"]["witness"] == nlohmann::json::array({1, 3, 2}));
    REQUIRE(doc["checks"]["full"] == true);
    REQUIRE(doc["pass"] == false);
}

TEST_CASE("malformed input exits 2", "[cli]")
{
    const Run r = run({"check", fixture_path("malformed")});
    REQUIRE(r.code == 2);
    REQUIRE_THAT(r.err, ContainsSubstring("malformed JSON"));
    REQUIRE(run({"check", fixture_path("does_not_exist")}).code == 2);
    REQUIRE(run({"frobnicate"}).code == 2);
    REQUIRE(run({"check", fixture_path("liu_additive"), "--mode", "sideways"}).code == 2);
    REQUIRE(run({"--scale", "fuzzy", "check", fixture_path("liu_additive")}).code == 2);
    REQUIRE(run({"--help"}).code == 0);
}

TEST_CASE("index", "[cli]")
{
    const Run a1 = run({"index", fixture_path("a1_multiplicative"), "--which", "both", "--to-scale", "fuzzy"});
    REQUIRE(a1.code == 0);
    REQUIRE_THAT(a1.out, ContainsSubstring("consistency_index\tfuzzy\t0.720825"));
    REQUIRE_THAT(a1.out, ContainsSubstring("indeterminacy_index\tfuzzy\t0.703807"));

    const Run j = run({"--format", "json", "index", fixture_path("a1_multiplicative"), "--to-scale", "fuzzy"});
    const auto doc = nlohmann::json::parse(j.out);
    REQUIRE(doc["transported"]["consistency_index"].get<double>() == Catch::Approx(0.720826).margin(1e-5));
    REQUIRE(doc["transported"]["indeterminacy_index"].get<double>() == Catch::Approx(0.7038).margin(1e-4));

    const Run a3 = run({"--format", "json", "index", fixture_path("a3_additive")});
    REQUIRE(json_number(a3.out, "consistency_index") == Catch::Approx(1.5).margin(1e-9));
    REQUIRE(json_number(a3.out, "indeterminacy_index") == Catch::Approx(5.0 / 3.0).margin(1e-9));
    REQUIRE(run({"index", fixture_path("a3_additive")}).out
            == "consistency_index\tadditive\t1.5\nindeterminacy_index\tadditive\t1.66667\n");

    const Run small = run({"index", fixture_path("order2_additive"), "--which", "consistency"});
    REQUIRE(small.code == 2);
    REQUIRE_THAT(small.err, ContainsSubstring("OrderTooSmall"));
    REQUIRE(run({"index", fixture_path("order2_additive"), "--which", "indeterminacy"}).code == 0);
}

TEST_CASE("compare", "[cli]")
{
    const Run r = run({"compare", fixture_path("a1_multiplicative"), fixture_path("a2_fuzzy"), fixture_path("a3_additive"),
                       "--thresholds", "0.7", "0.7"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "label\tI\tdelta\tverdict\n"
                     "a1_multiplicative\t0.720825\t0.703807\treject\n"
                     "a2_fuzzy\t0.503448\t0.650624\taccept\n"
                     "a3_additive\t0.817574\t0.841131\treject\n"
                     "\n"
                     "p\tq\trelation\n"
                     "a1_multiplicative\ta2_fuzzy\tq_dominates\n"
                     "a1_multiplicative\ta3_additive\tp_dominates\n"
                     "a2_fuzzy\ta3_additive\tp_dominates\n");

    const Run one = run({"compare", fixture_path("a2_fuzzy")});
    REQUIRE(one.out == "label\tI\tdelta\na2_fuzzy\t0.503448\t0.650624\n");

    const Run two = run({"compare", fixture_path("a2_fuzzy"), fixture_path("a2_fuzzy")});
    REQUIRE_THAT(two.out, ContainsSubstring("a2_fuzzy\ta2_fuzzy\tequal\n"));

    REQUIRE(run({"compare", fixture_path("a2_fuzzy"), "--thresholds", "0.7"}).code == 2);
    REQUIRE(run({"compare", fixture_path("a2_fuzzy"), "--thresholds", "0.3", "0.7"}).code == 2);
    REQUIRE(run({"compare", fixture_path("full_not_reciprocal_multiplicative")}).code == 2);
}

TEST_CASE("compare as JSON", "[cli]")
{
    const Run r = run({"--format", "json", "compare", fixture_path("a2_fuzzy"), fixture_path("a1_multiplicative"),
                       "--thresholds", "0.7", "0.7"});
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["points"][0]["label"] == "a1_multiplicative");
    REQUIRE(doc["points"][0]["verdict"] == "reject");
    REQUIRE(doc["points"][1]["verdict"] == "accept");
    REQUIRE(doc["dominance"][0]["relation"] == "q_dominates");
}

TEST_CASE("transport", "[cli]")
{
    const auto out = std::filesystem::temp_directory_path() / "alo_ipcm_cli_transport.json";
    REQUIRE(run({"transport", fixture_path("a1_multiplicative"), "--to", "fuzzy", "-o", out.string()}).code == 0);
    const Run idx = run({"--format", "json", "index", out.string()});
    REQUIRE(json_number(idx.out, "consistency_index") == Catch::Approx(0.720826).margin(1e-5));
    std::filesystem::remove(out);

    const Run stdout_run = run({"transport", fixture_path("a3_additive"), "--to", "additive"});
    REQUIRE(nlohmann::json::parse(stdout_run.out)["entries"][0][1] == nlohmann::json::array({1.0, 3.0}));
}

TEST_CASE("tolerance flag and environment fallback", "[cli]")
{
    // a3 entries are not Liu consistent by margins of order 1; a huge tolerance accepts them.
    REQUIRE(run({"check", fixture_path("a3_additive"), "--mode", "liu"}).code == 1);
    REQUIRE(run({"--tolerance", "10", "check", fixture_path("a3_additive"), "--mode", "liu"}).code == 0);
    ::setenv("ALO_IPCM_TOLERANCE", "10", 1);
    const int env = run({"check", fixture_path("a3_additive"), "--mode", "liu"}).code;
    const int flag_wins = run({"--tolerance", "1e-9", "check", fixture_path("a3_additive"), "--mode", "liu"}).code;
    ::unsetenv("ALO_IPCM_TOLERANCE");
    REQUIRE(env == 0);
    REQUIRE(flag_wins == 1);
    REQUIRE(run({"--tolerance", "-1", "check", fixture_path("a3_additive")}).code == 2);
}

TEST_CASE("perm cap", "[cli]")
{
    REQUIRE(run({"--perm-cap", "2", "check", fixture_path("approx_additive"), "--mode", "approx"}).code == 2);
}

TEST_CASE("identical inputs give identical output", "[cli]")
{
    const std::vector<std::string> args{"compare", fixture_path("a3_additive"), fixture_path("a1_multiplicative"),
                                        fixture_path("a2_fuzzy")};
    REQUIRE(run(args).out == run(args).out);
}

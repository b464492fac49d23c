// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "vanetstat/cli.hpp"

using namespace vanetstat;

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int const code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(std::string const& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("vanetstat_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string read_file(std::filesystem::path const& path)
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> data_lines(std::string const& csv)
{
    std::vector<std::string> lines;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#')
            lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("analyze prints the PMF and moments tables")
{
    auto const r = cli({"analyze", "--n", "6", "--p", "1/3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# vanetstat 0.1.0") == 0);
    CHECK(r.out.find("# config.p: 1/3") != std::string::npos);
    CHECK(r.out.find("# derived_p: 0.3333333333333333") != std::string::npos);
    CHECK(r.out.find("# arithmetic: exact_rational") != std::string::npos);
    CHECK(r.out.find("statistic,r,prob_analytic,prob_empirical,prob_oracle\n") != std::string::npos);
    CHECK(r.out.find("clust_num,6,0.1316872427983539,,\n") != std::string::npos);
    CHECK(r.out.find("statistic,quantity,source,value\n") != std::string::npos);
    CHECK(r.out.find("clust_num,mean,closed_form,4.333333333333333\n") != std::string::npos);
    // 6 + 6 + 6 + 7 support points plus the header.
    auto const tables = r.out.substr(0, r.out.find("\n\n"));
    CHECK(data_lines(tables).size() == 26);
}

TEST_CASE("large n switches to floating point")
{
    auto const r = cli({"analyze", "--n", "200", "--p", "0.7"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# arithmetic: floating_point") != std::string::npos);
}

TEST_CASE("simulate is deterministic for a seed")
{
    std::vector<std::string> args{"simulate", "--n", "8", "--p", "0.4", "--trials", "5000", "--seed", "17"};
    auto const a = cli(args);
    auto const b = cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("# variance_denominator: trials-1") != std::string::npos);
    args[8] = "18";
    CHECK(cli(args).out != a.out);
    args.push_back("--threads");
    args.push_back("3");
    args[8] = "17";
    auto const threaded = cli(args);
    CHECK(data_lines(threaded.out) == data_lines(a.out));
}

TEST_CASE("simulate --compare and compare report TV distances")
{
    auto const s = cli({"simulate", "--n", "8", "--p", "0.5", "--trials", "20000", "--compare"});
    REQUIRE(s.code == 0);
    CHECK(s.out.find("tv_distance,empirical_vs_analytic") != std::string::npos);
    CHECK(s.out.find("oracle_vs_analytic") == std::string::npos);
    auto const c = cli({"compare", "--n", "8", "--p", "0.5", "--trials", "20000"});
    REQUIRE(c.code == 0);
    CHECK(c.out.find("clust_num,tv_distance,oracle_vs_analytic,0\n") != std::string::npos);
    // Every PMF row carries all three sources.
    auto const lines = data_lines(c.out.substr(0, c.out.find("\n\n")));
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(lines[i].find(",,") == std::string::npos);
}

TEST_CASE("oracle subcommand")
{
    auto const r = cli({"oracle", "--n", "5", "--p", "1/2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("biggest_clust,1,,,0.0625\n") != std::string::npos);
    CHECK(cli({"oracle", "--n", "17", "--p", "1/2"}).code == 2);
}

TEST_CASE("channel-derived link probability")
{
    auto const r = cli({"analyze", "--n", "10", "--spacing", "exp:0.01", "--channel", "paper-sec4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# derived_p: 0.55786") != std::string::npos);
    CHECK(r.out.find("# p_source: channel_quadrature") != std::string::npos);
    CHECK(r.out.find("# config.channel.path_loss_exp: 2.5") != std::string::npos);
    auto const louder = cli({"analyze", "--n", "10", "--spacing", "exp:0.01", "--tx-power-dbm", "10"});
    REQUIRE(louder.code == 0);
    CHECK(louder.out.find("# derived_p: 0.55786") == std::string::npos);
}

TEST_CASE("configuration errors exit with code 2")
{
    CHECK(cli({"simulate", "--n", "5", "--p", "0.5", "--trials", "0"}).code == 2);
    CHECK(cli({"analyze", "--p", "0.5"}).code == 2);
    CHECK(cli({"analyze", "--n", "5"}).code == 2);
    CHECK(cli({"analyze", "--n", "5", "--p", "0.5", "--spacing", "exp:0.01"}).code == 2);
    CHECK(cli({"analyze", "--n", "5", "--p", "2"}).code == 2);
    CHECK(cli({"analyze", "--n", "5", "--p", "0.5", "--set", "bogus=1"}).code == 2);
    CHECK(cli({"analyze", "--n", "5", "--spacing", "weibull:1"}).code == 2);
    CHECK(cli({"analyze", "--n", "5", "--p", "0.5", "--config", "/nonexistent.cfg"}).code == 2);
    auto const r = cli({"analyze", "--n", "5", "--p", "0.5", "--format", "yaml"});
    CHECK(r.code == 2);
    CHECK(r.err.find("format") != std::string::npos);
    CHECK(cli({}).code != 0);
    CHECK(cli({"frobnicate"}).code != 0);
    CHECK(cli({"analyze", "--bogus"}).code != 0);
}

TEST_CASE("config file with flag overrides, files and JSON output")
{
    auto const dir = scratch_dir("config");
    {
        std::ofstream cfg(dir / "run.cfg");
        cfg << "# baseline\nn = 7\np = 0.3\ntrials = 1000\nseed = 4\n";
    }
    auto const out = dir / "run.csv";
    auto const r = cli({"simulate", "--config", (dir / "run.cfg").string(), "--n", "9", "--out", out.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    auto const pmf = read_file(out);
    CHECK(pmf.find("# config.n: 9") != std::string::npos);
    CHECK(pmf.find("# config.seed: 4") != std::string::npos);
    auto const moments = read_file(dir / "run.moments.csv");
    CHECK(moments.find("statistic,quantity,source,value") != std::string::npos);

    auto const js = cli({"analyze", "--n", "4", "--set", "p=1/2", "--format", "json"});
    REQUIRE(js.code == 0);
    auto const doc = nlohmann::json::parse(js.out);
    CHECK(doc["meta"]["derived_p"] == "0.5");
    CHECK(doc["pmf"].size() == 4 * 3 + 5);
}

TEST_CASE("sweep writes one file per grid point and an index")
{
    auto const dir = scratch_dir("sweep");
    auto const r = cli({"sweep", "--n", "4:8:2", "--p", "1/4,1/2", "--out-dir", dir.string()});
    REQUIRE(r.code == 0);
    auto const index = data_lines(read_file(dir / "index.csv"));
    REQUIRE(index.size() == 7);
    CHECK(index[0] == "file,moments_file,n,p,spacing,derived_p");
    CHECK(index[1] == "point_0.csv,point_0.moments.csv,4,1/4,,0.25");
    for (int i = 0; i < 6; ++i) {
        CHECK(std::filesystem::exists(dir / ("point_" + std::to_string(i) + ".csv")));
        CHECK(std::filesystem::exists(dir / ("point_" + std::to_string(i) + ".moments.csv")));
    }

    auto const rho_dir = scratch_dir("sweep_rho");
    auto const s = cli({"sweep", "--n", "10", "--rho", "0.01,0.05", "--mode", "simulate", "--trials",
                        "2000", "--out-dir", rho_dir.string()});
    REQUIRE(s.code == 0);
    auto const rho_index = data_lines(read_file(rho_dir / "index.csv"));
    REQUIRE(rho_index.size() == 3);
    CHECK(rho_index[1].find("exp:0.01") != std::string::npos);

    CHECK(cli({"sweep", "--n", "4", "--p", "0.5", "--rho", "0.01", "--out-dir", dir.string()}).code == 2);
    CHECK(cli({"sweep", "--n", "4", "--p", "0.5:0.1:0.1", "--out-dir", dir.string()}).code == 2);
    CHECK(cli({"sweep", "--n", "4.5", "--p", "0.5", "--out-dir", dir.string()}).code == 2);
}

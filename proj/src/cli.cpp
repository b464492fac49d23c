// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include "vanetstat/cli.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "vanetstat/analytic.hpp"
#include "vanetstat/channel.hpp"
#include "vanetstat/format.hpp"
#include "vanetstat/montecarlo.hpp"
#include "vanetstat/oracle.hpp"

namespace vanetstat {

namespace {

//! Configuration problems detected after parsing (exit code 2).
class ConfigError : public std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

void add_common_meta(Report& report, std::string_view command, RunConfig const& cfg,
                     LinkProbability const& lp)
{
    report.add_meta("command", std::string(command));
    for (auto const& [key, value] : cfg.resolved())
        report.add_meta("config." + key, value);
    report.add_meta("derived_p", format_double(lp.value));
    report.add_meta("p_source", lp.derived ? "channel_quadrature" : "given");
    report.add_meta("seed", std::to_string(cfg.seed));
}

void add_moments(Report& report, std::string const& stat, std::string const& source,
                 Moments const& m)
{
    report.add_summary(stat, "mean", source, m.mean);
    report.add_summary(stat, "variance", source, m.variance);
}

struct AnalyticTables
{
    std::array<Pmf, 4> pmfs;
};

AnalyticTables add_analytic(Report& report, int n, LinkProbability const& lp)
{
    bool const exact = n <= kExactVehicleLimit;
    report.add_meta("arithmetic", exact ? "exact_rational" : "floating_point");

    AnalyticTables t;
    std::array<Moments, 4> closed;
    Moments connected{};
    if (exact) {
        Rational const& p = lp.exact;
        t.pmfs = {to_double(clust_num_pmf(n, p)), to_double(clust_size_pmf(n, p)),
                  to_double(biggest_clust_pmf(n, p)), to_double(idle_cars_pmf(n, p))};
        closed[0] = to_double(clust_num_moments(n, p));
        closed[1] = to_double(clust_size_moments(n, p));
        closed[2] = to_double(biggest_clust_moments_exact(n, p));
        closed[3] = to_double(idle_cars_moments(n, p));
        connected.mean = to_double(connected_clust_num_mean(n, p));
        // PMF moments from the exact tables, rounded once at the end.
        std::array<ExactPmf, 4> const exact_pmfs = {clust_num_pmf(n, p), clust_size_pmf(n, p),
                                                    biggest_clust_pmf(n, p), idle_cars_pmf(n, p)};
        for (std::size_t i = 0; i < 4; ++i)
            add_moments(report, std::string(to_string(all_statistics[i])), "pmf",
                        to_double(moments_of(exact_pmfs[i])));
    } else {
        double const p = lp.value;
        t.pmfs = {clust_num_pmf(n, p), clust_size_pmf(n, p), biggest_clust_pmf(n, p),
                  idle_cars_pmf(n, p)};
        closed[0] = clust_num_moments(n, p);
        closed[1] = clust_size_moments(n, p);
        closed[2] = biggest_clust_moments_exact(n, p);
        closed[3] = idle_cars_moments(n, p);
        connected.mean = connected_clust_num_mean(n, p);
        for (std::size_t i = 0; i < 4; ++i)
            add_moments(report, std::string(to_string(all_statistics[i])), "pmf",
                        moments_of(t.pmfs[i]));
    }
    for (std::size_t i = 0; i < 4; ++i)
        report.add_pmf(all_statistics[i], t.pmfs[i]);

    add_moments(report, "clust_num", "closed_form", closed[0]);
    add_moments(report, "clust_size", "closed_form", closed[1]);
    add_moments(report, "biggest_clust", "closed_form", closed[2]);
    add_moments(report, "idle_cars", "closed_form", closed[3]);
    report.add_summary("connected_clust_num", "mean", "closed_form", connected.mean);
    if (n >= 3 && lp.value > 0 && lp.value < 1)
        add_moments(report, "biggest_clust", "asymptotic",
                    biggest_clust_moments_asymptotic(n, lp.value));
    return t;
}

EmpiricalResult add_empirical(Report& report, RunConfig const& cfg)
{
    RunOptions opts;
    opts.threads = cfg.threads;
    EmpiricalResult res = run(cfg.scenario(), opts);
    report.add_meta("trials", std::to_string(res.trials));
    report.add_meta("variance_denominator", "trials-1");
    for (Statistic stat : all_statistics) {
        auto const& e = res.get(stat);
        report.add_pmf(stat, e.pmf);
        add_moments(report, std::string(to_string(stat)), "empirical", {e.mean, e.variance});
    }
    return res;
}

OraclePmfs add_oracle(Report& report, int n, Rational const& p)
{
    OraclePmfs o = enumerate_pmfs(n, p, 4);
    for (Statistic stat : all_statistics) {
        ExactPmf const& pmf = o.get(stat);
        report.add_pmf(stat, to_double(pmf));
        add_moments(report, std::string(to_string(stat)), "oracle", to_double(moments_of(pmf)));
    }
    return o;
}

}  // namespace

LinkProbability link_probability(RunConfig const& cfg)
{
    LinkProbability lp;
    if (cfg.fixed_p) {
        lp.exact = *cfg.fixed_p;
        lp.value = to_double(lp.exact);
        return lp;
    }
    DerivedChannel const derived = derive_channel(cfg.channel);
    lp.value = connection_prob(derived, cfg.channel, *cfg.spacing);
    lp.exact = to_rational(lp.value);
    lp.derived = true;
    return lp;
}

Report analyze_report(RunConfig const& cfg)
{
    LinkProbability const lp = link_probability(cfg);
    Report report;
    add_common_meta(report, "analyze", cfg, lp);
    add_analytic(report, cfg.n, lp);
    return report;
}

Report simulate_report(RunConfig const& cfg)
{
    if (cfg.compare)
        return compare_report(cfg);
    LinkProbability const lp = link_probability(cfg);
    Report report;
    add_common_meta(report, "simulate", cfg, lp);
    add_empirical(report, cfg);
    return report;
}

Report oracle_report(RunConfig const& cfg)
{
    if (cfg.n > kMaxOracleVehicles)
        throw ConfigError("oracle enumeration supports n <= " + std::to_string(kMaxOracleVehicles));
    LinkProbability const lp = link_probability(cfg);
    Report report;
    add_common_meta(report, "oracle", cfg, lp);
    add_oracle(report, cfg.n, lp.exact);
    return report;
}

Report compare_report(RunConfig const& cfg)
{
    LinkProbability const lp = link_probability(cfg);
    Report report;
    add_common_meta(report, cfg.compare ? "simulate" : "compare", cfg, lp);
    AnalyticTables const analytic = add_analytic(report, cfg.n, lp);
    EmpiricalResult const empirical = add_empirical(report, cfg);
    for (std::size_t i = 0; i < 4; ++i) {
        Statistic const stat = all_statistics[i];
        report.add_summary(std::string(to_string(stat)), "tv_distance", "empirical_vs_analytic",
                           total_variation(empirical.get(stat).pmf, analytic.pmfs[i]));
    }
    if (!cfg.compare && cfg.n <= kMaxOracleVehicles) {
        OraclePmfs const oracle = add_oracle(report, cfg.n, lp.exact);
        for (std::size_t i = 0; i < 4; ++i) {
            Statistic const stat = all_statistics[i];
            report.add_summary(std::string(to_string(stat)), "tv_distance", "oracle_vs_analytic",
                               total_variation(to_double(oracle.get(stat)), analytic.pmfs[i]));
        }
    }
    return report;
}

void emit_report(Report const& report, RunConfig const& cfg, std::ostream& out)
{
    if (!cfg.output_path) {
        if (cfg.format == OutputFormat::json) {
            report.write_json(out);
        } else {
            report.write_pmf_csv(out);
            out << '\n';
            report.write_moments_csv(out);
        }
        return;
    }

    auto open = [](std::filesystem::path const& path) {
        if (path.has_parent_path())
            std::filesystem::create_directories(path.parent_path());
        std::ofstream os(path);
        if (!os)
            throw std::runtime_error("cannot write " + path.string());
        return os;
    };
    if (cfg.format == OutputFormat::json) {
        auto os = open(*cfg.output_path);
        report.write_json(os);
    } else {
        auto pmf_os = open(*cfg.output_path);
        report.write_pmf_csv(pmf_os);
        auto moments_os = open(moments_path_for(*cfg.output_path));
        report.write_moments_csv(moments_os);
    }
}

namespace {

// "a,b,c" or "start:stop:step" (inclusive, exact rational steps).
std::vector<Rational> parse_grid(std::string const& text)
{
    std::vector<Rational> values;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ':'))
            parts.push_back(item);
        if (parts.size() != 3)
            throw ConfigError("range must be start:stop:step, got '" + text + "'");
        Rational const start = parse_rational(parts[0]);
        Rational const stop = parse_rational(parts[1]);
        Rational const step = parse_rational(parts[2]);
        if (step <= 0)
            throw ConfigError("range step must be positive");
        for (Rational v = start; v <= stop; v += step) {
            values.push_back(v);
            if (values.size() > 100000)
                throw ConfigError("range '" + text + "' has too many points");
        }
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            values.push_back(parse_rational(item));
    }
    if (values.empty())
        throw ConfigError("empty grid '" + text + "'");
    return values;
}

struct SweepOptions
{
    std::string n_grid;
    std::string p_grid;
    std::string rho_grid;
    std::string mode = "analyze";
    std::string out_dir;
};

int run_sweep(KeyValues const& base, SweepOptions const& sweep, std::ostream& out)
{
    if (sweep.out_dir.empty())
        throw ConfigError("sweep needs --out-dir");
    if (sweep.n_grid.empty())
        throw ConfigError("sweep needs --n");
    if (sweep.p_grid.empty() == sweep.rho_grid.empty())
        throw ConfigError("sweep needs exactly one of --p and --rho");
    if (sweep.mode != "analyze" && sweep.mode != "simulate" && sweep.mode != "compare")
        throw ConfigError("sweep mode must be analyze, simulate or compare");

    std::vector<Rational> const ns = parse_grid(sweep.n_grid);
    bool const by_p = !sweep.p_grid.empty();
    std::vector<Rational> const links = parse_grid(by_p ? sweep.p_grid : sweep.rho_grid);

    // Validate every point before writing anything.
    struct Point
    {
        RunConfig cfg;
        std::string label;
    };
    std::vector<Point> points;
    for (Rational const& n : ns) {
        if (n.get_den() != 1)
            throw ConfigError("vehicle counts must be integers");
        for (Rational const& v : links) {
            KeyValues kv = base;
            kv.erase("p");
            kv.erase("spacing");
            kv["n"] = n.get_num().get_str();
            if (by_p)
                kv["p"] = v.get_str();
            else
                kv["spacing"] = "exp:" + format_double(to_double(v));
            std::string const file = "point_" + std::to_string(points.size()) + ".csv";
            kv["out"] = (std::filesystem::path(sweep.out_dir) / file).string();
            kv["format"] = "csv";
            try {
                points.push_back({resolve_config(kv), file});
            } catch (std::invalid_argument const& e) {
                throw ConfigError(e.what());
            }
        }
    }

    std::filesystem::create_directories(sweep.out_dir);
    std::ofstream index(std::filesystem::path(sweep.out_dir) / "index.csv");
    if (!index)
        throw std::runtime_error("cannot write sweep index in " + sweep.out_dir);
    index << "# vanetstat " << kToolVersion << '\n'
          << "# sweep_mode: " << sweep.mode << '\n'
          << "file,moments_file,n,p,spacing,derived_p\n";
    for (auto const& pt : points) {
        Report report = sweep.mode == "analyze"    ? analyze_report(pt.cfg)
                        : sweep.mode == "simulate" ? simulate_report(pt.cfg)
                                                   : compare_report(pt.cfg);
        emit_report(report, pt.cfg, out);
        std::string derived;
        for (auto const& [k, v] : report.meta())
            if (k == "derived_p")
                derived = v;
        index << pt.label << ',' << moments_path_for(pt.label).string() << ',' << pt.cfg.n
              << ',' << (pt.cfg.fixed_p ? pt.cfg.fixed_p->get_str() : std::string()) << ','
              << (pt.cfg.spacing ? pt.cfg.spacing->to_string() : std::string()) << ','
              << derived << '\n';
    }
    out << "wrote " << points.size() << " point(s) to " << sweep.out_dir << '\n';
    return 0;
}

void add_run_options(CLI::App* cmd, KeyValues& flags, std::string& config_file)
{
    auto key = [&flags](std::string const& k) {
        return [&flags, k](std::string const& v) { flags[k] = v; };
    };
    cmd->add_option("--config", config_file, "Flat key = value config file (flags override it)");
    cmd->add_option_function<std::string>("--n", key("n"), "Number of vehicles");
    cmd->add_option_function<std::string>("--p", key("p"),
                                           "Link probability (decimal or fraction, kept exact)");
    cmd->add_option_function<std::string>(
        "--spacing", key("spacing"),
        "Spacing model: exp:RATE | gamma:SHAPE,SCALE | lognormal:MU,SIGMA | normal:MEAN,SD | point:D0");
    cmd->add_option_function<std::string>("--channel", key("channel.preset"),
                                           "Channel preset (highway, alias paper-sec4/default)");
    cmd->add_option_function<std::string>("--tx-power-dbm", key("channel.tx_power_dbm"),
                                           "Transmit power in dBm");
    cmd->add_option_function<std::string>("--snr-threshold-db", key("channel.snr_threshold_db"),
                                           "SNR threshold in dB");
    cmd->add_option_function<std::string>("--path-loss-exp", key("channel.path_loss_exp"),
                                           "Path-loss exponent");
    cmd->add_option_function<std::string>("--carrier-freq", key("channel.carrier_freq"),
                                           "Carrier frequency in Hz");
    cmd->add_option_function<std::string>("--trials", key("trials"), "Monte Carlo trials");
    cmd->add_option_function<std::string>("--seed", key("seed"), "Monte Carlo seed");
    cmd->add_option_function<std::string>("--threads", key("threads"),
                                           "Worker threads (0 = all cores)");
    cmd->add_option_function<std::string>("--link-draw", key("link_draw"),
                                           "Physical link draw: outage_prob | snr_sample");
    cmd->add_option_function<std::string>("--out", key("out"), "Output file (default stdout)");
    cmd->add_option_function<std::string>("--format", key("format"), "csv | json");
    cmd->add_option_function<std::vector<std::string>>(
        "--set",
        [&flags](std::vector<std::string> const& items) {
            for (auto const& item : items) {
                auto const eq = item.find('=');
                if (eq == std::string::npos)
                    throw CLI::ValidationError("--set", "expected key=value, got '" + item + "'");
                flags[item.substr(0, eq)] = item.substr(eq + 1);
            }
        },
        "Override any config key (key=value)");
}

KeyValues merge_config(std::string const& config_file, KeyValues const& flags)
{
    KeyValues kv;
    if (!config_file.empty())
        kv = load_config_file(config_file);
    for (auto const& [k, v] : flags)
        kv[k] = v;
    return kv;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Connectivity statistics of a vehicle chain with Rayleigh-fading links"};
    app.name("vanetstat");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("vanetstat ") + kToolVersion);

    struct Command
    {
        KeyValues flags;
        std::string config_file;
        CLI::App* app = nullptr;
    };
    std::array<Command, 5> cmds;
    char const* names[] = {"analyze", "simulate", "oracle", "compare", "sweep"};
    char const* help[] = {
        "Closed-form PMFs and moments of all four statistics",
        "Monte Carlo estimate of all four statistics",
        "Exact PMFs by enumerating every link pattern (n <= 16)",
        "Analytic, simulated and (n <= 16) enumerated PMFs with TV distances",
        "Run analyze/simulate/compare over a grid of n and p (or rho)",
    };
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        cmds[i].app = app.add_subcommand(names[i], help[i]);
        add_run_options(cmds[i].app, cmds[i].flags, cmds[i].config_file);
    }
    bool compare_flag = false;
    cmds[1].app->add_flag("--compare", compare_flag,
                          "Also emit analytic columns and TV distances");

    SweepOptions sweep;
    CLI::App* sweep_app = cmds[4].app;
    // Each grid point picks its own link model and output file.
    for (char const* name : {"--n", "--p", "--spacing", "--out", "--format"})
        sweep_app->remove_option(sweep_app->get_option(name));
    sweep_app->add_option("--n", sweep.n_grid, "Vehicle counts: a,b,c or start:stop:step")
        ->required();
    sweep_app->add_option("--p", sweep.p_grid, "Link probabilities: list or range");
    sweep_app->add_option("--rho", sweep.rho_grid, "Exponential spacing rates: list or range");
    sweep_app->add_option("--mode", sweep.mode, "analyze | simulate | compare");
    sweep_app->add_option("--out-dir", sweep.out_dir, "Directory for point files and index.csv")
        ->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::ParseError const& e) {
        return app.exit(e, out, err);
    }

    try {
        for (std::size_t i = 0; i < cmds.size(); ++i) {
            Command const& c = cmds[i];
            if (!c.app->parsed())
                continue;
            KeyValues kv = merge_config(c.config_file, c.flags);
            if (i == 4)
                return run_sweep(kv, sweep, out);
            if (i == 1 && compare_flag)
                kv["compare"] = "true";

            RunConfig cfg;
            try {
                cfg = resolve_config(kv);
            } catch (std::invalid_argument const& e) {
                throw ConfigError(e.what());
            }
            Report report = i == 0   ? analyze_report(cfg)
                            : i == 1 ? simulate_report(cfg)
                            : i == 2 ? oracle_report(cfg)
                                     : compare_report(cfg);
            emit_report(report, cfg, out);
            return 0;
        }
    } catch (ConfigError const& e) {
        err << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (std::invalid_argument const& e) {
        err << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (std::exception const& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace vanetstat

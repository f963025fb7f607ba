// icr-dmt: command-line front end for the ICR DMT toolkit.
//
//   icr-dmt dmt eval     one-point DMT report for every relaying scheme
//   icr-dmt dmt sweep    figure-style CSV sweep over symmetric gains
//   icr-dmt oracle verify   closed forms vs. grid-solved exponent programs
//   icr-dmt sim outage   Monte Carlo outage sweep over an SNR grid
//   icr-dmt sim slope    outage sweep plus fitted diversity slope
//
// Exit codes: 0 success, 1 usage/configuration error, 2 verification
// failure, 3 insufficient data.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "icr/csv.hpp"
#include "icr/dmt_formulas.hpp"
#include "icr/oracle_verify.hpp"
#include "icr/outage_sim.hpp"
#include "icr/presets.hpp"
#include "icr/types.hpp"

namespace {

using nlohmann::json;

constexpr double kSlopeTolerance = 0.15;

struct ToolError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
    throw ToolError{code, message};
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(1, "cannot open output file: " + path);
    return out;
}

// ---------------------------------------------------------------------------
// Run configuration: JSON document overridable by flags.
// ---------------------------------------------------------------------------

struct RunConfig {
    std::string scheme = "df";
    double alpha = 1.0, beta = 1.0, gamma = 1.0;
    double r1 = 0.0, r2 = 0.0;
    std::vector<double> snr_grid_db = {30.0, 40.0, 50.0, 60.0, 70.0};
    long trials_per_point = 100000;
    std::uint64_t master_seed = 1;
    double r_step = 0.01;
    std::string out;
};

void load_config(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) fail(1, "cannot open config file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& ex) {
        fail(1, std::string("config is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) fail(1, "config root must be a JSON object");

    const std::vector<std::string> known = {"scheme",       "alpha",  "beta",
                                            "gamma",        "r1",     "r2",
                                            "snr_grid_db",  "trials_per_point",
                                            "master_seed",  "r_step", "out"};
    for (const auto& [key, value] : doc.items()) {
        bool ok = false;
        for (const auto& k : known) ok = ok || k == key;
        if (!ok) fail(1, "unknown config key: " + key);
        (void)value;
    }
    try {
        if (doc.contains("scheme")) cfg.scheme = doc["scheme"].get<std::string>();
        if (doc.contains("alpha")) cfg.alpha = doc["alpha"].get<double>();
        if (doc.contains("beta")) cfg.beta = doc["beta"].get<double>();
        if (doc.contains("gamma")) cfg.gamma = doc["gamma"].get<double>();
        if (doc.contains("r1")) cfg.r1 = doc["r1"].get<double>();
        if (doc.contains("r2")) cfg.r2 = doc["r2"].get<double>();
        if (doc.contains("snr_grid_db")) {
            cfg.snr_grid_db = doc["snr_grid_db"].get<std::vector<double>>();
        }
        if (doc.contains("trials_per_point")) {
            cfg.trials_per_point = doc["trials_per_point"].get<long>();
        }
        if (doc.contains("master_seed")) {
            cfg.master_seed = doc["master_seed"].get<std::uint64_t>();
        }
        if (doc.contains("r_step")) cfg.r_step = doc["r_step"].get<double>();
        if (doc.contains("out")) cfg.out = doc["out"].get<std::string>();
    } catch (const json::exception& ex) {
        fail(1, std::string("config value has wrong type: ") + ex.what());
    }
}

// "30:10:80" (start:step:stop) or "30,40,50".
std::vector<double> parse_snr_grid(const std::string& text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        double start = 0.0, step = 0.0, stop = 0.0;
        char c1 = 0, c2 = 0;
        std::istringstream in(text);
        if (!(in >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':' ||
            step <= 0.0) {
            fail(1, "bad --snr-grid, expected start:step:stop, got " + text);
        }
        for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
        return grid;
    }
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            grid.push_back(std::stod(tok));
        } catch (const std::exception&) {
            fail(1, "bad --snr-grid entry: " + tok);
        }
    }
    return grid;
}

icr::SweepConfig to_sweep_config(const RunConfig& cfg) {
    icr::SweepConfig sc;
    sc.scheme = icr::scheme_from_name(cfg.scheme);
    sc.exponents = icr::ChannelExponents(cfg.alpha, cfg.beta, cfg.gamma);
    sc.gains = icr::MultiplexingGains(cfg.r1, cfg.r2);
    sc.snr_grid_db = cfg.snr_grid_db;
    sc.trials_per_point = cfg.trials_per_point;
    sc.master_seed = cfg.master_seed;
    sc.validate();
    return sc;
}

// ---------------------------------------------------------------------------
// dmt eval
// ---------------------------------------------------------------------------

void print_breakdown(std::ostream& out, const std::string& name,
                     const icr::DmtBreakdown& b) {
    out << name << "\t" << icr::csv_number(b.value.d) << "\t";
    bool first = true;
    for (const auto& c : b.components) {
        if (!first) out << " ";
        out << c.label << "=" << icr::csv_number(c.value);
        first = false;
    }
    out << "\n";
}

json breakdown_json(const icr::DmtBreakdown& b) {
    json comps = json::object();
    for (const auto& c : b.components) comps[c.label] = c.value;
    return json{{"d", b.value.d}, {"components", comps}};
}

json report_json(const icr::OptimalityReport& rep) {
    return json{{"holds", rep.holds}, {"violated", rep.violated}};
}

int cmd_dmt_eval(const RunConfig& cfg, bool as_json) {
    const icr::ChannelExponents e(cfg.alpha, cfg.beta, cfg.gamma);
    const icr::MultiplexingGains g(cfg.r1, cfg.r2);

    const auto cutset = icr::cutset_dmt(g, e);
    const auto cf = icr::cf_dmt(g, e);
    const auto df = icr::df_dmt(g, e);
    const auto ic = icr::ic_dmt(g, e);
    const auto cf_rep = icr::cf_optimality_holds(g, e);
    const auto df_rep = icr::df_optimality_holds(g, e);
    std::optional<icr::DmtBreakdown> fd, hd;
    if (e.gamma == 1.0) {
        fd = icr::af_fd_dmt(g, e);
        hd = icr::af_hd_dmt(g, e);
    }

    if (as_json) {
        json doc{{"alpha", e.alpha},
                 {"beta", e.beta},
                 {"gamma", e.gamma},
                 {"r1", g.r1},
                 {"r2", g.r2},
                 {"cutset", breakdown_json(cutset)},
                 {"ic", ic.d},
                 {"cf", breakdown_json(cf)},
                 {"df", breakdown_json(df)},
                 {"cf_optimality", report_json(cf_rep)},
                 {"df_optimality", report_json(df_rep)}};
        if (fd) {
            doc["af_fd"] = breakdown_json(*fd);
            doc["af_hd"] = breakdown_json(*hd);
        } else {
            doc["af_fd"] = "gamma-unsupported";
            doc["af_hd"] = "gamma-unsupported";
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "alpha=" << icr::csv_number(e.alpha) << " beta=" << icr::csv_number(e.beta)
              << " gamma=" << icr::csv_number(e.gamma) << " r1=" << icr::csv_number(g.r1)
              << " r2=" << icr::csv_number(g.r2) << "\n";
    print_breakdown(std::cout, "cutset", cutset);
    std::cout << "ic\t" << icr::csv_number(ic.d) << "\t(no relay)\n";
    print_breakdown(std::cout, "cf", cf);
    print_breakdown(std::cout, "df", df);
    if (fd) {
        print_breakdown(std::cout, "af_fd", *fd);
        print_breakdown(std::cout, "af_hd", *hd);
    } else {
        std::cout << "af_fd\tn/a\t(requires gamma=1)\n";
        std::cout << "af_hd\tn/a\t(requires gamma=1)\n";
    }
    auto print_report = [](const char* name, const icr::OptimalityReport& rep) {
        std::cout << name << " holds=" << (rep.holds ? "yes" : "no");
        if (!rep.violated.empty()) {
            std::cout << " violated=[";
            for (std::size_t i = 0; i < rep.violated.size(); ++i) {
                std::cout << (i ? "," : "") << rep.violated[i];
            }
            std::cout << "]";
        }
        std::cout << "\n";
    };
    print_report("cf-optimality", cf_rep);
    print_report("df-optimality", df_rep);
    return 0;
}

// ---------------------------------------------------------------------------
// dmt sweep
// ---------------------------------------------------------------------------

void write_sweep_csv(std::ostream& out, const std::vector<icr::SweepRow>& rows) {
    out << "r,d_cutset,d_cf,d_df,d_af_fd,d_af_hd\n";
    for (const auto& row : rows) {
        out << icr::csv_number(row.r) << "," << icr::csv_number(row.d_cutset) << ","
            << icr::csv_number(row.d_cf) << "," << icr::csv_number(row.d_df) << ","
            << icr::csv_number(row.d_af_fd) << "," << icr::csv_number(row.d_af_hd) << "\n";
    }
}

int cmd_dmt_sweep(const RunConfig& cfg) {
    const icr::ChannelExponents e(cfg.alpha, cfg.beta, cfg.gamma);
    const auto rows = icr::dmt_sweep(e, cfg.r_step);
    if (cfg.out.empty()) {
        write_sweep_csv(std::cout, rows);
    } else {
        auto out = open_output(cfg.out);
        write_sweep_csv(out, rows);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// oracle verify
// ---------------------------------------------------------------------------

int cmd_oracle_verify(const std::string& family, int samples, double step,
                      std::uint64_t seed, const std::string& out_path) {
    std::vector<icr::OracleFamily> families;
    if (family == "all") {
        families = {icr::OracleFamily::Cutset, icr::OracleFamily::CF, icr::OracleFamily::DF,
                    icr::OracleFamily::FD_AF, icr::OracleFamily::HD_AF};
    } else {
        families = {icr::oracle_family_from_name(family)};
    }

    std::ostringstream csv;
    csv << "family,component,alpha,beta,gamma,r1,r2,closed_form,oracle,deviation,allowed\n";
    double max_dev = 0.0;
    bool ok = true;
    for (const auto f : families) {
        for (const auto& row : icr::verify_family(f, samples, step, seed)) {
            const double dev = row.deviation();
            const double allowed = row.allowed(step);
            max_dev = std::max(max_dev, dev);
            ok = ok && dev <= allowed;
            csv << icr::oracle_family_name(row.family) << "," << row.component << ","
                << icr::csv_number(row.alpha) << "," << icr::csv_number(row.beta) << ","
                << icr::csv_number(row.gamma) << "," << icr::csv_number(row.r1) << ","
                << icr::csv_number(row.r2) << "," << icr::csv_number(row.closed_form) << ","
                << icr::csv_number(row.oracle) << "," << icr::csv_number(dev) << ","
                << icr::csv_number(allowed) << "\n";
        }
    }
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        auto out = open_output(out_path);
        out << csv.str();
    }
    std::cerr << "max deviation " << icr::csv_number(max_dev) << " ("
              << (ok ? "within" : "EXCEEDS") << " per-component bound)\n";
    return ok ? 0 : 2;
}

// ---------------------------------------------------------------------------
// sim outage / sim slope
// ---------------------------------------------------------------------------

void write_outage_csv(std::ostream& out, const icr::SweepConfig& sc,
                      const std::vector<icr::OutagePoint>& points) {
    out << "scheme,alpha,beta,gamma,r1,r2,snr_db,trials,events,p_hat,ci_low,ci_high\n";
    for (const auto& pt : points) {
        out << icr::scheme_name(sc.scheme) << "," << icr::csv_number(sc.exponents.alpha) << ","
            << icr::csv_number(sc.exponents.beta) << "," << icr::csv_number(sc.exponents.gamma)
            << "," << icr::csv_number(sc.gains.r1) << "," << icr::csv_number(sc.gains.r2) << ","
            << icr::csv_number(pt.snr_db) << "," << icr::csv_number(pt.trials) << ","
            << icr::csv_number(pt.events) << "," << icr::csv_number(pt.p_hat) << ","
            << icr::csv_number(pt.ci_low) << "," << icr::csv_number(pt.ci_high) << "\n";
    }
}

int cmd_sim(const RunConfig& cfg, int threads, bool fit_slope,
            const std::string& summary_path) {
    const auto sc = to_sweep_config(cfg);
    const auto points = icr::run_sweep(sc, threads, &std::cerr);

    if (cfg.out.empty()) {
        write_outage_csv(std::cout, sc, points);
    } else {
        auto out = open_output(cfg.out);
        write_outage_csv(out, sc, points);
    }
    if (!fit_slope) return 0;

    icr::SlopeEstimate est;
    try {
        est = icr::estimate_diversity(points);
    } catch (const icr::InsufficientData& ex) {
        std::cerr << "insufficient data: " << ex.what() << "\n";
        return 3;
    }
    const double closed = icr::closed_form_dmt(sc.scheme, sc.gains, sc.exponents);
    const bool within = std::abs(est.d_hat - closed) <= kSlopeTolerance;

    std::ostringstream csv;
    csv << "scheme,alpha,beta,gamma,r1,r2,points_used,d_hat,stderr,d_closed_form,within_tol\n";
    csv << icr::scheme_name(sc.scheme) << "," << icr::csv_number(sc.exponents.alpha) << ","
        << icr::csv_number(sc.exponents.beta) << "," << icr::csv_number(sc.exponents.gamma)
        << "," << icr::csv_number(sc.gains.r1) << "," << icr::csv_number(sc.gains.r2) << ","
        << est.points_used << "," << icr::csv_number(est.d_hat) << ","
        << icr::csv_number(est.stderr_) << "," << icr::csv_number(closed) << ","
        << (within ? "pass" : "fail") << "\n";
    if (summary_path.empty()) {
        std::cout << csv.str();
    } else {
        auto out = open_output(summary_path);
        out << csv.str();
    }
    return within ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DMT analysis toolkit for the slow-fading interference channel with a relay"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::string snr_grid_text;
    int threads = 0;
    bool as_json = false;
    std::string family = "all";
    int samples = 1000;
    double step = 0.01;
    std::uint64_t verify_seed = 7;
    std::string summary_path;

    auto add_exponent_flags = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", cfg.alpha, "cross-link SNR exponent");
        cmd->add_option("--beta", cfg.beta, "relay->destination SNR exponent");
        cmd->add_option("--gamma", cfg.gamma, "source->relay SNR exponent");
    };
    auto add_gain_flags = [&](CLI::App* cmd) {
        cmd->add_option("--r1", cfg.r1, "multiplexing gain of pair 1");
        cmd->add_option("--r2", cfg.r2, "multiplexing gain of pair 2");
    };

    CLI::App* dmt = app.add_subcommand("dmt", "closed-form DMT evaluation");
    CLI::App* dmt_eval = dmt->add_subcommand("eval", "report every scheme at one gain pair");
    add_exponent_flags(dmt_eval);
    add_gain_flags(dmt_eval);
    dmt_eval->add_flag("--json", as_json, "emit JSON instead of text");

    CLI::App* dmt_sweep = dmt->add_subcommand("sweep", "CSV sweep over symmetric gains");
    add_exponent_flags(dmt_sweep);
    std::string preset;
    dmt_sweep->add_option("--preset", preset, "named figure configuration (fig2a..fig4d)");
    dmt_sweep->add_option("--r-step", cfg.r_step, "gain grid step");
    dmt_sweep->add_option("--config", config_path, "JSON configuration file");
    dmt_sweep->add_option("--out", cfg.out, "output CSV path (default stdout)");

    CLI::App* oracle = app.add_subcommand("oracle", "grid-program verification");
    CLI::App* oracle_verify =
        oracle->add_subcommand("verify", "closed forms vs. exponent programs");
    oracle_verify->add_option("--family", family, "cutset|cf|df|fd_af|hd_af|all");
    oracle_verify->add_option("--samples", samples, "random tuples per family");
    oracle_verify->add_option("--step", step, "grid step");
    oracle_verify->add_option("--seed", verify_seed, "tuple sampler seed");
    oracle_verify->add_option("--out", cfg.out, "report CSV path (default stdout)");

    CLI::App* sim = app.add_subcommand("sim", "Monte Carlo outage simulation");
    CLI::App* sim_outage = sim->add_subcommand("outage", "outage sweep over an SNR grid");
    CLI::App* sim_slope = sim->add_subcommand("slope", "outage sweep plus diversity fit");
    for (CLI::App* cmd : {sim_outage, sim_slope}) {
        cmd->add_option("--config", config_path, "JSON configuration file");
        cmd->add_option("--scheme", cfg.scheme, "cf|df|fd_af|hd_af");
        add_exponent_flags(cmd);
        add_gain_flags(cmd);
        cmd->add_option("--snr-grid", snr_grid_text, "start:step:stop in dB, or comma list");
        cmd->add_option("--trials", cfg.trials_per_point, "trials per SNR point");
        cmd->add_option("--seed", cfg.master_seed, "master seed");
        cmd->add_option("--threads", threads, "worker threads (default ICR_DMT_THREADS)");
        cmd->add_option("--out", cfg.out, "outage CSV path (default stdout)");
    }
    sim_slope->add_option("--summary-out", summary_path, "slope summary CSV path");

    try {
        app.parse(argc, argv);

        // Config file first, then explicit flags on top.
        CLI::App* active = nullptr;
        for (CLI::App* cmd : {dmt_sweep, sim_outage, sim_slope}) {
            if (cmd->parsed()) active = cmd;
        }
        if (!config_path.empty() && active != nullptr) {
            RunConfig from_file = cfg;
            load_config(config_path, from_file);
            auto keep = [&](const char* flag, auto& target, const auto& parsed_value) {
                if (active->count(flag) > 0) target = parsed_value;
            };
            RunConfig merged = from_file;
            keep("--scheme", merged.scheme, cfg.scheme);
            keep("--alpha", merged.alpha, cfg.alpha);
            keep("--beta", merged.beta, cfg.beta);
            keep("--gamma", merged.gamma, cfg.gamma);
            keep("--r1", merged.r1, cfg.r1);
            keep("--r2", merged.r2, cfg.r2);
            keep("--trials", merged.trials_per_point, cfg.trials_per_point);
            keep("--seed", merged.master_seed, cfg.master_seed);
            keep("--out", merged.out, cfg.out);
            if (active == dmt_sweep && dmt_sweep->count("--r-step") > 0) {
                merged.r_step = cfg.r_step;
            }
            cfg = merged;
        }
        if (!snr_grid_text.empty()) cfg.snr_grid_db = parse_snr_grid(snr_grid_text);

        if (dmt_eval->parsed()) return cmd_dmt_eval(cfg, as_json);
        if (dmt_sweep->parsed()) {
            if (!preset.empty()) {
                const icr::FigurePreset* p = icr::find_preset(preset);
                if (p == nullptr) fail(1, "unknown preset: " + preset);
                cfg.alpha = p->alpha;
                cfg.beta = p->beta;
                cfg.gamma = p->gamma;
            }
            return cmd_dmt_sweep(cfg);
        }
        if (oracle_verify->parsed()) {
            return cmd_oracle_verify(family, samples, step, verify_seed, cfg.out);
        }
        if (sim_outage->parsed()) return cmd_sim(cfg, threads, false, summary_path);
        if (sim_slope->parsed()) return cmd_sim(cfg, threads, true, summary_path);
        fail(1, "no subcommand given");
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) return app.exit(ex);  // --help
        app.exit(ex);
        return 1;
    } catch (const ToolError& ex) {
        std::cerr << "error: " << ex.message << "\n";
        return ex.code;
    } catch (const icr::InsufficientData& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

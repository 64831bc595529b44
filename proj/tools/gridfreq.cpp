// gridfreq: characterize power-grid frequency recordings and generate
// synthetic benchmark trajectories.

#include "gridfreq/errors.hpp"
#include "gridfreq/report.hpp"
#include "gridfreq/synth.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gf = gridfreq;
using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 1;
    std::string output_dir;
    std::string format = "json";
};

gf::SegmentedSeries load_csv(const std::string& path, double dt, double max_gap,
                             const std::string& region) {
    gf::IngestConfig cfg;
    cfg.dt = dt;
    cfg.max_gap = max_gap > 0.0 ? max_gap : dt;
    cfg.region = region;
    if (path == "-") return gf::ingest_csv(std::cin, cfg);
    std::ifstream in(path);
    if (!in) throw gf::InputEmpty("cannot open input file: " + path);
    gf::SegmentedSeries s = gf::ingest_csv(in, cfg);
    if (region.empty()) {
        const std::string stem = std::filesystem::path(path).stem().string();
        for (auto& seg : s.segments) seg.region = stem;
    }
    s.source = path;
    return s;
}

void emit(const GlobalOpts& g, const std::string& name, const std::string& text) {
    if (g.output_dir.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::filesystem::create_directories(g.output_dir);
    const auto path = std::filesystem::path(g.output_dir) / name;
    std::ofstream out(path);
    out << text << "\n";
    std::cerr << "wrote " << path.string() << "\n";
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& columns) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << header[i];
    for (std::size_t r = 0; r < columns.front().size(); ++r) {
        os << "\n";
        for (std::size_t c = 0; c < columns.size(); ++c)
            os << (c ? "," : "") << columns[c][r];
    }
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"power-grid frequency statistics toolkit"};
    app.require_subcommand(1);
    app.fallthrough(true);
    app.set_config("--config", "", "flat key=value config file mirroring all flags");

    GlobalOpts g;
    app.add_option("--seed", g.seed, "master RNG seed")->capture_default_str();
    app.add_option("--output", g.output_dir, "output directory (default: stdout)");
    app.add_option("--format", g.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    std::string input;
    double dt = 1.0, max_gap = 0.0;
    std::string region;
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "CSV input file ('-' for stdin)")->required();
        cmd->add_option("--dt", dt, "sampling interval, s")->capture_default_str();
        cmd->add_option("--max-gap", max_gap, "gap threshold, s (default dt)");
        cmd->add_option("--region", region, "dataset label");
    };

    auto* c_ingest = app.add_subcommand("ingest", "parse and segment a CSV recording");
    add_input(c_ingest);

    auto* c_stats = app.add_subcommand("stats", "sample moments of the recording");
    add_input(c_stats);

    auto* c_density = app.add_subcommand("density", "kernel density estimate");
    add_input(c_density);
    double bandwidth = 0.0;
    c_density->add_option("--bandwidth", bandwidth, "KDE bandwidth, Hz (default Silverman)");

    auto* c_dip = app.add_subcommand("dip", "Hartigan dip statistic");
    add_input(c_dip);
    bool want_pvalue = false;
    std::size_t n_boot = 2000;
    c_dip->add_flag("--pvalue", want_pvalue, "bootstrap p-value against uniform");
    c_dip->add_option("--n-boot", n_boot, "bootstrap replicates")->capture_default_str();

    auto* c_incr = app.add_subcommand("increments", "increment-distribution report");
    add_input(c_incr);
    double tau = 1.0;
    c_incr->add_option("--tau", tau, "increment lag, s")->capture_default_str();

    auto* c_lin = app.add_subcommand("linearity", "LT surrogate linearity test");
    add_input(c_lin);
    std::size_t n_surrogates = 19;
    double lt_max_lag = 60.0;
    c_lin->add_option("--surrogates", n_surrogates, "surrogate count")->capture_default_str();
    c_lin->add_option("--max-lag", lt_max_lag, "LT lag grid end, s")->capture_default_str();

    auto* c_acf = app.add_subcommand("acf", "autocorrelation + exponential decay fit");
    add_input(c_acf);
    double acf_max_lag = 3600.0, fit_window = 3600.0;
    c_acf->add_option("--max-lag", acf_max_lag, "max ACF lag, s")->capture_default_str();
    c_acf->add_option("--fit-window", fit_window, "exp fit window, s")->capture_default_str();

    auto* c_dfa = app.add_subcommand("dfa", "detrended fluctuation analysis");
    add_input(c_dfa);
    std::size_t min_scale = 5, max_scale = 1000000;
    int order = 1;
    c_dfa->add_option("--min-scale", min_scale, "smallest window, samples")->capture_default_str();
    c_dfa->add_option("--max-scale", max_scale, "largest window, samples")->capture_default_str();
    c_dfa->add_option("--order", order, "detrending polynomial degree")->capture_default_str();

    auto* c_synth = app.add_subcommand("synth", "generate a synthetic trajectory CSV");
    std::string kind = "ou";
    gf::ModelConfig mc;
    std::vector<double> centers, weights, widths;
    c_synth->add_option("--kind", kind, "ou|fbm|fbm-ou|deadband-ou|bimodal-mixture")
        ->check(CLI::IsMember({"ou", "fbm", "fbm-ou", "deadband-ou", "bimodal-mixture"}))
        ->capture_default_str();
    c_synth->add_option("--theta", mc.theta, "damping, 1/s")->capture_default_str();
    c_synth->add_option("--mu", mc.mu, "mean level, Hz")->capture_default_str();
    c_synth->add_option("--sigma", mc.sigma, "noise amplitude")->capture_default_str();
    c_synth->add_option("--hurst", mc.hurst_h, "Hurst exponent")->capture_default_str();
    c_synth->add_option("--deadband", mc.deadband_halfwidth, "deadband half-width, Hz")
        ->capture_default_str();
    c_synth->add_option("--centers", centers, "mixture centers, Hz");
    c_synth->add_option("--weights", weights, "mixture weights");
    c_synth->add_option("--widths", widths, "mixture widths, Hz");
    c_synth->add_option("--n", mc.n, "sample count")->capture_default_str();
    c_synth->add_option("--dt", mc.dt, "sampling interval, s")->capture_default_str();
    c_synth->add_option("--region", mc.region, "label");

    gf::AnalysisConfig ac;
    auto add_analysis_opts = [&](CLI::App* cmd) {
        cmd->add_option("--tau", ac.tau, "increment lag, s")->capture_default_str();
        cmd->add_option("--acf-max-lag", ac.acf_max_lag, "s")->capture_default_str();
        cmd->add_option("--fit-window", ac.acf_fit_window, "s")->capture_default_str();
        cmd->add_option("--lt-max-lag", ac.lt_max_lag, "s")->capture_default_str();
        cmd->add_option("--surrogates", ac.n_surrogates, "")->capture_default_str();
        cmd->add_option("--dfa-min-scale", ac.dfa_min_scale, "")->capture_default_str();
        cmd->add_option("--dfa-max-scale", ac.dfa_max_scale, "")->capture_default_str();
        cmd->add_option("--dfa-order", ac.dfa_order, "")->capture_default_str();
        cmd->add_flag("--dip-pvalue", ac.dip_pvalue, "");
        cmd->add_option("--n-boot", ac.n_boot, "")->capture_default_str();
    };

    auto* c_char = app.add_subcommand("characterize", "full analysis battery");
    add_input(c_char);
    add_analysis_opts(c_char);

    auto* c_cmp = app.add_subcommand("compare", "characterize several recordings and rank them");
    std::vector<std::string> inputs;
    c_cmp->add_option("inputs", inputs, "two or more CSV files")->required()->expected(-2);
    c_cmp->add_option("--dt", dt, "sampling interval, s")->capture_default_str();
    c_cmp->add_option("--max-gap", max_gap, "gap threshold, s (default dt)");
    add_analysis_opts(c_cmp);

    CLI11_PARSE(app, argc, argv);
    ac.seed = g.seed;

    if (c_ingest->parsed()) {
        const auto s = load_csv(input, dt, max_gap, region);
        ordered_json j;
        j["source"] = s.source;
        j["dropped_samples"] = s.dropped_samples;
        j["n_samples"] = s.total_samples();
        ordered_json segs = ordered_json::array();
        for (const auto& seg : s.segments)
            segs.push_back({{"start_epoch", seg.start_epoch},
                            {"length", seg.values.size()},
                            {"dt", seg.dt}});
        j["segments"] = segs;
        emit(g, "ingest.json", j.dump(2));
        return 0;
    }
    if (c_stats->parsed()) {
        const auto s = load_csv(input, dt, max_gap, region);
        std::vector<double> all;
        for (const auto& seg : s.segments)
            all.insert(all.end(), seg.values.begin(), seg.values.end());
        const auto m = gf::moments(all);
        emit(g, "stats.json", gf::to_json(m).dump(2));
        return 0;
    }
    if (c_density->parsed()) {
        const auto s = load_csv(input, dt, max_gap, region);
        std::vector<double> all;
        for (const auto& seg : s.segments)
            all.insert(all.end(), seg.values.begin(), seg.values.end());
        const auto d = gf::kde(all, bandwidth);
        if (g.format == "csv") {
            emit(g, "density.csv", csv_table({"grid_hz", "density"}, {d.grid, d.density}));
        } else {
            ordered_json j = {{"bandwidth", d.bandwidth},
                              {"grid", d.grid},
                              {"density", d.density}};
            emit(g, "density.json", j.dump(2));
        }
        return 0;
    }
    if (c_dip->parsed()) {
        const auto s = load_csv(input, dt, max_gap, region);
        std::vector<double> all;
        for (const auto& seg : s.segments)
            all.insert(all.end(), seg.values.begin(), seg.values.end());
        const auto d = want_pvalue
                           ? gf::dip_statistic_pvalue(all, n_boot, g.seed)
                           : gf::dip_statistic(all);
        emit(g, "dip.json", gf::to_json(d).dump(2));
        return 0;
    }
    if (c_incr->parsed()) {
        const auto s = load_csv(input, dt, max_gap, region);
        const auto rep = gf::increment_report(s, tau);
        emit(g, "increments.json", gf::to_json(rep).dump(2));
        if (!g.output_dir.empty())
            emit(g, "increments_density.csv",
                 csv_table({"delta_f_hz", "density"},
                           {rep.density.grid, rep.density.density}));
        return 0;
    }
    if (c_lin->parsed()) {
        const auto s = load_csv(input, dt, max_gap, region);
        const auto& seg = s.segments[s.longest_segment()];
        const auto res = gf::lt_rmse(seg, n_surrogates, lt_max_lag, g.seed);
        if (g.format == "csv") {
            emit(g, "linearity.csv",
                 csv_table({"lag_s", "lt_data", "lt_surrogate_mean"},
                           {res.lags, res.lt_data, res.lt_surrogate_mean}));
        } else {
            emit(g, "linearity.json", gf::to_json(res).dump(2));
        }
        return 0;
    }
    if (c_acf->parsed()) {
        const auto s = load_csv(input, dt, max_gap, region);
        const auto a = gf::acf(s, acf_max_lag);
        const auto fit = gf::fit_exp_decay(a, fit_window);
        if (g.format == "csv") {
            emit(g, "acf.csv", csv_table({"lag_s", "acf"}, {a.lags, a.acf}));
        } else {
            ordered_json j = gf::to_json(fit);
            j["acf"] = gf::to_json(a);
            emit(g, "acf.json", j.dump(2));
        }
        return 0;
    }
    if (c_dfa->parsed()) {
        const auto s = load_csv(input, dt, max_gap, region);
        const auto& seg = s.segments[s.longest_segment()];
        const auto windows =
            gf::dfa_default_windows(seg.values.size(), min_scale, max_scale);
        const auto d = gf::dfa(s, windows, order);
        if (g.format == "csv") {
            std::vector<double> ws(d.window_sizes.begin(), d.window_sizes.end());
            emit(g, "dfa.csv", csv_table({"window", "fluctuation"}, {ws, d.fluctuation}));
        } else {
            emit(g, "dfa.json", gf::to_json(d).dump(2));
        }
        return 0;
    }
    if (c_synth->parsed()) {
        mc.seed = g.seed;
        mc.mixture_centers = centers;
        mc.mixture_weights = weights;
        mc.mixture_widths = widths;
        std::ostringstream os;
        os.precision(17);
        if (kind == "bimodal-mixture") {
            mc.kind = gf::ModelKind::BIMODAL_MIXTURE;
            const auto vals = gf::gen_bimodal_mixture(mc);
            os << "# gridfreq synth kind=bimodal-mixture seed=" << mc.seed
               << "\nvalue_hz";
            for (double v : vals) os << "\n" << v;
            emit(g, "synth.csv", os.str());
            return 0;
        }
        if (kind == "ou") mc.kind = gf::ModelKind::OU;
        else if (kind == "fbm") mc.kind = gf::ModelKind::FBM;
        else if (kind == "fbm-ou") mc.kind = gf::ModelKind::FBM_OU;
        else mc.kind = gf::ModelKind::DEADBAND_OU;
        const auto series = gf::generate(mc);
        os << "# gridfreq synth kind=" << kind << " seed=" << mc.seed
           << "\ntimestamp,frequency_hz";
        for (std::size_t i = 0; i < series.values.size(); ++i)
            os << "\n" << series.start_epoch + series.dt * static_cast<double>(i)
               << "," << series.values[i];
        emit(g, "synth.csv", os.str());
        return 0;
    }
    if (c_char->parsed()) {
        const auto s = load_csv(input, dt, max_gap, region);
        const auto rep = gf::characterize(s, ac);
        emit(g, "characterize.json", gf::to_json(rep).dump(2));
        return rep.has_skips() ? 1 : 0;
    }
    if (c_cmp->parsed()) {
        std::vector<gf::CharacterizationReport> reports;
        for (const auto& path : inputs)
            reports.push_back(gf::characterize(load_csv(path, dt, max_gap, ""), ac));
        const auto table = gf::compare(reports);
        emit(g, "compare.json", gf::to_json(table).dump(2));
        for (const auto& r : reports)
            if (r.has_skips()) return 1;
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return 2;
    }
}

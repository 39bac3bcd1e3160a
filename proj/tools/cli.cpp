#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <phasesfs/blockcounting.hpp>
#include <phasesfs/errors.hpp>
#include <phasesfs/estimators.hpp>
#include <phasesfs/intweight.hpp>
#include <phasesfs/inversion.hpp>
#include <phasesfs/sfs.hpp>
#include <phasesfs/simulate.hpp>

namespace phasesfs::cli {
namespace {

using nlohmann::ordered_json;

// 17 significant digits round-trip doubles exactly; the C locale guarantees
// a '.' decimal separator, so identical runs produce identical bytes.
std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string csv_cell(const ordered_json& cell) {
    if (cell.is_string()) {
        return cell.get<std::string>();
    }
    if (cell.is_number_integer()) {
        return std::to_string(cell.get<long long>());
    }
    if (cell.is_number_unsigned()) {
        return std::to_string(cell.get<unsigned long long>());
    }
    return fmt17(cell.get<double>());
}

/// Sink for one output table: RunSpec metadata, optional named extras
/// (e.g. quantiles), a header, and rows streamed one at a time.
class Writer {
public:
    virtual ~Writer() = default;
    virtual void begin(const ordered_json& runspec, const ordered_json& extras,
                       const std::vector<std::string>& columns) = 0;
    virtual void row(const std::vector<ordered_json>& cells) = 0;
    virtual void finish() = 0;
};

class CsvWriter final : public Writer {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void begin(const ordered_json& runspec, const ordered_json& extras,
               const std::vector<std::string>& columns) override {
        for (const auto& [key, value] : runspec.items()) {
            os_ << "# " << key << '=' << csv_cell(value) << '\n';
        }
        for (const auto& [key, value] : extras.items()) {
            if (value.is_object()) {
                for (const auto& [sub, v] : value.items()) {
                    os_ << "# " << key << '_' << sub << '=' << csv_cell(v)
                        << '\n';
                }
            } else {
                os_ << "# " << key << '=' << csv_cell(value) << '\n';
            }
        }
        for (std::size_t i = 0; i < columns.size(); ++i) {
            os_ << (i ? "," : "") << columns[i];
        }
        os_ << '\n';
    }

    void row(const std::vector<ordered_json>& cells) override {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os_ << (i ? "," : "") << csv_cell(cells[i]);
        }
        os_ << '\n';
    }

    void finish() override { os_.flush(); }

private:
    std::ostream& os_;
};

class JsonWriter final : public Writer {
public:
    explicit JsonWriter(std::ostream& os) : os_(os) {}

    void begin(const ordered_json& runspec, const ordered_json& extras,
               const std::vector<std::string>& columns) override {
        root_["runspec"] = runspec;
        for (const auto& [key, value] : extras.items()) {
            root_[key] = value;
        }
        root_["columns"] = columns;
        root_["rows"] = ordered_json::array();
    }

    void row(const std::vector<ordered_json>& cells) override {
        root_["rows"].push_back(cells);
    }

    void finish() override { os_ << root_.dump() << '\n'; }

private:
    std::ostream& os_;
    ordered_json root_;
};

struct Options {
    int n = 0;
    double theta = 1.0;
    std::string coeffs;
    std::string stat;
    long kmax = 50;
    int grid_H = 0;       // 0 = use the default grid
    double grid_eta = 0;  // 0 = use the default grid
    long reps = 10000;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string out_path;
};

std::vector<double> parse_coeffs(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            values.push_back(std::stod(item, &pos));
            if (pos != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw ValidationError("--coeffs: cannot parse entry '" + item +
                                  "' as a number");
        }
    }
    if (values.empty()) {
        throw ValidationError("--coeffs: empty coefficient list");
    }
    return values;
}

std::vector<long> to_integers(const std::vector<double>& values) {
    std::vector<long> out;
    out.reserve(values.size());
    for (double v : values) {
        const double r = std::nearbyint(v);
        if (std::abs(v - r) > 1e-9) {
            throw ValidationError(
                "--coeffs: integer weights required, got " + fmt17(v));
        }
        out.push_back(static_cast<long>(r));
    }
    return out;
}

std::string join_coeffs(const RealVector& c) {
    std::string s;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += fmt17(c[i]);
    }
    return s;
}

/// Resolve --stat / --coeffs into a coefficient vector of length n-1.
RealVector resolve_statistic(const Options& opt, const SfsModel& sm) {
    if (!opt.stat.empty() && !opt.coeffs.empty()) {
        throw ValidationError("--stat and --coeffs are mutually exclusive");
    }
    if (!opt.stat.empty()) {
        return statistic_coefficients(opt.stat, sm);
    }
    if (!opt.coeffs.empty()) {
        const std::vector<double> v = parse_coeffs(opt.coeffs);
        if (static_cast<int>(v.size()) != sm.types()) {
            throw DimensionMismatch(
                "--coeffs: expected " + std::to_string(sm.types()) +
                " entries for n=" + std::to_string(sm.n()) + ", got " +
                std::to_string(v.size()));
        }
        RealVector c(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            c[static_cast<Eigen::Index>(i)] = v[i];
        }
        return c;
    }
    throw ValidationError("one of --stat or --coeffs is required");
}

ordered_json common_runspec(const std::string& command, const Options& opt) {
    ordered_json rs;
    rs["command"] = command;
    rs["n"] = opt.n;
    return rs;
}

void finish_runspec(ordered_json& rs, const Options& opt) {
    rs["format"] = opt.format;
    rs["out"] = opt.out_path.empty() ? "-" : opt.out_path;
}

void cmd_statespace(const Options& opt, Writer& w) {
    const BlockCountingModel model = build_model(opt.n);
    ordered_json rs = common_runspec("statespace", opt);
    rs["states"] = model.size();
    finish_runspec(rs, opt);

    std::vector<std::string> cols = {"state"};
    for (int i = 1; i < opt.n; ++i) {
        cols.push_back("a" + std::to_string(i));
    }
    cols.push_back("lineages");
    cols.push_back("rate");
    w.begin(rs, ordered_json::object(), cols);

    for (int s = 0; s < model.size(); ++s) {
        std::vector<ordered_json> cells;
        cells.emplace_back(s);
        for (int i = 0; i < opt.n - 1; ++i) {
            cells.emplace_back(model.states[static_cast<std::size_t>(s)]
                                           [static_cast<std::size_t>(i)]);
        }
        cells.emplace_back(model.lineage_count(s));
        cells.emplace_back(-model.T(s, s));
        w.row(cells);
    }
    w.finish();
}

void cmd_sfs(const Options& opt, Writer& w) {
    const SfsModel sm = make_sfs_model(opt.n, opt.theta);
    if (opt.kmax < 0) {
        throw ValidationError("--kmax must be nonnegative");
    }
    ordered_json rs = common_runspec("sfs", opt);
    rs["theta"] = opt.theta;
    rs["kmax"] = opt.kmax;
    finish_runspec(rs, opt);

    const RealVector means = expected_sfs(sm);
    ordered_json extras;
    {
        ordered_json m = ordered_json::object();
        for (int i = 1; i < opt.n; ++i) {
            m["xi" + std::to_string(i)] = means[i - 1];
        }
        extras["mean"] = m;
    }

    std::vector<std::string> cols = {"k"};
    for (int i = 1; i < opt.n; ++i) {
        cols.push_back("xi" + std::to_string(i));
    }
    w.begin(rs, extras, cols);

    std::vector<std::vector<double>> tables;
    for (int i = 1; i < opt.n; ++i) {
        tables.push_back(count_law(sm, i).statistic_pmf_table(opt.kmax));
    }
    for (long k = 0; k <= opt.kmax; ++k) {
        std::vector<ordered_json> cells;
        cells.emplace_back(k);
        for (const auto& table : tables) {
            cells.emplace_back(table[static_cast<std::size_t>(k)]);
        }
        w.row(cells);
    }
    w.finish();
}

void cmd_intweight(const Options& opt, Writer& w) {
    const SfsModel sm = make_sfs_model(opt.n, opt.theta);
    if (opt.coeffs.empty()) {
        throw ValidationError("intweight requires --coeffs");
    }
    if (opt.kmax < 0) {
        throw ValidationError("--kmax must be nonnegative");
    }
    const std::vector<long> c = to_integers(parse_coeffs(opt.coeffs));
    const IntWeightedLaw law = build_intweight_law(sm, c);

    ordered_json rs = common_runspec("intweight", opt);
    rs["theta"] = opt.theta;
    {
        std::string s;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c[i]);
        }
        rs["coeffs"] = s;
    }
    rs["kmax"] = opt.kmax;
    finish_runspec(rs, opt);

    ordered_json extras;
    extras["rows"] = law.rows();
    extras["blocks"] = static_cast<int>(law.kept_states.size());

    const std::vector<double> pmf = law.pmf_table(opt.kmax);
    const std::vector<long> support = support_scan(law, opt.kmax);
    std::vector<char> in_support(static_cast<std::size_t>(opt.kmax) + 1, 0);
    for (long k : support) {
        in_support[static_cast<std::size_t>(k)] = 1;
    }

    w.begin(rs, extras, {"k", "pmf", "in_support"});
    for (long k = 0; k <= opt.kmax; ++k) {
        w.row({ordered_json(k), ordered_json(pmf[static_cast<std::size_t>(k)]),
               ordered_json(
                   static_cast<int>(in_support[static_cast<std::size_t>(k)]))});
    }
    w.finish();
}

void cmd_estimators(const Options& opt, Writer& w) {
    const SfsModel sm = make_sfs_model(opt.n, opt.theta);
    ordered_json rs = common_runspec("estimators", opt);
    rs["theta"] = opt.theta;
    finish_runspec(rs, opt);

    std::vector<std::string> cols = {"name"};
    for (int i = 1; i < opt.n; ++i) {
        cols.push_back("c" + std::to_string(i));
    }
    cols.push_back("mean");
    cols.push_back("variance");
    w.begin(rs, ordered_json::object(), cols);

    std::vector<std::string> names = estimator_names();
    names.push_back("blue");
    for (const std::string& name : names) {
        const RealVector c = statistic_coefficients(name, sm);
        std::vector<ordered_json> cells;
        cells.emplace_back(name);
        for (Eigen::Index i = 0; i < c.size(); ++i) {
            cells.emplace_back(c[i]);
        }
        cells.emplace_back(statistic_mean(sm, c));
        cells.emplace_back(estimator_variance(sm, c));
        w.row(cells);
    }
    w.finish();
}

void cmd_neutrality_cdf(const Options& opt, Writer& w) {
    const SfsModel sm = make_sfs_model(opt.n, opt.theta);
    const RealVector c = resolve_statistic(opt, sm);

    InversionGrid grid = default_grid(sm, c);
    if (opt.grid_H > 0) {
        grid.H = opt.grid_H;
    }
    if (opt.grid_eta > 0) {
        grid.eta = opt.grid_eta;
    }
    const CdfTable table = invert_cdf(sm, c, grid);

    ordered_json rs = common_runspec("neutrality-cdf", opt);
    rs["theta"] = opt.theta;
    if (!opt.stat.empty()) {
        rs["stat"] = opt.stat;
    }
    rs["coeffs"] = join_coeffs(c);
    rs["grid_H"] = grid.H;
    rs["grid_eta"] = grid.eta;
    rs["grid_mu"] = grid.mu;
    finish_runspec(rs, opt);

    const std::vector<double> probs = {0.025, 0.05, 0.25, 0.5,
                                       0.75,  0.95, 0.975};
    const std::vector<double> qs = quantiles(table, probs);
    ordered_json extras;
    {
        ordered_json q = ordered_json::object();
        for (std::size_t i = 0; i < probs.size(); ++i) {
            char key[32];
            std::snprintf(key, sizeof(key), "%g", probs[i]);
            q[key] = qs[i];
        }
        extras["quantile"] = q;
    }

    w.begin(rs, extras, {"x", "raw", "cdf"});
    for (std::size_t i = 0; i < table.points.size(); ++i) {
        w.row({ordered_json(table.points[i]), ordered_json(table.raw[i]),
               ordered_json(table.values[i])});
    }
    w.finish();
}

void cmd_simulate(const Options& opt, Writer& w) {
    const SfsModel sm = make_sfs_model(opt.n, opt.theta == 0.0 ? 1.0 : opt.theta);
    SimConfig cfg;
    cfg.n = opt.n;
    cfg.theta = opt.theta;
    cfg.replicates = opt.reps;
    cfg.seed = opt.seed;

    ordered_json rs = common_runspec("simulate", opt);
    rs["theta"] = opt.theta;
    rs["reps"] = opt.reps;
    rs["seed"] = opt.seed;

    const bool statistic_mode = !opt.stat.empty() || !opt.coeffs.empty();
    if (statistic_mode) {
        const RealVector c = resolve_statistic(opt, sm);
        if (!opt.stat.empty()) {
            rs["stat"] = opt.stat;
        }
        rs["coeffs"] = join_coeffs(c);
        finish_runspec(rs, opt);
        w.begin(rs, ordered_json::object(), {"rep", "value"});
        const std::vector<double> values =
            simulate_statistic(sm.model, cfg, c);
        for (std::size_t i = 0; i < values.size(); ++i) {
            w.row({ordered_json(static_cast<long>(i)), ordered_json(values[i])});
        }
    } else {
        finish_runspec(rs, opt);
        std::vector<std::string> cols = {"rep"};
        for (int i = 1; i < opt.n; ++i) {
            cols.push_back("xi" + std::to_string(i));
        }
        w.begin(rs, ordered_json::object(), cols);
        simulate_sfs(sm.model, cfg, [&](long rep, const SimSample& sample) {
            std::vector<ordered_json> cells;
            cells.emplace_back(rep);
            for (long x : sample.sfs) {
                cells.emplace_back(x);
            }
            w.row(cells);
        });
    }
    w.finish();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Exact distributions of site-frequency-spectrum statistics "
                 "under the coalescent"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&](CLI::App* cmd, bool needs_theta) {
        cmd->add_option("--n", opt.n, "Sample size (number of sequences)")
            ->required();
        if (needs_theta) {
            cmd->add_option("--theta", opt.theta,
                            "Scaled mutation rate (default 1)");
        }
        cmd->add_option("--format", opt.format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", opt.out_path,
                        "Output file (default: stdout)");
        return cmd;
    };

    CLI::App* statespace =
        add_common(app.add_subcommand(
                       "statespace", "Dump the lineage-count state space"),
                   false);

    CLI::App* sfs = add_common(
        app.add_subcommand("sfs", "Marginal mutation-count distributions"),
        true);
    sfs->add_option("--kmax", opt.kmax, "Largest count tabulated (default 50)");

    CLI::App* intweight = add_common(
        app.add_subcommand("intweight",
                           "Exact law of an integer-weighted SFS statistic"),
        true);
    intweight->add_option("--coeffs", opt.coeffs,
                          "Comma-separated nonnegative integer weights");
    intweight->add_option("--kmax", opt.kmax,
                          "Largest value tabulated (default 50)");

    CLI::App* estimators = add_common(
        app.add_subcommand("estimators",
                           "Coefficients and variances of the classical "
                           "unbiased estimators and the optimal one"),
        true);

    CLI::App* ncdf = add_common(
        app.add_subcommand("neutrality-cdf",
                           "CDF of a linear SFS statistic by numerical "
                           "inversion of its characteristic function"),
        true);
    ncdf->add_option("--stat", opt.stat,
                     "Named statistic (estimator, test statistic, or blue)");
    ncdf->add_option("--coeffs", opt.coeffs,
                     "Comma-separated real coefficients");
    ncdf->add_option("--grid-H", opt.grid_H,
                     "Number of frequency samples (power of two)");
    ncdf->add_option("--grid-eta", opt.grid_eta, "Frequency step");

    CLI::App* simulate = add_common(
        app.add_subcommand("simulate",
                           "Monte Carlo samples of the SFS or of a linear "
                           "statistic"),
        true);
    simulate->add_option("--stat", opt.stat, "Named statistic to evaluate");
    simulate->add_option("--coeffs", opt.coeffs,
                         "Comma-separated real coefficients");
    simulate->add_option("--reps", opt.reps,
                         "Number of replicates (default 10000)");
    simulate->add_option("--seed", opt.seed, "Random seed (default 1)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        std::ofstream file;
        std::ostream* target = &out;
        if (!opt.out_path.empty()) {
            file.open(opt.out_path);
            if (!file) {
                throw ValidationError("--out: cannot open '" + opt.out_path +
                                      "' for writing");
            }
            target = &file;
        }
        std::unique_ptr<Writer> writer;
        if (opt.format == "json") {
            writer = std::make_unique<JsonWriter>(*target);
        } else {
            writer = std::make_unique<CsvWriter>(*target);
        }

        if (app.got_subcommand(statespace)) {
            cmd_statespace(opt, *writer);
        } else if (app.got_subcommand(sfs)) {
            cmd_sfs(opt, *writer);
        } else if (app.got_subcommand(intweight)) {
            cmd_intweight(opt, *writer);
        } else if (app.got_subcommand(estimators)) {
            cmd_estimators(opt, *writer);
        } else if (app.got_subcommand(ncdf)) {
            cmd_neutrality_cdf(opt, *writer);
        } else if (app.got_subcommand(simulate)) {
            cmd_simulate(opt, *writer);
        }
        return 0;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace phasesfs::cli

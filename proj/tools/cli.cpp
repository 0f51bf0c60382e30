#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "relbell/chsh.hpp"
#include "relbell/decoherence.hpp"
#include "relbell/errors.hpp"
#include "relbell/figures.hpp"
#include "relbell/validation.hpp"

namespace relbell::cli {

namespace {

using nlohmann::ordered_json;

struct RunConfig {
    std::string out;
    std::string format;  // empty: csv, except json for threshold
    std::uint64_t seed = 20090315;
    std::optional<double> tol;
    double k = 0.01;
    std::vector<double> w;
    std::vector<double> alpha;
    int phi_points = figures::kDefaultPhiPoints;

    // threshold
    std::string mode;

    // sample
    double theta_a = 0.0;
    double theta_b = std::numbers::pi / 3.0;
    std::uint64_t n = 1'000'000;

    // validate
    std::uint64_t mc_samples = 200'000;
    std::uint64_t sampler_shots = 100'000;
    bool corrupt = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::filesystem::path output_dir() {
    const char* env = std::getenv(kOutputDirEnv);
    return (env != nullptr && *env != '\0') ? std::filesystem::path(env) : std::filesystem::path();
}

// "-" is the report stream; relative paths land under $RELBELL_OUTPUT_DIR.
void emit(const std::string& out_flag, const std::string& default_name, std::ostream& out,
          const std::function<void(std::ostream&)>& writer) {
    const std::string target = out_flag.empty() ? default_name : out_flag;
    if (target == "-") {
        writer(out);
        return;
    }
    std::filesystem::path path(target);
    if (path.is_relative()) path = output_dir() / path;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path);
    if (!file) throw UsageError("cannot open output file " + path.string());
    writer(file);
    if (!file) throw UsageError("failed writing output file " + path.string());
}

quadrature::QuadratureConfig quadrature_config(const RunConfig& rc) {
    quadrature::QuadratureConfig cfg;
    if (rc.tol) cfg.rel_tol = *rc.tol;
    cfg.validate();
    return cfg;
}

void write_records(const RunConfig& rc, const std::string& command, std::ostream& out,
                   const std::vector<figures::SweepRecord>& records) {
    emit(rc.out, command + "." + rc.format, out, [&](std::ostream& os) {
        if (rc.format == "json") {
            figures::write_json(os, records);
        } else {
            figures::write_csv(os, records);
        }
    });
}

// Flat key/value report written either as a one-row CSV or a JSON object.
void write_record(const RunConfig& rc, const std::string& default_name, std::ostream& out,
                  const ordered_json& record) {
    emit(rc.out, default_name, out, [&](std::ostream& os) {
        if (rc.format == "json") {
            os << record.dump(2) << '\n';
            return;
        }
        std::string header, row;
        for (const auto& [key, value] : record.items()) {
            if (!header.empty()) {
                header += ',';
                row += ',';
            }
            header += key;
            if (value.is_number_float()) {
                row += figures::format_real(value.get<double>());
            } else if (value.is_string()) {
                row += value.get<std::string>();
            } else if (!value.is_null()) {
                row += value.dump();
            }
        }
        os << header << '\n' << row << '\n';
    });
}

int cmd_fig1(const RunConfig& rc, std::ostream& out) {
    if (rc.w.size() != 1) throw UsageError("fig1 takes exactly one --w");
    const std::vector<double> alphas = rc.alpha.empty() ? std::vector<double>{0.0, 0.5, 1.0, 1.39, 2.0, 3.0}
                                                        : rc.alpha;
    write_records(rc, "fig1", out,
                  figures::rapidity_sweep(rc.k, rc.w.front(), alphas, rc.phi_points, quadrature_config(rc)));
    return kSuccess;
}

int cmd_fig2(const RunConfig& rc, std::ostream& out) {
    const std::vector<double> widths = rc.w.empty() ? std::vector<double>{0.1, 0.37, 0.87, 2.0} : rc.w;
    write_records(rc, "fig2", out, figures::width_sweep(rc.k, widths, rc.phi_points, quadrature_config(rc)));
    return kSuccess;
}

int cmd_threshold(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    const double tol = rc.tol.value_or(1e-3);
    const bool rapidity = rc.mode == "rapidity";
    if (rapidity && rc.w.size() != 1) throw UsageError("threshold --mode rapidity needs exactly one --w");

    ordered_json record;
    record["mode"] = rc.mode;
    record["k"] = rc.k;
    record["w"] = rapidity ? ordered_json(rc.w.front()) : ordered_json(nullptr);

    int code = kSuccess;
    try {
        const auto result = rapidity ? chsh::threshold_rapidity(wavepacket::PacketSpec{rc.k, rc.w.front()}, tol)
                                     : chsh::threshold_width(rc.k, tol);
        record["threshold"] = result.parameter;
        record["bracket_lo"] = result.lo;
        record["bracket_hi"] = result.hi;
        record["iterations"] = result.iterations;
    } catch (const NotReachableError& e) {
        record["threshold"] = nullptr;
        record["bracket_lo"] = nullptr;
        record["bracket_hi"] = nullptr;
        record["iterations"] = 0;
        record["error"] = e.what();
        err << "relbell threshold: " << e.what() << '\n';
        code = kNumericalFailure;
    }
    write_record(rc, "threshold." + rc.format, out, record);
    return code;
}

int cmd_sample(const RunConfig& rc, std::ostream& out) {
    if (rc.w.size() != 1) throw UsageError("sample takes exactly one --w");
    if (rc.alpha.size() > 1) throw UsageError("sample takes at most one --alpha");
    if (rc.n < 1) throw UsageError("sample needs --n >= 1");
    const double alpha = rc.alpha.empty() ? 0.0 : rc.alpha.front();
    const double w = rc.w.front();

    // Both detectors recede with |alpha|, so V = W.
    const double v =
        decoherence::decoherence_factor(relkin::Rapidity{std::abs(alpha)}, wavepacket::PacketSpec{rc.k, w},
                                        quadrature_config(rc))
            .value;
    const auto state = chsh::reduced_density_matrix(v, v);
    const chsh::Direction a{rc.theta_a};
    const chsh::Direction b{rc.theta_b};
    const auto est = chsh::sample_outcomes(state, a, b, rc.n, rc.seed);
    const double prediction = chsh::pair_expectation(v, v, a, b);

    ordered_json record;
    record["alpha"] = alpha;
    record["k"] = rc.k;
    record["w"] = w;
    record["theta_a"] = rc.theta_a;
    record["theta_b"] = rc.theta_b;
    record["n"] = rc.n;
    record["seed"] = rc.seed;
    record["v"] = v;
    record["estimate"] = est.estimate;
    record["std_error"] = est.std_error;
    record["prediction"] = prediction;
    write_record(rc, "-", out, record);
    return kSuccess;
}

int cmd_validate(const RunConfig& rc, std::ostream& out) {
    validation::ValidationOptions opts;
    opts.seed = rc.seed;
    opts.mc_samples = rc.mc_samples;
    opts.sampler_shots = rc.sampler_shots;
    opts.corrupt_tolerances = rc.corrupt;
    const auto results = validation::run_validation(opts);
    validation::write_table(out, results);

    if (!rc.out.empty() && rc.out != "-") {
        emit(rc.out, rc.out, out, [&](std::ostream& os) {
            if (rc.format == "json") {
                ordered_json arr = ordered_json::array();
                for (const auto& r : results) {
                    arr.push_back({{"check", r.name},
                                   {"passed", r.passed},
                                   {"worst", r.worst},
                                   {"tolerance", r.tolerance},
                                   {"metric", r.metric}});
                }
                os << arr.dump(2) << '\n';
            } else {
                os << "check,passed,worst,tolerance,metric\n";
                for (const auto& r : results) {
                    os << r.name << ',' << (r.passed ? "true" : "false") << ',' << figures::format_real(r.worst)
                       << ',' << figures::format_real(r.tolerance) << ',' << r.metric << '\n';
                }
            }
        });
    }
    return validation::all_passed(results) ? kSuccess : kNumericalFailure;
}

void add_common(CLI::App* sub, RunConfig& rc) {
    sub->add_option("--out", rc.out, "Output path ('-' for stdout); relative paths resolve under $" +
                                         std::string(kOutputDirEnv));
    sub->add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", rc.seed, "Random seed");
    sub->add_option("--tol", rc.tol, "Tolerance (quadrature rel_tol; bisection width for threshold)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--k", rc.k, "Mean packet momentum |k|/m");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    CLI::App app{"relbell: CHSH correlations seen by relativistically moving spin detectors"};
    app.set_config("--config", "", "TOML config file; command-line flags take precedence");
    app.require_subcommand(1, 1);

    auto* fig1 = app.add_subcommand("fig1", "F(phi) curves for a list of detector rapidities");
    add_common(fig1, rc);
    fig1->add_option("--w", rc.w, "Packet width w/m")->default_str("4");
    fig1->add_option("--alpha", rc.alpha, "Detector rapidity (repeatable)")->delimiter(',');
    fig1->add_option("--phi-points", rc.phi_points, "Points on [0, 2 pi)")->check(CLI::Range(2, 1 << 24));

    auto* fig2 = app.add_subcommand("fig2", "F(phi) curves for ultra-relativistic detectors, one per width");
    add_common(fig2, rc);
    fig2->add_option("--w", rc.w, "Packet width w/m (repeatable)")->delimiter(',');
    fig2->add_option("--alpha", rc.alpha, "Ignored: the rapidity is infinite")->delimiter(',');
    fig2->add_option("--phi-points", rc.phi_points, "Points on [0, 2 pi)")->check(CLI::Range(2, 1 << 24));

    auto* threshold = app.add_subcommand("threshold", "Rapidity or width where Bell violation is lost");
    add_common(threshold, rc);
    threshold->add_option("--mode", rc.mode, "rapidity | width")
        ->required()
        ->check(CLI::IsMember({"rapidity", "width"}));
    threshold->add_option("--w", rc.w, "Packet width (rapidity mode)");
    threshold->add_option("--alpha", rc.alpha, "Ignored")->delimiter(',');

    auto* validate = app.add_subcommand("validate", "Run the numerical self-check suite");
    add_common(validate, rc);
    validate->add_option("--w", rc.w, "Ignored");
    validate->add_option("--alpha", rc.alpha, "Ignored");
    validate->add_option("--mc-samples", rc.mc_samples, "Monte Carlo samples per grid point")
        ->check(CLI::Range(std::uint64_t{1000}, std::uint64_t{1} << 40));
    validate->add_option("--sampler-shots", rc.sampler_shots, "Outcome draws per sampler check")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
    validate->add_flag("--debug-corrupt-tolerance", rc.corrupt, "Negate every tolerance (must fail)");

    auto* sample = app.add_subcommand("sample", "Simulate spin-correlation measurements");
    add_common(sample, rc);
    sample->add_option("--w", rc.w, "Packet width w/m")->default_str("4");
    sample->add_option("--alpha", rc.alpha, "Detector rapidity");
    sample->add_option("--theta-a", rc.theta_a, "Direction angle for particle A");
    sample->add_option("--theta-b", rc.theta_b, "Direction angle for particle B");
    sample->add_option("--n", rc.n, "Number of measured pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInvalidArguments;
    }

    if (rc.format.empty()) rc.format = threshold->parsed() ? "json" : "csv";
    if ((fig1->parsed() || sample->parsed()) && rc.w.empty()) rc.w = {4.0};

    try {
        if (fig1->parsed()) return cmd_fig1(rc, out);
        if (fig2->parsed()) return cmd_fig2(rc, out);
        if (threshold->parsed()) return cmd_threshold(rc, out, err);
        if (validate->parsed()) return cmd_validate(rc, out);
        if (sample->parsed()) return cmd_sample(rc, out);
    } catch (const UsageError& e) {
        err << "relbell: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const DomainError& e) {
        err << "relbell: invalid argument: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const ConvergenceError& e) {
        err << "relbell: " << e.what() << fmt::format(" (best estimate {:.17g}, residual {:.3e})", e.best_estimate(),
                                                      e.residual())
            << '\n';
        return kNumericalFailure;
    } catch (const std::exception& e) {
        err << "relbell: numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kInvalidArguments;
}

}  // namespace relbell::cli

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "prbh/channel.hpp"
#include "prbh/density.hpp"
#include "prbh/fading.hpp"
#include "prbh/io.hpp"
#include "prbh/states.hpp"
#include "prbh/summation.hpp"

namespace prbh::cli {

using ordered_json = nlohmann::ordered_json;

std::filesystem::path resolve_output(const RunConfig& cfg, const std::string& command) {
    if (!cfg.output.empty()) {
        return std::filesystem::path(cfg.output);
    }
    return default_output_dir() / (command + "." + cfg.format);
}

namespace {

bool wants_json(const RunConfig& cfg) { return cfg.format == "json"; }

void write_json(const std::filesystem::path& path, const ordered_json& doc) {
    write_text_atomic(path, doc.dump(2) + "\n");
}

// Deterministic worker-per-stream Monte Carlo: worker w draws its slice
// from RngStream(seed, stream_base + w); slices are merged in stream order,
// so the output is independent of scheduling.
template <typename T, typename Gen>
std::vector<T> parallel_generate(long trials, int parallel, std::uint64_t seed,
                                 std::uint64_t stream_base, Gen gen) {
    std::vector<T> values(static_cast<std::size_t>(trials));
    const int workers = std::max(1, parallel);
    auto run_slice = [&](int w) {
        const long begin = trials * w / workers;
        const long end = trials * (w + 1) / workers;
        RngStream rng(seed, stream_base + static_cast<std::uint64_t>(w));
        for (long i = begin; i < end; ++i) {
            values[static_cast<std::size_t>(i)] = gen(rng);
        }
    };
    if (workers == 1) {
        run_slice(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(run_slice, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    return values;
}

// Stream id blocks per batch kind, so batches stay independent no matter
// how many workers split each of them.
constexpr std::uint64_t kGaussianStreams = 0;
constexpr std::uint64_t kPhasorStreams = 1024;
constexpr std::uint64_t kGammaStreams = 2048;

}  // namespace

int cmd_pn(const RunConfig& cfg, std::ostream& out) {
    const MassIndicator z(cfg.z);
    const ClonerDistribution dist = build_distribution(z, cfg.tail_tol);
    KahanAccumulator sum;
    for (double p : dist.probs) {
        sum.add(p);
    }
    sum.add(dist.tail_mass);

    const auto path = resolve_output(cfg, "pn");
    if (wants_json(cfg)) {
        ordered_json doc;
        doc["command"] = "pn";
        doc["z"] = cfg.z;
        doc["tail_tol"] = cfg.tail_tol;
        doc["n_max"] = dist.n_max;
        doc["p_N"] = dist.probs;
        doc["tail_mass"] = dist.tail_mass;
        write_json(path, doc);
    } else {
        CsvWriter csv({"N", "p_N"});
        for (int n = 1; n <= dist.n_max; ++n) {
            csv.add_row({std::to_string(n),
                         format_double(dist.probs[static_cast<std::size_t>(n - 1)])});
        }
        csv.add_row({"tail", format_double(dist.tail_mass)});
        write_text_atomic(path, csv.str());
    }
    out << "pn: z=" << format_double(cfg.z) << " n_max=" << dist.n_max
        << " sum+tail=" << format_double(sum.value()) << " -> " << path.string() << "\n";
    return kOk;
}

int cmd_capacity(const RunConfig& cfg, std::ostream& out) {
    const MassIndicator z(cfg.z);
    const CapacityResult cap = quantum_capacity_detailed(z, cfg.tail_tol);

    const auto path = resolve_output(cfg, "capacity");
    if (wants_json(cfg)) {
        ordered_json doc;
        doc["command"] = "capacity";
        doc["z"] = cfg.z;
        doc["tail_tol"] = cfg.tail_tol;
        doc["value"] = cap.value;
        doc["n_terms"] = cap.n_terms;
        doc["tail_bound"] = cap.tail_bound;
        write_json(path, doc);
    } else {
        CsvWriter csv({"z", "value", "n_terms", "tail_bound"});
        csv.add_row({format_double(cfg.z), format_double(cap.value),
                     std::to_string(cap.n_terms), format_double(cap.tail_bound)});
        write_text_atomic(path, csv.str());
    }
    out << "capacity: z=" << format_double(cfg.z) << " Q=" << format_double(cap.value)
        << " terms=" << cap.n_terms << " -> " << path.string() << "\n";
    return kOk;
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out) {
    const MassIndicator z(cfg.z);
    const BlochVector n =
        cfg.mixed ? BlochVector::mixed() : BlochVector::unit(cfg.nx, cfg.ny, cfg.nz);
    const BlockDensityMatrix state = channel_apply(n, z, cfg.tail_tol);

    std::vector<Eigen::VectorXd> spectra;
    spectra.reserve(state.blocks.size());
    for (const auto& b : state.blocks) {
        // every block is tridiagonal in the Jz eigenbasis
        spectra.push_back(tridiagonal_hermitian_eigenvalues(b.block));
    }

    const auto path = resolve_output(cfg, "evolve");
    if (wants_json(cfg)) {
        ordered_json doc;
        doc["command"] = "evolve";
        doc["z"] = cfg.z;
        doc["bloch"] = {n.nx(), n.ny(), n.nz()};
        doc["tail_tol"] = cfg.tail_tol;
        ordered_json blocks = ordered_json::array();
        for (std::size_t i = 0; i < state.blocks.size(); ++i) {
            const auto& b = state.blocks[i];
            ordered_json jb;
            jb["k"] = b.k;
            jb["dim"] = static_cast<int>(b.block.rows());
            jb["weight"] = b.weight;
            jb["eigenvalues"] =
                std::vector<double>(spectra[i].data(), spectra[i].data() + spectra[i].size());
            blocks.push_back(std::move(jb));
        }
        doc["blocks"] = std::move(blocks);
        doc["tail_mass"] = state.tail_mass;
        doc["total_weight"] = state.total_weight();
        write_json(path, doc);
    } else {
        CsvWriter csv({"k", "dim", "weight", "eig_index", "eigenvalue"});
        for (std::size_t i = 0; i < state.blocks.size(); ++i) {
            const auto& b = state.blocks[i];
            for (Eigen::Index e = 0; e < spectra[i].size(); ++e) {
                csv.add_row({std::to_string(b.k), std::to_string(b.block.rows()),
                             format_double(b.weight), std::to_string(e),
                             format_double(spectra[i](e))});
            }
        }
        csv.add_row({"tail", "0", format_double(state.tail_mass), "0", "0"});
        write_text_atomic(path, csv.str());
    }
    out << "evolve: z=" << format_double(cfg.z) << " blocks=" << state.blocks.size()
        << " total_weight=" << format_double(state.total_weight()) << " -> "
        << path.string() << "\n";
    return kOk;
}

int cmd_density(const RunConfig& cfg, std::ostream& out) {
    const DensityCurve curve = density_curve(cfg.n, cfg.steps, cfg.rate);
    const double distance = fit_distance(cfg.n, cfg.steps, cfg.rate);
    const std::size_t mode_index = static_cast<std::size_t>(
        std::max_element(curve.f.begin(), curve.f.end()) - curve.f.begin());

    const auto path = resolve_output(cfg, "density");
    if (wants_json(cfg)) {
        ordered_json doc;
        doc["command"] = "density";
        doc["N"] = cfg.n;
        doc["steps"] = cfg.steps;
        doc["rate"] = cfg.rate;
        doc["mode_z"] = curve.z[mode_index];
        doc["fit_distance"] = distance;
        doc["z"] = curve.z;
        doc["f"] = curve.f;
        write_json(path, doc);
    } else {
        CsvWriter csv({"z", "f"});
        for (std::size_t i = 0; i < curve.z.size(); ++i) {
            csv.add_row({format_double(curve.z[i]), format_double(curve.f[i])});
        }
        write_text_atomic(path, csv.str());
    }
    if (cfg.gnuplot && !wants_json(cfg)) {
        std::filesystem::path script = path;
        script.replace_extension(".gp");
        std::string gp;
        gp += "set datafile separator ','\n";
        gp += "set xlabel 'z'\n";
        gp += "set ylabel 'f_N(z)'\n";
        gp += "plot '" + path.filename().string() + "' every ::1 using 1:2 with lines title 'N=" +
              std::to_string(cfg.n) + "'\n";
        write_text_atomic(script, gp);
    }
    out << "density: N=" << cfg.n << " steps=" << cfg.steps
        << " mode_z=" << format_double(curve.z[mode_index])
        << " fit_distance=" << format_double(distance) << " -> " << path.string() << "\n";
    return kOk;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
    if (cfg.trials < 100) {
        throw std::invalid_argument("sample needs at least 100 trials");
    }
    if (cfg.parallel < 1 || cfg.parallel > 1024) {
        throw std::invalid_argument("parallel worker count must lie in [1, 1024]");
    }
    const RayleighConvention conv = cfg.per_component_rayleigh
                                        ? RayleighConvention::per_component
                                        : RayleighConvention::total_power;

    const auto magnitudes = parallel_generate<double>(
        cfg.trials, cfg.parallel, cfg.seed, kGaussianStreams,
        [&](RngStream& rng) { return std::abs(sample_complex_gaussian(cfg.sigma2, rng)); });
    std::vector<double> squared(magnitudes.size());
    std::transform(magnitudes.begin(), magnitudes.end(), squared.begin(),
                   [](double m) { return m * m; });

    const auto phasors = parallel_generate<ComplexSample>(
        cfg.trials, cfg.parallel, cfg.seed, kPhasorStreams,
        [&](RngStream& rng) { return sample_phasor_sum(cfg.j, cfg.sigma2, rng); });
    std::vector<double> phasor_re(phasors.size());
    std::vector<double> phasor_im(phasors.size());
    std::transform(phasors.begin(), phasors.end(), phasor_re.begin(),
                   [](ComplexSample w) { return w.real(); });
    std::transform(phasors.begin(), phasors.end(), phasor_im.begin(),
                   [](ComplexSample w) { return w.imag(); });

    const auto gamma_sums = parallel_generate<double>(
        cfg.trials, cfg.parallel, cfg.seed, kGammaStreams, [&](RngStream& rng) {
            double s = 0.0;
            for (int i = 0; i < cfg.gamma_shape; ++i) {
                s += std::norm(sample_complex_gaussian(cfg.sigma2, rng));
            }
            return s;
        });

    struct Row {
        const char* batch;
        SampleBatch data;
    };
    std::vector<Row> rows;
    rows.push_back({"magnitude", make_batch(magnitudes,
                                            FitModel::rayleigh(cfg.sigma2, conv), cfg.sigma2)});
    rows.push_back({"magnitude_sq",
                    make_batch(squared, FitModel::exponential(cfg.sigma2), cfg.sigma2)});
    rows.push_back({"phasor_re", make_batch(phasor_re,
                                            FitModel::normal(0.0, 0.5 * cfg.sigma2), cfg.sigma2)});
    rows.push_back({"phasor_im", make_batch(phasor_im,
                                            FitModel::normal(0.0, 0.5 * cfg.sigma2), cfg.sigma2)});
    rows.push_back({"gamma_sum", make_batch(gamma_sums,
                                            FitModel::gamma(cfg.gamma_shape, cfg.sigma2), cfg.sigma2)});

    const double critical = ks_critical_value(static_cast<std::size_t>(cfg.trials), 0.01);
    const auto path = resolve_output(cfg, "sample");
    if (wants_json(cfg)) {
        ordered_json doc;
        doc["command"] = "sample";
        doc["trials"] = cfg.trials;
        doc["seed"] = cfg.seed;
        doc["sigma2"] = cfg.sigma2;
        doc["j"] = cfg.j;
        doc["N"] = cfg.gamma_shape;
        doc["parallel"] = cfg.parallel;
        doc["critical_value_1pct"] = critical;
        ordered_json batches = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json jb;
            jb["batch"] = r.batch;
            jb["model"] = r.data.model.name();
            jb["n"] = r.data.values.size();
            jb["ks_statistic"] = r.data.ks_statistic;
            jb["pass"] = r.data.ks_statistic < critical;
            batches.push_back(std::move(jb));
        }
        doc["batches"] = std::move(batches);
        write_json(path, doc);
    } else {
        CsvWriter csv({"batch", "model", "n", "sigma2", "ks_statistic",
                       "critical_value_1pct", "pass"});
        for (const auto& r : rows) {
            csv.add_row({r.batch, r.data.model.name(), std::to_string(r.data.values.size()),
                         format_double(cfg.sigma2), format_double(r.data.ks_statistic),
                         format_double(critical), r.data.ks_statistic < critical ? "1" : "0"});
        }
        write_text_atomic(path, csv.str());
    }
    for (const auto& r : rows) {
        out << "sample: " << r.batch << " vs " << r.data.model.name()
            << " ks=" << format_double(r.data.ks_statistic)
            << " crit=" << format_double(critical)
            << (r.data.ks_statistic < critical ? " pass" : " FAIL") << "\n";
    }
    out << "sample: -> " << path.string() << "\n";
    return kOk;
}

}  // namespace prbh::cli

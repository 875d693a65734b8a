#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "prbh/channel.hpp"

namespace {

using prbh::cli::RunConfig;

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--tail-tol", cfg.tail_tol, "Certified series tail tolerance")
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "Random stream seed")->capture_default_str();
    cmd->add_option("--output,-o", cfg.output,
                    "Output file (default $PRBH_OUTPUT_DIR/<command>.<format>)");
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator for the perfectly reflecting black-hole quantum channel"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* pn = app.add_subcommand(
        "pn", "Cloner probabilities p_N with a certified truncation tail");
    pn->add_option("--z", cfg.z, "Mass indicator, 0 <= z < 1")->capture_default_str();
    add_common_options(pn, cfg);

    auto* capacity =
        app.add_subcommand("capacity", "Quantum capacity of the channel at z");
    capacity->add_option("--z", cfg.z, "Mass indicator, 0 <= z < 1")->capture_default_str();
    add_common_options(capacity, cfg);

    auto* evolve = app.add_subcommand(
        "evolve", "Block density matrix of the channel output for a qubit input");
    evolve->add_option("--z", cfg.z, "Mass indicator, 0 <= z < 1")->capture_default_str();
    evolve->add_option("--nx", cfg.nx, "Bloch x component")->capture_default_str();
    evolve->add_option("--ny", cfg.ny, "Bloch y component")->capture_default_str();
    evolve->add_option("--nz", cfg.nz, "Bloch z component")->capture_default_str();
    evolve->add_flag("--mixed", cfg.mixed, "Use the maximally mixed input");
    add_common_options(evolve, cfg);

    auto* density = app.add_subcommand(
        "density", "Closed-form cloner-number density curve f_N over the z grid");
    density->add_option("--N", cfg.n, "Curve index N >= 1")->capture_default_str();
    density->add_option("--steps", cfg.steps, "Grid points on [0, 1)")->capture_default_str();
    density->add_option("--rate", cfg.rate, "Density rate constant")->capture_default_str();
    density->add_flag("--gnuplot", cfg.gnuplot, "Also emit a gnuplot script (csv only)");
    add_common_options(density, cfg);

    auto* sample = app.add_subcommand(
        "sample", "Seeded Monte Carlo batches with KS fit statistics");
    sample->add_option("--trials", cfg.trials, "Draws per batch")->capture_default_str();
    sample->add_option("--sigma2", cfg.sigma2, "Total power E|w|^2")->capture_default_str();
    sample->add_option("--j", cfg.j, "Phasor count per sum")->capture_default_str();
    sample->add_option("--N", cfg.gamma_shape, "Gamma batch shape")->capture_default_str();
    sample->add_option("--parallel", cfg.parallel, "Worker streams")->capture_default_str();
    sample->add_flag("--per-component-rayleigh", cfg.per_component_rayleigh,
                     "Fit |w| with the per-component sigma2 reading instead of E|w|^2");
    add_common_options(sample, cfg);

    auto* verify = app.add_subcommand(
        "verify", "Run the full invariant suite; nonzero exit on any failure");
    verify->add_option("--z", cfg.z, "Mass indicator, 0 <= z < 1")->capture_default_str();
    verify->add_option("--trials", cfg.trials, "Draws per statistical check")
        ->capture_default_str();
    verify->add_option("--sigma2", cfg.sigma2, "Total power E|w|^2")->capture_default_str();
    verify->add_option("--steps", cfg.steps, "Density grid points")->capture_default_str();
    add_common_options(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return prbh::cli::kUsageError;
    }

    try {
        if (pn->parsed()) return prbh::cli::cmd_pn(cfg, std::cout);
        if (capacity->parsed()) return prbh::cli::cmd_capacity(cfg, std::cout);
        if (evolve->parsed()) return prbh::cli::cmd_evolve(cfg, std::cout);
        if (density->parsed()) return prbh::cli::cmd_density(cfg, std::cout);
        if (sample->parsed()) return prbh::cli::cmd_sample(cfg, std::cout);
        if (verify->parsed()) return prbh::cli::cmd_verify(cfg, std::cout);
    } catch (const prbh::TruncationCapError& e) {
        std::cerr << "prbh: " << e.what() << "\n";
        return prbh::cli::kNumericError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "prbh: " << e.what() << "\n";
        return prbh::cli::kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "prbh: " << e.what() << "\n";
        return prbh::cli::kNumericError;
    }
    return prbh::cli::kUsageError;
}

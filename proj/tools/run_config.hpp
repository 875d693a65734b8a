#pragma once

#include <cstdint>
#include <string>

namespace prbh::cli {

enum ExitCode : int {
    kOk = 0,
    kUsageError = 2,
    kNumericError = 3,
    kVerificationFailure = 4,
};

// Flag set shared by all subcommands; each field defaults to the documented
// value and maps directly onto the preconditions of the dispatched
// operation.
struct RunConfig {
    double z = 0.5;
    int n = 3;             // density curve index N
    int gamma_shape = 4;   // sample batch shape N
    int steps = 200;       // density grid size
    double tail_tol = 1e-9;
    long trials = 100000;
    std::uint64_t seed = 42;
    double sigma2 = 1.0;
    int j = 8;             // phasor count for sample
    int parallel = 1;      // Monte Carlo workers, one rng stream each
    double rate = 10.0;    // density rate constant
    double nx = 0.0, ny = 0.0, nz = 1.0;
    bool mixed = false;    // maximally mixed input for evolve
    std::string output;    // empty -> $PRBH_OUTPUT_DIR/<command>.<format>
    std::string format = "csv";
    bool gnuplot = false;
    bool per_component_rayleigh = false;
};

}  // namespace prbh::cli

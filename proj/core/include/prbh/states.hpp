#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "prbh/channel.hpp"

namespace prbh {

using Matrix = Eigen::MatrixXcd;

// Direction of a pure qubit input rho = (I + n.sigma)/2. The zero vector is
// the dedicated representation of the maximally mixed input.
class BlochVector {
public:
    // Requires nx^2 + ny^2 + nz^2 = 1 within 1e-12.
    static BlochVector unit(double nx, double ny, double nz);
    static BlochVector mixed() { return BlochVector(0.0, 0.0, 0.0); }

    double nx() const { return nx_; }
    double ny() const { return ny_; }
    double nz() const { return nz_; }
    bool is_mixed() const { return nx_ == 0.0 && ny_ == 0.0 && nz_ == 0.0; }

private:
    BlochVector(double nx, double ny, double nz) : nx_(nx), ny_(ny), nz_(nz) {}
    double nx_, ny_, nz_;
};

// Angular-momentum generators of the dim-dimensional irreducible
// representation, j = (dim-1)/2, in the basis where Jz = diag(j, ..., -j).
struct SpinGenerators {
    int dim = 0;
    Matrix jx, jy, jz;
};

SpinGenerators su2_generators(int dim);

// xi_k = (k+1)/2 I + n.J on the (k+2)-dimensional block. Hermitian,
// positive semidefinite, trace (k+1)(k+2)/2, spectrum {0, 1, ..., k+1}.
Matrix xi_block(int k, const BlochVector& n);

// Fixed output state of the 1->N cloner: diagonal with entries
// 2k / (N(N+1)) for k = 0..N. Unit trace by construction.
Matrix cloner_output(int n);

struct WeightedBlock {
    int k = 0;       // block index; the matrix is (k+2) x (k+2) for channel
                     // outputs, (k+1) x (k+1) for environment states
    double weight = 0.0;
    Matrix block;    // stored unit-trace; the weight carries the probability
};

// Direct-sum state: one Hermitian PSD block per retained index plus the
// certified mass of all truncated blocks.
struct BlockDensityMatrix {
    std::vector<WeightedBlock> blocks;
    double tail_mass = 0.0;

    // Sum of block weights plus tail mass; equals 1 up to rounding.
    double total_weight() const;
};

// Full channel action on a qubit input: block k carries weight
// (1-z)^3 z^k (k+1)(k+2)/2 == p_{k+1} and the normalized xi_k block.
BlockDensityMatrix channel_apply(const BlochVector& n, MassIndicator z,
                                 double tail_tol, int term_cap = kDefaultTermCap);

// Output and environment states for the maximally mixed input. Both are
// direct sums of scaled identities; block k of the output lives in dimension
// k+2, block k of the environment in dimension k+1, and both carry p_{k+1}.
std::pair<BlockDensityMatrix, BlockDensityMatrix> mixed_input_outputs(
    MassIndicator z, double tail_tol, int term_cap = kDefaultTermCap);

// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

// Eigenvalues of a Hermitian tridiagonal matrix, ascending, in O(dim^2).
// Every xi block is tridiagonal in the Jz eigenbasis, so channel outputs can
// be spectrally checked without a dense solve.
Eigen::VectorXd tridiagonal_hermitian_eigenvalues(const Matrix& m);

}  // namespace prbh

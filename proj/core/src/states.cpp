#include "prbh/states.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "prbh/summation.hpp"

namespace prbh {

BlochVector BlochVector::unit(double nx, double ny, double nz) {
    if (!std::isfinite(nx) || !std::isfinite(ny) || !std::isfinite(nz)) {
        throw std::invalid_argument("Bloch components must be finite");
    }
    const double norm2 = nx * nx + ny * ny + nz * nz;
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw std::invalid_argument("Bloch vector must have unit norm within 1e-12");
    }
    return BlochVector(nx, ny, nz);
}

SpinGenerators su2_generators(int dim) {
    if (dim < 2) {
        throw std::invalid_argument("SU(2) representation dimension must be >= 2");
    }
    const double j = 0.5 * (dim - 1);
    Matrix jp = Matrix::Zero(dim, dim);  // raising operator
    Matrix jz = Matrix::Zero(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const double m = j - r;  // row r holds |j, m>
        jz(r, r) = m;
        if (r > 0) {
            jp(r - 1, r) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
        }
    }
    const Matrix jm = jp.adjoint();
    SpinGenerators g;
    g.dim = dim;
    g.jx = 0.5 * (jp + jm);
    g.jy = std::complex<double>(0.0, -0.5) * (jp - jm);
    g.jz = std::move(jz);
    return g;
}

namespace {

// (k+1)/2 I + n.J is tridiagonal in the Jz eigenbasis; writing the ladder
// couplings directly avoids building three dense generators per block,
// which would dominate large channel sweeps. scale multiplies every entry,
// so callers can produce the unit-trace block in the same pass.
Matrix scaled_xi_block(int k, const BlochVector& n, double scale) {
    const int dim = k + 2;
    const double j = 0.5 * (k + 1);
    const std::complex<double> upper =
        0.5 * scale * std::complex<double>(n.nx(), -n.ny());
    Matrix xi = Matrix::Zero(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const double m = j - r;
        xi(r, r) = scale * (0.5 * (k + 1.0) + n.nz() * m);
        if (r > 0) {
            const double c = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
            xi(r - 1, r) = upper * c;
            xi(r, r - 1) = std::conj(upper) * c;
        }
    }
    return xi;
}

}  // namespace

Matrix xi_block(int k, const BlochVector& n) {
    if (k < 0) {
        throw std::invalid_argument("block index k must be >= 0");
    }
    return scaled_xi_block(k, n, 1.0);
}

Matrix cloner_output(int n) {
    if (n < 1) {
        throw std::invalid_argument("cloner index N must be >= 1");
    }
    // sum_{k=0..N} k = N(N+1)/2 cancels the prefactor, giving unit trace.
    const double norm = 2.0 / (static_cast<double>(n) * (n + 1.0));
    Matrix out = Matrix::Zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
        out(k, k) = norm * k;
    }
    return out;
}

double BlockDensityMatrix::total_weight() const {
    KahanAccumulator sum;
    for (const auto& b : blocks) {
        sum.add(b.weight);
    }
    sum.add(tail_mass);
    return sum.value();
}

BlockDensityMatrix channel_apply(const BlochVector& n, MassIndicator z,
                                 double tail_tol, int term_cap) {
    const ClonerDistribution dist = build_distribution(z, tail_tol, term_cap);
    BlockDensityMatrix out;
    out.tail_mass = dist.tail_mass;
    out.blocks.reserve(static_cast<std::size_t>(dist.n_max));
    for (int k = 0; k < dist.n_max; ++k) {
        const double trace = 0.5 * (k + 1.0) * (k + 2.0);
        WeightedBlock b;
        b.k = k;
        b.weight = dist.probs[static_cast<std::size_t>(k)];  // p_{k+1}, bit-identical
        b.block = scaled_xi_block(k, n, 1.0 / trace);
        out.blocks.push_back(std::move(b));
    }
    return out;
}

std::pair<BlockDensityMatrix, BlockDensityMatrix> mixed_input_outputs(
    MassIndicator z, double tail_tol, int term_cap) {
    const ClonerDistribution dist = build_distribution(z, tail_tol, term_cap);
    BlockDensityMatrix output;
    BlockDensityMatrix environment;
    output.tail_mass = dist.tail_mass;
    environment.tail_mass = dist.tail_mass;
    for (int k = 0; k < dist.n_max; ++k) {
        const double w = dist.probs[static_cast<std::size_t>(k)];
        // T_k S_k (k+2) and T_k S~_k (k+1) both reduce to p_{k+1}.
        output.blocks.push_back(
            {k, w, Matrix::Identity(k + 2, k + 2) / (k + 2.0)});
        environment.blocks.push_back(
            {k, w, Matrix::Identity(k + 1, k + 1) / (k + 1.0)});
    }
    return {std::move(output), std::move(environment)};
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigensolver failed to converge");
    }
    return solver.eigenvalues();
}

Eigen::VectorXd tridiagonal_hermitian_eigenvalues(const Matrix& m) {
    const Eigen::Index dim = m.rows();
    // A diagonal phase similarity turns Hermitian tridiagonal into real
    // symmetric tridiagonal with |subdiagonal| couplings; spectra agree.
    Eigen::VectorXd diag(dim);
    Eigen::VectorXd subdiag(dim > 0 ? dim - 1 : 0);
    for (Eigen::Index i = 0; i < dim; ++i) {
        diag(i) = m(i, i).real();
        if (i + 1 < dim) {
            subdiag(i) = std::abs(m(i + 1, i));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, subdiag, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("tridiagonal eigensolver failed to converge");
    }
    return solver.eigenvalues();
}

}  // namespace prbh

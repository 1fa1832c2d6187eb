// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file density_matrix.hpp
 * @brief Hermitian density matrices and pure bipartite states.
 *
 * A DensityMatrix is always Hermitian. It is either a physical state
 * (unit trace, positive semidefinite) or a "raw" matrix: unnormalized
 * spin-matrix constructions, partial transposes and other Hermitian
 * operators that still need diagnostics.
 */

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace sqent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
/// Most negative eigenvalue accepted for a physical state.
inline constexpr double kPsdTol = 1e-10;
/// Eigenvalues in (-kClampTol, 0) are clamped to zero inside entropies.
inline constexpr double kClampTol = 1e-8;

class DensityMatrix {
public:
    enum class Kind { state, raw };

    /// Validates squareness and Hermiticity; `state` also demands unit
    /// trace and min eigenvalue >= -kPsdTol.
    explicit DensityMatrix(ComplexMatrix entries, Kind kind = Kind::state);

    static DensityMatrix raw(ComplexMatrix entries) { return DensityMatrix(std::move(entries), Kind::raw); }
    static DensityMatrix projector(const ComplexVector& psi);
    static DensityMatrix maximally_mixed(int dim);

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(entries_.rows()); }
    [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return entries_; }
    [[nodiscard]] Complex operator()(int row, int col) const { return entries_(row, col); }

    [[nodiscard]] bool is_normalized() const noexcept { return normalized_; }
    [[nodiscard]] bool is_raw() const noexcept { return kind_ == Kind::raw; }
    [[nodiscard]] Kind kind() const noexcept { return kind_; }

    [[nodiscard]] double trace() const;
    [[nodiscard]] double purity() const;

    /// Ascending eigenvalues of (M + M^dagger)/2.
    [[nodiscard]] RealVector eigenvalues() const;
    [[nodiscard]] double min_eigenvalue() const;

    /// Divides by the trace. The result keeps the raw flag: normalizing a
    /// partial transpose does not make it a state.
    [[nodiscard]] DensityMatrix normalized() const;

    /// Normalizes and re-validates as a physical state.
    [[nodiscard]] DensityMatrix to_state() const;

private:
    ComplexMatrix entries_;
    Kind kind_;
    bool normalized_ = false;
};

/// Pure state on C^d1 (x) C^d2 stored as a d1 x d2 amplitude matrix.
class PureBipartiteState {
public:
    explicit PureBipartiteState(ComplexMatrix amplitudes);

    /// Row-major reshape of a flat vector of length d1*d2.
    static PureBipartiteState from_vector(const ComplexVector& psi, int d1, int d2);

    [[nodiscard]] int left_dim() const noexcept { return static_cast<int>(amplitudes_.rows()); }
    [[nodiscard]] int right_dim() const noexcept { return static_cast<int>(amplitudes_.cols()); }
    [[nodiscard]] const ComplexMatrix& amplitudes() const noexcept { return amplitudes_; }

    [[nodiscard]] double norm_squared() const { return amplitudes_.squaredNorm(); }
    [[nodiscard]] PureBipartiteState normalized() const;

    /// Flat row-major amplitude vector (left index most significant).
    [[nodiscard]] ComplexVector vector() const;

    /// Reduced state of the left (0) or right (1) factor of the normalized state.
    [[nodiscard]] DensityMatrix reduced_state(int keep) const;

private:
    ComplexMatrix amplitudes_;
};

} // namespace sqent

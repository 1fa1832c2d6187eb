// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock_oracle.hpp
 * @brief Brute-force bosonic Fock space truncated at N quanta per mode.
 *
 * Used as an independent check of the closed forms in mode_transform.
 * Basis states |n_1, ..., n_M> are ordered with mode 0 most significant,
 * i.e. the Kronecker order a_0 (x) I (x) ... (x) I.
 */

#pragma once

#include <span>
#include <vector>

#include <Eigen/SparseCore>

#include <sqent/density_matrix.hpp>
#include <sqent/mode_transform.hpp>

namespace sqent::fock {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr long kDefaultMaxRows = 20000;

class LadderOperatorSet {
public:
    LadderOperatorSet(int modes, int cutoff, std::vector<SparseMatrix> annihilators);

    [[nodiscard]] int modes() const noexcept { return modes_; }
    [[nodiscard]] int cutoff() const noexcept { return cutoff_; }
    [[nodiscard]] long dim() const noexcept { return dim_; }

    [[nodiscard]] const SparseMatrix& annihilation(int mode) const;
    [[nodiscard]] SparseMatrix creation(int mode) const;
    /// a^dagger a for one mode.
    [[nodiscard]] SparseMatrix number(int mode) const;
    /// [a_i, a_j^dagger] in the truncated space.
    [[nodiscard]] SparseMatrix commutator(int i, int j) const;

    /// Mixed-radix occupation tuple of a basis index.
    [[nodiscard]] std::vector<int> occupations(long index) const;

private:
    int modes_;
    int cutoff_;
    long dim_;
    std::vector<SparseMatrix> annihilators_;
};

/// Number-basis ladder matrices with sqrt(n) elements. Throws ResourceError
/// when (cutoff + 1)^modes exceeds `max_rows`.
[[nodiscard]] LadderOperatorSet build_ladder(int modes, int cutoff, long max_rows = kDefaultMaxRows);

struct TruncatedFockState {
    int modes = 0;
    int cutoff = 0;
    ComplexVector amplitudes;
    /// sum_m ||b_m psi||^2 evaluated with one extra occupation level, so the
    /// truncation boundary is visible. Zero only for exact vacua.
    double residual = 0.0;
    /// Lowest eigenvalue of sum_m b_m^dagger b_m in the truncated space.
    double min_eigenvalue = 0.0;
    /// Gap to the next eigenvalue.
    double spectral_gap = 0.0;
    /// Probability on basis states with any occupation above cutoff - 2;
    /// doubles as the truncation-error estimate.
    double tail_mass = 0.0;

    /// Embeds a two-mode amplitude matrix (rows: mode 0, cols: mode 1).
    static TruncatedFockState from_two_mode(const PureBipartiteState& psi);
};

/// Mass on occupations above cutoff - 2.
[[nodiscard]] double tail_mass(const ComplexVector& amplitudes, int modes, int cutoff);

struct VacuumOptions {
    /// Tail mass above which numeric_vacuum throws TruncationError.
    double max_tail_mass = 1e-6;
    /// Minimal spectral gap; smaller gaps throw AmbiguityError.
    double min_gap = 1e-6;
    double canonical_tol = modes::kDefaultCanonicalTol;
};

/// Unit vector minimizing sum_m ||b_m psi||^2, found as the lowest
/// eigenvector of sum_m b_m^dagger b_m. Phase fixed so the largest
/// amplitude is real and positive.
[[nodiscard]] TruncatedFockState numeric_vacuum(const LadderOperatorSet& ops, const modes::BogoliubovMap& map,
                                                const VacuumOptions& options = {});

/// <psi|O|psi>.
[[nodiscard]] Complex expectation(const LadderOperatorSet& ops, const TruncatedFockState& state,
                                  const SparseMatrix& observable);

/// Schmidt entropy between the modes in `left_modes` and the rest.
[[nodiscard]] double bipartition_entropy(const TruncatedFockState& state, std::span<const int> left_modes);

} // namespace sqent::fock

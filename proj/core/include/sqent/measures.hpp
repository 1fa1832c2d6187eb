// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file measures.hpp
 * @brief Entanglement and correlation measures. All entropies are in nats.
 */

#pragma once

#include <span>

#include <sqent/density_matrix.hpp>

namespace sqent::measures {

/// Factorization of a dimension into two tensor factors.
struct Bipartition {
    int left;
    int right;
};

enum class Subsystem { first, second };

/// -sum p ln p over a probability vector; 0 ln 0 = 0. Entries in
/// (-kClampTol, 0) are clamped, more negative entries throw NotAStateError.
[[nodiscard]] double shannon_entropy(std::span<const double> probabilities);

/// Binary entropy h(x) in nats.
[[nodiscard]] double binary_entropy(double x);

/// Requires a normalized Hermitian input.
[[nodiscard]] double von_neumann_entropy(const DensityMatrix& rho);

/// Entropy of the squared singular values of the amplitude matrix, after
/// rescaling them to unit sum. Zero states throw ValidationError.
[[nodiscard]] double schmidt_entropy(const PureBipartiteState& psi);

/// Transposes the indices of one tensor factor. Always returns a raw matrix.
[[nodiscard]] DensityMatrix partial_transpose(const DensityMatrix& rho, Bipartition dims, Subsystem which);

/// Smallest eigenvalue of the partial transpose.
[[nodiscard]] double min_ppt_eigenvalue(const DensityMatrix& rho, Bipartition dims,
                                        Subsystem which = Subsystem::second);

/// Sum of |negative eigenvalues| of the partial transpose (normalized input).
[[nodiscard]] double negativity(const DensityMatrix& rho, Bipartition dims, Subsystem which = Subsystem::second);

/// Wootters concurrence of a normalized two-qubit state.
[[nodiscard]] double concurrence(const DensityMatrix& rho);

/// Two-qubit entanglement of formation h((1 + sqrt(1 - C^2)) / 2).
[[nodiscard]] double entanglement_of_formation(const DensityMatrix& rho);

/// Converts a concurrence value to entanglement of formation.
[[nodiscard]] double eof_from_concurrence(double c);

/// Reduced state on the factors listed in `keep` (ascending, unique).
/// `dims` lists the factor dimensions; the first factor is the most
/// significant index.
[[nodiscard]] DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> dims,
                                          std::span<const int> keep);

/// S(rho_1) + S(rho_2) - S(rho_12).
[[nodiscard]] double mutual_information(const DensityMatrix& rho, Bipartition dims);

} // namespace sqent::measures

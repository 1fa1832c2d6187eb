// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file mode_transform.hpp
 * @brief Bogoliubov mode transformations and the closed-form entanglement
 *        of squeezed, thermal-like and condensate pair states.
 *
 * Conventions: a map (alpha, beta) defines new annihilators
 *   b_m = sum_n alpha(m,n) a_n + beta(m,n) a_n^dagger.
 * Every thermal spectrum here is geometric, p_n = (1 - t) t^n, and is
 * summarized by a GeometricParameter t in [0, 1).
 */

#pragma once

#include <span>
#include <vector>

#include <sqent/density_matrix.hpp>

namespace sqent::modes {

inline constexpr double kDefaultCanonicalTol = 1e-10;
/// Cutoff used for truncated entropy cross-checks.
inline constexpr int kDefaultEntropyCutoff = 400;

class GeometricParameter {
public:
    /// Throws DomainError unless 0 <= t < 1.
    explicit GeometricParameter(double t);
    [[nodiscard]] double value() const noexcept { return t_; }

private:
    double t_;
};

/// Two coupled oscillators with frequency omega and coupling lambda.
class OscillatorPair {
public:
    /// Throws DomainError unless omega > 0, lambda >= 0 and tanh(4 lambda / omega) < 1.
    OscillatorPair(double omega, double lambda);
    [[nodiscard]] double omega() const noexcept { return omega_; }
    [[nodiscard]] double lambda() const noexcept { return lambda_; }
    /// tanh(4 lambda / omega)
    [[nodiscard]] double squeeze_ratio() const;
    /// tanh^2(4 lambda / omega)
    [[nodiscard]] GeometricParameter schmidt_ratio() const;

private:
    double omega_;
    double lambda_;
};

/// Bogoliubov amplitudes (u, v) of one condensate momentum pair.
struct CondensatePair {
    double u;
    double v;
    /// u^2 - v^2 = 1 to within 1e-12 relative to u^2.
    [[nodiscard]] bool is_canonical() const;
};

class BogoliubovMap {
public:
    /// Stored un-validated; physics operations call check_canonical first.
    BogoliubovMap(ComplexMatrix alpha, ComplexMatrix beta);

    static BogoliubovMap identity(int modes);
    /// alpha = diag(cosh r), beta = antidiag(sinh r) on two modes.
    static BogoliubovMap two_mode_squeeze(double r);
    /// Direct sum of two-mode squeezes on mode pairs (0,1), (2,3), ...
    /// plus a single-mode squeeze on the last mode when the count is odd.
    static BogoliubovMap squeeze_chain(std::span<const double> strengths, int modes);
    /// The textbook mixing a1 = (b1 + b2^dagger)/sqrt2, a2 = (b1^dagger - b2)/sqrt2,
    /// which is not canonical.
    static BogoliubovMap balanced_particle_hole_mix();

    [[nodiscard]] int modes() const noexcept { return static_cast<int>(alpha_.rows()); }
    [[nodiscard]] const ComplexMatrix& alpha() const noexcept { return alpha_; }
    [[nodiscard]] const ComplexMatrix& beta() const noexcept { return beta_; }
    [[nodiscard]] bool is_real() const;

private:
    ComplexMatrix alpha_;
    ComplexMatrix beta_;
};

struct CanonicalResiduals {
    /// max |alpha alpha^dagger - beta beta^dagger - I|
    double commutator;
    /// max |alpha beta^T - beta alpha^T|
    double symmetry;
    bool canonical;
};

[[nodiscard]] CanonicalResiduals check_canonical(const BogoliubovMap& map, double tol = kDefaultCanonicalTol);

/// Throws ValidationError when the map is not canonical at `tol`.
void require_canonical(const BogoliubovMap& map, double tol = kDefaultCanonicalTol);

/// Old-mode occupation of the new vacuum as the row sum sum_j |beta(i,j)|^2.
[[nodiscard]] double vacuum_occupation(const BogoliubovMap& map, int mode);

/// Column sum sum_j |beta(j,i)|^2: the occupation <a_i^dagger a_i> in the
/// vacuum of b_m = alpha a + beta a^dagger. Equal to the row sum whenever
/// beta is symmetric (for example any two-mode squeeze).
[[nodiscard]] double vacuum_occupation_forward(const BogoliubovMap& map, int mode);

/// -sum_j |beta(i,j)|^2 ln |beta(i,j)|^2 over the i-th row, zero terms skipped.
/// This is the per-mode "beta spectrum" formula, reproduced literally; for a
/// squeeze it differs from the reduced-state entropy.
[[nodiscard]] double beta_row_entropy(const BogoliubovMap& map, int mode);

/// S(t) = -t ln t / (1 - t) - ln(1 - t).
[[nodiscard]] double geometric_entropy(GeometricParameter t);

[[nodiscard]] double coupled_oscillator_entanglement(const OscillatorPair& pair);

/// Temperature T with tanh^2(4 lambda / omega) = exp(-hbar omega / k T),
/// expressed in the same units as `hbar_omega_over_k`. Zero coupling gives 0.
[[nodiscard]] double effective_temperature(const OscillatorPair& pair, double hbar_omega_over_k);

/// Thermal oscillator entropy at x = hbar omega / k T > 0.
[[nodiscard]] double planck_entropy(double x);

/// Amplitudes (1/u)(-v/u)^i on |i, i>, i = 0..cutoff; left factor is mode -p.
/// Not renormalized.
[[nodiscard]] PureBipartiteState condensate_pair_state(const CondensatePair& pair, int cutoff);

/// ln(u/v)^2 / ((u/v)^2 - 1) - ln(1 - (v/u)^2), the pair entropy written in
/// (u, v); 0 when v = 0.
[[nodiscard]] double condensate_pair_entropy_closed_form(const CondensatePair& pair);

/// Sum of geometric_entropy((v/u)^2) over all pairs.
[[nodiscard]] double condensate_entanglement(std::span<const CondensatePair> pairs);

enum class Units { natural, si };

/// Natural units: a / 2 pi (k = hbar = c = 1). SI: hbar a / (2 pi c k_B) in kelvin.
[[nodiscard]] double unruh_temperature(double acceleration, Units units);
[[nodiscard]] double hawking_temperature(double surface_gravity, Units units);

/// Normalized amplitudes proportional to (-i tau)^n on |n, n>, n = 0..cutoff.
[[nodiscard]] PureBipartiteState two_mode_squeezed_state(double tau, int cutoff, bool with_phase = true);

namespace si {
inline constexpr double planck_h = 6.62607015e-34; // J s (exact)
inline constexpr double hbar = planck_h / (2.0 * 3.14159265358979323846);
inline constexpr double speed_of_light = 299792458.0; // m/s (exact)
inline constexpr double boltzmann = 1.380649e-23;     // J/K (exact)
} // namespace si

} // namespace sqent::modes

// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fermi_gas.hpp
 * @brief Spin correlations of electrons detected at fixed positions in an
 *        ideal zero-temperature Fermi gas.
 *
 * The exchange kernel f(x) = 3 j_1(x) / x, x = k_F |r - r'|, enters the
 * n-electron spin matrix through a signed sum over permutations:
 *
 *   <s|rho|t> = sum_sigma sgn(sigma) prod_i delta(s_i, t_sigma(i))
 *                                    prod_{i: sigma(i) != i} f_{i sigma(i)}
 *
 * Spin matrices are built unnormalized (density prefactors dropped) and
 * normalized on demand. Basis order: electron 0 is the most significant
 * spin, 0 = up, so two electrons use |uu>, |ud>, |du>, |dd>.
 */

#pragma once

#include <array>
#include <span>
#include <vector>

#include <sqent/density_matrix.hpp>

namespace sqent::fermi {

inline constexpr int kDefaultMaxElectrons = 10;
/// Below this dimensionless separation exchange_f uses its Taylor series.
inline constexpr double kSeriesSwitch = 0.5;

/// Exchange kernel value; |f| <= 1.
class ExchangeValue {
public:
    explicit ExchangeValue(double f);
    [[nodiscard]] double value() const noexcept { return f_; }

private:
    double f_;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

class ExchangeGeometry {
public:
    /// Positions in length units consistent with `k_fermi`.
    ExchangeGeometry(double k_fermi, std::vector<Vec3> positions);
    /// Positions already scaled by k_F.
    static ExchangeGeometry dimensionless(std::vector<Vec3> positions);

    [[nodiscard]] double k_fermi() const noexcept { return k_fermi_; }
    [[nodiscard]] const std::vector<Vec3>& positions() const noexcept { return positions_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(positions_.size()); }

    /// k_F |r_i - r_j|
    [[nodiscard]] double separation(int i, int j) const;
    [[nodiscard]] ExchangeValue exchange(int i, int j) const;
    /// Symmetric matrix of f_ij with unit diagonal.
    [[nodiscard]] Eigen::MatrixXd kernel() const;

private:
    double k_fermi_;
    std::vector<Vec3> positions_;
};

/// 3 (sin x - x cos x) / x^3, with a Taylor branch for x <= kSeriesSwitch.
[[nodiscard]] ExchangeValue exchange_f(double x);

namespace detail {
[[nodiscard]] double exchange_series(double x);
[[nodiscard]] double exchange_closed_form(double x);
/// +1 or -1 from the cycle decomposition of sigma.
[[nodiscard]] int permutation_sign(std::span<const int> sigma);
} // namespace detail

/// First positive root of tan x = x, where the kernel first vanishes.
[[nodiscard]] double exchange_first_zero();

/// Unnormalized two-electron spin matrix: corners 1 - f^2, middle block
/// [[1, -f^2], [-f^2, 1]].
[[nodiscard]] DensityMatrix two_electron_rho(ExchangeValue f);

struct PptSpectrum {
    /// The commonly quoted list {1 - 2f^2, 1 - f^2, 1 - f^2, 1}, ascending.
    /// Only its smallest entry is an eigenvalue of the partial transpose.
    std::array<double, 4> analytic;
    /// {1 - 2f^2, 1, 1, 1}: the partial transpose is diag(1, 1) on the
    /// mixed-spin pair plus [[1 - f^2, -f^2], [-f^2, 1 - f^2]] on |uu>, |dd>.
    std::array<double, 4> derived;
    /// Partial-transpose eigenvalues of the raw matrix, ascending.
    std::array<double, 4> numeric;
};

[[nodiscard]] PptSpectrum ppt_spectrum_two_electron(ExchangeValue f);

struct EntanglementRadius {
    /// Dimensionless root of f(x)^2 = 1/2.
    double x_star;
    /// x_star / k_F.
    double radius;
    /// |f(x_star)^2 - 1/2|
    double residual;
};

/// Separation below which two electron spins fail the partial-transpose test.
[[nodiscard]] EntanglementRadius entanglement_radius(double k_fermi);

/// Unnormalized 8x8 three-electron matrix for pair kernels f12, f13, f23.
[[nodiscard]] DensityMatrix three_electron_rho(ExchangeValue f12, ExchangeValue f13, ExchangeValue f23);

/// Signed permutation sum for a symmetric kernel with unit diagonal.
/// Raw 2^n x 2^n result.
[[nodiscard]] DensityMatrix permutation_sum_rho(const Eigen::MatrixXd& kernel,
                                                int max_electrons = kDefaultMaxElectrons);

[[nodiscard]] DensityMatrix n_electron_rho(const ExchangeGeometry& geom, int max_electrons = kDefaultMaxElectrons);

/// Normalized reduced spin state of electrons 0 and 1 of an 8x8 matrix.
[[nodiscard]] DensityMatrix spin_trace_third(const DensityMatrix& rho123);

/// spin_trace_third(n_electron_rho(geom)) for a geometry whose third
/// electron is far away (|f13|, |f23| <= 1e-8), else PreconditionError.
[[nodiscard]] DensityMatrix far_trace_consistency(const ExchangeGeometry& geom);

/// |01><01| + |10><10| - eps^2 (|01><10| + |10><01|), unnormalized.
[[nodiscard]] DensityMatrix overlap_model_rho(double epsilon);

/// Uniform 4x4 polarization state of two bosons (every entry 1/4).
[[nodiscard]] DensityMatrix boson_polarization_rho();

struct ScanRange {
    double r_min = 0.0;
    double r_max = 1.0;
    int steps = 2;
    double k_fermi = 1.0;
};

struct ScanColumns {
    bool min_ppt_eig = true;
    bool concurrence = true;
    bool eof = true;
    bool mutual_info = true;
    bool negativity = true;
};

/// Columns not selected are NaN.
struct ScanRow {
    double r;
    double f;
    double min_ppt_eig;
    double concurrence;
    double eof_nats;
    double mutual_info_nats;
    double negativity;
};

[[nodiscard]] ScanRow correlation_row(double r, double k_fermi, const ScanColumns& columns = {});

/// Evenly spaced separations from r_min to r_max inclusive.
[[nodiscard]] std::vector<ScanRow> correlation_scan(const ScanRange& range, const ScanColumns& columns = {});

} // namespace sqent::fermi

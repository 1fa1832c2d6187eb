// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#include <sqent/error.hpp>
#include <sqent/fermi_gas.hpp>
#include <sqent/measures.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace sqent::fermi {

namespace {

constexpr double kFarKernel = 1e-8;

// Bit of spin `particle` in an n-spin basis index (particle 0 most significant).
int spin_of(int index, int particle, int n) { return (index >> (n - 1 - particle)) & 1; }

} // namespace

namespace detail {

int permutation_sign(std::span<const int> sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(sigma.size(), false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) {
            continue;
        }
        ++cycles;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = sigma[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
        }
    }
    return (n - cycles) % 2 == 0 ? 1 : -1;
}

} // namespace detail

ExchangeGeometry::ExchangeGeometry(double k_fermi, std::vector<Vec3> positions)
    : k_fermi_(k_fermi), positions_(std::move(positions)) {
    if (!(k_fermi_ > 0.0) || !std::isfinite(k_fermi_)) {
        throw DomainError("Fermi wavenumber must be positive and finite");
    }
    for (const Vec3& p : positions_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
            throw ValidationError("positions must be finite");
        }
    }
}

ExchangeGeometry ExchangeGeometry::dimensionless(std::vector<Vec3> positions) {
    return ExchangeGeometry(1.0, std::move(positions));
}

double ExchangeGeometry::separation(int i, int j) const {
    if (i < 0 || j < 0 || i >= size() || j >= size()) {
        throw ValidationError("electron index out of range");
    }
    const Vec3& a = positions_[static_cast<std::size_t>(i)];
    const Vec3& b = positions_[static_cast<std::size_t>(j)];
    return k_fermi_ * std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

ExchangeValue ExchangeGeometry::exchange(int i, int j) const { return exchange_f(separation(i, j)); }

Eigen::MatrixXd ExchangeGeometry::kernel() const {
    const int n = size();
    Eigen::MatrixXd k = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            k(i, j) = k(j, i) = exchange(i, j).value();
        }
    }
    return k;
}

DensityMatrix two_electron_rho(ExchangeValue fv) {
    const double f2 = fv.value() * fv.value();
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1.0 - f2;
    m(1, 1) = 1.0;
    m(2, 2) = 1.0;
    m(1, 2) = -f2;
    m(2, 1) = -f2;
    m(3, 3) = 1.0 - f2;
    return DensityMatrix::raw(std::move(m));
}

PptSpectrum ppt_spectrum_two_electron(ExchangeValue fv) {
    const double f2 = fv.value() * fv.value();
    PptSpectrum out{};
    out.analytic = {1.0 - 2.0 * f2, 1.0 - f2, 1.0 - f2, 1.0};
    std::sort(out.analytic.begin(), out.analytic.end());
    out.derived = {1.0 - 2.0 * f2, 1.0, 1.0, 1.0};
    const RealVector ev =
        measures::partial_transpose(two_electron_rho(fv), {2, 2}, measures::Subsystem::second).eigenvalues();
    for (int i = 0; i < 4; ++i) {
        out.numeric[static_cast<std::size_t>(i)] = ev(i);
    }
    return out;
}

DensityMatrix three_electron_rho(ExchangeValue f12v, ExchangeValue f13v, ExchangeValue f23v) {
    const double f12 = f12v.value();
    const double f13 = f13v.value();
    const double f23 = f23v.value();
    const double cycle = f12 * f13 * f23;
    ComplexMatrix m = ComplexMatrix::Zero(8, 8);
    for (int s = 0; s < 8; ++s) {
        const int s1 = spin_of(s, 0, 3);
        const int s2 = spin_of(s, 1, 3);
        const int s3 = spin_of(s, 2, 3);
        for (int t = 0; t < 8; ++t) {
            const int t1 = spin_of(t, 0, 3);
            const int t2 = spin_of(t, 1, 3);
            const int t3 = spin_of(t, 2, 3);
            double v = 0.0;
            // direct term
            v += (s1 == t1 && s2 == t2 && s3 == t3) ? 1.0 : 0.0;
            // single exchanges
            v -= (s1 == t2 && s2 == t1 && s3 == t3) ? f12 * f12 : 0.0;
            v -= (s1 == t3 && s3 == t1 && s2 == t2) ? f13 * f13 : 0.0;
            v -= (s2 == t3 && s3 == t2 && s1 == t1) ? f23 * f23 : 0.0;
            // cyclic exchanges
            v += (s1 == t2 && s2 == t3 && s3 == t1) ? cycle : 0.0;
            v += (s1 == t3 && s2 == t1 && s3 == t2) ? cycle : 0.0;
            m(s, t) = v;
        }
    }
    return DensityMatrix::raw(std::move(m));
}

DensityMatrix permutation_sum_rho(const Eigen::MatrixXd& kernel, int max_electrons) {
    const int n = static_cast<int>(kernel.rows());
    if (n == 0 || kernel.cols() != n) {
        throw ValidationError("exchange kernel must be a non-empty square matrix");
    }
    if (n > max_electrons || n > 20) {
        throw ResourceError(std::to_string(n) + " electrons exceed the limit of " + std::to_string(max_electrons));
    }
    for (int i = 0; i < n; ++i) {
        if (kernel(i, i) != 1.0) {
            throw ValidationError("exchange kernel must have a unit diagonal");
        }
        for (int j = 0; j < n; ++j) {
            if (kernel(i, j) != kernel(j, i) || !(std::abs(kernel(i, j)) <= 1.0)) {
                throw ValidationError("exchange kernel must be symmetric with |f| <= 1");
            }
        }
    }

    const int dim = 1 << n;
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(dim, dim);
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<int> inverse(static_cast<std::size_t>(n));
    std::vector<unsigned> flip(static_cast<std::size_t>(n));
    do {
        double weight = detail::permutation_sign(sigma);
        for (int i = 0; i < n; ++i) {
            const int j = sigma[static_cast<std::size_t>(i)];
            if (j != i) {
                weight *= kernel(i, j);
            }
        }
        if (weight == 0.0) {
            continue;
        }
        for (int i = 0; i < n; ++i) {
            inverse[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
        }
        // Flipping ket bit b (particle q = n-1-b) flips bra particle sigma^-1(q).
        for (int b = 0; b < n; ++b) {
            const int p = inverse[static_cast<std::size_t>(n - 1 - b)];
            flip[static_cast<std::size_t>(b)] = 1u << (n - 1 - p);
        }
        // Gray-code walk over kets; the bra s with s_i = t_sigma(i) follows.
        unsigned ket = 0;
        unsigned bra = 0;
        for (unsigned k = 0; k < static_cast<unsigned>(dim); ++k) {
            rho(bra, ket) += weight;
            const unsigned next = k + 1;
            if (next == static_cast<unsigned>(dim)) {
                break;
            }
            const int b = std::countr_zero(next);
            ket ^= 1u << b;
            bra ^= flip[static_cast<std::size_t>(b)];
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return DensityMatrix::raw(rho.cast<Complex>());
}

DensityMatrix n_electron_rho(const ExchangeGeometry& geom, int max_electrons) {
    if (geom.size() > max_electrons) {
        throw ResourceError(std::to_string(geom.size()) + " electrons exceed the limit of " +
                            std::to_string(max_electrons));
    }
    return permutation_sum_rho(geom.kernel(), max_electrons);
}

DensityMatrix spin_trace_third(const DensityMatrix& rho123) {
    if (rho123.dim() != 8) {
        throw ValidationError("spin_trace_third needs an 8x8 matrix");
    }
    const std::array<int, 3> dims{2, 2, 2};
    const std::array<int, 2> keep{0, 1};
    return measures::partial_trace(rho123.normalized(), dims, keep).normalized();
}

DensityMatrix far_trace_consistency(const ExchangeGeometry& geom) {
    if (geom.size() != 3) {
        throw PreconditionError("far_trace_consistency needs exactly three electrons");
    }
    const double f13 = geom.exchange(0, 2).value();
    const double f23 = geom.exchange(1, 2).value();
    if (std::abs(f13) > kFarKernel || std::abs(f23) > kFarKernel) {
        throw PreconditionError("third electron is not far: |f13| = " + std::to_string(std::abs(f13)) +
                                ", |f23| = " + std::to_string(std::abs(f23)));
    }
    return spin_trace_third(n_electron_rho(geom));
}

DensityMatrix overlap_model_rho(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw DomainError("overlap epsilon must lie in [0, 1]");
    }
    const double e2 = epsilon * epsilon;
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(1, 1) = 1.0;
    m(2, 2) = 1.0;
    m(1, 2) = -e2;
    m(2, 1) = -e2;
    return DensityMatrix::raw(std::move(m));
}

DensityMatrix boson_polarization_rho() { return DensityMatrix(ComplexMatrix::Constant(4, 4, 0.25)); }

ScanRow correlation_row(double r, double k_fermi, const ScanColumns& columns) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    const double f = exchange_f(k_fermi * r).value();
    const DensityMatrix rho = two_electron_rho(ExchangeValue(f)).to_state();
    const measures::Bipartition qubits{2, 2};
    ScanRow row{r, f, nan, nan, nan, nan, nan};
    if (columns.min_ppt_eig) {
        row.min_ppt_eig = measures::min_ppt_eigenvalue(rho, qubits);
    }
    if (columns.concurrence || columns.eof) {
        const double c = measures::concurrence(rho);
        if (columns.concurrence) {
            row.concurrence = c;
        }
        if (columns.eof) {
            row.eof_nats = measures::eof_from_concurrence(c);
        }
    }
    if (columns.mutual_info) {
        row.mutual_info_nats = measures::mutual_information(rho, qubits);
    }
    if (columns.negativity) {
        row.negativity = measures::negativity(rho, qubits);
    }
    return row;
}

std::vector<ScanRow> correlation_scan(const ScanRange& range, const ScanColumns& columns) {
    if (!(range.r_min >= 0.0) || !(range.r_max > range.r_min) || !std::isfinite(range.r_max)) {
        throw ValidationError("scan range needs 0 <= r_min < r_max");
    }
    if (range.steps < 2) {
        throw ValidationError("scan needs at least two steps");
    }
    if (!(range.k_fermi > 0.0) || !std::isfinite(range.k_fermi)) {
        throw DomainError("Fermi wavenumber must be positive and finite");
    }
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<std::size_t>(range.steps));
    const double span = range.r_max - range.r_min;
    for (int i = 0; i < range.steps; ++i) {
        const double r = i + 1 == range.steps ? range.r_max : range.r_min + span * i / (range.steps - 1);
        rows.push_back(correlation_row(r, range.k_fermi, columns));
    }
    return rows;
}

} // namespace sqent::fermi

// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#include <sqent/error.hpp>
#include <sqent/measures.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace sqent::measures {

namespace {

void require_normalized(const DensityMatrix& rho, const char* what) {
    if (!rho.is_normalized()) {
        throw ValidationError(std::string(what) + ": input must be normalized (trace 1)");
    }
}

void require_bipartition(const DensityMatrix& rho, Bipartition dims) {
    if (dims.left <= 0 || dims.right <= 0 || dims.left * dims.right != rho.dim()) {
        throw ValidationError("bipartition " + std::to_string(dims.left) + "x" + std::to_string(dims.right) +
                              " does not factor dimension " + std::to_string(rho.dim()));
    }
}

void require_two_qubit_state(const DensityMatrix& rho) {
    if (rho.dim() != 4) {
        throw ValidationError("two-qubit measure needs a 4x4 matrix");
    }
    require_normalized(rho, "two-qubit measure");
    if (rho.min_eigenvalue() < -kPsdTol) {
        throw ValidationError("two-qubit measure: input is not positive semidefinite");
    }
}

} // namespace

double shannon_entropy(std::span<const double> probabilities) {
    double s = 0.0;
    for (double p : probabilities) {
        if (p < -kClampTol) {
            throw NotAStateError("negative eigenvalue " + std::to_string(p) + " in entropy");
        }
        if (p > 0.0) {
            s -= p * std::log(p);
        }
    }
    return std::max(0.0, s);
}

double binary_entropy(double x) {
    const std::array<double, 2> p{x, 1.0 - x};
    return shannon_entropy(p);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    require_normalized(rho, "von_neumann_entropy");
    const RealVector ev = rho.eigenvalues();
    return shannon_entropy(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())));
}

double schmidt_entropy(const PureBipartiteState& psi) {
    const double n2 = psi.norm_squared();
    if (n2 == 0.0) {
        throw ValidationError("schmidt_entropy: zero state");
    }
    Eigen::BDCSVD<ComplexMatrix> svd(psi.amplitudes());
    std::vector<double> p;
    p.reserve(static_cast<std::size_t>(svd.singularValues().size()));
    double total = 0.0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double s = svd.singularValues()(i);
        p.push_back(s * s);
        total += s * s;
    }
    for (double& x : p) {
        x /= total;
    }
    return shannon_entropy(p);
}

DensityMatrix partial_transpose(const DensityMatrix& rho, Bipartition dims, Subsystem which) {
    require_bipartition(rho, dims);
    const int d1 = dims.left;
    const int d2 = dims.right;
    const ComplexMatrix& m = rho.matrix();
    ComplexMatrix out(rho.dim(), rho.dim());
    for (int i1 = 0; i1 < d1; ++i1) {
        for (int i2 = 0; i2 < d2; ++i2) {
            for (int j1 = 0; j1 < d1; ++j1) {
                for (int j2 = 0; j2 < d2; ++j2) {
                    const int row = i1 * d2 + i2;
                    const int col = j1 * d2 + j2;
                    if (which == Subsystem::first) {
                        out(j1 * d2 + i2, i1 * d2 + j2) = m(row, col);
                    } else {
                        out(i1 * d2 + j2, j1 * d2 + i2) = m(row, col);
                    }
                }
            }
        }
    }
    return DensityMatrix::raw(std::move(out));
}

double min_ppt_eigenvalue(const DensityMatrix& rho, Bipartition dims, Subsystem which) {
    return partial_transpose(rho, dims, which).min_eigenvalue();
}

double negativity(const DensityMatrix& rho, Bipartition dims, Subsystem which) {
    require_normalized(rho, "negativity");
    const RealVector ev = partial_transpose(rho, dims, which).eigenvalues();
    double n = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < 0.0) {
            n -= ev(i);
        }
    }
    return n;
}

double concurrence(const DensityMatrix& rho) {
    require_two_qubit_state(rho);
    // With rho = X X^dagger, the decreasing lambdas are the singular values of
    // X^T (sigma_y (x) sigma_y) X. The SVD keeps the small lambdas accurate to
    // machine precision, where square roots of eigenvalues of rho rho~ lose half
    // the digits.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix());
    const RealVector w = es.eigenvalues();
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(w.maxCoeff(), 0.0);
    RealVector root(4);
    for (int i = 0; i < 4; ++i) {
        root(i) = w(i) > floor ? std::sqrt(w(i)) : 0.0;
    }
    const ComplexMatrix x = es.eigenvectors() * root.asDiagonal();
    ComplexMatrix flip = ComplexMatrix::Zero(4, 4);
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;
    const ComplexMatrix tau = x.transpose() * flip * x;
    const RealVector s = Eigen::JacobiSVD<ComplexMatrix>(tau).singularValues();
    return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

double eof_from_concurrence(double c) {
    c = std::clamp(c, 0.0, 1.0);
    if (c == 0.0) {
        return 0.0;
    }
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double entanglement_of_formation(const DensityMatrix& rho) { return eof_from_concurrence(concurrence(rho)); }

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> dims, std::span<const int> keep) {
    if (dims.empty()) {
        throw ValidationError("partial_trace: empty factor list");
    }
    long total = 1;
    for (int d : dims) {
        if (d <= 0) {
            throw ValidationError("partial_trace: factor dimensions must be positive");
        }
        total *= d;
    }
    if (total != rho.dim()) {
        throw ValidationError("partial_trace: factor dimensions do not multiply to the matrix dimension");
    }
    const int n = static_cast<int>(dims.size());
    std::vector<bool> kept(static_cast<std::size_t>(n), false);
    int prev = -1;
    for (int k : keep) {
        if (k <= prev || k >= n) {
            throw ValidationError("partial_trace: keep indices must be ascending, unique and in range");
        }
        kept[static_cast<std::size_t>(k)] = true;
        prev = k;
    }

    // Per-index digits in mixed radix, first factor most significant.
    const auto digits = [&](long index) {
        std::vector<int> d(static_cast<std::size_t>(n));
        for (int f = n - 1; f >= 0; --f) {
            d[static_cast<std::size_t>(f)] = static_cast<int>(index % dims[static_cast<std::size_t>(f)]);
            index /= dims[static_cast<std::size_t>(f)];
        }
        return d;
    };
    const auto split = [&](const std::vector<int>& d, long& kept_index, long& traced_index) {
        kept_index = 0;
        traced_index = 0;
        for (int f = 0; f < n; ++f) {
            const auto fs = static_cast<std::size_t>(f);
            if (kept[fs]) {
                kept_index = kept_index * dims[fs] + d[fs];
            } else {
                traced_index = traced_index * dims[fs] + d[fs];
            }
        }
    };

    long kept_dim = 1;
    for (int k : keep) {
        kept_dim *= dims[static_cast<std::size_t>(k)];
    }
    std::vector<long> kept_of(static_cast<std::size_t>(total));
    std::vector<long> traced_of(static_cast<std::size_t>(total));
    for (long i = 0; i < total; ++i) {
        split(digits(i), kept_of[static_cast<std::size_t>(i)], traced_of[static_cast<std::size_t>(i)]);
    }

    ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
    const ComplexMatrix& m = rho.matrix();
    for (long r = 0; r < total; ++r) {
        for (long c = 0; c < total; ++c) {
            if (traced_of[static_cast<std::size_t>(r)] == traced_of[static_cast<std::size_t>(c)]) {
                out(kept_of[static_cast<std::size_t>(r)], kept_of[static_cast<std::size_t>(c)]) += m(r, c);
            }
        }
    }
    return DensityMatrix(std::move(out), rho.kind());
}

double mutual_information(const DensityMatrix& rho, Bipartition dims) {
    require_normalized(rho, "mutual_information");
    require_bipartition(rho, dims);
    const std::array<int, 2> factors{dims.left, dims.right};
    const std::array<int, 1> first{0};
    const std::array<int, 1> second{1};
    const DensityMatrix rho1 = partial_trace(rho, factors, first);
    const DensityMatrix rho2 = partial_trace(rho, factors, second);
    return von_neumann_entropy(rho1) + von_neumann_entropy(rho2) - von_neumann_entropy(rho);
}

} // namespace sqent::measures

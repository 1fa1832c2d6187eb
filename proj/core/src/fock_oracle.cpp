// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#include <sqent/error.hpp>
#include <sqent/fock_oracle.hpp>
#include <sqent/measures.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sqent::fock {

namespace {

long checked_power(int base, int exponent, long limit) {
    long value = 1;
    for (int i = 0; i < exponent; ++i) {
        value *= base;
        if (value > limit) {
            return limit + 1;
        }
    }
    return value;
}

long stride_of(int mode, int modes, int levels) {
    long s = 1;
    for (int k = mode + 1; k < modes; ++k) {
        s *= levels;
    }
    return s;
}

/// Applies a (create = false) or a^dagger (create = true) of one mode to a
/// vector over `levels` occupations per mode, without truncating at the top.
ComplexVector apply_ladder(const ComplexVector& psi, int modes, int levels, int mode, bool create) {
    const long stride = stride_of(mode, modes, levels);
    ComplexVector out = ComplexVector::Zero(psi.size());
    for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
        if (psi(idx) == Complex(0.0, 0.0)) {
            continue;
        }
        const int n = static_cast<int>((idx / stride) % levels);
        if (create) {
            if (n + 1 < levels) {
                out(idx + stride) += std::sqrt(static_cast<double>(n + 1)) * psi(idx);
            }
        } else if (n > 0) {
            out(idx - stride) += std::sqrt(static_cast<double>(n)) * psi(idx);
        }
    }
    return out;
}

/// Re-indexes a state over cutoff + 1 levels into cutoff + 2 levels.
ComplexVector embed_one_level_up(const ComplexVector& psi, int modes, int cutoff) {
    const int from = cutoff + 1;
    const int to = cutoff + 2;
    long big = 1;
    for (int k = 0; k < modes; ++k) {
        big *= to;
    }
    ComplexVector out = ComplexVector::Zero(big);
    for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
        long rest = idx;
        long target = 0;
        long weight = 1;
        for (int k = modes - 1; k >= 0; --k) {
            target += (rest % from) * weight;
            rest /= from;
            weight *= to;
        }
        out(target) = psi(idx);
    }
    return out;
}

double boundary_residual(const ComplexVector& psi, const modes::BogoliubovMap& map, int cutoff) {
    const int m = map.modes();
    const int levels = cutoff + 2;
    const ComplexVector big = embed_one_level_up(psi, m, cutoff);
    std::vector<ComplexVector> lowered;
    std::vector<ComplexVector> raised;
    for (int n = 0; n < m; ++n) {
        lowered.push_back(apply_ladder(big, m, levels, n, false));
        raised.push_back(apply_ladder(big, m, levels, n, true));
    }
    double total = 0.0;
    for (int row = 0; row < m; ++row) {
        ComplexVector b_psi = ComplexVector::Zero(big.size());
        for (int n = 0; n < m; ++n) {
            b_psi += map.alpha()(row, n) * lowered[static_cast<std::size_t>(n)] +
                     map.beta()(row, n) * raised[static_cast<std::size_t>(n)];
        }
        total += b_psi.squaredNorm();
    }
    return total;
}

template <typename Scalar>
void lowest_eigenpair(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& q, ComplexVector& vec,
                      double& lowest, double& gap) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> solver(q);
    if (solver.info() != Eigen::Success) {
        throw AmbiguityError("eigensolver failed to converge");
    }
    lowest = solver.eigenvalues()(0);
    gap = q.rows() > 1 ? solver.eigenvalues()(1) - lowest : std::numeric_limits<double>::infinity();
    vec = solver.eigenvectors().col(0).template cast<Complex>();
}

} // namespace

LadderOperatorSet::LadderOperatorSet(int modes, int cutoff, std::vector<SparseMatrix> annihilators)
    : modes_(modes), cutoff_(cutoff), annihilators_(std::move(annihilators)) {
    dim_ = annihilators_.empty() ? 0 : annihilators_.front().rows();
}

const SparseMatrix& LadderOperatorSet::annihilation(int mode) const {
    if (mode < 0 || mode >= modes_) {
        throw ValidationError("ladder mode index out of range");
    }
    return annihilators_[static_cast<std::size_t>(mode)];
}

SparseMatrix LadderOperatorSet::creation(int mode) const { return annihilation(mode).adjoint(); }

SparseMatrix LadderOperatorSet::number(int mode) const { return creation(mode) * annihilation(mode); }

SparseMatrix LadderOperatorSet::commutator(int i, int j) const {
    SparseMatrix ab = annihilation(i) * creation(j);
    SparseMatrix ba = creation(j) * annihilation(i);
    return ab - ba;
}

std::vector<int> LadderOperatorSet::occupations(long index) const {
    std::vector<int> occ(static_cast<std::size_t>(modes_));
    for (int k = modes_ - 1; k >= 0; --k) {
        occ[static_cast<std::size_t>(k)] = static_cast<int>(index % (cutoff_ + 1));
        index /= (cutoff_ + 1);
    }
    return occ;
}

LadderOperatorSet build_ladder(int modes, int cutoff, long max_rows) {
    if (modes <= 0 || cutoff <= 0) {
        throw ValidationError("build_ladder needs at least one mode and cutoff >= 1");
    }
    const int levels = cutoff + 1;
    const long dim = checked_power(levels, modes, max_rows);
    if (dim > max_rows) {
        throw ResourceError("Fock space (" + std::to_string(levels) + ")^" + std::to_string(modes) +
                            " exceeds the limit of " + std::to_string(max_rows) + " rows");
    }
    std::vector<SparseMatrix> ops;
    ops.reserve(static_cast<std::size_t>(modes));
    for (int k = 0; k < modes; ++k) {
        const long stride = stride_of(k, modes, levels);
        std::vector<Eigen::Triplet<Complex>> triplets;
        triplets.reserve(static_cast<std::size_t>(dim));
        for (long idx = 0; idx < dim; ++idx) {
            const int n = static_cast<int>((idx / stride) % levels);
            if (n > 0) {
                triplets.emplace_back(idx - stride, idx, std::sqrt(static_cast<double>(n)));
            }
        }
        SparseMatrix a(dim, dim);
        a.setFromTriplets(triplets.begin(), triplets.end());
        ops.push_back(std::move(a));
    }
    return LadderOperatorSet(modes, cutoff, std::move(ops));
}

double tail_mass(const ComplexVector& amplitudes, int modes, int cutoff) {
    const int levels = cutoff + 1;
    const int threshold = std::max(cutoff - 1, 1);
    double mass = 0.0;
    for (Eigen::Index idx = 0; idx < amplitudes.size(); ++idx) {
        long rest = idx;
        bool high = false;
        for (int k = 0; k < modes; ++k) {
            if (rest % levels >= threshold) {
                high = true;
            }
            rest /= levels;
        }
        if (high) {
            mass += std::norm(amplitudes(idx));
        }
    }
    return mass;
}

TruncatedFockState TruncatedFockState::from_two_mode(const PureBipartiteState& psi) {
    if (psi.left_dim() != psi.right_dim()) {
        throw ValidationError("two-mode Fock state needs equal cutoffs on both modes");
    }
    TruncatedFockState state;
    state.modes = 2;
    state.cutoff = psi.left_dim() - 1;
    state.amplitudes = psi.normalized().vector();
    state.residual = std::numeric_limits<double>::quiet_NaN();
    state.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    state.spectral_gap = std::numeric_limits<double>::quiet_NaN();
    state.tail_mass = fock::tail_mass(state.amplitudes, state.modes, state.cutoff);
    return state;
}

TruncatedFockState numeric_vacuum(const LadderOperatorSet& ops, const modes::BogoliubovMap& map,
                                  const VacuumOptions& options) {
    if (map.modes() != ops.modes()) {
        throw ValidationError("map and ladder set disagree on the number of modes");
    }
    modes::require_canonical(map, options.canonical_tol);

    const int m = ops.modes();
    Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(ops.dim(), ops.dim());
    for (int row = 0; row < m; ++row) {
        SparseMatrix b(ops.dim(), ops.dim());
        for (int n = 0; n < m; ++n) {
            const Complex a_coef = map.alpha()(row, n);
            const Complex c_coef = map.beta()(row, n);
            if (a_coef != Complex(0.0, 0.0)) {
                b += a_coef * ops.annihilation(n);
            }
            if (c_coef != Complex(0.0, 0.0)) {
                b += c_coef * ops.creation(n);
            }
        }
        const SparseMatrix bb = SparseMatrix(b.adjoint()) * b;
        q += Eigen::MatrixXcd(bb);
    }

    TruncatedFockState state;
    state.modes = m;
    state.cutoff = ops.cutoff();
    if (map.is_real()) {
        lowest_eigenpair<double>(q.real(), state.amplitudes, state.min_eigenvalue, state.spectral_gap);
    } else {
        lowest_eigenpair<Complex>(0.5 * (q + q.adjoint()), state.amplitudes, state.min_eigenvalue,
                                  state.spectral_gap);
    }
    if (state.spectral_gap < options.min_gap) {
        throw AmbiguityError("lowest eigenspace of sum b^dagger b is degenerate (gap " +
                             std::to_string(state.spectral_gap) + ")");
    }

    Eigen::Index peak = 0;
    state.amplitudes.cwiseAbs().maxCoeff(&peak);
    const Complex phase = state.amplitudes(peak) / std::abs(state.amplitudes(peak));
    state.amplitudes *= std::conj(phase);
    state.amplitudes.normalize();

    state.tail_mass = fock::tail_mass(state.amplitudes, m, ops.cutoff());
    if (state.tail_mass > options.max_tail_mass) {
        throw TruncationError("vacuum has tail mass " + std::to_string(state.tail_mass) +
                              " near the cutoff; raise the cutoff");
    }
    state.residual = boundary_residual(state.amplitudes, map, ops.cutoff());
    return state;
}

Complex expectation(const LadderOperatorSet& ops, const TruncatedFockState& state, const SparseMatrix& observable) {
    if (observable.rows() != ops.dim() || observable.cols() != ops.dim() || state.amplitudes.size() != ops.dim()) {
        throw ValidationError("observable, state and ladder set dimensions disagree");
    }
    const ComplexVector o_psi = observable * state.amplitudes;
    return state.amplitudes.dot(o_psi);
}

double bipartition_entropy(const TruncatedFockState& state, std::span<const int> left_modes) {
    const int m = state.modes;
    std::vector<bool> left(static_cast<std::size_t>(m), false);
    int count = 0;
    for (int k : left_modes) {
        if (k < 0 || k >= m || left[static_cast<std::size_t>(k)]) {
            throw ValidationError("bipartition modes must be unique and in range");
        }
        left[static_cast<std::size_t>(k)] = true;
        ++count;
    }
    if (count == 0 || count == m) {
        throw ValidationError("bipartition must be a nonempty proper subset of the modes");
    }
    const int levels = state.cutoff + 1;
    long left_dim = 1;
    for (int i = 0; i < count; ++i) {
        left_dim *= levels;
    }
    const long right_dim = state.amplitudes.size() / left_dim;
    ComplexMatrix amps = ComplexMatrix::Zero(left_dim, right_dim);
    for (Eigen::Index idx = 0; idx < state.amplitudes.size(); ++idx) {
        long rest = idx;
        std::vector<int> occ(static_cast<std::size_t>(m));
        for (int k = m - 1; k >= 0; --k) {
            occ[static_cast<std::size_t>(k)] = static_cast<int>(rest % levels);
            rest /= levels;
        }
        long li = 0;
        long ri = 0;
        for (int k = 0; k < m; ++k) {
            if (left[static_cast<std::size_t>(k)]) {
                li = li * levels + occ[static_cast<std::size_t>(k)];
            } else {
                ri = ri * levels + occ[static_cast<std::size_t>(k)];
            }
        }
        amps(li, ri) = state.amplitudes(idx);
    }
    return measures::schmidt_entropy(PureBipartiteState(std::move(amps)));
}

} // namespace sqent::fock

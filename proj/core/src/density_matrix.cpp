// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#include <sqent/density_matrix.hpp>
#include <sqent/error.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace sqent {

namespace {

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

} // namespace

DensityMatrix::DensityMatrix(ComplexMatrix entries, Kind kind) : kind_(kind) {
    if (entries.rows() == 0 || entries.rows() != entries.cols()) {
        throw ValidationError("density matrix must be square and non-empty");
    }
    const double scale = std::max(1.0, max_abs(entries));
    const double asym = max_abs(entries - entries.adjoint());
    if (asym > kHermitianTol * scale) {
        throw ValidationError("density matrix is not Hermitian (asymmetry " + std::to_string(asym) + ")");
    }
    entries_ = 0.5 * (entries + entries.adjoint());
    normalized_ = std::abs(trace() - 1.0) <= kTraceTol;

    if (kind_ == Kind::state) {
        if (!normalized_) {
            throw ValidationError("state must have unit trace (trace " + std::to_string(trace()) + ")");
        }
        if (min_eigenvalue() < -kPsdTol) {
            throw NotAStateError("state has a negative eigenvalue " + std::to_string(min_eigenvalue()));
        }
    }
}

DensityMatrix DensityMatrix::projector(const ComplexVector& psi) {
    const double n2 = psi.squaredNorm();
    if (n2 == 0.0) {
        throw ValidationError("cannot build a projector from the zero vector");
    }
    return DensityMatrix(psi * psi.adjoint() / n2);
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    if (dim <= 0) {
        throw ValidationError("dimension must be positive");
    }
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::trace() const { return entries_.trace().real(); }

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

RealVector DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double DensityMatrix::min_eigenvalue() const { return eigenvalues().minCoeff(); }

DensityMatrix DensityMatrix::normalized() const {
    const double tr = trace();
    if (std::abs(tr) < 1e-300) {
        throw ValidationError("cannot normalize a matrix with zero trace");
    }
    return DensityMatrix(entries_ / tr, Kind::raw);
}

DensityMatrix DensityMatrix::to_state() const { return DensityMatrix(normalized().entries_, Kind::state); }

PureBipartiteState::PureBipartiteState(ComplexMatrix amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.rows() == 0 || amplitudes_.cols() == 0) {
        throw ValidationError("bipartite state needs positive factor dimensions");
    }
}

PureBipartiteState PureBipartiteState::from_vector(const ComplexVector& psi, int d1, int d2) {
    if (d1 <= 0 || d2 <= 0 || psi.size() != static_cast<Eigen::Index>(d1) * d2) {
        throw ValidationError("vector length does not match the factor dimensions");
    }
    ComplexMatrix amps(d1, d2);
    for (int i = 0; i < d1; ++i) {
        for (int j = 0; j < d2; ++j) {
            amps(i, j) = psi(static_cast<Eigen::Index>(i) * d2 + j);
        }
    }
    return PureBipartiteState(std::move(amps));
}

PureBipartiteState PureBipartiteState::normalized() const {
    const double n2 = norm_squared();
    if (n2 == 0.0) {
        throw ValidationError("cannot normalize the zero state");
    }
    return PureBipartiteState(amplitudes_ / std::sqrt(n2));
}

ComplexVector PureBipartiteState::vector() const {
    ComplexVector psi(amplitudes_.size());
    for (Eigen::Index i = 0; i < amplitudes_.rows(); ++i) {
        for (Eigen::Index j = 0; j < amplitudes_.cols(); ++j) {
            psi(i * amplitudes_.cols() + j) = amplitudes_(i, j);
        }
    }
    return psi;
}

DensityMatrix PureBipartiteState::reduced_state(int keep) const {
    if (keep != 0 && keep != 1) {
        throw ValidationError("reduced_state: keep must be 0 or 1");
    }
    const ComplexMatrix a = normalized().amplitudes_;
    if (keep == 0) {
        return DensityMatrix(a * a.adjoint());
    }
    return DensityMatrix((a.adjoint() * a).transpose());
}

} // namespace sqent

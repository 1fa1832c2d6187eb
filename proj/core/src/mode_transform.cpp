// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#include <sqent/error.hpp>
#include <sqent/mode_transform.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace sqent::modes {

namespace {

void require_mode(const BogoliubovMap& map, int mode) {
    if (mode < 0 || mode >= map.modes()) {
        throw ValidationError("mode index " + std::to_string(mode) + " out of range for " +
                              std::to_string(map.modes()) + " modes");
    }
}

double temperature_from_rate(double rate, Units units, const char* what) {
    if (!(rate >= 0.0) || !std::isfinite(rate)) {
        throw DomainError(std::string(what) + " must be finite and non-negative");
    }
    const double natural = rate / (2.0 * std::numbers::pi);
    if (units == Units::natural) {
        return natural;
    }
    return natural * si::hbar / (si::speed_of_light * si::boltzmann);
}

} // namespace

GeometricParameter::GeometricParameter(double t) : t_(t) {
    if (!(t >= 0.0 && t < 1.0)) {
        throw DomainError("geometric parameter must lie in [0, 1), got " + std::to_string(t));
    }
}

OscillatorPair::OscillatorPair(double omega, double lambda) : omega_(omega), lambda_(lambda) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("oscillator frequency must be positive");
    }
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw DomainError("oscillator coupling must be non-negative");
    }
    if (!(squeeze_ratio() < 1.0)) {
        throw DomainError("tanh(4 lambda / omega) rounds to 1; coupling too strong to represent");
    }
}

double OscillatorPair::squeeze_ratio() const { return std::tanh(4.0 * lambda_ / omega_); }

GeometricParameter OscillatorPair::schmidt_ratio() const {
    const double tau = squeeze_ratio();
    return GeometricParameter(tau * tau);
}

bool CondensatePair::is_canonical() const {
    return u > 0.0 && v >= 0.0 && std::abs(u * u - v * v - 1.0) <= 1e-12 * std::max(1.0, u * u);
}

BogoliubovMap::BogoliubovMap(ComplexMatrix alpha, ComplexMatrix beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.rows() == 0 || alpha_.rows() != alpha_.cols() || beta_.rows() != alpha_.rows() ||
        beta_.cols() != alpha_.cols()) {
        throw ValidationError("alpha and beta must be square matrices of the same size");
    }
}

BogoliubovMap BogoliubovMap::identity(int modes) {
    if (modes <= 0) {
        throw ValidationError("mode count must be positive");
    }
    return {ComplexMatrix::Identity(modes, modes), ComplexMatrix::Zero(modes, modes)};
}

BogoliubovMap BogoliubovMap::two_mode_squeeze(double r) {
    const double strengths[] = {r};
    return squeeze_chain(strengths, 2);
}

BogoliubovMap BogoliubovMap::squeeze_chain(std::span<const double> strengths, int modes) {
    if (modes <= 0 || strengths.size() != static_cast<std::size_t>((modes + 1) / 2)) {
        throw ValidationError("squeeze_chain needs one strength per mode pair");
    }
    ComplexMatrix alpha = ComplexMatrix::Zero(modes, modes);
    ComplexMatrix beta = ComplexMatrix::Zero(modes, modes);
    for (int k = 0; 2 * k < modes; ++k) {
        const double r = strengths[static_cast<std::size_t>(k)];
        const int i = 2 * k;
        if (i + 1 < modes) {
            alpha(i, i) = std::cosh(r);
            alpha(i + 1, i + 1) = std::cosh(r);
            beta(i, i + 1) = std::sinh(r);
            beta(i + 1, i) = std::sinh(r);
        } else {
            alpha(i, i) = std::cosh(r);
            beta(i, i) = std::sinh(r);
        }
    }
    return {std::move(alpha), std::move(beta)};
}

BogoliubovMap BogoliubovMap::balanced_particle_hole_mix() {
    const double h = 1.0 / std::numbers::sqrt2;
    ComplexMatrix alpha = ComplexMatrix::Zero(2, 2);
    ComplexMatrix beta = ComplexMatrix::Zero(2, 2);
    alpha(0, 0) = h;
    beta(0, 1) = h;
    beta(1, 0) = h;
    alpha(1, 1) = -h;
    return {std::move(alpha), std::move(beta)};
}

bool BogoliubovMap::is_real() const {
    return alpha_.imag().isZero(0.0) && beta_.imag().isZero(0.0);
}

CanonicalResiduals check_canonical(const BogoliubovMap& map, double tol) {
    const int m = map.modes();
    const ComplexMatrix& a = map.alpha();
    const ComplexMatrix& b = map.beta();
    const ComplexMatrix comm = a * a.adjoint() - b * b.adjoint() - ComplexMatrix::Identity(m, m);
    const ComplexMatrix sym = a * b.transpose() - b * a.transpose();
    CanonicalResiduals res{};
    res.commutator = comm.cwiseAbs().maxCoeff();
    res.symmetry = sym.cwiseAbs().maxCoeff();
    res.canonical = res.commutator <= tol && res.symmetry <= tol;
    return res;
}

void require_canonical(const BogoliubovMap& map, double tol) {
    const CanonicalResiduals res = check_canonical(map, tol);
    if (!res.canonical) {
        throw ValidationError("Bogoliubov map is not canonical (residuals " + std::to_string(res.commutator) +
                              ", " + std::to_string(res.symmetry) + ")");
    }
}

double vacuum_occupation(const BogoliubovMap& map, int mode) {
    require_canonical(map);
    require_mode(map, mode);
    return map.beta().row(mode).squaredNorm();
}

double vacuum_occupation_forward(const BogoliubovMap& map, int mode) {
    require_canonical(map);
    require_mode(map, mode);
    return map.beta().col(mode).squaredNorm();
}

double beta_row_entropy(const BogoliubovMap& map, int mode) {
    require_canonical(map);
    require_mode(map, mode);
    double e = 0.0;
    for (Eigen::Index j = 0; j < map.beta().cols(); ++j) {
        const double p = std::norm(map.beta()(mode, j));
        if (p > 0.0) {
            e -= p * std::log(p);
        }
    }
    return e;
}

double geometric_entropy(GeometricParameter param) {
    const double t = param.value();
    if (t == 0.0) {
        return 0.0;
    }
    return -t * std::log(t) / (1.0 - t) - std::log1p(-t);
}

double coupled_oscillator_entanglement(const OscillatorPair& pair) {
    return geometric_entropy(pair.schmidt_ratio());
}

double effective_temperature(const OscillatorPair& pair, double hbar_omega_over_k) {
    const double t = pair.schmidt_ratio().value();
    if (t == 0.0) {
        return 0.0;
    }
    return hbar_omega_over_k / -std::log(t);
}

double planck_entropy(double x) {
    if (!(x > 0.0)) {
        throw DomainError("planck_entropy needs hbar omega / k T > 0");
    }
    if (std::isinf(x)) {
        return 0.0;
    }
    const double occupation_term = x / std::expm1(x);
    return occupation_term - std::log1p(-std::exp(-x));
}

PureBipartiteState condensate_pair_state(const CondensatePair& pair, int cutoff) {
    if (!pair.is_canonical()) {
        throw ValidationError("condensate pair must satisfy u^2 - v^2 = 1");
    }
    if (cutoff < 1) {
        throw ValidationError("cutoff must be at least 1");
    }
    const double ratio = -pair.v / pair.u;
    ComplexMatrix amps = ComplexMatrix::Zero(cutoff + 1, cutoff + 1);
    double amp = 1.0 / pair.u;
    for (int i = 0; i <= cutoff; ++i) {
        amps(i, i) = amp;
        amp *= ratio;
    }
    return PureBipartiteState(std::move(amps));
}

namespace {

GeometricParameter pair_ratio(const CondensatePair& pair) {
    if (!(pair.u > 0.0) || !(pair.v >= 0.0)) {
        throw DomainError("condensate pair needs u > 0 and v >= 0");
    }
    if (pair.v >= pair.u) {
        throw DomainError("condensate pair needs v < u");
    }
    const double q = pair.v / pair.u;
    return GeometricParameter(q * q);
}

} // namespace

double condensate_pair_entropy_closed_form(const CondensatePair& pair) {
    (void)pair_ratio(pair);
    if (pair.v == 0.0) {
        return 0.0;
    }
    const double q = (pair.u / pair.v) * (pair.u / pair.v);
    return std::log(q) / (q - 1.0) - std::log1p(-1.0 / q);
}

double condensate_entanglement(std::span<const CondensatePair> pairs) {
    double total = 0.0;
    for (const CondensatePair& p : pairs) {
        total += geometric_entropy(pair_ratio(p));
    }
    return total;
}

double unruh_temperature(double acceleration, Units units) {
    return temperature_from_rate(acceleration, units, "acceleration");
}

double hawking_temperature(double surface_gravity, Units units) {
    return temperature_from_rate(surface_gravity, units, "surface gravity");
}

PureBipartiteState two_mode_squeezed_state(double tau, int cutoff, bool with_phase) {
    if (!(tau >= 0.0 && tau < 1.0)) {
        throw DomainError("squeeze ratio tau must lie in [0, 1)");
    }
    if (cutoff < 0) {
        throw ValidationError("cutoff must be non-negative");
    }
    const Complex step = with_phase ? Complex(0.0, -tau) : Complex(tau, 0.0);
    ComplexMatrix amps = ComplexMatrix::Zero(cutoff + 1, cutoff + 1);
    Complex amp(1.0, 0.0);
    for (int n = 0; n <= cutoff; ++n) {
        amps(n, n) = amp;
        amp *= step;
    }
    return PureBipartiteState(std::move(amps)).normalized();
}

} // namespace sqent::modes

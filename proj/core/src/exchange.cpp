// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#include <sqent/error.hpp>
#include <sqent/fermi_gas.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace sqent::fermi {

ExchangeValue::ExchangeValue(double f) : f_(f) {
    if (!(std::abs(f) <= 1.0)) {
        throw DomainError("exchange value must satisfy |f| <= 1, got " + std::to_string(f));
    }
}

namespace detail {

double exchange_series(double x) {
    // 3 j1(x)/x = sum_k c_k x^(2k), c_0 = 1, c_{k+1} = -c_k / (2 (k+1) (2k+5)).
    const double x2 = x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 30; ++k) {
        term *= -x2 / (2.0 * (k + 1) * (2 * k + 5));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

double exchange_closed_form(double x) {
    return 3.0 * (std::sin(x) - x * std::cos(x)) / (x * x * x);
}

} // namespace detail

ExchangeValue exchange_f(double x) {
    if (!(x >= 0.0)) {
        throw DomainError("exchange_f needs a non-negative separation");
    }
    if (std::isinf(x)) {
        return ExchangeValue(0.0);
    }
    return ExchangeValue(x <= kSeriesSwitch ? detail::exchange_series(x) : detail::exchange_closed_form(x));
}

double exchange_first_zero() {
    // sin x - x cos x changes sign once on (pi, 3 pi / 2).
    double lo = std::numbers::pi;
    double hi = 1.5 * std::numbers::pi;
    const auto g = [](double x) { return std::sin(x) - x * std::cos(x); };
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    return std::abs(g(lo)) < std::abs(g(hi)) ? lo : hi;
}

EntanglementRadius entanglement_radius(double k_fermi) {
    if (!(k_fermi > 0.0) || !std::isfinite(k_fermi)) {
        throw DomainError("Fermi wavenumber must be positive and finite");
    }
    // f decreases monotonically from 1 to 0 on (0, first zero).
    const auto g = [](double x) {
        const double f = exchange_f(x).value();
        return f * f - 0.5;
    };
    double lo = 0.0;
    double hi = exchange_first_zero();
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    const double x = std::abs(g(lo)) < std::abs(g(hi)) ? lo : hi;
    return {x, x / k_fermi, std::abs(g(x))};
}

} // namespace sqent::fermi

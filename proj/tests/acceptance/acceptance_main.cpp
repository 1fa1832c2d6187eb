// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion. With arguments, runs
// only the listed criterion numbers. Exit status is 1 when any selected
// criterion fails.

#include <sqent/fermi_gas.hpp>
#include <sqent/fock_oracle.hpp>
#include <sqent/measures.hpp>
#include <sqent/mode_transform.hpp>
#include <sqent_cli/cli.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sqent;

constexpr measures::Bipartition kQubits{2, 2};
constexpr double kLn2 = std::numbers::ln2;

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Accumulates checks; each check appends "name value op bound" to the detail.
class Checks {
public:
    void at_most(const std::string& what, double value, double bound) {
        add(what, value <= bound, sci(value) + " <= " + sci(bound));
    }
    void at_least(const std::string& what, double value, double bound) {
        add(what, value >= bound, sci(value) + " >= " + sci(bound));
    }
    void truth(const std::string& what, bool ok, const std::string& shown) { add(what, ok, shown); }

    [[nodiscard]] Outcome outcome() const { return {pass_, detail_}; }

    static std::string sci(double v) {
        std::ostringstream ss;
        ss << std::setprecision(3) << std::scientific << v;
        return ss.str();
    }

private:
    void add(const std::string& what, bool ok, const std::string& shown) {
        pass_ = pass_ && ok;
        detail_ += (detail_.empty() ? "" : "; ") + what + " " + shown + (ok ? "" : " [miss]");
    }

    bool pass_ = true;
    std::string detail_;
};

struct Criterion {
    int id;
    std::string name;
    double max_seconds; // <= 0: no runtime bound
    std::function<Outcome()> body;
};

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

Outcome singlet_endpoint() {
    Checks c;
    const DensityMatrix rho = fermi::two_electron_rho(fermi::ExchangeValue(1.0)).normalized();
    ComplexMatrix singlet = ComplexMatrix::Zero(4, 4);
    singlet(1, 1) = singlet(2, 2) = 0.5;
    singlet(1, 2) = singlet(2, 1) = -0.5;
    c.at_most("|EoF - ln 2|", std::abs(measures::entanglement_of_formation(rho) - kLn2), 1e-9);
    c.at_most("max |rho - singlet|", max_abs(rho.matrix() - singlet), 1e-12);
    return c.outcome();
}

Outcome ppt_threshold() {
    Checks c;
    double quoted_gap = 0.0;
    double derived_gap = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto s = fermi::ppt_spectrum_two_electron(fermi::ExchangeValue(k / 999.0));
        for (std::size_t i = 0; i < 4; ++i) {
            quoted_gap = std::max(quoted_gap, std::abs(s.analytic[i] - s.numeric[i]));
            derived_gap = std::max(derived_gap, std::abs(s.derived[i] - s.numeric[i]));
        }
    }
    c.at_most("max |analytic - numeric| over 1000 f", quoted_gap, 1e-12);
    c.truth("(for reference: {1-2f^2, 1, 1, 1} vs numeric", true, Checks::sci(derived_gap) + ")");
    const double edge = 1.0 / std::numbers::sqrt2;
    const double below = fermi::ppt_spectrum_two_electron(fermi::ExchangeValue(edge - 1e-10)).numeric[0];
    const double above = fermi::ppt_spectrum_two_electron(fermi::ExchangeValue(edge + 1e-10)).numeric[0];
    c.truth("sign change at 1/sqrt2 +- 1e-10", below > 0.0 && above < 0.0,
            "(" + Checks::sci(below) + ", " + Checks::sci(above) + ")");
    return c.outcome();
}

Outcome entanglement_radius() {
    Checks c;
    const auto e = fermi::entanglement_radius(1.0);
    c.at_most("residual", e.residual, 1e-12);
    c.truth("x* in (1.80, 1.83)", e.x_star > 1.80 && e.x_star < 1.83, Checks::sci(e.x_star));
    c.truth("|x* - pi/8| > 1", std::abs(e.x_star - std::numbers::pi / 8) > 1.0,
            Checks::sci(std::abs(e.x_star - std::numbers::pi / 8)));
    return c.outcome();
}

Outcome geometric_entropy_oracle() {
    Checks c;
    double worst = 0.0;
    for (int k = 1; k <= 9; ++k) {
        const double t = k / 10.0;
        const double closed = modes::geometric_entropy(modes::GeometricParameter(t));
        const double oracle = measures::schmidt_entropy(modes::two_mode_squeezed_state(std::sqrt(t), 400));
        worst = std::max(worst, std::abs(closed - oracle));
    }
    c.at_most("max |S(t) - Schmidt| over t = 0.1..0.9", worst, 1e-10);
    return c.outcome();
}

Outcome bogoliubov_vacuum_oracle() {
    Checks c;
    const fock::LadderOperatorSet ops = fock::build_ladder(2, 30);
    const std::array<int, 1> left{0};
    for (double r : {0.25, 0.5, 1.0}) {
        const modes::BogoliubovMap map = modes::BogoliubovMap::two_mode_squeeze(r);
        const fock::TruncatedFockState vac = fock::numeric_vacuum(ops, map);
        const double occ = fock::expectation(ops, vac, ops.number(0)).real();
        const double t = std::tanh(r) * std::tanh(r);
        std::ostringstream tag;
        tag << "r=" << r;
        c.at_most(tag.str() + " |n - sum|beta|^2|", std::abs(occ - modes::vacuum_occupation(map, 0)), 1e-6);
        c.at_most(tag.str() + " |S - S(tanh^2 r)|",
                  std::abs(fock::bipartition_entropy(vac, left) -
                           modes::geometric_entropy(modes::GeometricParameter(t))),
                  1e-6);
        c.truth(tag.str() + " tail", true, Checks::sci(vac.tail_mass));
    }
    return c.outcome();
}

Outcome canonicality_detector() {
    Checks c;
    const auto mix = modes::check_canonical(modes::BogoliubovMap::balanced_particle_hole_mix());
    c.at_most("textbook mix |residual - 1|", std::abs(mix.commutator - 1.0), 1e-12);
    c.truth("textbook mix flagged", !mix.canonical, mix.canonical ? "canonical" : "non-canonical");
    double worst = 0.0;
    std::vector<modes::BogoliubovMap> maps{modes::BogoliubovMap::identity(2), modes::BogoliubovMap::identity(5)};
    for (double r : {0.1, 0.5, 1.0, 2.0}) {
        maps.push_back(modes::BogoliubovMap::two_mode_squeeze(r));
    }
    bool all_canonical = true;
    for (const auto& m : maps) {
        const auto res = modes::check_canonical(m);
        worst = std::max({worst, res.commutator, res.symmetry});
        all_canonical = all_canonical && res.canonical;
    }
    c.at_most("identity/cosh-sinh max residual", worst, 1e-13);
    c.truth("identity/cosh-sinh pass", all_canonical, all_canonical ? "yes" : "no");
    return c.outcome();
}

/// The equal-f three-electron matrix exactly as displayed in the literature.
Eigen::MatrixXd displayed_three(double f) {
    const double p = 1 - 3 * f * f + 2 * f * f * f;
    const double d = 1 - f * f;
    const double a = -f * f;
    const double b = -f * f + f * f * f;
    Eigen::MatrixXd m(8, 8);
    // clang-format off
    m << p, 0, 0, 0, 0, 0, 0, 0,
         0, d, a, 0, b, 0, 0, 0,
         0, a, d, 0, b, 0, 0, 0,
         0, 0, 0, d, 0, b, b, 0,
         0, b, b, 0, d, 0, 0, 0,
         0, 0, 0, b, 0, d, 0, 0,
         0, 0, 0, b, 0, 0, d, 0,
         0, 0, 0, 0, 0, 0, 0, p;
    // clang-format on
    return m;
}

fermi::ExchangeGeometry equilateral(double side) {
    return fermi::ExchangeGeometry::dimensionless(
        {{0, 0, 0}, {side, 0, 0}, {side / 2, side * std::sqrt(3.0) / 2, 0}});
}

Outcome permutation_sum_equivalence() {
    Checks c;
    double two_gap = 0.0;
    for (int k = 0; k <= 200; ++k) {
        const double x = 0.03 * k;
        const auto g = fermi::ExchangeGeometry::dimensionless({{0, 0, 0}, {x, 0, 0}});
        const double f = fermi::exchange_f(x).value();
        Eigen::MatrixXd printed = Eigen::MatrixXd::Zero(4, 4);
        printed.diagonal() << 1 - f * f, 1, 1, 1 - f * f;
        printed(1, 2) = printed(2, 1) = -f * f;
        two_gap = std::max(two_gap, max_abs(fermi::n_electron_rho(g).matrix() - printed.cast<Complex>()));
    }
    c.at_most("4x4 max entry gap", two_gap, 1e-14);

    double three_gap = 0.0;
    double off_display_gap = 0.0;
    std::set<std::pair<int, int>> mismatched;
    for (int k = 0; k <= 200; ++k) {
        const auto g = equilateral(0.03 * k);
        const double f = g.exchange(0, 1).value();
        const Eigen::MatrixXd diff = fermi::n_electron_rho(g).matrix().real() - displayed_three(f);
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                const double gap = std::abs(diff(i, j));
                three_gap = std::max(three_gap, gap);
                if (gap > 1e-14) {
                    mismatched.insert({i, j});
                }
                Eigen::MatrixXd corrected = displayed_three(f);
                corrected(1, 2) = corrected(2, 1) = corrected(5, 6) = corrected(6, 5) = -f * f + f * f * f;
                off_display_gap =
                    std::max(off_display_gap, std::abs(fermi::n_electron_rho(g).matrix().real()(i, j) - corrected(i, j)));
            }
        }
    }
    c.at_most("8x8 max entry gap vs display", three_gap, 1e-14);
    std::string where;
    for (const auto& [i, j] : mismatched) {
        where += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    c.truth("(display mismatches at", true, (where.empty() ? "none" : where) + ")");
    c.truth("(with those entries read as -f^2+f^3, gap", true, Checks::sci(off_display_gap) + ")");

    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> u(0.0, 2.5);
    double worst_min = 0.0;
    bool hermitian = true;
    for (int n : {4, 5}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<fermi::Vec3> pos(static_cast<std::size_t>(n));
            for (auto& p : pos) {
                p = {u(rng), u(rng), u(rng)};
            }
            const DensityMatrix rho = fermi::n_electron_rho(fermi::ExchangeGeometry::dimensionless(std::move(pos)));
            hermitian = hermitian && rho.matrix() == rho.matrix().adjoint();
            worst_min = std::min(worst_min, rho.min_eigenvalue());
        }
    }
    c.truth("n=4,5 Hermitian", hermitian, hermitian ? "yes" : "no");
    c.at_least("n=4,5 min eigenvalue", worst_min, -1e-10);
    return c.outcome();
}

Outcome three_to_two() {
    Checks c;
    double worst = 0.0;
    for (double f1 : {0.0, 0.5, 0.9, 1.0}) {
        const DensityMatrix rho123 = fermi::three_electron_rho(fermi::ExchangeValue(f1), fermi::ExchangeValue(1e-9),
                                                               fermi::ExchangeValue(1e-9));
        const DensityMatrix expected = fermi::two_electron_rho(fermi::ExchangeValue(f1)).normalized();
        worst = std::max(worst, max_abs(fermi::spin_trace_third(rho123).matrix() - expected.matrix()));
    }
    c.at_most("max entry gap over f1 = 0, 0.5, 0.9, 1", worst, 1e-6);
    return c.outcome();
}

Outcome correlations_outlive_entanglement() {
    Checks c;
    const double re = fermi::entanglement_radius(1.0).x_star;
    // 101 points over [r_e, 3 r_e]; the first (r = r_e) is outside the open end.
    const auto rows = fermi::correlation_scan({re, 3 * re, 101, 1.0});
    double max_eof = 0.0;
    double min_mi = INFINITY;
    double min_abs_f = INFINITY;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        max_eof = std::max(max_eof, rows[i].eof_nats);
        if (rows[i].f != 0.0) {
            min_mi = std::min(min_mi, rows[i].mutual_info_nats);
        }
        min_abs_f = std::min(min_abs_f, std::abs(rows[i].f));
    }
    c.truth("max EoF on (r_e, 3 r_e]", max_eof == 0.0, Checks::sci(max_eof) + " == 0");
    c.truth("min MI where f != 0", min_mi > 1e-12, Checks::sci(min_mi) + " > 1.000e-12");
    c.truth("(min |f| on grid", true, Checks::sci(min_abs_f) + ")");
    const auto mi = [](double f) {
        return measures::mutual_information(fermi::two_electron_rho(fermi::ExchangeValue(f)).normalized(), kQubits);
    };
    c.at_most("|MI(f=0)|", std::abs(mi(0.0)), 1e-12);
    c.at_most("|MI(f=1) - 2 ln 2|", std::abs(mi(1.0) - 2 * kLn2), 1e-9);
    return c.outcome();
}

Outcome boson_counterpart() {
    Checks c;
    const DensityMatrix rho = fermi::boson_polarization_rho();
    c.at_most("|purity - 1|", std::abs(rho.purity() - 1.0), 1e-12);
    c.at_most("concurrence", measures::concurrence(rho), 1e-12);
    c.at_least("min PPT eigenvalue", measures::min_ppt_eigenvalue(rho, kQubits), -1e-12);
    return c.outcome();
}

Outcome overlap_model() {
    Checks c;
    double worst = 0.0;
    bool negative = true;
    for (int k = 1; k <= 10; ++k) {
        const double eps = k / 10.0;
        const double m = measures::min_ppt_eigenvalue(fermi::overlap_model_rho(eps).normalized(), kQubits);
        worst = std::max(worst, std::abs(m + eps * eps / 2));
        negative = negative && m < 0.0;
    }
    c.at_most("max |min PPT + eps^2/2| over eps = 0.1..1", worst, 1e-12);
    c.truth("strictly negative for eps > 0", negative, negative ? "yes" : "no");
    const double at_zero = measures::min_ppt_eigenvalue(fermi::overlap_model_rho(0.0).normalized(), kQubits);
    c.at_most("|min PPT at eps = 0|", std::abs(at_zero), 1e-12);
    return c.outcome();
}

std::string run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    if (sqent::cli::run(args, out, err) != 0) {
        return "exit error: " + err.str();
    }
    return out.str();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Outcome cli_goldens() {
    Checks c;
    const std::string scan = run_cli({"fermi", "scan", "--rmin", "0", "--rmax", "3", "--steps", "11"});
    const std::string osc = run_cli({"oscillator", "--lambda", "0.25", "--omega", "1"});
    const std::string scan_golden = slurp(SQENT_GOLDEN_DIR "/fermi_scan.csv");
    const std::string osc_golden = slurp(SQENT_GOLDEN_DIR "/oscillator.txt");
    c.truth("fermi scan golden", !scan_golden.empty() && scan == scan_golden,
            std::to_string(scan.size()) + " bytes vs " + std::to_string(scan_golden.size()));
    c.truth("oscillator golden", !osc_golden.empty() && osc == osc_golden,
            std::to_string(osc.size()) + " bytes vs " + std::to_string(osc_golden.size()));
    return c.outcome();
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "singlet endpoint", 1.0, singlet_endpoint},
        {2, "PPT threshold", 5.0, ppt_threshold},
        {3, "entanglement radius", 1.0, entanglement_radius},
        {4, "geometric-entropy oracle", 5.0, geometric_entropy_oracle},
        {5, "Bogoliubov vacuum oracle", 60.0, bogoliubov_vacuum_oracle},
        {6, "canonicality detector", 0.0, canonicality_detector},
        {7, "permutation-sum equivalence", 30.0, permutation_sum_equivalence},
        {8, "three-to-two consistency", 0.0, three_to_two},
        {9, "correlation vs entanglement", 0.0, correlations_outlive_entanglement},
        {10, "boson counterpart", 0.0, boson_counterpart},
        {11, "overlap model", 0.0, overlap_model},
        {12, "CLI golden files", 0.0, cli_goldens},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        char* end = nullptr;
        const long id = std::strtol(argv[i], &end, 10);
        if (*end != '\0' || id < 1 || id > static_cast<long>(criteria.size())) {
            std::cerr << "usage: " << argv[0] << " [criterion number ...]\n";
            return 2;
        }
        selected.insert(static_cast<int>(id));
    }

    bool all_pass = true;
    for (const auto& crit : criteria) {
        if (!selected.empty() && !selected.contains(crit.id)) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome result;
        try {
            result = crit.body();
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream timing;
        timing << std::fixed << std::setprecision(3) << seconds << " s";
        if (crit.max_seconds > 0.0) {
            const bool in_time = seconds < crit.max_seconds;
            timing << (in_time ? " < " : " >= ") << crit.max_seconds << " s" << (in_time ? "" : " [miss]");
            result.pass = result.pass && in_time;
        }
        all_pass = all_pass && result.pass;
        std::cout << (result.pass ? "PASS" : "FAIL") << " [" << crit.id << "] " << crit.name << ": " << result.detail
                  << " (" << timing.str() << ")\n";
    }
    return all_pass ? 0 : 1;
}

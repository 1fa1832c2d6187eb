// Copyright 2026 The sqent Authors
// SPDX-License-Identifier: Apache-2.0

#include <sqent/error.hpp>
#include <sqent/fermi_gas.hpp>
#include <sqent/fock_oracle.hpp>
#include <sqent/measures.hpp>
#include <sqent/mode_transform.hpp>
#include <sqent_cli/cli.hpp>
#include <sqent_cli/inputs.hpp>
#include <sqent_cli/record.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

namespace sqent::cli {

namespace {

constexpr measures::Bipartition kQubits{2, 2};
/// Relative tolerance on the minimum eigenvalue for the "psd" flag.
constexpr double kPsdReport = 1e-10;

/// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    bool bits = false;
    std::string output;

    double lambda = 0.0;
    double omega = 0.0;
    int cutoff = modes::kDefaultEntropyCutoff;
    double hbar_omega_over_k = 1.0;

    std::string file;
    int mode = 0;
    int fock_cutoff = 30;

    double acceleration = 0.0;
    double kappa = 0.0;
    std::string units = "natural";

    std::optional<double> kf;
    double rmin = 0.0;
    double rmax = 0.0;
    int steps = 0;
    std::string format = "csv";
    std::optional<double> f1;
    std::optional<double> f2;
    std::optional<double> f3;
    std::string positions;
    bool pairwise = false;

    double epsilon = 0.0;
};

Field num(std::string key, double v) { return {std::move(key), v}; }
Field integer(std::string key, long long v) { return {std::move(key), static_cast<std::int64_t>(v)}; }
Field flag(std::string key, bool v) { return {std::move(key), v}; }
Field text(std::string key, std::string v) { return {std::move(key), std::move(v)}; }

modes::Units parse_units(const std::string& u) { return u == "si" ? modes::Units::si : modes::Units::natural; }

void echo_kf(Record& r, const Options& o) {
    r.parameters.push_back(num("kf", o.kf.value_or(1.0)));
    r.parameters.push_back(flag("dimensionless", !o.kf.has_value()));
}

fermi::ExchangeGeometry load_geometry(const Options& o) {
    std::istringstream in(read_file(o.positions));
    auto pos = parse_positions(in);
    return o.kf ? fermi::ExchangeGeometry(*o.kf, std::move(pos))
                : fermi::ExchangeGeometry::dimensionless(std::move(pos));
}

/// Trace, Hermiticity and positivity of a raw spin matrix.
void add_matrix_diagnostics(Record& r, const DensityMatrix& rho) {
    const double tr = rho.trace();
    r.results.push_back(num("trace", tr));
    r.results.push_back(flag("hermitian", rho.matrix() == rho.matrix().adjoint()));
    const double min_ev = rho.min_eigenvalue();
    r.results.push_back(num("min_eigenvalue", min_ev));
    r.results.push_back(flag("psd", min_ev >= -kPsdReport * std::max(1.0, std::abs(tr))));
    r.diagnostics.push_back(num("psd_tolerance", kPsdReport));
}

Record oscillator(const Options& o) {
    Record r{"oscillator"};
    r.parameters = {num("lambda", o.lambda), num("omega", o.omega), integer("cutoff", o.cutoff),
                    num("hbar_omega_over_k", o.hbar_omega_over_k)};
    const modes::OscillatorPair pair(o.omega, o.lambda);
    const double t = pair.schmidt_ratio().value();
    const double closed = modes::coupled_oscillator_entanglement(pair);
    const double oracle =
        measures::schmidt_entropy(modes::two_mode_squeezed_state(std::sqrt(t), o.cutoff, /*with_phase=*/false));
    r.results = {num("squeeze_ratio", pair.squeeze_ratio()), num("t", t), num("entanglement_nats", closed),
                 num("effective_temperature", modes::effective_temperature(pair, o.hbar_omega_over_k))};
    r.oracle = {num("entanglement_oracle_nats", oracle), num("oracle_abs_diff_nats", std::abs(closed - oracle))};
    r.diagnostics = {num("truncated_tail_mass", std::pow(t, o.cutoff + 1))};
    return r;
}

Record bogoliubov(const Options& o) {
    Record r{"bogoliubov"};
    std::istringstream in(read_file(o.file));
    const modes::BogoliubovMap map = parse_bogoliubov_map(in);
    r.parameters = {text("file", o.file), integer("mode", o.mode), integer("cutoff", o.fock_cutoff)};
    const modes::CanonicalResiduals res = modes::check_canonical(map);
    r.results = {integer("modes", map.modes()),
                 num("commutator_residual", res.commutator),
                 num("symmetry_residual", res.symmetry),
                 flag("canonical", res.canonical)};
    if (!res.canonical) {
        // Occupations are only defined for canonical maps; report the residuals alone.
        r.diagnostics.push_back(text("oracle_status", "skipped: map is not canonical"));
        return r;
    }
    r.results.push_back(num("vacuum_occupation", modes::vacuum_occupation(map, o.mode)));
    r.results.push_back(num("vacuum_occupation_forward", modes::vacuum_occupation_forward(map, o.mode)));
    r.results.push_back(num("beta_row_entropy_nats", modes::beta_row_entropy(map, o.mode)));
    if (map.modes() != 2) {
        r.diagnostics.push_back(text("oracle_status", "skipped: the Fock oracle runs for two modes only"));
        return r;
    }
    try {
        const fock::LadderOperatorSet ops = fock::build_ladder(2, o.fock_cutoff);
        const fock::TruncatedFockState vac = fock::numeric_vacuum(ops, map);
        const std::array<int, 1> left{o.mode};
        r.oracle = {num("vacuum_occupation_oracle", fock::expectation(ops, vac, ops.number(o.mode)).real()),
                    num("entropy_oracle_nats", fock::bipartition_entropy(vac, left))};
        r.diagnostics = {text("oracle_status", "ok"), num("oracle_residual", vac.residual),
                         num("oracle_tail_mass", vac.tail_mass), num("oracle_spectral_gap", vac.spectral_gap)};
    } catch (const TruncationError& e) {
        r.diagnostics.push_back(text("oracle_status", std::string("truncated: ") + e.what()));
    } catch (const AmbiguityError& e) {
        r.diagnostics.push_back(text("oracle_status", std::string("ambiguous: ") + e.what()));
    } catch (const ResourceError& e) {
        r.diagnostics.push_back(text("oracle_status", std::string("too large: ") + e.what()));
    }
    return r;
}

Record condensate(const Options& o) {
    Record r{"condensate"};
    std::istringstream in(read_file(o.file));
    const auto pairs = parse_condensate_pairs(in);
    r.parameters = {text("file", o.file)};
    const double total = modes::condensate_entanglement(pairs);
    Table t{{"pair", "u", "v", "ratio_squared", "canonical", "entropy_nats", "entropy_uv_form_nats"}, {}};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        const double ratio = (p.v / p.u) * (p.v / p.u);
        const std::array<modes::CondensatePair, 1> one{p};
        t.rows.push_back({static_cast<std::int64_t>(i), p.u, p.v, ratio, p.is_canonical(),
                          modes::condensate_entanglement(one), modes::condensate_pair_entropy_closed_form(p)});
    }
    r.results = {integer("pairs", static_cast<long long>(pairs.size())), num("total_entanglement_nats", total)};
    r.tables.emplace_back("pairs", std::move(t));
    return r;
}

Record horizon(const Options& o, bool unruh) {
    Record r{unruh ? "unruh" : "hawking"};
    const double input = unruh ? o.acceleration : o.kappa;
    r.parameters = {num(unruh ? "acceleration" : "kappa", input), text("units", o.units)};
    const modes::Units units = parse_units(o.units);
    const double temp =
        unruh ? modes::unruh_temperature(input, units) : modes::hawking_temperature(input, units);
    r.results = {num("temperature", temp), text("temperature_units", units == modes::Units::si ? "K" : "natural")};
    return r;
}

Table scan_table(const Options& o) {
    const auto rows = fermi::correlation_scan({o.rmin, o.rmax, o.steps, o.kf.value_or(1.0)});
    Table t{{"r", "f", "min_ppt_eig", "concurrence", "eof_nats", "mutual_info_nats", "negativity"}, {}};
    for (const auto& row : rows) {
        t.rows.push_back(
            {row.r, row.f, row.min_ppt_eig, row.concurrence, row.eof_nats, row.mutual_info_nats, row.negativity});
    }
    return t;
}

Record radius(const Options& o) {
    Record r{"fermi radius"};
    echo_kf(r, o);
    const fermi::EntanglementRadius e = fermi::entanglement_radius(o.kf.value_or(1.0));
    r.results = {num("x_star", e.x_star), num("radius", e.radius)};
    r.diagnostics = {num("residual", e.residual)};
    return r;
}

Record three(const Options& o) {
    Record r{"fermi three"};
    const bool any_f = o.f1 || o.f2 || o.f3;
    const bool all_f = o.f1 && o.f2 && o.f3;
    if (any_f == !o.positions.empty() || (any_f && !all_f)) {
        throw UsageError("fermi three needs either all of --f1 --f2 --f3 or --positions");
    }
    if (o.kf && any_f) {
        throw UsageError("--kf applies to --positions only");
    }
    double f12 = 0.0;
    double f13 = 0.0;
    double f23 = 0.0;
    if (all_f) {
        r.parameters = {num("f1", *o.f1), num("f2", *o.f2), num("f3", *o.f3)};
        f12 = *o.f1;
        f13 = *o.f2;
        f23 = *o.f3;
    } else {
        r.parameters = {text("positions", o.positions)};
        echo_kf(r, o);
        const fermi::ExchangeGeometry g = load_geometry(o);
        if (g.size() != 3) {
            throw ValidationError("fermi three needs exactly three positions, got " + std::to_string(g.size()));
        }
        f12 = g.exchange(0, 1).value();
        f13 = g.exchange(0, 2).value();
        f23 = g.exchange(1, 2).value();
        r.results = {num("f12", f12), num("f13", f13), num("f23", f23)};
    }
    const DensityMatrix rho =
        fermi::three_electron_rho(fermi::ExchangeValue(f12), fermi::ExchangeValue(f13), fermi::ExchangeValue(f23));
    add_matrix_diagnostics(r, rho);
    r.matrices.emplace_back("rho", rho.matrix());
    return r;
}

Record n_electrons(const Options& o) {
    Record r{"fermi n"};
    r.parameters = {text("positions", o.positions)};
    echo_kf(r, o);
    r.parameters.push_back(flag("pairwise", o.pairwise));
    const fermi::ExchangeGeometry g = load_geometry(o);
    const DensityMatrix rho = fermi::n_electron_rho(g);
    r.results = {integer("electrons", g.size()), integer("dim", rho.dim())};
    add_matrix_diagnostics(r, rho);
    if (!o.pairwise) {
        return r;
    }
    if (g.size() < 2) {
        throw ValidationError("--pairwise needs at least two electrons");
    }
    const DensityMatrix state = rho.normalized();
    const std::vector<int> dims(static_cast<std::size_t>(g.size()), 2);
    Table t{{"i", "j", "separation", "f", "concurrence", "eof_nats", "mutual_info_nats"}, {}};
    for (int i = 0; i < g.size(); ++i) {
        for (int j = i + 1; j < g.size(); ++j) {
            const std::array<int, 2> keep{i, j};
            const DensityMatrix two = measures::partial_trace(state, dims, keep).normalized().to_state();
            const double c = measures::concurrence(two);
            t.rows.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), g.separation(i, j),
                              g.exchange(i, j).value(), c, measures::eof_from_concurrence(c),
                              measures::mutual_information(two, kQubits)});
        }
    }
    r.tables.emplace_back("pairs", std::move(t));
    return r;
}

void add_two_qubit_measures(Record& r, const DensityMatrix& state) {
    const double c = measures::concurrence(state);
    r.results.push_back(num("min_ppt_eig", measures::min_ppt_eigenvalue(state, kQubits)));
    r.results.push_back(num("negativity", measures::negativity(state, kQubits)));
    r.results.push_back(num("concurrence", c));
    r.results.push_back(num("eof_nats", measures::eof_from_concurrence(c)));
    r.results.push_back(num("mutual_info_nats", measures::mutual_information(state, kQubits)));
}

Record boson() {
    Record r{"boson"};
    const DensityMatrix rho = fermi::boson_polarization_rho();
    r.results = {num("purity", rho.purity())};
    add_two_qubit_measures(r, rho);
    r.matrices.emplace_back("rho", rho.matrix());
    return r;
}

Record overlap(const Options& o) {
    Record r{"overlap"};
    r.parameters = {num("epsilon", o.epsilon)};
    const DensityMatrix raw = fermi::overlap_model_rho(o.epsilon);
    r.results = {num("trace", raw.trace())};
    add_two_qubit_measures(r, raw.normalized().to_state());
    r.matrices.emplace_back("rho", raw.matrix());
    return r;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Entanglement measures for mode transformations and Fermi-gas spin correlations.", "sqent"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Emit JSON instead of text");
    app.add_flag("--bits", o.bits, "Report entropies in bits (renames *_nats to *_bits)");
    app.add_option("--output", o.output, "Write output to PATH instead of standard output");

    auto* osc = app.add_subcommand("oscillator", "Entanglement of two coupled oscillators");
    osc->add_option("--lambda", o.lambda, "Coupling")->required();
    osc->add_option("--omega", o.omega, "Frequency")->required();
    osc->add_option("--cutoff", o.cutoff, "Truncation for the Schmidt oracle")->check(CLI::Range(1, 100000));
    osc->add_option("--hbar-omega-over-k", o.hbar_omega_over_k, "Temperature scale hbar omega / k")
        ->check(CLI::PositiveNumber);

    auto* bog = app.add_subcommand("bogoliubov", "Canonicality and vacuum occupation of a Bogoliubov map");
    bog->add_option("--file", o.file, "JSON map with modes, alpha, beta")->required();
    bog->add_option("--mode", o.mode, "Mode index")->check(CLI::NonNegativeNumber);
    bog->add_option("--cutoff", o.fock_cutoff, "Fock cutoff for the two-mode oracle")->check(CLI::Range(1, 140));

    auto* cond = app.add_subcommand("condensate", "Pair entanglement of a condensate");
    cond->add_option("--file", o.file, "CSV with header u,v")->required();

    const std::vector<std::string> unit_names{"natural", "si"};
    auto* unruh = app.add_subcommand("unruh", "Unruh temperature");
    unruh->add_option("--acceleration", o.acceleration, "Proper acceleration")->required();
    unruh->add_option("--units", o.units, "natural or si")->check(CLI::IsMember(unit_names));
    auto* hawking = app.add_subcommand("hawking", "Hawking temperature");
    hawking->add_option("--kappa", o.kappa, "Surface gravity")->required();
    hawking->add_option("--units", o.units, "natural or si")->check(CLI::IsMember(unit_names));

    auto* fermi = app.add_subcommand("fermi", "Spin correlations in a free Fermi gas");
    fermi->require_subcommand(1);
    auto* scan = fermi->add_subcommand("scan", "Correlation measures versus separation");
    scan->add_option("--kf", o.kf, "Fermi wavenumber; omit for dimensionless k_F r")->check(CLI::PositiveNumber);
    scan->add_option("--rmin", o.rmin, "First separation")->required();
    scan->add_option("--rmax", o.rmax, "Last separation")->required();
    scan->add_option("--steps", o.steps, "Number of rows")->required();
    scan->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    auto* rad = fermi->add_subcommand("radius", "Separation where spin entanglement ends");
    rad->add_option("--kf", o.kf, "Fermi wavenumber; omit for dimensionless k_F r")->check(CLI::PositiveNumber);
    auto* thr = fermi->add_subcommand("three", "Three-electron spin matrix");
    thr->add_option("--f1", o.f1, "Exchange value of electrons 1,2");
    thr->add_option("--f2", o.f2, "Exchange value of electrons 1,3");
    thr->add_option("--f3", o.f3, "Exchange value of electrons 2,3");
    thr->add_option("--positions", o.positions, "CSV with header x,y,z");
    thr->add_option("--kf", o.kf, "Fermi wavenumber for --positions")->check(CLI::PositiveNumber);
    auto* nel = fermi->add_subcommand("n", "n-electron spin matrix diagnostics");
    nel->add_option("--positions", o.positions, "CSV with header x,y,z")->required();
    nel->add_option("--kf", o.kf, "Fermi wavenumber; omit for dimensionless k_F r")->check(CLI::PositiveNumber);
    nel->add_flag("--pairwise", o.pairwise, "Table of two-spin reduced measures for every pair");

    auto* bos = app.add_subcommand("boson", "Polarization state of two bosons at one point");
    auto* ovl = app.add_subcommand("overlap", "Two electrons with overlapping wavefunctions");
    ovl->add_option("--epsilon", o.epsilon, "Overlap in [0, 1]")->required();

    std::vector<const char*> argv{"sqent"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ostringstream buffer;
    const FormatOptions format{o.json, o.bits};
    try {
        if (osc->parsed()) {
            write_record(buffer, oscillator(o), format);
        } else if (bog->parsed()) {
            write_record(buffer, bogoliubov(o), format);
        } else if (cond->parsed()) {
            write_record(buffer, condensate(o), format);
        } else if (unruh->parsed()) {
            write_record(buffer, horizon(o, true), format);
        } else if (hawking->parsed()) {
            write_record(buffer, horizon(o, false), format);
        } else if (scan->parsed()) {
            write_table(buffer, scan_table(o), {o.json || o.format == "json", o.bits});
        } else if (rad->parsed()) {
            write_record(buffer, radius(o), format);
        } else if (thr->parsed()) {
            write_record(buffer, three(o), format);
        } else if (nel->parsed()) {
            write_record(buffer, n_electrons(o), format);
        } else if (bos->parsed()) {
            write_record(buffer, boson(), format);
        } else if (ovl->parsed()) {
            write_record(buffer, overlap(o), format);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }

    if (o.output.empty()) {
        out << buffer.str();
        return kExitOk;
    }
    std::ofstream file(o.output, std::ios::binary);
    file << buffer.str();
    if (!file.flush()) {
        err << "error: cannot write '" << o.output << "'\n";
        return kExitFailure;
    }
    return kExitOk;
}

} // namespace sqent::cli

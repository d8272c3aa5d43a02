// Copyright 2026 The qwl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwl/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwl/errors.hpp"
#include "qwl/matrix_json.hpp"
#include "qwl/register.hpp"
#include "qwl/sic.hpp"
#include "qwl/tomography.hpp"
#include "qwl/universality.hpp"
#include "qwl/weyl.hpp"

#ifndef QWL_VERSION
#define QWL_VERSION "0.0.0"
#endif

namespace qwl::cli {

using nlohmann::json;

namespace {

// Verbosity from QWL_LOG: off, warn (default), info, debug.
int log_level() {
    const char* env = std::getenv("QWL_LOG");
    const std::string v = env != nullptr ? env : "warn";
    if (v == "off") return 0;
    if (v == "info") return 2;
    if (v == "debug") return 3;
    return 1;
}

void log(std::ostream& err, int level, const std::string& msg) {
    static const char* names[] = {"", "warn", "info", "debug"};
    if (level <= log_level()) {
        err << "[qwl " << names[level] << "] " << msg << '\n';
    }
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

/// Failure that still carries a results payload.
struct VerificationFailure {
    std::string message;
};

struct Context {
    std::ostream& err;
    json parameters = json::object();
    json results = json::object();
};

// ---- weyl -------------------------------------------------------------------

struct WeylArgs {
    int d = 2;
    bool json_out = false;
    bool pretty = false;
};

std::string format_matrix(const ComplexMatrix& m) {
    std::ostringstream s;
    s << std::setprecision(6) << std::fixed;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        s << "  ";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const Complex z = m(i, j);
            s << std::setw(10) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::setw(8) << std::abs(z.imag())
              << "i  ";
        }
        s << '\n';
    }
    return s.str();
}

void run_weyl(const WeylArgs& a, Context& ctx, std::ostream& out) {
    ctx.parameters = {{"d", a.d}, {"format", a.pretty ? "pretty" : "json"}};
    const WeylOperators w = build_weyl(a.d);
    const WeylRelationReport r = check_weyl_relation(w);
    ctx.results = {{"d", w.d},
                   {"zeta", complex_json(w.zeta)},
                   {"y_phase", complex_json(w.y_phase)},
                   {"U", matrix_to_json(w.U)},
                   {"V", matrix_to_json(w.V)},
                   {"X", matrix_to_json(w.X)},
                   {"Y", matrix_to_json(w.Y)},
                   {"Z", matrix_to_json(w.Z)},
                   {"relations",
                    {{"uv", r.uv},
                     {"xy", r.xy},
                     {"yz", r.yz},
                     {"xz", r.xz},
                     {"zx_order", r.zx_order},
                     {"powers", r.powers},
                     {"max", r.max()}}},
                   {"tolerance", kExactTol}};
    if (a.pretty) {
        out << "d = " << w.d << "\n";
        for (const auto& [name, m] : {std::pair{"U", &w.U}, {"V", &w.V}, {"X", &w.X}, {"Y", &w.Y}, {"Z", &w.Z}}) {
            out << name << " =\n" << format_matrix(*m);
        }
        out << std::scientific << std::setprecision(3) << "UV - zeta VU: " << r.uv << "\nXY - zeta YX: " << r.xy
            << "\nYZ - zeta ZY: " << r.yz << "\nXZ - zeta ZX: " << r.xz << "\nZX - zeta^-1 XZ: " << r.zx_order
            << "\nX^d, Y^d, Z^d - 1: " << r.powers << "\n";
    }
    if (!(r.max() <= kExactTol)) {
        throw VerificationFailure{"Weyl relations violated beyond tolerance"};
    }
}

// ---- family -----------------------------------------------------------------

struct FamilyArgs {
    int d = 2;
    int n = 1;
    std::string family = "x";
    bool verify = false;
    std::uint64_t seed = 1;
    int draws = 20;
};

void run_family(const FamilyArgs& a, Context& ctx) {
    ctx.parameters = {{"d", a.d}, {"n", a.n}, {"family", a.family}, {"verify", a.verify}, {"seed", a.seed},
                      {"draws", a.draws}};
    const auto ops = a.family == "x" ? build_x_family(a.d, a.n) : build_z_family(a.d, a.n);
    json list = json::array();
    for (const auto& op : ops) {
        list.push_back({{"index", op.index}, {"kind", to_string(op.kind)}, {"matrix", matrix_to_json(op.matrix)}});
    }
    ctx.results = {{"operators", std::move(list)}};
    if (!a.verify) {
        return;
    }
    const WeylOperators w = build_weyl(a.d);
    const QuantumPlaneReport plane = verify_quantum_plane(ops, a.d);
    RandomSource rng(a.seed);
    double power = 0.0;
    for (int t = 0; t < a.draws; ++t) {
        std::vector<Complex> coeffs(ops.size());
        for (auto& c : coeffs) {
            c = rng.complex_normal();
        }
        power = std::max(power, verify_power_identity(ops, coeffs, a.d));
    }
    json report = {{"root", complex_json(commutation_root(ops.front().kind, w))},
                   {"commutation", plane.commutation},
                   {"order", plane.order},
                   {"power_identity", power},
                   {"tolerances", {{"relations", kExactTol}, {"power_identity", 1e-9}}}};
    bool ok = plane.max() <= kExactTol && power <= 1e-9;
    if (a.family == "z" && a.n >= 2) {
        const PairingReport p = verify_pairing(a.d, a.n);
        report["pairing"] = {{"literal", p.literal},
                             {"up_to_phase", p.up_to_phase},
                             {"x_scalar", complex_json(p.x_scalar)},
                             {"z_scalar", complex_json(p.z_scalar)},
                             {"scalar_deviation", p.scalar_deviation}};
        ok = ok && p.up_to_phase <= kExactTol && p.scalar_deviation <= kExactTol;
    }
    ctx.results["verification"] = std::move(report);
    if (!ok) {
        throw VerificationFailure{"family relations violated beyond tolerance"};
    }
}

// ---- universality -----------------------------------------------------------

struct UniversalityArgs {
    int d = 2;
    int n = 2;
    std::string set;
    std::string custom;
    double tol = 1e-8;
};

void run_universality(const UniversalityArgs& a, Context& ctx) {
    ctx.parameters = {{"d", a.d}, {"n", a.n}, {"set", a.custom.empty() ? a.set : "custom"}, {"tol", a.tol}};
    if (!a.custom.empty()) {
        ctx.parameters["custom"] = a.custom;
    }
    HamiltonianSet set;
    if (!a.custom.empty()) {
        set = custom_set(a.d, a.n, "custom", labeled_matrices_from_json(read_json_file(a.custom)));
    } else if (a.set == "theorem1" || a.set == "theorem2") {
        if (a.d != 2) {
            throw DomainError(a.set + " is defined for qubits only (d = 2)");
        }
        set = a.set == "theorem1" ? theorem1_set(a.n) : theorem2_set(a.n);
    } else if (a.set == "theorem3") {
        set = theorem3_set(a.d, a.n);
    } else if (a.set == "qutrit-example") {
        if (a.d != 3) {
            throw DomainError("qutrit-example is defined for d = 3 only");
        }
        set = qutrit_example_set(a.n);
    } else {
        throw CLI::ValidationError("--set", "one of theorem1|theorem2|theorem3|qutrit-example or --custom is required");
    }
    for (const auto& note : set.notes) {
        log(ctx.err, 2, note);
    }

    const auto start = std::chrono::steady_clock::now();
    LieClosureOptions options;
    options.tol = a.tol;
    const UniversalityReport report = is_universal(set, options);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const SetStructureReport structure = check_structure(set);

    json labels = json::array();
    for (const auto& g : set.generators) {
        labels.push_back(g.label);
    }
    ctx.results = {{"set", set.name},
                   {"generators", std::move(labels)},
                   {"notes", set.notes},
                   {"dimension", report.closure.dimension},
                   {"traceless_dimension", report.closure.traceless_dimension},
                   {"contains_identity", report.closure.contains_identity},
                   {"expected", report.expected},
                   {"universal", report.universal},
                   {"converged", report.closure.converged},
                   {"iterations", report.closure.iterations},
                   {"structure",
                    {{"hermiticity", structure.hermiticity},
                     {"neighbour_only", structure.neighbour_only},
                     {"couplings_diagonal", structure.couplings_diagonal}}},
                   {"seconds", seconds}};
    if (!report.closure.converged) {
        throw VerificationFailure{"Lie closure did not converge within the dimension cap"};
    }
}

// ---- mub --------------------------------------------------------------------

struct MubArgs {
    int d = 2;
    bool verify = false;
};

void run_mub(const MubArgs& a, Context& ctx) {
    ctx.parameters = {{"d", a.d}, {"verify", a.verify}};
    const MubSet set = mub_prime(a.d);
    json bases = json::array();
    for (std::size_t b = 0; b < set.bases.size(); ++b) {
        bases.push_back({{"label", set.labels[b]}, {"matrix", matrix_to_json(set.bases[b])}});
    }
    ctx.results = {{"d", set.d}, {"bases", std::move(bases)}};
    if (a.verify) {
        const MubReport r = verify_mub(set);
        ctx.results["verification"] = {
            {"unbiasedness", r.unbiasedness}, {"orthonormality", r.orthonormality}, {"tolerance", kDefaultTol}};
        if (!(r.max() <= kDefaultTol)) {
            throw VerificationFailure{"bases are not mutually unbiased within tolerance"};
        }
    }
}

// ---- tomography -------------------------------------------------------------

struct TomographyArgs {
    int d = 3;
    long long shots = 10000;
    std::uint64_t seed = 0;
    std::string state;
    std::string csv;
};

void write_counts_csv(const std::string& path, const std::vector<MeasurementRecord>& records) {
    std::ofstream f(path);
    if (!f) {
        throw Error(path + ": cannot open for writing");
    }
    f << "basis_index,outcome_index,count\n";
    for (const auto& rec : records) {
        for (std::size_t k = 0; k < rec.counts.size(); ++k) {
            f << rec.basis << ',' << k << ',' << rec.counts[k] << '\n';
        }
    }
}

void run_tomography(const TomographyArgs& a, Context& ctx) {
    ctx.parameters = {{"d", a.d}, {"shots", a.shots}, {"seed", a.seed}, {"state", a.state.empty() ? "random" : a.state}};
    if (!a.csv.empty()) {
        ctx.parameters["csv"] = a.csv;
    }
    const MubSet set = mub_prime(a.d);
    RandomSource rng(a.seed);
    const DensityMatrix rho = a.state.empty() ? random_density(a.d, rng) : make_density(matrix_from_json(read_json_file(a.state)));
    if (rho.d != a.d) {
        throw ShapeError("state dimension " + std::to_string(rho.d) + " differs from --d " + std::to_string(a.d));
    }
    const auto records = simulate_measurements(rho, set, a.shots, rng);
    if (!a.csv.empty()) {
        write_counts_csv(a.csv, records);
    }
    const Reconstruction rec = reconstruct(records, set);

    json counts = json::array();
    for (const auto& r : records) {
        counts.push_back({{"basis_index", r.basis}, {"label", set.labels[static_cast<std::size_t>(r.basis)]},
                          {"shots", r.shots}, {"counts", r.counts}});
    }
    ctx.results = {{"state", matrix_to_json(rho.matrix)},
                   {"counts", std::move(counts)},
                   {"reconstruction", matrix_to_json(rec.state.matrix)},
                   {"diagnostics",
                    {{"residual", rec.residual},
                     {"min_eigenvalue", rec.min_eigenvalue},
                     {"projected", rec.projected},
                     {"frobenius_error", deviation(rec.state.matrix, rho.matrix)}}}};
}

// ---- sic --------------------------------------------------------------------

struct SicArgs {
    int d = 2;
    int restarts = 20;
    std::uint64_t seed = 0;
    double tol = 1e-10;
};

void run_sic(const SicArgs& a, Context& ctx) {
    ctx.parameters = {{"d", a.d}, {"restarts", a.restarts}, {"seed", a.seed}, {"tol", a.tol}};
    RandomSource rng(a.seed);
    SicSearchOptions options;
    options.restarts = a.restarts;
    options.tol = a.tol;
    const SicSearchResult r = search_fiducial(a.d, rng, options);
    ctx.results = {{"found", r.found},
                   {"fiducial", vector_to_json(r.best.fiducial)},
                   {"frame_error", r.best.frame_error},
                   {"max_pair_deviation", r.max_pair_deviation},
                   {"restarts_used", r.restarts_used}};
    if (!r.found) {
        // Not finding a fiducial says nothing about existence.
        throw VerificationFailure{"no fiducial reached the tolerance in " + std::to_string(r.restarts_used) +
                                  " restarts (search failure, not a disproof)"};
    }
}

} // namespace

std::string version() { return QWL_VERSION; }

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weyl-operator toolkit for qudits", "qwl"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version());

    WeylArgs weyl;
    auto* weyl_cmd = app.add_subcommand("weyl", "Weyl pair and generalized Pauli matrices");
    weyl_cmd->add_option("--d", weyl.d, "qudit dimension")->required();
    auto* json_flag = weyl_cmd->add_flag("--json", weyl.json_out, "JSON report (default)");
    weyl_cmd->add_flag("--pretty", weyl.pretty, "human-readable matrices")->excludes(json_flag);

    FamilyArgs family;
    auto* family_cmd = app.add_subcommand("family", "register operator families");
    family_cmd->add_option("--d", family.d)->required();
    family_cmd->add_option("--n", family.n)->required();
    family_cmd->add_option("--family", family.family)->check(CLI::IsMember({"x", "z"}))->capture_default_str();
    family_cmd->add_flag("--verify", family.verify, "check commutation, power and pairing identities");
    family_cmd->add_option("--seed", family.seed, "seed for random coefficients")->capture_default_str();
    family_cmd->add_option("--draws", family.draws, "random coefficient vectors")->check(CLI::PositiveNumber)
        ->capture_default_str();

    UniversalityArgs uni;
    auto* uni_cmd = app.add_subcommand("universality", "Lie-closure certificate for a Hamiltonian set");
    uni_cmd->add_option("--d", uni.d)->required();
    uni_cmd->add_option("--n", uni.n)->required();
    uni_cmd->add_option("--set", uni.set)->check(CLI::IsMember({"theorem1", "theorem2", "theorem3", "qutrit-example"}));
    uni_cmd->add_option("--custom", uni.custom, "JSON list of labeled Hermitian matrices");
    uni_cmd->add_option("--tol", uni.tol, "relative orthogonalization threshold")->capture_default_str();

    MubArgs mub;
    auto* mub_cmd = app.add_subcommand("mub", "mutually unbiased bases for prime d");
    mub_cmd->add_option("--d", mub.d)->required();
    mub_cmd->add_flag("--verify", mub.verify);

    TomographyArgs tomo;
    auto* tomo_cmd = app.add_subcommand("tomography", "simulate MUB measurements and reconstruct the state");
    tomo_cmd->add_option("--d", tomo.d)->required();
    tomo_cmd->add_option("--shots", tomo.shots, "shots per basis")->check(CLI::PositiveNumber)->capture_default_str();
    tomo_cmd->add_option("--seed", tomo.seed)->capture_default_str();
    tomo_cmd->add_option("--state", tomo.state, "density matrix JSON (default: random state from the seed)");
    tomo_cmd->add_option("--csv", tomo.csv, "write counts as CSV to this path");

    SicArgs sic;
    auto* sic_cmd = app.add_subcommand("sic", "SIC-POVM fiducial search");
    sic_cmd->add_option("--d", sic.d)->required();
    sic_cmd->add_option("--restarts", sic.restarts)->check(CLI::PositiveNumber)->capture_default_str();
    sic_cmd->add_option("--seed", sic.seed)->capture_default_str();
    sic_cmd->add_option("--tol", sic.tol)->check(CLI::NonNegativeNumber)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForVersion&) {
        out << version() << '\n';
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "qwl: " << e.what() << '\n';
        return kUsage;
    }

    CLI::App* cmd = app.get_subcommands().front();
    Context ctx{err};
    json report = {{"subcommand", cmd->get_name()}, {"version", version()}};
    const auto start = std::chrono::steady_clock::now();
    int code = kSuccess;
    bool pretty = false;
    std::ostringstream text;
    try {
        if (cmd == weyl_cmd) {
            pretty = weyl.pretty;
            run_weyl(weyl, ctx, text);
        } else if (cmd == family_cmd) {
            run_family(family, ctx);
        } else if (cmd == uni_cmd) {
            run_universality(uni, ctx);
        } else if (cmd == mub_cmd) {
            run_mub(mub, ctx);
        } else if (cmd == tomo_cmd) {
            run_tomography(tomo, ctx);
        } else {
            run_sic(sic, ctx);
        }
    } catch (const VerificationFailure& e) {
        err << "qwl " << cmd->get_name() << ": " << e.message << '\n';
        report["error"] = e.message;
        code = kFailure;
    } catch (const CLI::ValidationError& e) {
        err << "qwl " << cmd->get_name() << ": " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "qwl " << cmd->get_name() << ": " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "qwl " << cmd->get_name() << ": " << e.what() << '\n';
        report["error"] = e.what();
        code = kFailure;
    }
    report["parameters"] = ctx.parameters;
    report["results"] = ctx.results;
    report["elapsed"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log(err, 3, "elapsed " + std::to_string(report["elapsed"].get<double>()) + " s");

    if (pretty) {
        out << text.str();
        if (code != kSuccess) {
            out << "error: " << report["error"].get<std::string>() << '\n';
        }
    } else {
        out << report.dump(2) << '\n';
    }
    return code;
}

} // namespace qwl::cli

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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwl/cli.hpp"
#include "qwl/register.hpp"
#include "qwl/sic.hpp"
#include "qwl/tomography.hpp"
#include "qwl/universality.hpp"
#include "qwl/weyl.hpp"
#include "qutrit_rays.hpp"

using namespace qwl;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = limit_seconds <= 0 || s < limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::string timing = fmt("%.2f s", s);
    if (limit_seconds > 0) timing += fmt(" (limit %g s)", limit_seconds);
    std::printf("%s  #%-2d %s: %s; %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
}

bool bit_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i).real() != b(i).real() || a(i).imag() != b(i).imag()) return false;
    }
    return a.rows() == b.rows() && a.cols() == b.cols();
}

std::string run_results(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::dispatch(args, out, err);
    return nlohmann::json::parse(out.str())["results"].dump();
}

} // namespace

int main() {
    criterion(1, "Weyl relations d=2..16", 1.0, [] {
        double worst = 0.0;
        for (int d = 2; d <= 16; ++d) worst = std::max(worst, check_weyl_relation(build_weyl(d)).max());
        return Outcome{worst <= 1e-12, fmt("max deviation %.2e (tol 1e-12)", worst)};
    });

    criterion(2, "d=2 gives the Pauli matrices", 0, [] {
        const WeylOperators w = build_weyl(2);
        const Complex i(0.0, 1.0);
        ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
        sx << 0.0, 1.0, 1.0, 0.0;
        sy << 0.0, -i, i, 0.0;
        sz << 1.0, 0.0, 0.0, -1.0;
        const bool exact = bit_equal(w.X, sx) && bit_equal(w.Y, sy) && bit_equal(w.Z, sz);
        const std::vector<ComplexMatrix> s{w.X, w.Y, w.Z};
        double anti = 0.0;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                anti = std::max(anti, deviation(s[a] * s[b] + s[b] * s[a], (a == b ? 2.0 : 0.0) * identity(2)));
        return Outcome{exact && anti <= 1e-14,
                       fmt("bit-identical %s, anticommutation %.2e (tol 1e-14)", exact ? "yes" : "no", anti)};
    });

    criterion(3, "quantum-plane and power identities", 10.0, [] {
        double plane = 0.0, power = 0.0;
        for (auto [d, n] : {std::pair{2, 3}, {3, 2}, {5, 2}}) {
            for (const auto& ops : {build_x_family(d, n), build_z_family(d, n)}) {
                const QuantumPlaneReport r = verify_quantum_plane(ops, d);
                plane = std::max({plane, r.commutation, r.order});
                RandomSource rng(1);
                for (int t = 0; t < 20; ++t) {
                    std::vector<Complex> c(ops.size());
                    for (auto& x : c) x = rng.complex_normal();
                    power = std::max(power, verify_power_identity(ops, c, d));
                }
            }
        }
        return Outcome{plane <= 1e-12 && power <= 1e-9,
                       fmt("relations %.2e (tol 1e-12), power identity %.2e (tol 1e-9)", plane, power)};
    });

    criterion(4, "pairing identities", 0, [] {
        double phase = 0.0, literal = 0.0, scalars = 0.0;
        for (auto [d, n] : {std::pair{2, 2}, {3, 2}, {3, 3}}) {
            const PairingReport r = verify_pairing(d, n);
            phase = std::max(phase, r.up_to_phase);
            literal = std::max(literal, r.literal);
            scalars = std::max(scalars, r.scalar_deviation);
        }
        return Outcome{phase <= 1e-12 && scalars <= 1e-12,
                       fmt("up to the fixed unit scalars %.2e, scalar fit %.2e (tol 1e-12); literal form %.2e", phase,
                           scalars, literal)};
    });

    criterion(5, "theorem1 sets are not universal", 60.0, [] {
        const auto r2 = is_universal(theorem1_set(2));
        const auto r3 = is_universal(theorem1_set(3));
        const bool ok = r2.closure.converged && r3.closure.converged && r2.closure.dimension == 6 &&
                        r3.closure.dimension == 15 && !r2.universal && !r3.universal;
        return Outcome{ok, fmt("dimensions %d, %d (expected 6, 15; full 15, 63)", r2.closure.dimension,
                               r3.closure.dimension)};
    });

    criterion(6, "theorem2 sets are universal", 300.0, [] {
        const auto r2 = is_universal(theorem2_set(2));
        const auto r3 = is_universal(theorem2_set(3));
        const bool ok = r2.closure.dimension == 15 && r3.closure.dimension == 63 && r2.universal && r3.universal;
        return Outcome{ok, fmt("dimensions %d, %d (expected 15, 63)", r2.closure.dimension, r3.closure.dimension)};
    });

    criterion(7, "theorem3(3,2) and the qutrit example close to su(9)", 600.0, [] {
        const auto a = is_universal(theorem3_set(3, 2));
        const auto b = is_universal(qutrit_example_set(2));
        const bool ok = a.closure.traceless_dimension == 80 && b.closure.traceless_dimension == 80;
        return Outcome{ok, fmt("traceless dimensions %d, %d (expected 80; full %d, %d)",
                               a.closure.traceless_dimension, b.closure.traceless_dimension, a.closure.dimension,
                               b.closure.dimension)};
    });

    criterion(8, "mutually unbiased bases", 0, [] {
        double worst = 0.0;
        bool counts = true;
        for (int d : {2, 3, 5, 7, 11}) {
            const MubSet set = mub_prime(d);
            counts = counts && set.bases.size() == static_cast<std::size_t>(d + 1);
            const MubReport r = verify_mub(set);
            worst = std::max({worst, r.unbiasedness, r.orthonormality});
        }
        const MubSet q = mub_prime(3);
        const auto shown = fixture::displayed_qutrit_bases();
        double rays = 0.0;
        for (std::size_t b = 0; b < 4; ++b) rays = std::max(rays, fixture::ray_set_distance(shown[b], q.bases[b]));
        return Outcome{counts && worst <= 1e-10 && rays <= 1e-9,
                       fmt("overlap deviation %.2e (tol 1e-10), qutrit rays %.2e (tol 1e-9)", worst, rays)};
    });

    criterion(9, "exact-probability reconstruction", 0, [] {
        double worst = 0.0;
        for (int d : {2, 3, 5}) {
            const MubSet set = mub_prime(d);
            for (int s = 0; s < 10; ++s) {
                RandomSource rng(100 + s);
                const DensityMatrix rho = random_density(d, rng);
                const auto rec = reconstruct_from_frequencies(exact_probabilities(rho, set), set);
                worst = std::max(worst, deviation(rec.state.matrix, rho.matrix));
            }
        }
        return Outcome{worst <= 1e-8, fmt("max Frobenius error %.2e (tol 1e-8)", worst)};
    });

    criterion(10, "statistical scaling", 120.0, [] {
        const MubSet set = mub_prime(3);
        std::vector<double> lo, hi;
        for (int t = 0; t < 20; ++t) {
            RandomSource rng(2000 + t);
            const DensityMatrix rho = random_density(3, rng);
            lo.push_back(deviation(reconstruct(simulate_measurements(rho, set, 10'000, rng), set).state.matrix,
                                   rho.matrix));
            hi.push_back(deviation(reconstruct(simulate_measurements(rho, set, 1'000'000, rng), set).state.matrix,
                                   rho.matrix));
        }
        const double ratio = fixture::median(lo) / fixture::median(hi);
        return Outcome{ratio >= 3.3 && ratio <= 30.0, fmt("median ratio %.2f (range [3.3, 30])", ratio)};
    });

    criterion(11, "SIC search d=2,3", 60.0, [] {
        std::string detail;
        bool ok = true;
        for (int d : {2, 3}) {
            RandomSource rng(0);
            const SicSearchResult r = search_fiducial(d, rng);
            ok = ok && r.found && r.best.frame_error <= 1e-10 && r.max_pair_deviation <= 1e-6;
            detail += fmt("%sd=%d %s after %d restarts, frame %.1e, pairs %.1e", d == 2 ? "" : "; ", d,
                          r.found ? "found" : "not found", r.restarts_used, r.best.frame_error, r.max_pair_deviation);
        }
        return Outcome{ok, detail};
    });

    criterion(11, "SIC search d=4,5", 0, [] {
        std::string detail;
        bool ok = true;
        SicSearchOptions options;
        options.restarts = 100;
        for (int d : {4, 5}) {
            RandomSource rng(0);
            const SicSearchResult r = search_fiducial(d, rng, options);
            const bool valid = r.found ? r.best.frame_error <= 1e-10 && r.max_pair_deviation <= 1e-6
                                       : r.restarts_used == options.restarts;
            ok = ok && valid;
            detail += fmt("%sd=%d %s after %d restarts, frame %.1e", d == 4 ? "" : "; ", d,
                          r.found ? "found" : "not-found report", r.restarts_used, r.best.frame_error);
        }
        return Outcome{ok, detail};
    });

    criterion(12, "seeded subcommands are deterministic", 0, [] {
        const std::vector<std::vector<std::string>> cmds{
            {"family", "--d", "3", "--n", "2", "--family", "x", "--verify", "--seed", "9"},
            {"family", "--d", "2", "--n", "3", "--family", "z", "--verify", "--seed", "9"},
            {"tomography", "--d", "3", "--shots", "10000", "--seed", "9"},
            {"tomography", "--d", "5", "--shots", "1000", "--seed", "11"},
            {"sic", "--d", "2", "--seed", "9"},
            {"sic", "--d", "3", "--seed", "9"}};
        int identical = 0;
        for (const auto& c : cmds) {
            int ca = 0, cb = 0;
            const std::string a = run_results(c, ca);
            const std::string b = run_results(c, cb);
            identical += (a == b && ca == cb && ca == cli::kSuccess) ? 1 : 0;
        }
        return Outcome{identical == static_cast<int>(cmds.size()),
                       fmt("%d of %zu payloads byte-identical", identical, cmds.size())};
    });

    std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}

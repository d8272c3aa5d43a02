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

#include "qwl/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qwl/errors.hpp"
#include "qwl/weyl.hpp"

namespace qwl {

namespace {

constexpr double kStateTol = 1e-10;

// Orthonormal real basis of the d x d Hermitian matrices under Re Tr(A^dag B).
std::vector<ComplexMatrix> hermitian_basis(int d) {
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<std::size_t>(d) * d);
    const double r = std::numbers::sqrt2 / 2.0;
    for (int j = 0; j < d; ++j) {
        ComplexMatrix e = ComplexMatrix::Zero(d, d);
        e(j, j) = 1.0;
        out.push_back(e);
    }
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix s = ComplexMatrix::Zero(d, d);
            s(j, k) = r;
            s(k, j) = r;
            out.push_back(s);
            ComplexMatrix a = ComplexMatrix::Zero(d, d);
            a(j, k) = Complex(0.0, r);
            a(k, j) = Complex(0.0, -r);
            out.push_back(a);
        }
    }
    return out;
}

double expectation(const ComplexMatrix& m, const ComplexVector& v) { return v.dot(m * v).real(); }

} // namespace

DensityMatrix make_density(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw ShapeError("density matrix must be square");
    }
    if (!all_finite(m)) {
        throw ContractError("density matrix has non-finite entries");
    }
    const double herm = hermiticity_defect(m);
    if (!(herm <= kStateTol)) {
        throw ContractError("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
    }
    const Complex tr = m.trace();
    if (std::abs(tr - 1.0) > kStateTol) {
        throw ContractError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    const HermitianEig eig = hermitian_eig(m);
    if (eig.eigenvalues(0) < -kStateTol) {
        throw ContractError("density matrix has negative eigenvalue " + std::to_string(eig.eigenvalues(0)));
    }
    return {static_cast<int>(m.rows()), m};
}

DensityMatrix random_density(int d, RandomSource& rng) {
    if (d < 2) {
        throw DomainError("random_density: d must be at least 2");
    }
    ComplexMatrix a(d, d);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            a(i, j) = rng.complex_normal();
        }
    }
    ComplexMatrix rho = a * a.adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    return {d, rho};
}

DensityMatrix pure_density(const ComplexVector& psi) {
    if (std::abs(psi.norm() - 1.0) > kStateTol) {
        throw ContractError("pure_density: state vector is not normalized");
    }
    return {static_cast<int>(psi.size()), psi * psi.adjoint()};
}

bool is_prime(int d) {
    if (d < 2) {
        return false;
    }
    for (int p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            return false;
        }
    }
    return true;
}

MubSet mub_prime(int d) {
    if (!is_prime(d)) {
        throw DomainError("d must be prime (Galois-field construction out of scope)");
    }
    if (d > kMaxMubDim) {
        throw DomainError("mub_prime: d = " + std::to_string(d) + " exceeds cap " + std::to_string(kMaxMubDim));
    }
    const WeylOperators w = build_weyl(d);
    MubSet set;
    set.d = d;
    set.bases.push_back(identity(d));
    set.labels.emplace_back("Z");
    ComplexMatrix z_power = identity(d);
    for (int m = 0; m < d; ++m) {
        set.bases.push_back(unitary_eig(w.X * z_power).eigenvectors);
        set.labels.push_back(m == 0 ? "X" : (m == 1 ? "XZ" : "XZ^" + std::to_string(m)));
        z_power = (z_power * w.Z).eval();
    }
    return set;
}

MubReport verify_mub(const MubSet& set) {
    MubReport report;
    const double target = 1.0 / set.d;
    for (std::size_t p = 0; p < set.bases.size(); ++p) {
        const ComplexMatrix gram = set.bases[p].adjoint() * set.bases[p];
        report.orthonormality = std::max(report.orthonormality, (gram - identity(set.d)).cwiseAbs().maxCoeff());
        for (std::size_t q = p + 1; q < set.bases.size(); ++q) {
            const ComplexMatrix cross = set.bases[p].adjoint() * set.bases[q];
            const double dev = (cross.cwiseAbs2().array() - target).abs().maxCoeff();
            report.unbiasedness = std::max(report.unbiasedness, dev);
        }
    }
    return report;
}

ClosedFormMatch match_quadratic_phase(const ComplexVector& v) {
    const auto d = static_cast<int>(v.size());
    ClosedFormMatch best{0, 0, std::numeric_limits<double>::infinity()};
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexVector c(d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            for (int k = 0; k < d; ++k) {
                c(k) = amp * unit_root(static_cast<long long>(a) * k * k + static_cast<long long>(b) * k, d);
            }
            const Complex overlap = c.dot(v);
            const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
            const double dev = (v - phase * c).norm();
            if (dev < best.deviation) {
                best = {a, b, dev};
            }
        }
    }
    return best;
}

double born_probability(const DensityMatrix& rho, const ComplexVector& phi) {
    if (phi.size() != rho.matrix.rows()) {
        throw ShapeError("born_probability: vector length differs from state dimension");
    }
    if (std::abs(phi.norm() - 1.0) > kStateTol) {
        throw ContractError("born_probability: measurement vector is not normalized");
    }
    return std::clamp(expectation(rho.matrix, phi), 0.0, 1.0);
}

std::vector<std::vector<double>> exact_probabilities(const DensityMatrix& rho, const MubSet& set) {
    std::vector<std::vector<double>> out;
    out.reserve(set.bases.size());
    for (const auto& basis : set.bases) {
        std::vector<double> p(static_cast<std::size_t>(set.d));
        for (int k = 0; k < set.d; ++k) {
            p[static_cast<std::size_t>(k)] = born_probability(rho, basis.col(k));
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<MeasurementRecord> simulate_measurements(const DensityMatrix& rho, const MubSet& set, long long shots,
                                                     RandomSource& rng) {
    if (shots < 1) {
        throw DomainError("simulate_measurements: shots must be positive");
    }
    const RandomSource base(rng.next_u64());
    const auto probabilities = exact_probabilities(rho, set);
    std::vector<MeasurementRecord> records;
    records.reserve(set.bases.size());
    for (std::size_t b = 0; b < set.bases.size(); ++b) {
        const auto& p = probabilities[b];
        std::vector<double> cdf(p.size());
        double total = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            total += p[k];
            cdf[k] = total;
        }
        for (double& c : cdf) {
            c /= total;
        }
        cdf.back() = 1.0;

        RandomSource stream = base.derive(b);
        MeasurementRecord rec{static_cast<int>(b), std::vector<long long>(p.size(), 0), shots};
        for (long long s = 0; s < shots; ++s) {
            const double u = stream.uniform();
            const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            ++rec.counts[static_cast<std::size_t>(it - cdf.begin())];
        }
        records.push_back(std::move(rec));
    }
    return records;
}

Reconstruction reconstruct(const std::vector<MeasurementRecord>& records, const MubSet& set) {
    std::vector<std::vector<double>> freqs(set.bases.size());
    std::vector<long long> seen(set.bases.size(), 0);
    for (const auto& rec : records) {
        if (rec.basis < 0 || static_cast<std::size_t>(rec.basis) >= set.bases.size()) {
            throw DomainError("reconstruct: basis index " + std::to_string(rec.basis) + " out of range");
        }
        if (rec.counts.size() != static_cast<std::size_t>(set.d) || rec.shots < 1) {
            throw ShapeError("reconstruct: record for basis " + std::to_string(rec.basis) + " is malformed");
        }
        long long sum = 0;
        for (long long c : rec.counts) {
            sum += c;
        }
        if (sum != rec.shots) {
            throw ContractError("reconstruct: counts for basis " + std::to_string(rec.basis) + " do not sum to shots");
        }
        auto& f = freqs[static_cast<std::size_t>(rec.basis)];
        auto& total = seen[static_cast<std::size_t>(rec.basis)];
        // Repeated records of one basis pool their shots.
        f.resize(static_cast<std::size_t>(set.d), 0.0);
        for (std::size_t k = 0; k < rec.counts.size(); ++k) {
            f[k] = (f[k] * static_cast<double>(total) + static_cast<double>(rec.counts[k])) /
                   static_cast<double>(total + rec.shots);
        }
        total += rec.shots;
    }
    for (std::size_t b = 0; b < seen.size(); ++b) {
        if (seen[b] == 0) {
            throw UnderdeterminedError("reconstruct: no measurements for basis " + std::to_string(b) + " (" +
                                       set.labels[b] + ")");
        }
    }
    return reconstruct_from_frequencies(freqs, set);
}

Reconstruction reconstruct_from_frequencies(const std::vector<std::vector<double>>& frequencies, const MubSet& set) {
    const int d = set.d;
    if (frequencies.size() != set.bases.size()) {
        throw UnderdeterminedError("reconstruct: expected frequencies for " + std::to_string(set.bases.size()) +
                                   " bases, got " + std::to_string(frequencies.size()));
    }
    const auto herm = hermitian_basis(d);
    const auto params = static_cast<Eigen::Index>(herm.size());
    const auto rows = static_cast<Eigen::Index>(set.bases.size()) * d;

    Eigen::MatrixXd a(rows, params);
    Eigen::VectorXd f(rows);
    for (std::size_t b = 0; b < set.bases.size(); ++b) {
        if (frequencies[b].size() != static_cast<std::size_t>(d)) {
            throw ShapeError("reconstruct: basis " + std::to_string(b) + " has the wrong number of outcomes");
        }
        for (int k = 0; k < d; ++k) {
            const Eigen::Index row = static_cast<Eigen::Index>(b) * d + k;
            const ComplexVector phi = set.bases[b].col(k);
            for (Eigen::Index m = 0; m < params; ++m) {
                a(row, m) = expectation(herm[static_cast<std::size_t>(m)], phi);
            }
            f(row) = frequencies[b][static_cast<std::size_t>(k)];
        }
    }

    // Unit trace: x = x0 + N y with N an orthonormal complement of the trace functional.
    Eigen::VectorXd t = Eigen::VectorXd::Zero(params);
    t.head(d).setOnes();
    const Eigen::VectorXd x0 = t / t.squaredNorm();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(t);
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(params, params);
    const Eigen::MatrixXd null_space = q.rightCols(params - 1);

    const Eigen::MatrixXd reduced = a * null_space;
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(reduced);
    cod.setThreshold(1e-10);
    if (cod.rank() < params - 1) {
        throw UnderdeterminedError("reconstruct: measurement operators do not span the traceless Hermitian matrices");
    }
    const Eigen::VectorXd x = x0 + null_space * cod.solve(f - a * x0);

    Reconstruction out;
    out.residual = (a * x - f).norm();
    out.linear_estimate = ComplexMatrix::Zero(d, d);
    for (Eigen::Index m = 0; m < params; ++m) {
        out.linear_estimate += x(m) * herm[static_cast<std::size_t>(m)];
    }

    const HermitianEig eig = hermitian_eig(out.linear_estimate);
    out.min_eigenvalue = eig.eigenvalues(0);
    ComplexMatrix rho = out.linear_estimate;
    if (out.min_eigenvalue < 0.0) {
        const RealVector clipped = eig.eigenvalues.cwiseMax(0.0);
        rho = eig.eigenvectors * (clipped / clipped.sum()).cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
        rho = 0.5 * (rho + rho.adjoint()).eval();
        out.projected = true;
    }
    out.state = {d, rho};
    return out;
}

} // namespace qwl

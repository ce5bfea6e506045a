// Copyright 2026 The netcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netcert/qsim.h"

#include <array>
#include <cmath>
#include <stdexcept>

namespace netcert {

using cd = std::complex<double>;

Basis parse_basis(char c) {
    switch (c) {
        case 'X':
        case 'x':
            return Basis::X;
        case 'Y':
        case 'y':
            return Basis::Y;
        case 'Z':
        case 'z':
            return Basis::Z;
        default:
            throw std::invalid_argument(std::string("unknown measurement basis '") + c + "'");
    }
}

char basis_char(Basis b) {
    switch (b) {
        case Basis::X:
            return 'X';
        case Basis::Y:
            return 'Y';
        default:
            return 'Z';
    }
}

std::vector<Basis> parse_bases(const std::string &label) {
    if (label.empty()) {
        throw std::invalid_argument("empty basis label");
    }
    std::vector<Basis> out;
    for (char c : label) {
        out.push_back(parse_basis(c));
    }
    return out;
}

std::string bases_label(std::span<const Basis> bases) {
    std::string s;
    for (Basis b : bases) {
        s += basis_char(b);
    }
    return s;
}

namespace {

// Unitary R with R |e_a> = |a>, where e_a is the basis eigenvector for outcome a.
Eigen::Matrix2cd to_computational(Basis b) {
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd h;
    h << r, r, r, -r;
    switch (b) {
        case Basis::X:
            return h;
        case Basis::Y: {
            Eigen::Matrix2cd sdg = Eigen::Matrix2cd::Zero();
            sdg(0, 0) = 1.0;
            sdg(1, 1) = cd(0.0, -1.0);
            return h * sdg;
        }
        default:
            return Eigen::Matrix2cd::Identity();
    }
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

Eigen::Matrix2cd basis_projector(Basis b, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("qubit outcomes are 0 or 1");
    }
    Eigen::Matrix2cd r = to_computational(b);
    Eigen::Vector2cd e = r.adjoint().col(outcome);
    return e * e.adjoint();
}

DensityOperator::DensityOperator(int n_qubits, Eigen::MatrixXcd matrix, bool normalized)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)), normalized_(normalized) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits_;
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw std::invalid_argument("density matrix dimension does not match qubit count");
    }
}

DensityOperator DensityOperator::from_pure(const Eigen::VectorXcd &psi) {
    int n = 0;
    while ((Eigen::Index{1} << n) < psi.size()) {
        n++;
    }
    Eigen::VectorXcd v = psi / psi.norm();
    return DensityOperator(n, v * v.adjoint());
}

DensityOperator DensityOperator::normalize() const {
    double t = trace();
    if (t < 1e-12) {
        throw std::domain_error("postselection succeeded with probability below 1e-12");
    }
    return DensityOperator(n_qubits_, matrix_ / t, true);
}

void DensityOperator::check_physical() const {
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::domain_error("density operator is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw std::domain_error("density operator has a negative eigenvalue");
    }
    if (normalized_ && std::abs(trace() - 1.0) > 1e-10) {
        throw std::domain_error("density operator trace differs from one");
    }
}

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b) {
    return DensityOperator(a.n_qubits() + b.n_qubits(), kron(a.matrix(), b.matrix()),
                           a.normalized() && b.normalized());
}

DensityOperator werner(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("visibility must lie in [0, 1]");
    }
    Eigen::Vector4cd phi = Eigen::Vector4cd::Zero();
    phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
    Eigen::Matrix4cd m = v * (phi * phi.adjoint()) + (1.0 - v) * Eigen::Matrix4cd::Identity() / 4.0;
    return DensityOperator(2, m);
}

DensityOperator noisy_plus(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("visibility must lie in [0, 1]");
    }
    Eigen::Matrix2cd m;
    m << 0.5, 0.5 * v, 0.5 * v, 0.5;
    return DensityOperator(1, m);
}

DensityOperator fuse(const DensityOperator &state, int q1, int q2) {
    const int n = state.n_qubits();
    if (q1 < 0 || q2 < 0 || q1 >= n || q2 >= n || q1 == q2) {
        throw std::invalid_argument("fusion needs two distinct valid qubit indices");
    }
    const Eigen::Index dim = state.matrix().rows();
    const int b1 = n - 1 - q1;
    const int b2 = n - 1 - q2;
    std::vector<char> even(dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        even[i] = ((i >> b1) & 1) == ((i >> b2) & 1);
    }
    Eigen::MatrixXcd out = state.matrix();
    for (Eigen::Index c = 0; c < dim; c++) {
        for (Eigen::Index r = 0; r < dim; r++) {
            if (!even[r] || !even[c]) {
                out(r, c) = 0.0;
            }
        }
    }
    return DensityOperator(n, std::move(out), false);
}

Distribution born(const DensityOperator &state, const std::vector<std::vector<Basis>> &settings) {
    const int n = state.n_qubits();
    if (!state.normalized()) {
        throw std::invalid_argument("Born rule needs a normalized state");
    }
    if (static_cast<int>(settings.size()) != n) {
        throw std::invalid_argument("one basis list per qubit is required");
    }
    std::vector<int> n_inputs(n), n_outputs(n, 2);
    for (int q = 0; q < n; q++) {
        if (settings[q].empty()) {
            throw std::invalid_argument("empty basis set");
        }
        n_inputs[q] = static_cast<int>(settings[q].size());
    }
    Distribution dist(n_inputs, n_outputs);
    const Eigen::Index dim = state.matrix().rows();
    for (std::size_t x = 0; x < dist.num_input_tuples(); x++) {
        auto inputs = dist.decode_inputs(x);
        Eigen::MatrixXcd u = to_computational(settings[0][inputs[0]]);
        for (int q = 1; q < n; q++) {
            u = kron(u, to_computational(settings[q][inputs[q]]));
        }
        Eigen::MatrixXcd rotated = u * state.matrix() * u.adjoint();
        std::vector<int> outputs(n);
        for (Eigen::Index i = 0; i < dim; i++) {
            for (int q = 0; q < n; q++) {
                outputs[q] = static_cast<int>((i >> (n - 1 - q)) & 1);
            }
            double p = rotated(i, i).real();
            dist.at(dist.encode_outputs(outputs), x) = p < 0.0 && p > -1e-15 ? 0.0 : p;
        }
    }
    return dist;
}

DensityOperator ghz_setup_state(double v) {
    DensityOperator rho = tensor(tensor(werner(v), werner(v)), werner(v));
    rho = fuse(rho, 1, 2);
    rho = fuse(rho, 3, 4);
    return rho.normalize();
}

DensityOperator trident_state(double v, bool noisy_singles) {
    DensityOperator single = noisy_plus(noisy_singles ? v : 1.0);
    DensityOperator rho = tensor(tensor(tensor(werner(v), single), single), werner(v));
    rho = fuse(rho, 2, 3);
    rho = fuse(rho, 1, 2);
    rho = fuse(rho, 3, 4);
    return rho.normalize();
}

namespace {

std::vector<std::vector<Basis>> one_setting_each(std::span<const Basis> bases) {
    std::vector<std::vector<Basis>> s;
    for (Basis b : bases) {
        s.push_back({b});
    }
    return s;
}

}  // namespace

Distribution ghz_setup_distribution(double v, std::span<const Basis> bases) {
    if (bases.size() != 6) {
        throw std::invalid_argument("six basis labels are required");
    }
    return born(ghz_setup_state(v), one_setting_each(bases));
}

Distribution ghz_setup_two_input(double v) {
    return born(ghz_setup_state(v), std::vector<std::vector<Basis>>(6, {Basis::X, Basis::Z}));
}

Distribution trident_distribution(double v, std::span<const Basis> bases, bool noisy_singles) {
    if (bases.size() != 6) {
        throw std::invalid_argument("six basis labels are required");
    }
    return born(trident_state(v, noisy_singles), one_setting_each(bases));
}

Distribution trident_two_input(double v, Basis first, Basis second, bool noisy_singles) {
    return born(trident_state(v, noisy_singles), std::vector<std::vector<Basis>>(6, {first, second}));
}

namespace {

Eigen::VectorXcd haar_vector(Eigen::Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        v(i) = cd(g(rng), g(rng));
    }
    return v / v.norm();
}

Eigen::MatrixXcd haar_unitary(Eigen::Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd z(dim, dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        for (Eigen::Index j = 0; j < dim; j++) {
            z(i, j) = cd(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < dim; i++) {
        cd d = r(i, i);
        q.col(i) *= d / std::abs(d);
    }
    return q;
}

using RowMat = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Applies `m` on tensor axis `axis` of a vector with axis dimensions `dims` (axis 0 major).
Eigen::VectorXcd apply_axis(const Eigen::VectorXcd &v, const std::vector<Eigen::Index> &dims, std::size_t axis,
                            const Eigen::MatrixXcd &m) {
    Eigen::Index left = 1, right = 1;
    for (std::size_t i = 0; i < axis; i++) {
        left *= dims[i];
    }
    for (std::size_t i = axis + 1; i < dims.size(); i++) {
        right *= dims[i];
    }
    const Eigen::Index d = dims[axis];
    Eigen::VectorXcd out(v.size());
    for (Eigen::Index l = 0; l < left; l++) {
        Eigen::Map<const RowMat> in(v.data() + l * d * right, d, right);
        Eigen::Map<RowMat> dst(out.data() + l * d * right, d, right);
        dst.noalias() = m * in;
    }
    return out;
}

void branch(const Eigen::VectorXcd &v, const std::vector<Eigen::Index> &dims, std::size_t axis,
            const std::vector<std::array<Eigen::MatrixXcd, 2>> &proj, std::vector<int> &outputs, Distribution &dist,
            std::size_t input_index) {
    if (axis == dims.size()) {
        dist.at(dist.encode_outputs(outputs), input_index) = v.squaredNorm();
        return;
    }
    for (int a = 0; a < 2; a++) {
        outputs[axis] = a;
        branch(apply_axis(v, dims, axis, proj[axis][a]), dims, axis + 1, proj, outputs, dist, input_index);
    }
}

}  // namespace

Distribution random_network_distribution(const Network &net, std::mt19937_64 &rng) {
    const int np = net.num_parties();
    for (const auto &p : net.parties()) {
        if (p.n_outputs != 2) {
            throw std::invalid_argument("random network sampling supports binary outputs only");
        }
    }
    // Qubit layout in source-major order, then a permutation to party-major order.
    std::vector<std::vector<int>> held(np);
    int n_qubits = 0;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Ones(1);
    for (const auto &s : net.sources()) {
        for (int p : s.parties) {
            held[p].push_back(n_qubits++);
        }
        Eigen::VectorXcd part = haar_vector(Eigen::Index{1} << s.parties.size(), rng);
        Eigen::VectorXcd next(psi.size() * part.size());
        for (Eigen::Index i = 0; i < psi.size(); i++) {
            next.segment(i * part.size(), part.size()) = psi(i) * part;
        }
        psi = std::move(next);
    }
    std::vector<int> order;
    std::vector<Eigen::Index> dims;
    for (int p = 0; p < np; p++) {
        order.insert(order.end(), held[p].begin(), held[p].end());
        dims.push_back(Eigen::Index{1} << held[p].size());
    }
    Eigen::VectorXcd phi(psi.size());
    for (Eigen::Index j = 0; j < psi.size(); j++) {
        // Bit k (from the top) of j is qubit order[k] in source-major numbering.
        Eigen::Index i = 0;
        for (int k = 0; k < n_qubits; k++) {
            if ((j >> (n_qubits - 1 - k)) & 1) {
                i |= Eigen::Index{1} << (n_qubits - 1 - order[k]);
            }
        }
        phi(j) = psi(i);
    }

    std::vector<int> n_inputs(np), n_outputs(np, 2);
    for (int p = 0; p < np; p++) {
        n_inputs[p] = net.parties()[p].n_inputs;
    }
    // Random projectors per party and input.
    std::vector<std::vector<std::array<Eigen::MatrixXcd, 2>>> meas(np);
    for (int p = 0; p < np; p++) {
        const Eigen::Index d = dims[p];
        std::uniform_int_distribution<Eigen::Index> rank_dist(1, d - 1);
        for (int x = 0; x < n_inputs[p]; x++) {
            Eigen::MatrixXcd u = haar_unitary(d, rng);
            Eigen::Index r = rank_dist(rng);
            Eigen::MatrixXcd pr = u.leftCols(r) * u.leftCols(r).adjoint();
            meas[p].push_back({pr, Eigen::MatrixXcd::Identity(d, d) - pr});
        }
    }
    Distribution dist(n_inputs, n_outputs);
    std::vector<int> outputs(np);
    for (std::size_t x = 0; x < dist.num_input_tuples(); x++) {
        auto inputs = dist.decode_inputs(x);
        std::vector<std::array<Eigen::MatrixXcd, 2>> proj(np);
        for (int p = 0; p < np; p++) {
            proj[p] = meas[p][inputs[p]];
        }
        branch(phi, dims, 0, proj, outputs, dist, x);
    }
    return dist;
}

Distribution random_product_distribution(const std::vector<int> &n_inputs, const std::vector<int> &n_outputs,
                                         std::mt19937_64 &rng) {
    const int np = static_cast<int>(n_inputs.size());
    std::exponential_distribution<double> e(1.0);
    std::vector<std::vector<std::vector<double>>> local(np);
    for (int p = 0; p < np; p++) {
        for (int x = 0; x < n_inputs[p]; x++) {
            std::vector<double> w(n_outputs[p]);
            double s = 0.0;
            for (auto &v : w) {
                v = e(rng);
                s += v;
            }
            for (auto &v : w) {
                v /= s;
            }
            local[p].push_back(std::move(w));
        }
    }
    Distribution dist(n_inputs, n_outputs);
    for (std::size_t x = 0; x < dist.num_input_tuples(); x++) {
        auto in = dist.decode_inputs(x);
        for (std::size_t a = 0; a < dist.num_output_tuples(); a++) {
            auto out = dist.decode_outputs(a);
            double v = 1.0;
            for (int p = 0; p < np; p++) {
                v *= local[p][in[p]][out[p]];
            }
            dist.at(a, x) = v;
        }
    }
    return dist;
}

}  // namespace netcert

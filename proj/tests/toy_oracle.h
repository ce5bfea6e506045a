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

// Explicit realization of the order-2 inflation of S1 -> (A, B), S2 -> (B, C) with qubit
// sources: each source copy is a random two-qubit pure state, A and C measure one qubit and B
// measures the two qubits it holds. Compares identified known values with inflated traces.

#ifndef NETCERT_TESTS_TOY_ORACLE_H
#define NETCERT_TESTS_TOY_ORACLE_H

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "netcert/monomial.h"

namespace netcert::toy {

struct OracleResult {
    int words = 0;
    int zero_words = 0;
    int identified = 0;
    double max_error = 0.0;
};

inline std::complex<double> gauss(std::mt19937_64 &rng) {
    std::normal_distribution<double> n;
    return {n(rng), n(rng)};
}

inline Eigen::VectorXcd haar_vector(int d, std::mt19937_64 &rng) {
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; i++) {
        v[i] = gauss(rng);
    }
    return v.normalized();
}

// Embeds `local` acting on `qubits` (first listed is most significant) into n qubits.
inline Eigen::MatrixXcd embed(const Eigen::MatrixXcd &local, const std::vector<int> &qubits, int n) {
    const int dim = 1 << n;
    int mask = 0;
    for (int q : qubits) {
        mask |= 1 << (n - 1 - q);
    }
    auto local_index = [&](int idx) {
        int l = 0;
        for (int q : qubits) {
            l = (l << 1) | ((idx >> (n - 1 - q)) & 1);
        }
        return l;
    };
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
    for (int r = 0; r < dim; r++) {
        for (int c = 0; c < dim; c++) {
            if ((r & ~mask) == (c & ~mask)) {
                full(r, c) = local(local_index(r), local_index(c));
            }
        }
    }
    return full;
}

inline Network line_network() {
    return Network::from_json(nlohmann::ordered_json::parse(R"({
        "sources": {"S1": ["A", "B"], "S2": ["B", "C"]},
        "parties": {"A": {"inputs": 2, "outputs": 2}, "B": {"inputs": 2, "outputs": 2},
                    "C": {"inputs": 2, "outputs": 2}}
    })"));
}

// Exhaustive over all words of length 1..max_degree in the inflated operators.
inline OracleResult run_oracle(std::uint64_t seed, int max_degree = 3) {
    const Network net = line_network();
    std::mt19937_64 rng(seed);
    Eigen::VectorXcd psi[2] = {haar_vector(4, rng), haar_vector(4, rng)};
    Eigen::MatrixXcd proj[3][2];
    for (int x = 0; x < 2; x++) {
        Eigen::VectorXcd a = haar_vector(2, rng);
        Eigen::VectorXcd c = haar_vector(2, rng);
        proj[0][x] = a * a.adjoint();
        proj[2][x] = c * c.adjoint();
        // Rank-2 projector on B's two qubits.
        Eigen::MatrixXcd g = Eigen::MatrixXcd::NullaryExpr(4, 2, [&] { return gauss(rng); });
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
        Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(4, 2);
        proj[1][x] = q * q.adjoint();
    }

    // Target distribution over qubits [S1A, S1B, S2B, S2C].
    Eigen::VectorXcd state = Eigen::kroneckerProduct(psi[0], psi[1]);
    Distribution p({2, 2, 2}, {2, 2, 2});
    const std::vector<std::vector<int>> party_qubits = {{0}, {1, 2}, {3}};
    for (std::size_t x = 0; x < p.num_input_tuples(); x++) {
        auto in = p.decode_inputs(x);
        for (std::size_t a = 0; a < p.num_output_tuples(); a++) {
            auto out = p.decode_outputs(a);
            Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(16, 16);
            for (int party = 0; party < 3; party++) {
                Eigen::MatrixXcd loc = proj[party][in[party]];
                if (out[party] == 1) {
                    loc = Eigen::MatrixXcd::Identity(loc.rows(), loc.cols()) - loc;
                }
                op = op * embed(loc, party_qubits[party], 4);
            }
            p.at(a, x) = (state.adjoint() * op * state)(0, 0).real();
        }
    }

    // Source s copy c occupies qubits 4s + 2c (first listed party) and 4s + 2c + 1.
    constexpr int kQubits = 8;
    InflationScenario sc = inflate(net, 2);
    Eigen::VectorXcd inflated = Eigen::kroneckerProduct(Eigen::kroneckerProduct(psi[0], psi[0]).eval(),
                                                        Eigen::kroneckerProduct(psi[1], psi[1]).eval());
    std::vector<Eigen::MatrixXcd> ops;
    for (OpId id = 0; id < sc.num_operators(); id++) {
        const auto &sym = sc.op(id);
        std::vector<int> qubits;
        for (int s = 0; s < net.num_sources(); s++) {
            if (sym.copies[s] < 0) {
                continue;
            }
            const auto &members = net.sources()[s].parties;
            int pos = static_cast<int>(std::find(members.begin(), members.end(), sym.party) - members.begin());
            qubits.push_back(4 * s + 2 * sym.copies[s] + pos);
        }
        ops.push_back(embed(proj[sym.party][sym.input], qubits, kQubits));
    }

    OracleResult res;
    const int nops = sc.num_operators();
    std::vector<OpId> word;
    auto visit = [&](auto &self, int depth) -> void {
        if (!word.empty()) {
            res.words++;
            Eigen::VectorXcd v = inflated;
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                v = ops[*it] * v;
            }
            std::complex<double> trace = inflated.dot(v);
            Monomial m = reduce(word, sc);
            if (m.is_zero) {
                res.zero_words++;
                res.max_error = std::max(res.max_error, std::abs(trace));
            } else {
                for (const Monomial &form : {m, canonicalize(m, sc)}) {
                    if (auto known = identify_known(form, sc)) {
                        res.identified++;
                        res.max_error = std::max(res.max_error, std::abs(trace - known->value(p)));
                    }
                }
            }
        }
        if (depth == max_degree) {
            return;
        }
        for (int a = 0; a < nops; a++) {
            word.push_back(static_cast<OpId>(a));
            self(self, depth + 1);
            word.pop_back();
        }
    };
    visit(visit, 0);
    return res;
}

}  // namespace netcert::toy

#endif

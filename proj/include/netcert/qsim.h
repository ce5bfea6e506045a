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

#ifndef NETCERT_QSIM_H
#define NETCERT_QSIM_H

#include <complex>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netcert/distribution.h"
#include "netcert/network.h"

namespace netcert {

enum class Basis { X, Y, Z };

Basis parse_basis(char c);
char basis_char(Basis b);
/// Parses a label such as "ZZXXZX"; throws std::invalid_argument on other letters.
std::vector<Basis> parse_bases(const std::string &label);
std::string bases_label(std::span<const Basis> bases);

/// Rank-1 qubit projector onto the eigenvector of `b` with eigenvalue (-1)^outcome.
Eigen::Matrix2cd basis_projector(Basis b, int outcome);

/// Dense n-qubit density operator; qubit 0 is the most significant bit of the basis index.
class DensityOperator {
   public:
    DensityOperator() = default;
    DensityOperator(int n_qubits, Eigen::MatrixXcd matrix, bool normalized = true);

    static DensityOperator from_pure(const Eigen::VectorXcd &psi);

    int n_qubits() const {
        return n_qubits_;
    }
    const Eigen::MatrixXcd &matrix() const {
        return matrix_;
    }
    bool normalized() const {
        return normalized_;
    }
    double trace() const {
        return matrix_.trace().real();
    }
    /// Divides by the trace; throws std::domain_error when the trace is below 1e-12.
    DensityOperator normalize() const;

    /// Throws std::domain_error unless Hermitian to 1e-12 and eigenvalues >= -1e-10.
    void check_physical() const;

   private:
    int n_qubits_ = 0;
    Eigen::MatrixXcd matrix_;
    bool normalized_ = true;
};

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b);

/// v |phi+><phi+| + (1 - v) 1/4. Throws std::invalid_argument for v outside [0, 1].
DensityOperator werner(double v);

/// v |+><+| + (1 - v) 1/2.
DensityOperator noisy_plus(double v);

/// Postselected even-parity Kraus operator |00><00| + |11><11| on qubits q1, q2 (0-based).
/// The result is unnormalized; its trace is the success probability.
DensityOperator fuse(const DensityOperator &state, int q1, int q2);

/// Born rule with party i measuring qubit i; settings[i] lists party i's bases, one per input.
/// Throws std::invalid_argument for an unnormalized state or empty setting lists.
Distribution born(const DensityOperator &state, const std::vector<std::vector<Basis>> &settings);

/// Three Werner pairs on (0,1), (2,3), (4,5) fused on (1,2) and (3,4), renormalized.
DensityOperator ghz_setup_state(double v);
/// Werner pairs on (0,1), (4,5) and |+> on qubits 2, 3; fused on (2,3), then (1,2) and (3,4).
/// `noisy_singles` depolarizes the single photons with the same visibility.
DensityOperator trident_state(double v, bool noisy_singles);

/// One measurement per party.
Distribution ghz_setup_distribution(double v, std::span<const Basis> bases);
/// Two-input family: input 0 is X and input 1 is Z for every party.
Distribution ghz_setup_two_input(double v);
Distribution trident_distribution(double v, std::span<const Basis> bases, bool noisy_singles);
/// Every party chooses between `first` (input 0) and `second` (input 1).
Distribution trident_two_input(double v, Basis first, Basis second, bool noisy_singles);

/// Samples a distribution realizable in `net` with qubit shares: each source emits a Haar-random
/// pure state with one qubit per party it feeds, and each party applies, per input, a binary
/// projective measurement of random rank on all qubits it holds.
/// Only parties with two outputs are supported.
Distribution random_network_distribution(const Network &net, std::mt19937_64 &rng);

/// Distribution p(a|x) = prod_i p_i(a_i|x_i) with random local response tables.
Distribution random_product_distribution(const std::vector<int> &n_inputs, const std::vector<int> &n_outputs,
                                         std::mt19937_64 &rng);

}  // namespace netcert

#endif

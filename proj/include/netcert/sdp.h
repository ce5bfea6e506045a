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

#ifndef NETCERT_SDP_H
#define NETCERT_SDP_H

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "netcert/distribution.h"
#include "netcert/moment_matrix.h"

namespace netcert {

/// Numeric instance of max lambda s.t. Gamma(y) - lambda * I >= 0.
///
/// Free moments become variables y_k; every other cell is a numeric constant (known value,
/// identity or zero). `cell_ids` and `free_ids` carry the symbolic origin and are empty for
/// problems read back from an SDPA file.
struct SdpProblem {
    int n = 0;
    int num_free = 0;
    std::vector<std::int32_t> cell_var;
    std::vector<double> constants;
    std::vector<std::int32_t> cell_ids;
    std::vector<std::int32_t> free_ids;
    /// Optional commuting involutive row permutations leaving the cell structure and constants
    /// invariant; the solver block-diagonalizes by their characters.
    std::vector<std::vector<int>> symmetries;

    int var(int i, int j) const {
        return cell_var[static_cast<std::size_t>(i) * n + j];
    }
    double constant(int i, int j) const {
        return constants[static_cast<std::size_t>(i) * n + j];
    }
    /// Compares the numeric problem only.
    bool operator==(const SdpProblem &o) const {
        return n == o.n && num_free == o.num_free && cell_var == o.cell_var && constants == o.constants;
    }
};

/// Throws DistributionError when `p` does not match the network cardinalities or holds NaN.
SdpProblem assemble(const MomentMatrix &mm, const Network &net, const Distribution &p);

enum class SolveStatus { Feasible, Infeasible, Inconclusive };
std::string status_name(SolveStatus s);

struct SolverOptions {
    /// Feasible when the certified minimum eigenvalue is at least -tol.
    double tol = 1e-7;
    /// An infeasibility certificate must evaluate below -cert_tol.
    double cert_tol = 1e-9;
    /// Residual target of the full (non-decide) solve.
    double eps = 1e-8;
    int max_iterations = 20000;
    /// Stop at the first certificate of either kind.
    bool decide = false;
    int check_every = 10;
    /// Over-relaxation of the primal step, in (0, 1.618).
    double relaxation = 1.6;
    double time_limit = 0.0;
    /// Progress lines to stderr every `verbose` iterations; 0 disables.
    int verbose = 0;
};

/// Iterates kept for warm starts.
struct SolverState {
    Eigen::MatrixXd X;
    Eigen::MatrixXd S;
    Eigen::VectorXd y;
    double mu = 1.0;
    bool empty() const {
        return X.size() == 0;
    }
};

struct SolveReport {
    SolveStatus status = SolveStatus::Inconclusive;
    /// Estimate of the optimal value and the certified lower bound from the dual iterate.
    double lambda = 0.0;
    double lambda_lower = 0.0;
    /// Value of the separating functional on the solved distribution.
    double certificate_value = 0.0;
    /// Known moment id -> coefficient; present when infeasible. Id 1 carries the constant.
    std::map<int, double> dual;
    /// Free-moment values of the final iterate, indexed like SdpProblem::free_ids.
    std::vector<double> moments;
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double seconds = 0.0;
    std::string backend;
    SolverState state;
};

/// Backend for the symmetric-cone program.
class ConeSolver {
   public:
    virtual ~ConeSolver() = default;
    virtual std::string name() const = 0;
    virtual SolveReport solve(const SdpProblem &prob, const SolverOptions &opt,
                              const SolverState *warm = nullptr) const = 0;
};

/// Alternating-direction augmented Lagrangian method on the dual, with exact arrowhead
/// projections onto the affine constraints and partial eigensolves for the cone projection.
class AdmmSolver : public ConeSolver {
   public:
    std::string name() const override {
        return "admm";
    }
    SolveReport solve(const SdpProblem &prob, const SolverOptions &opt,
                      const SolverState *warm = nullptr) const override;
};

/// Dumps the report; dual multipliers and free moments keyed by monomial strings.
nlohmann::ordered_json report_to_json(const SolveReport &r, const SdpProblem &prob, const MomentMatrix &mm,
                                      const InflationScenario &sc);

/// SDPA sparse format, one block. Variables are (lambda, y_1, ..., y_m) with objective -lambda.
void export_sdpa(const SdpProblem &prob, const std::string &path);
std::string to_sdpa(const SdpProblem &prob);
SdpProblem import_sdpa(const std::string &path);
SdpProblem parse_sdpa(const std::string &text);

/// Network, inflation and moment matrix bundled for repeated solves.
class InflationModel {
   public:
    InflationModel(Network net, int order, std::string level);

    const Network &network() const {
        return sc_.network();
    }
    const InflationScenario &scenario() const {
        return sc_;
    }
    const GeneratingSet &generating_set() const {
        return gs_;
    }
    const MomentMatrix &moments() const {
        return mm_;
    }
    int order() const {
        return order_;
    }
    const std::string &level() const {
        return gs_.level;
    }
    SdpProblem assemble(const Distribution &p) const;
    std::string label(int id) const;

   private:
    int order_;
    InflationScenario sc_;
    GeneratingSet gs_;
    MomentMatrix mm_;
    std::vector<std::vector<int>> symmetries_;
};

struct BisectionStep {
    double v;
    SolveStatus status;
    double lambda;
};

struct BisectionResult {
    enum class Outcome { Bracketed, NeverInfeasible, AlwaysInfeasible };
    Outcome outcome = Outcome::Bracketed;
    /// Midpoint of the final bracket; 1.0 / 0.0 sentinels for the degenerate outcomes.
    double estimate = 1.0;
    /// Largest visibility found compatible and smallest found incompatible.
    double feasible_v = 0.0;
    double infeasible_v = 1.0;
    std::vector<BisectionStep> steps;
};

/// Bisection on v in [lo, hi] to bracket width tol_v. Inconclusive solves count by the sign of
/// the lambda estimate.
BisectionResult critical_visibility(const InflationModel &model, const std::function<Distribution(double)> &family,
                                    double tol_v, const ConeSolver &solver, const SolverOptions &opt,
                                    double lo = 0.0, double hi = 1.0);

}  // namespace netcert

#endif

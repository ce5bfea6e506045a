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

#include "netcert/sdp.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <lapacke.h>

namespace netcert {

std::string status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Feasible:
            return "feasible";
        case SolveStatus::Infeasible:
            return "infeasible";
        default:
            return "inconclusive";
    }
}

SdpProblem assemble(const MomentMatrix &mm, const Network &net, const Distribution &p) {
    if (p.num_parties() != net.num_parties()) {
        throw DistributionError("distribution has " + std::to_string(p.num_parties()) + " parties, network has " +
                                std::to_string(net.num_parties()));
    }
    for (int i = 0; i < net.num_parties(); i++) {
        const auto &party = net.parties()[i];
        if (p.n_inputs()[i] != party.n_inputs || p.n_outputs()[i] != party.n_outputs) {
            throw DistributionError("cardinalities of party " + party.id + " do not match the network");
        }
    }
    for (double v : p.table()) {
        if (std::isnan(v)) {
            throw DistributionError("distribution contains NaN");
        }
    }
    SdpProblem prob;
    prob.n = mm.size;
    prob.cell_ids = mm.cells;
    std::vector<int> var_of(mm.num_variables(), -1);
    std::vector<double> value(mm.num_variables(), 0.0);
    for (int id = 1; id < mm.num_variables(); id++) {
        if (mm.known[id]) {
            value[id] = mm.known[id]->value(p);
        } else {
            var_of[id] = prob.num_free++;
            prob.free_ids.push_back(id);
        }
    }
    const std::size_t cells = mm.cells.size();
    prob.cell_var.resize(cells);
    prob.constants.resize(cells);
    for (std::size_t c = 0; c < cells; c++) {
        int id = mm.cells[c];
        prob.cell_var[c] = var_of[id];
        prob.constants[c] = var_of[id] >= 0 ? 0.0 : value[id];
    }
    return prob;
}

namespace {

using Clock = std::chrono::steady_clock;
using Blocks = std::vector<Eigen::MatrixXd>;

// Eigenpairs of a symmetric matrix with eigenvalues in (vl, vu].
void eig_range(const Eigen::MatrixXd &a, double vl, double vu, Eigen::VectorXd &w, Eigen::MatrixXd &z) {
    const int n = static_cast<int>(a.rows());
    Eigen::MatrixXd work = a;
    Eigen::VectorXd vals(n);
    Eigen::MatrixXd vecs(n, n);
    std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n));
    lapack_int m = 0;
    lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'V', 'U', n, work.data(), n, vl, vu, 0, 0, 0.0, &m,
                                     vals.data(), vecs.data(), n, isuppz.data());
    if (info > 0) {
        // MRRR can fail on tightly clustered spectra; fall back to the QR-based solver.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
        const auto &ev = es.eigenvalues();
        int lo = 0;
        while (lo < n && ev[lo] <= vl) {
            lo++;
        }
        int hi = lo;
        while (hi < n && ev[hi] <= vu) {
            hi++;
        }
        w = ev.segment(lo, hi - lo);
        z = es.eigenvectors().middleCols(lo, hi - lo);
        return;
    }
    if (info != 0) {
        throw std::runtime_error("dsyevr failed with info " + std::to_string(info));
    }
    w = vals.head(m);
    z = vecs.leftCols(m);
}

double min_eigenvalue(const Eigen::MatrixXd &a) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) {
        return std::numeric_limits<double>::infinity();
    }
    Eigen::MatrixXd work = a;
    double z[1];
    lapack_int isuppz[2];
    lapack_int m = 0;
    std::vector<double> vals(n);
    lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'N', 'I', 'U', n, work.data(), n, 0.0, 0.0, 1, 1, 0.0, &m,
                                     vals.data(), z, 1, isuppz);
    if (info > 0) {
        return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly).eigenvalues()[0];
    }
    if (info != 0) {
        throw std::runtime_error("dsyevr failed with info " + std::to_string(info));
    }
    return vals[0];
}

double min_eigenvalue(const Blocks &bl) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto &b : bl) {
        m = std::min(m, min_eigenvalue(b));
    }
    return m;
}

double inner(const Blocks &a, const Blocks &b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); k++) {
        s += (a[k].array() * b[k].array()).sum();
    }
    return s;
}

// Orthogonal symmetry-adapted basis: one block per character of the group generated by the
// row involutions, each column supported on a single orbit.
class SymmetryBasis {
   public:
    SymmetryBasis(int n, const std::vector<std::vector<int>> &gens) : n_(n) {
        const int m = static_cast<int>(gens.size());
        const int order = 1 << m;
        std::vector<std::vector<int>> elem(order, std::vector<int>(n));
        for (int i = 0; i < n; i++) {
            elem[0][i] = i;
        }
        for (int g = 1; g < order; g++) {
            int low = __builtin_ctz(g);
            const auto &prev = elem[g & (g - 1)];
            for (int i = 0; i < n; i++) {
                elem[g][i] = gens[low][prev[i]];
            }
        }
        std::vector<char> seen(n, 0);
        std::vector<std::vector<std::vector<std::pair<int, double>>>> by_char(order);
        std::map<int, double> acc;
        for (int r = 0; r < n; r++) {
            if (seen[r]) {
                continue;
            }
            for (int g = 0; g < order; g++) {
                seen[elem[g][r]] = 1;
            }
            for (int chi = 0; chi < order; chi++) {
                acc.clear();
                for (int g = 0; g < order; g++) {
                    acc[elem[g][r]] += (__builtin_popcount(chi & g) & 1) ? -1.0 : 1.0;
                }
                double norm2 = 0.0;
                for (auto &[i, c] : acc) {
                    norm2 += c * c;
                }
                if (norm2 < 0.5) {
                    continue;
                }
                std::vector<std::pair<int, double>> col;
                for (auto &[i, c] : acc) {
                    if (c != 0.0) {
                        col.emplace_back(i, c / std::sqrt(norm2));
                    }
                }
                by_char[chi].push_back(std::move(col));
            }
        }
        for (auto &cols : by_char) {
            if (!cols.empty()) {
                blocks_.push_back(std::move(cols));
            }
        }
    }

    std::size_t num_blocks() const {
        return blocks_.size();
    }

    Blocks gather(const Eigen::MatrixXd &full) const {
        Blocks out(blocks_.size());
        for (std::size_t b = 0; b < blocks_.size(); b++) {
            const auto &cols = blocks_[b];
            const int nb = static_cast<int>(cols.size());
            out[b].resize(nb, nb);
            for (int q = 0; q < nb; q++) {
                for (int p = q; p < nb; p++) {
                    double s = 0.0;
                    for (auto [j, w] : cols[q]) {
                        for (auto [i, u] : cols[p]) {
                            s += u * w * full(i, j);
                        }
                    }
                    out[b](p, q) = out[b](q, p) = s;
                }
            }
        }
        return out;
    }

    Eigen::MatrixXd scatter(const Blocks &bl) const {
        Eigen::MatrixXd full = Eigen::MatrixXd::Zero(n_, n_);
        for (std::size_t b = 0; b < blocks_.size(); b++) {
            const auto &cols = blocks_[b];
            const int nb = static_cast<int>(cols.size());
            for (int q = 0; q < nb; q++) {
                for (int p = 0; p < nb; p++) {
                    double x = bl[b](p, q);
                    if (x == 0.0) {
                        continue;
                    }
                    for (auto [j, w] : cols[q]) {
                        for (auto [i, u] : cols[p]) {
                            full(i, j) += u * w * x;
                        }
                    }
                }
            }
        }
        return full;
    }

   private:
    int n_;
    std::vector<std::vector<std::vector<std::pair<int, double>>>> blocks_;
};

// Keeps the generators that really are commuting involutions preserving the problem data.
std::vector<std::vector<int>> valid_symmetries(const SdpProblem &p) {
    std::vector<std::vector<int>> ok;
    const int n = p.n;
    for (const auto &g : p.symmetries) {
        if (static_cast<int>(g.size()) != n) {
            continue;
        }
        bool good = true;
        for (int i = 0; i < n && good; i++) {
            good = g[i] >= 0 && g[i] < n && g[g[i]] == i;
        }
        for (int i = 0; i < n && good; i++) {
            for (int j = 0; j < n && good; j++) {
                good = p.var(g[i], g[j]) == p.var(i, j) && p.constant(g[i], g[j]) == p.constant(i, j);
            }
        }
        for (const auto &h : ok) {
            for (int i = 0; i < n && good; i++) {
                good = g[h[i]] == h[g[i]];
            }
        }
        if (good) {
            ok.push_back(g);
        }
    }
    return ok;
}

struct Operator {
    int n = 0;
    int m = 0;  // free variables; constraint 0 is the trace
    std::vector<std::int32_t> var;
    Eigen::VectorXd cnt;   // cells per variable, both triangles
    Eigen::VectorXd diag;  // diagonal cells per variable
    double schur = 0.0;

    explicit Operator(const SdpProblem &p) : n(p.n), m(p.num_free), var(p.cell_var) {
        cnt = Eigen::VectorXd::Zero(m);
        diag = Eigen::VectorXd::Zero(m);
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) {
                int v = var[static_cast<std::size_t>(i) * n + j];
                if (v >= 0) {
                    cnt[v] += 1.0;
                    if (i == j) {
                        diag[v] += 1.0;
                    }
                }
            }
        }
        schur = n;
        for (int k = 0; k < m; k++) {
            schur -= diag[k] * diag[k] / cnt[k];
        }
    }

    Eigen::VectorXd apply(const Eigen::MatrixXd &x) const {
        Eigen::VectorXd r = Eigen::VectorXd::Zero(m + 1);
        r[0] = x.trace();
        for (int j = 0; j < n; j++) {
            for (int i = 0; i < n; i++) {
                int v = var[static_cast<std::size_t>(i) * n + j];
                if (v >= 0) {
                    r[v + 1] += x(i, j);
                }
            }
        }
        return r;
    }

    Eigen::MatrixXd adjoint(const Eigen::VectorXd &w) const {
        Eigen::MatrixXd out(n, n);
        for (int j = 0; j < n; j++) {
            for (int i = 0; i < n; i++) {
                int v = var[static_cast<std::size_t>(i) * n + j];
                out(i, j) = v >= 0 ? w[v + 1] : 0.0;
            }
        }
        out.diagonal().array() += w[0];
        return out;
    }

    // Solves (A A^*) w = r; the Gram matrix is an arrowhead.
    Eigen::VectorXd solve_gram(const Eigen::VectorXd &r) const {
        Eigen::VectorXd w(m + 1);
        double rhs = r[0];
        for (int k = 0; k < m; k++) {
            rhs -= diag[k] * r[k + 1] / cnt[k];
        }
        w[0] = rhs / schur;
        for (int k = 0; k < m; k++) {
            w[k + 1] = (r[k + 1] - diag[k] * w[0]) / cnt[k];
        }
        return w;
    }
};

}  // namespace

SolveReport AdmmSolver::solve(const SdpProblem &prob, const SolverOptions &opt, const SolverState *warm) const {
    const auto t0 = Clock::now();
    if (!(opt.relaxation > 0.0 && opt.relaxation < 1.618)) {
        throw std::invalid_argument("relaxation must lie in (0, 1.618)");
    }
    if (!(opt.tol > 0.0)) {
        throw std::invalid_argument("solver tolerance must be positive");
    }
    const int n = prob.n;
    Operator A(prob);
    SymmetryBasis basis(n, valid_symmetries(prob));
    const std::size_t nb = basis.num_blocks();
    Eigen::MatrixXd C(n, n);
    for (int j = 0; j < n; j++) {
        for (int i = 0; i < n; i++) {
            C(i, j) = prob.constant(i, j);
        }
    }
    const Blocks Cb = basis.gather(C);
    // Trace scaled to n so that X is O(1) entrywise.
    Eigen::VectorXd b = Eigen::VectorXd::Zero(A.m + 1);
    b[0] = n;
    const double cnorm = C.norm();

    Eigen::VectorXd y;
    Blocks Xb, Sb;
    double mu = 1.0;
    if (warm && !warm->empty() && warm->X.rows() == n && warm->y.size() == A.m + 1) {
        Xb = basis.gather(warm->X);
        Sb = basis.gather(warm->S);
        y = warm->y;
        mu = warm->mu;
    } else {
        Xb = basis.gather(Eigen::MatrixXd::Identity(n, n));
        Sb = basis.gather(Eigen::MatrixXd::Zero(n, n));
        y = Eigen::VectorXd::Zero(A.m + 1);
    }

    SolveReport rep;
    rep.backend = name();
    Eigen::VectorXd w;
    Eigen::MatrixXd z;
    double ratio_log = 0.0;
    int ratio_count = 0;
    double lower = -std::numeric_limits<double>::infinity();
    double cert = std::numeric_limits<double>::infinity();
    Eigen::MatrixXd xt_final;
    double xt_lmin = 0.0;

    // Certificates from the current iterate.
    auto check = [&]() {
        Eigen::VectorXd zy = y;
        zy[0] = 0.0;
        Blocks g = basis.gather(A.adjoint(zy));
        for (std::size_t k = 0; k < nb; k++) {
            g[k] = Cb[k] - g[k];
        }
        lower = min_eigenvalue(g);
        Eigen::MatrixXd xf = basis.scatter(Xb);
        Eigen::VectorXd sums = A.apply(xf);
        Eigen::VectorXd corr = Eigen::VectorXd::Zero(A.m + 1);
        for (int k = 0; k < A.m; k++) {
            corr[k + 1] = sums[k + 1] / A.cnt[k];
        }
        xt_final = (xf - A.adjoint(corr)) / n;
        xt_lmin = min_eigenvalue(basis.gather(xt_final));
        cert = (C.array() * xt_final.array()).sum() - n * std::min(0.0, xt_lmin);
    };

    bool done = false;
    int it = 0;
    Eigen::MatrixXd xf = basis.scatter(Xb);
    for (; it < opt.max_iterations && !done; it++) {
        Blocks comb(nb);
        for (std::size_t k = 0; k < nb; k++) {
            comb[k] = mu * Xb[k] + Sb[k] - Cb[k];
        }
        Eigen::VectorXd r = A.apply(basis.scatter(comb)) - mu * b;
        y = -A.solve_gram(r);
        Blocks aty = basis.gather(A.adjoint(y));
        double step2 = 0.0;
        int neg = 0;
        for (std::size_t k = 0; k < nb; k++) {
            Eigen::MatrixXd V = Cb[k] - aty[k] - mu * Xb[k];
            eig_range(V, -std::numeric_limits<double>::max(), 0.0, w, z);
            neg += static_cast<int>(w.size());
            Eigen::MatrixXd vneg = z * w.asDiagonal() * z.transpose();
            Eigen::MatrixXd xnew = (1.0 - opt.relaxation) * Xb[k] - (opt.relaxation / mu) * vneg;
            step2 += (Xb[k] - xnew).squaredNorm();
            Sb[k] = V - vneg;
            Xb[k] = std::move(xnew);
        }
        rep.dual_residual = mu * std::sqrt(step2) / (1.0 + cnorm);
        xf = basis.scatter(Xb);
        rep.primal_residual = (A.apply(xf) - b).norm() / (1.0 + n);

        double pobj = inner(Cb, Xb) / n;
        double dobj = y[0];
        double gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
        rep.lambda = dobj;
        if (opt.verbose > 0 && it % opt.verbose == 0) {
            std::fprintf(stderr, "it %6d  pobj %+.6e  dobj %+.6e  pres %.2e  dres %.2e  mu %.2e  neg %d\n", it, pobj,
                         dobj, rep.primal_residual, rep.dual_residual, mu, neg);
        }

        bool converged = std::max(rep.primal_residual, rep.dual_residual) < opt.eps && gap < opt.eps;
        if (converged || (opt.decide && (it + 1) % opt.check_every == 0)) {
            check();
            if (converged || lower >= -opt.tol || cert < -opt.cert_tol) {
                done = true;
            }
        }
        if (opt.time_limit > 0.0 && std::chrono::duration<double>(Clock::now() - t0).count() > opt.time_limit) {
            break;
        }

        // Penalty balancing between primal and dual residuals.
        double pr = std::max(rep.primal_residual, 1e-16);
        double dr = std::max(rep.dual_residual, 1e-16);
        ratio_log += std::log(pr / dr);
        if (++ratio_count == 20) {
            double avg = ratio_log / ratio_count;
            if (avg > std::log(4.0)) {
                mu = std::min(mu * 1.6, 1e6);
            } else if (avg < -std::log(4.0)) {
                mu = std::max(mu / 1.6, 1e-6);
            }
            ratio_log = 0.0;
            ratio_count = 0;
        }
    }
    if (!done) {
        check();
    }
    rep.iterations = it;
    rep.lambda_lower = lower;
    rep.certificate_value = cert;
    if (lower >= -opt.tol) {
        rep.status = SolveStatus::Feasible;
    } else if (cert < -opt.cert_tol) {
        rep.status = SolveStatus::Infeasible;
    } else {
        rep.status = SolveStatus::Inconclusive;
    }
    if (rep.status == SolveStatus::Infeasible && !prob.cell_ids.empty()) {
        for (int j = 0; j < n; j++) {
            for (int i = 0; i < n; i++) {
                std::size_t c = static_cast<std::size_t>(i) * n + j;
                if (prob.cell_var[c] < 0 && prob.cell_ids[c] != MomentMatrix::kZeroId) {
                    rep.dual[prob.cell_ids[c]] += xt_final(i, j);
                }
            }
        }
        rep.dual[MomentMatrix::kIdentityId] -= n * std::min(0.0, xt_lmin);
    }
    rep.moments.resize(A.m);
    for (int k = 0; k < A.m; k++) {
        rep.moments[k] = -y[k + 1];
    }
    rep.state.X = xf;
    rep.state.S = basis.scatter(Sb);
    rep.state.y = std::move(y);
    rep.state.mu = mu;
    rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

nlohmann::ordered_json report_to_json(const SolveReport &r, const SdpProblem &prob, const MomentMatrix &mm,
                                      const InflationScenario &sc) {
    nlohmann::ordered_json j;
    j["status"] = status_name(r.status);
    j["lambda"] = r.lambda;
    j["lambda_lower"] = r.lambda_lower;
    j["certificate_value"] = r.certificate_value;
    nlohmann::ordered_json dual = nlohmann::ordered_json::object();
    for (const auto &[id, c] : r.dual) {
        dual[to_string(mm.variables[id], sc)] = c;
    }
    j["dual"] = dual;
    nlohmann::ordered_json moments = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < r.moments.size() && k < prob.free_ids.size(); k++) {
        moments[to_string(mm.variables[prob.free_ids[k]], sc)] = r.moments[k];
    }
    j["moments"] = moments;
    j["diagnostics"] = {{"backend", r.backend},
                        {"iterations", r.iterations},
                        {"primal_residual", r.primal_residual},
                        {"dual_residual", r.dual_residual},
                        {"seconds", r.seconds}};
    return j;
}

std::string to_sdpa(const SdpProblem &prob) {
    const int n = prob.n;
    std::string out;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d\n1\n%d\n", prob.num_free + 1, n);
    out += buf;
    out += "-1";
    for (int k = 0; k < prob.num_free; k++) {
        out += " 0";
    }
    out += "\n";
    // F0 = -constants, F1 = -I, F_{k+2} = indicator of the cells of free variable k.
    for (int i = 0; i < n; i++) {
        for (int j = i; j < n; j++) {
            if (prob.var(i, j) < 0 && prob.constant(i, j) != 0.0) {
                std::snprintf(buf, sizeof buf, "0 1 %d %d %.17g\n", i + 1, j + 1, -prob.constant(i, j));
                out += buf;
            }
        }
    }
    for (int i = 0; i < n; i++) {
        std::snprintf(buf, sizeof buf, "1 1 %d %d -1\n", i + 1, i + 1);
        out += buf;
    }
    std::vector<std::vector<std::pair<int, int>>> cells(prob.num_free);
    for (int i = 0; i < n; i++) {
        for (int j = i; j < n; j++) {
            if (int v = prob.var(i, j); v >= 0) {
                cells[v].emplace_back(i, j);
            }
        }
    }
    for (int k = 0; k < prob.num_free; k++) {
        for (auto [i, j] : cells[k]) {
            std::snprintf(buf, sizeof buf, "%d 1 %d %d 1\n", k + 2, i + 1, j + 1);
            out += buf;
        }
    }
    return out;
}

void export_sdpa(const SdpProblem &prob, const std::string &path) {
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    f << to_sdpa(prob);
    if (!f) {
        throw std::runtime_error("write to " + path + " failed");
    }
}

SdpProblem parse_sdpa(const std::string &text) {
    // Comment lines start with '"' or '*'; separators ",(){}" are whitespace.
    std::string body;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && (line[0] == '"' || line[0] == '*')) {
            continue;
        }
        for (char &c : line) {
            if (c == ',' || c == '(' || c == ')' || c == '{' || c == '}') {
                c = ' ';
            }
        }
        body += line + "\n";
    }
    std::istringstream in(body);
    int m = 0, nblocks = 0, n = 0;
    if (!(in >> m >> nblocks) || nblocks != 1 || !(in >> n) || m < 1 || n < 1) {
        throw std::runtime_error("SDPA problem must have one block and at least one variable");
    }
    std::vector<double> c(m);
    for (auto &x : c) {
        if (!(in >> x)) {
            throw std::runtime_error("truncated SDPA objective");
        }
    }
    if (c[0] != -1.0) {
        throw std::runtime_error("SDPA problem does not maximize a lambda variable");
    }
    SdpProblem prob;
    prob.n = n;
    prob.num_free = m - 1;
    prob.cell_var.assign(static_cast<std::size_t>(n) * n, -1);
    prob.constants.assign(static_cast<std::size_t>(n) * n, 0.0);
    int mat = 0, blk = 0, i = 0, j = 0;
    std::string val_text;
    while (in >> mat >> blk >> i >> j >> val_text) {
        double val = std::stod(val_text);
        if (blk != 1 || i < 1 || j < 1 || i > n || j > n || mat < 0 || mat > m) {
            throw std::runtime_error("SDPA entry out of range");
        }
        std::size_t a = static_cast<std::size_t>(i - 1) * n + (j - 1);
        std::size_t bb = static_cast<std::size_t>(j - 1) * n + (i - 1);
        if (mat == 0) {
            prob.constants[a] = prob.constants[bb] = -val;
        } else if (mat == 1) {
            if (i != j || val != -1.0) {
                throw std::runtime_error("lambda matrix must be minus the identity");
            }
        } else {
            if (val != 1.0) {
                throw std::runtime_error("moment matrices must be 0/1 indicators");
            }
            prob.cell_var[a] = prob.cell_var[bb] = mat - 2;
        }
    }
    if (!in.eof()) {
        throw std::runtime_error("malformed SDPA entry");
    }
    return prob;
}

SdpProblem import_sdpa(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_sdpa(ss.str());
}

InflationModel::InflationModel(Network net, int order, std::string level)
    : order_(order),
      sc_(inflate(net, order)),
      gs_(netcert::generating_set(sc_, level)),
      mm_(build_moment_matrix(gs_, sc_)),
      symmetries_(row_symmetries(gs_, sc_)) {
}

SdpProblem InflationModel::assemble(const Distribution &p) const {
    SdpProblem prob = netcert::assemble(mm_, sc_.network(), p);
    prob.symmetries = symmetries_;
    return prob;
}

std::string InflationModel::label(int id) const {
    return to_string(mm_.variables.at(id), sc_);
}

BisectionResult critical_visibility(const InflationModel &model, const std::function<Distribution(double)> &family,
                                    double tol_v, const ConeSolver &solver, const SolverOptions &opt, double lo,
                                    double hi) {
    if (!(tol_v > 0.0) || !(lo < hi)) {
        throw std::invalid_argument("bisection needs tol_v > 0 and lo < hi");
    }
    BisectionResult res;
    SolverState state;
    auto incompatible = [&](double v) {
        SolveReport r = solver.solve(model.assemble(family(v)), opt, state.empty() ? nullptr : &state);
        state = std::move(r.state);
        bool bad = r.status == SolveStatus::Infeasible || (r.status == SolveStatus::Inconclusive && r.lambda < 0.0);
        res.steps.push_back({v, r.status, r.lambda});
        return bad;
    };
    if (!incompatible(hi)) {
        res.outcome = BisectionResult::Outcome::NeverInfeasible;
        res.estimate = hi;
        res.feasible_v = hi;
        return res;
    }
    res.infeasible_v = hi;
    if (incompatible(lo)) {
        res.outcome = BisectionResult::Outcome::AlwaysInfeasible;
        res.estimate = lo;
        res.infeasible_v = lo;
        return res;
    }
    res.feasible_v = lo;
    while (res.infeasible_v - res.feasible_v > tol_v) {
        double mid = 0.5 * (res.feasible_v + res.infeasible_v);
        if (incompatible(mid)) {
            res.infeasible_v = mid;
        } else {
            res.feasible_v = mid;
        }
    }
    res.estimate = 0.5 * (res.feasible_v + res.infeasible_v);
    return res;
}

}  // namespace netcert

#include "spincavity/axisolver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "spincavity/constants.hpp"
#include "spincavity/errors.hpp"

namespace spincavity {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

// Per-cell midpoint differences of the nodal field u over the four corners
// (i,j), (i+1,j), (i,j+1), (i+1,j+1):
//   dz(u) ~ du/dz at the cell centre,
//   dr(u) ~ (1/r) d(r u)/dr at the cell centre (conservative flux form).
// The stiffness A and mass B are assembled from exactly these expressions,
//   u'Au = sum_c V_c (dz^2 + dr^2),   u'Bu = sum_c V_c eps_c e_mid^2,
// which makes discrete equipartition an identity for every eigenpair: the
// same quadratures reappear verbatim in mode_energies.
struct CellStencil {
    double dz[4];
    double dr[4];
};

CellStencil cell_stencil(const AxiMesh& mesh, std::size_t ci, std::size_t cj) {
    const double r0 = mesh.r_nodes[ci], r1 = mesh.r_nodes[ci + 1];
    const double dzc = mesh.z_nodes[cj + 1] - mesh.z_nodes[cj];
    const double drc = r1 - r0;
    const double rbar = 0.5 * (r0 + r1);
    CellStencil s;
    const double az = 1.0 / (2.0 * dzc);
    s.dz[0] = -az; s.dz[1] = -az; s.dz[2] = az; s.dz[3] = az;
    const double ar = 1.0 / (2.0 * rbar * drc);
    s.dr[0] = -r0 * ar; s.dr[1] = r1 * ar; s.dr[2] = -r0 * ar; s.dr[3] = r1 * ar;
    return s;
}

struct Pencil {
    SpMat A, B;
    std::vector<int> dof_of_node; // -1 for Dirichlet boundary nodes
    int n_dof = 0;
};

Pencil assemble(const AxiMesh& mesh) {
    const std::size_t nrn = mesh.r_nodes.size();
    const std::size_t nzn = mesh.z_nodes.size();

    Pencil p;
    p.dof_of_node.assign(nrn * nzn, -1);
    for (std::size_t j = 1; j + 1 < nzn; ++j)
        for (std::size_t i = 1; i + 1 < nrn; ++i)
            p.dof_of_node[mesh.node_index(i, j)] = p.n_dof++;
    if (p.n_dof == 0)
        throw SolverError("mesh has no interior nodes");

    std::vector<Eigen::Triplet<double>> ta, tb;
    ta.reserve(16 * mesh.n_cells());
    tb.reserve(16 * mesh.n_cells());

    for (std::size_t cj = 0; cj < mesh.nz_cells(); ++cj) {
        for (std::size_t ci = 0; ci < mesh.nr_cells(); ++ci) {
            const double vol = mesh.cell_volume(ci, cj);
            const double eps = mesh.cell_material(ci, cj).eps_r;
            const CellStencil s = cell_stencil(mesh, ci, cj);
            const int dofs[4] = {
                p.dof_of_node[mesh.node_index(ci, cj)],
                p.dof_of_node[mesh.node_index(ci + 1, cj)],
                p.dof_of_node[mesh.node_index(ci, cj + 1)],
                p.dof_of_node[mesh.node_index(ci + 1, cj + 1)],
            };
            for (int a = 0; a < 4; ++a) {
                if (dofs[a] < 0)
                    continue;
                for (int b = 0; b < 4; ++b) {
                    if (dofs[b] < 0)
                        continue;
                    const double ka =
                        vol * (s.dz[a] * s.dz[b] + s.dr[a] * s.dr[b]);
                    ta.emplace_back(dofs[a], dofs[b], ka);
                    tb.emplace_back(dofs[a], dofs[b], vol * eps * 0.0625);
                }
            }
        }
    }

    p.A.resize(p.n_dof, p.n_dof);
    p.B.resize(p.n_dof, p.n_dof);
    p.A.setFromTriplets(ta.begin(), ta.end());
    p.B.setFromTriplets(tb.begin(), tb.end());
    return p;
}

struct RitzPair {
    double lambda = 0.0; // (omega/c)^2
    Vec x;
};

// Shift-invert Lanczos in the B-inner product for A x = lambda B x.
// Deterministic: fixed RNG seed, serial assembly, no data races.
class ShiftInvertLanczos {
public:
    ShiftInvertLanczos(const Pencil& p, double sigma, double tol)
        : pencil_(p), sigma_(sigma), tol_(tol) {
        K_ = p.A - sigma * p.B;
        lu_.compute(K_);
        if (lu_.info() != Eigen::Success)
            throw SolverError(
                "shift-invert factorization failed (shift hits an eigenvalue?)");
        std::mt19937 rng(20210412u);
        std::normal_distribution<double> dist;
        Vec v0(p.n_dof);
        for (int i = 0; i < p.n_dof; ++i)
            v0[i] = dist(rng);
        // One application pushes the start vector into range(K^-1 B), away
        // from the B-null space of the pencil (its infinite eigenvalues).
        v0 = lu_.solve(pencil_.B * v0);
        append_start(v0);
    }

    bool exhausted() const { return exhausted_; }
    int steps() const { return static_cast<int>(alpha_.size()); }

    // Extends the factorization to m Lanczos steps (or breakdown).
    void extend(int m) {
        while (steps() < m && !exhausted_) {
            const Vec& q = Q_.back();
            const Vec& bq = BQ_.back();
            Vec w = lu_.solve(bq);
            const double alpha = w.dot(bq);
            alpha_.push_back(alpha);
            w -= alpha * q;
            if (Q_.size() >= 2)
                w -= beta_.back() * Q_[Q_.size() - 2];
            // Full reorthogonalization (twice) in the B-inner product.
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t i = 0; i < Q_.size(); ++i)
                    w -= w.dot(BQ_[i]) * Q_[i];
            Vec bw = pencil_.B * w;
            double beta = std::sqrt(std::max(0.0, w.dot(bw)));
            if (!(beta > breakdown_floor())) {
                exhausted_ = true;
                return;
            }
            beta_.push_back(beta);
            Q_.push_back(w / beta);
            BQ_.push_back(bw / beta);
        }
    }

    // Ritz pairs of the pencil with explicit residual acceptance.
    std::vector<RitzPair> converged_pairs() const {
        const int m = steps();
        std::vector<RitzPair> out;
        if (m == 0)
            return out;
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            t(i, i) = alpha_[i];
            if (i + 1 < m) {
                t(i, i + 1) = beta_[i];
                t(i + 1, i) = beta_[i];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        const double theta_floor =
            1e-12 * es.eigenvalues().cwiseAbs().maxCoeff();
        for (int k = 0; k < m; ++k) {
            const double theta = es.eigenvalues()[k];
            if (std::abs(theta) <= theta_floor)
                continue; // maps to |lambda| -> infinity, outside interest
            const double lambda = sigma_ + 1.0 / theta;
            if (lambda <= 0.0)
                continue;
            Vec x = Vec::Zero(pencil_.n_dof);
            for (int i = 0; i < m; ++i)
                x += es.eigenvectors()(i, k) * Q_[i];
            const Vec ax = pencil_.A * x;
            const Vec bx = pencil_.B * x;
            const Vec res = ax - lambda * bx;
            const double denom = ax.norm() + std::abs(lambda) * bx.norm();
            if (denom <= 0.0)
                continue;
            if (res.norm() / denom <= tol_)
                out.push_back({lambda, std::move(x)});
        }
        std::sort(out.begin(), out.end(),
                  [](const RitzPair& a, const RitzPair& b) {
                      return a.lambda < b.lambda;
                  });
        return out;
    }

private:
    void append_start(const Vec& v) {
        Vec bv = pencil_.B * v;
        const double nrm = std::sqrt(std::max(0.0, v.dot(bv)));
        if (!(nrm > 0.0))
            throw SolverError("start vector annihilated by the mass matrix");
        Q_.push_back(v / nrm);
        BQ_.push_back(bv / nrm);
    }

    double breakdown_floor() const {
        return 1e-14; // B-normalized basis: unit-scale vectors
    }

    const Pencil& pencil_;
    double sigma_;
    double tol_;
    SpMat K_;
    Eigen::SparseLU<SpMat> lu_;
    std::vector<Vec> Q_, BQ_;
    std::vector<double> alpha_, beta_;
    bool exhausted_ = false;
};

double lambda_of_freq(double f_hz) {
    const double w = constants::two_pi * f_hz;
    const double k = w / constants::speed_of_light;
    return k * k;
}

bool mesh_is_loaded(const AxiMesh& mesh) {
    for (int lbl : mesh.cell_label)
        if (mesh.materials[lbl].eps_r != 1.0)
            return true;
    return false;
}

FieldSolution extract_field(std::shared_ptr<const AxiMesh> mesh,
                            const Pencil& pencil, const Vec& x, double omega) {
    const AxiMesh& m = *mesh;
    FieldSolution f;
    f.mesh = mesh;
    f.omega = omega;
    f.e_phi.assign(m.n_nodes(), 0.0);
    for (std::size_t j = 0; j < m.z_nodes.size(); ++j)
        for (std::size_t i = 0; i < m.r_nodes.size(); ++i)
            if (const int dof = pencil.dof_of_node[m.node_index(i, j)]; dof >= 0)
                f.e_phi[m.node_index(i, j)] = x[dof];

    // Deterministic sign: largest-magnitude node value is made positive.
    std::size_t peak = 0;
    for (std::size_t n = 1; n < f.e_phi.size(); ++n)
        if (std::abs(f.e_phi[n]) > std::abs(f.e_phi[peak]))
            peak = n;
    if (f.e_phi[peak] < 0.0)
        for (double& v : f.e_phi)
            v = -v;

    // H from Faraday's law at cell midpoints, with the same differences the
    // stiffness matrix was assembled from.
    f.h_r.assign(m.n_cells(), 0.0);
    f.h_z.assign(m.n_cells(), 0.0);
    const double scale = 1.0 / (omega * constants::mu0);
    for (std::size_t cj = 0; cj < m.nz_cells(); ++cj) {
        for (std::size_t ci = 0; ci < m.nr_cells(); ++ci) {
            const CellStencil s = cell_stencil(m, ci, cj);
            const double e[4] = {
                f.e_phi[m.node_index(ci, cj)],
                f.e_phi[m.node_index(ci + 1, cj)],
                f.e_phi[m.node_index(ci, cj + 1)],
                f.e_phi[m.node_index(ci + 1, cj + 1)],
            };
            double dz = 0.0, dr = 0.0;
            for (int a = 0; a < 4; ++a) {
                dz += s.dz[a] * e[a];
                dr += s.dr[a] * e[a];
            }
            const std::size_t c = m.cell_index(ci, cj);
            f.h_r[c] = -scale * dz;
            f.h_z[c] = scale * dr;
        }
    }
    return f;
}

} // namespace

std::vector<ModeResult> solve_axisymmetric_te0(
    std::shared_ptr<const AxiMesh> mesh, FrequencyWindow window, int n_modes,
    const SolverOptions& options) {
    if (!mesh)
        throw DomainError("solve_axisymmetric_te0: null mesh");
    if (!(window.low_hz > 0.0) || !(window.high_hz > window.low_hz))
        throw DomainError("frequency window must satisfy 0 < low < high");
    if (n_modes < 1)
        throw DomainError("n_modes must be >= 1");

    const Pencil pencil = assemble(*mesh);
    const double lambda_low = lambda_of_freq(window.low_hz);
    const double lambda_high = lambda_of_freq(window.high_hz);
    const double sigma = 0.5 * (lambda_low + lambda_high);

    ShiftInvertLanczos lanczos(pencil, sigma, options.residual_tol);

    const int cap = std::min(options.max_subspace, pencil.n_dof);
    int m = std::min(cap, std::max(40, 2 * (n_modes + options.extra_pairs) + 20));
    std::vector<RitzPair> conv;
    while (true) {
        lanczos.extend(m);
        conv = lanczos.converged_pairs();
        int in_window = 0;
        bool below = false, above = false;
        for (const auto& p : conv) {
            if (p.lambda < lambda_low)
                below = true;
            else if (p.lambda > lambda_high)
                above = true;
            else
                ++in_window;
        }
        if (in_window >= n_modes || (below && above) || lanczos.exhausted() ||
            m >= cap)
            break;
        m = std::min(cap, m + 24);
    }

    if (conv.empty() && !lanczos.exhausted()) {
        std::ostringstream os;
        os << "eigen-iteration failed to converge any pair: subspace "
           << lanczos.steps() << ", tol " << options.residual_tol
           << ", target " << 0.5 * (window.low_hz + window.high_hz) << " Hz";
        throw SolverError(os.str());
    }

    std::vector<ModeResult> out;
    const bool loaded = mesh_is_loaded(*mesh);
    for (const auto& p : conv) {
        if (static_cast<int>(out.size()) >= n_modes)
            break;
        const double omega = constants::speed_of_light * std::sqrt(p.lambda);
        const double freq = omega / constants::two_pi;
        if (!window.contains(freq))
            continue;

        FieldSolution field = extract_field(mesh, pencil, p.x, omega);
        auto [we, wm] = mode_energies(field);
        const double s = 1.0 / std::sqrt(we + wm);
        for (double& v : field.e_phi)
            v *= s;
        for (double& v : field.h_r)
            v *= s;
        for (double& v : field.h_z)
            v *= s;
        std::tie(we, wm) = mode_energies(field);

        ModeResult mode;
        mode.frequency = freq;
        mode.omega = constants::two_pi * freq;
        mode.w_e = we;
        mode.w_m = wm;
        mode.mode_volume_m3 = mode_volume(field);
        mode.field = std::move(field);
        mode.mode_id = (loaded && out.empty())
                           ? "TE01delta"
                           : "TE0-mode-" + std::to_string(out.size() + 1);
        out.push_back(std::move(mode));
    }
    return out;
}

} // namespace spincavity

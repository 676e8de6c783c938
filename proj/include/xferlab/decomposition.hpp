#pragma once
// Signal-noise decomposition of filter updates. Every GD update adds a linear
// combination of the signal directions {u, v1, v2} and the training noise
// patches, so w^(t) - w^(0) lies in their span and has unique coefficients.
// Two independent descriptions are computed: a Gram-system projection of the
// weights, and a per-step recursion driven by the training trace. They must
// agree to tight absolute tolerance; disagreement means a bug in one of them.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "xferlab/data.hpp"
#include "xferlab/model.hpp"
#include "xferlab/training.hpp"

namespace xferlab::decomp {

// Immutable basis {u, v1, v2} + task-1 noise + task-2 noise, with Gram matrix
// and SPD factorization. u is dropped when ||u|| = 0 (its normalized
// coefficient would be undefined); either noise block may be empty.
struct BasisCache {
    int d = 0;
    int n1 = 0, n2 = 0;
    bool has_u = false;
    int k = 0;                   // basis size = has_u + 2 + n1 + n2
    std::vector<double> vecs;    // [k][d], row-major
    std::vector<double> norm_sq; // [k]
    std::vector<double> gram;    // [k][k]
    std::vector<double> chol;    // lower-triangular Cholesky factor of gram
    double cond = 0;             // 2-norm condition estimate of gram

    int idx_u() const { return 0; } // valid only when has_u
    int idx_v1() const { return has_u ? 1 : 0; }
    int idx_v2() const { return idx_v1() + 1; }
    int idx_noise(int task_id, int i) const { return idx_v2() + 1 + (task_id == 1 ? i : n1 + i); }

    const double* vec(int idx) const { return vecs.data() + std::size_t(idx) * d; }
    double noise_norm_sq(int task_id, int i) const { return norm_sq[idx_noise(task_id, i)]; }

    // coefficients c with g = sum_k c_k b_k: solves gram*c = B*g with
    // iterative refinement (long-double residuals)
    std::vector<double> solve(const double* g) const;
};

// max_cond: conditioning guard; the Gram solve is refused above it.
BasisCache build_basis(const data::SignalSet& sig, const data::Dataset* ds1,
                       const data::Dataset* ds2, double max_cond = 1e8);

// Per-filter coefficients at one step. gamma is absent (empty) when the basis
// has no u direction. rho tensors hold the raw signed values; the one-sided
// splits are derived views.
struct CoeffTensor {
    int m = 0, n1 = 0, n2 = 0;
    bool has_gamma = false;
    std::vector<double> gamma;  // [2][m] when has_gamma, else empty
    std::vector<double> gamma1; // [2][m]
    std::vector<double> gamma2; // [2][m]
    std::vector<double> rho1;   // [2][m][n1]
    std::vector<double> rho2;   // [2][m][n2]

    static CoeffTensor zeros(int m, int n1, int n2, bool has_gamma);

    std::size_t rdx(int task_id, int jdx, int r, int i) const {
        return (std::size_t(jdx) * m + r) * (task_id == 1 ? n1 : n2) + i;
    }
    double rho(int task_id, int jdx, int r, int i) const {
        return task_id == 1 ? rho1[rdx(1, jdx, r, i)] : rho2[rdx(2, jdx, r, i)];
    }
    double rho_bar(int task_id, int jdx, int r, int i) const {
        double v = rho(task_id, jdx, r, i);
        return v >= 0 ? v : 0;
    }
    double rho_under(int task_id, int jdx, int r, int i) const {
        double v = rho(task_id, jdx, r, i);
        return v <= 0 ? v : 0;
    }
};

// shape-checked max absolute difference across all coefficient fields
double max_abs_diff(const CoeffTensor& a, const CoeffTensor& b);

// Project w_t - w_0 onto the basis and rescale to normalized coefficients
// (the u coefficient is j*gamma/||u||^2, each noise coefficient rho/||xi||^2).
// The difference must lie in the basis span: reconstruction residual above
// rel_tol * ||w_t - w_0|| per filter is an error. max_rel_residual_out, when
// given, receives the largest per-filter relative residual.
CoeffTensor decompose_projection(const model::FilterBank& w_t, const model::FilterBank& w_0,
                                 const BasisCache& basis, double rel_tol = 1e-8,
                                 double* max_rel_residual_out = nullptr);

// Coefficient snapshots at steps 0, cadence, 2*cadence, ..., T (T always
// included).
struct TrackedCheckpoints {
    std::vector<int> steps;
    std::vector<CoeffTensor> coeffs;
};

// Replay the update recursion for one training stage from the recorded trace:
// the active system's gamma gains (eta/(N m)) * sum_i (-l'_i) * 1[signal
// pre-activation > 0] * ||u||^2 per step (gamma1/gamma2 likewise with the
// task's v norm), and rho_{j,r,i} gains (eta/(N m)) * (-l'_i) * 1[noise
// pre-activation > 0] * ||xi_i||^2 * j*y_i. The inactive task's coefficients
// are never touched. start gives the step-0 tensor (zeros upstream; the
// transplant-seeded tensor downstream).
TrackedCheckpoints track_incremental(const CoeffTensor& start, int task_id, double eta,
                                     const data::Dataset& ds, const train::TrainTrace& trace,
                                     const BasisCache& basis, int cadence = 10);

// Step-0 tensor for the downstream stage: transplanted filters keep their
// upstream-final coefficients, re-initialized filters start from zero.
// copied is the [2][m] mask produced by the transplant.
CoeffTensor seed_downstream(const CoeffTensor& upstream_final, const std::vector<uint8_t>& copied);

// Per-filter reference weights the downstream decomposition is taken against:
// the upstream Gaussian init for transplanted filters (their coefficient
// history carries over), the fresh re-init for the rest.
model::FilterBank reference_bank(const model::FilterBank& upstream_init,
                                 const model::FilterBank& downstream_init,
                                 const std::vector<uint8_t>& copied);

// Aggregates the dynamics bounds constrain.
struct CoeffSummary {
    // (1/m) sum_r rho_bar_{y_i, r, i} over the label-matching class, one entry
    // per training sample of each task
    std::vector<double> per_sample_1, per_sample_2;
    // sum_i rho_bar_{j,r,i} per filter, [2][m] each
    std::vector<double> filter_sum_1, filter_sum_2;
    // class means over r, indexed by jdx
    double mean_gamma[2] = {0, 0}; // zeros when gamma is absent
    double mean_gamma1[2] = {0, 0};
    double mean_gamma2[2] = {0, 0};
    bool has_gamma = false;
};
CoeffSummary coeff_summaries(const CoeffTensor& c, const data::Dataset* ds1,
                             const data::Dataset* ds2);

// Sign-structure violations. Coefficient invariants: gamma, gamma1, gamma2
// >= -tol; rho_{j,r,i} >= -tol when j == y_i and <= tol when j != y_i (each
// update moves rho away from zero on its own side only).
struct SignReport {
    double min_gamma = 0;          // most negative gamma/gamma1/gamma2 entry
    double max_wrong_side_rho = 0; // largest |rho| on the forbidden side
    bool ok(double tol = 1e-10) const { return min_gamma >= -tol && max_wrong_side_rho <= tol; }
};
SignReport check_sign_structure(const CoeffTensor& c, const data::Dataset* ds1,
                                const data::Dataset* ds2);

// Checkpoint CSV. One row per (step, j, r); gamma is an empty field when
// absent. Columns:
//   step,j,r,gamma,gamma1,gamma2,sum_rho_bar_1,sum_rho_bar_2,
//   min_rho_under_1,min_rho_under_2
extern const char* const kCoeffCsvHeader;
void write_coeff_csv(const std::filesystem::path& file, const TrackedCheckpoints& cps);

// One full transfer run (upstream + transplant + downstream) with both
// decomposition descriptions evaluated at every checkpoint.
struct StageReport {
    std::vector<int> steps;
    double max_method_diff = 0;   // projection vs recursion, absolute
    double max_rel_residual = 0;  // worst reconstruction residual
    double min_gamma = 0;         // worst sign-structure numbers across steps
    double max_wrong_side_rho = 0;
    double max_freeze_drift = 0;  // downstream: projected task-1 coefficients
                                  // vs their transplanted values
};

struct DecompReport {
    data::Dataset ds1, ds2;
    BasisCache basis;
    train::RunResult run;
    TrackedCheckpoints up_inc, down_inc;         // recursion description
    std::vector<CoeffTensor> up_proj, down_proj; // projection description
    StageReport upstream, downstream;
};

DecompReport run_transfer_decomposition(const data::SignalSet& sig, const data::TaskSpec& task1,
                                        const data::TaskSpec& task2, const train::TrainConfig& cfg,
                                        const model::ModelConfig& mcfg, int n_test,
                                        int cadence = 10);

} // namespace xferlab::decomp

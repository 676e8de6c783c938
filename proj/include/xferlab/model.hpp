#pragma once
// Two-layer ReLU CNN f(W;x) = F_{+1}(W;x) - F_{-1}(W;x) with
// F_j = (1/m) sum_r [relu(<w_{j,r},x1>) + relu(<w_{j,r},x2>)],
// cross-entropy loss l(z) = log(1+exp(-z)), and the exact batch gradient.

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "xferlab/data.hpp"
#include "xferlab/rng.hpp"

namespace xferlab::model {

struct ModelConfig {
    int m = 40;
    int d = 2000;
    double sigma0 = 0.01;
    void validate() const;
};

// j = +1 bank first (jdx 0), then j = -1 (jdx 1)
struct FilterBank {
    int m = 0, d = 0;
    std::vector<double> w; // [2][m][d]

    static FilterBank zeros(int m, int d) {
        FilterBank b;
        b.m = m;
        b.d = d;
        b.w.assign(std::size_t(2) * m * d, 0.0);
        return b;
    }
    static int jdx(int j) { return j > 0 ? 0 : 1; }
    static int jval(int jdx) { return jdx == 0 ? 1 : -1; }

    double* filter(int jdx, int r) { return w.data() + (std::size_t(jdx) * m + r) * d; }
    const double* filter(int jdx, int r) const { return w.data() + (std::size_t(jdx) * m + r) * d; }
    std::span<const double> filter_span(int jdx, int r) const { return {filter(jdx, r), std::size_t(d)}; }

    void save(const std::filesystem::path& file) const;
    static FilterBank load(const std::filesystem::path& file);
};

FilterBank init_weights(const ModelConfig& cfg, rng::Philox& g);

double forward(const FilterBank& w, std::span<const double> x1, std::span<const double> x2);

// loss value and derivative, overflow-safe. neg_lprime = -l'(z) = 1/(1+e^z) in (0,1)
double loss_value(double z);
double neg_lprime(double z);

// Everything a GD step (or a decomposition tracker) needs from one forward pass.
struct BatchContext {
    int m = 0, n = 0;
    std::vector<double> noise_pre; // [2][m][n]  <w_{j,r}, xi_i>
    std::vector<double> sig_pre;   // [2][m]     <w_{j,r}, u+v>
    std::vector<double> margins;   // [n]        y_i f(W;x_i)
    std::vector<double> neg_lp;    // [n]        -l'_i
    double loss = 0;

    double npre(int jdx, int r, int i) const { return noise_pre[(std::size_t(jdx) * m + r) * n + i]; }
    double spre(int jdx, int r) const { return sig_pre[std::size_t(jdx) * m + r]; }
};

void eval_batch(const FilterBank& w, const data::Dataset& ds, BatchContext& ctx);

// gradient of the batch loss w.r.t. filter (jdx,r); ctx must come from eval_batch(w, ds)
void grad_row(const data::Dataset& ds, const BatchContext& ctx, int jdx, int r, double* out_d);

// full gradient, bit-identical to per-row grad_row results
void grad_all(const data::Dataset& ds, const BatchContext& ctx, FilterBank& grad);

struct LossGrad {
    double loss;
    FilterBank grad;
};
LossGrad loss_and_grad(const FilterBank& w, const data::Dataset& ds);

// Per-step training diagnostics. S_i = {r : <w_{y_i,r}, xi_i> > 0}.
struct StepStats {
    int step = 0;
    double loss = 0;
    double min_margin = 0, max_margin = 0;
    double max_lossratio = 1; // max_i(-l'_i) / min_k(-l'_k)
    double mean_s_size = 0;
};
StepStats step_stats(int step, const data::Dataset& ds, const BatchContext& ctx);

struct TrainLog {
    std::vector<StepStats> steps;
    void write_csv(const std::filesystem::path& file) const;
};

} // namespace xferlab::model

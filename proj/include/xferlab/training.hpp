#pragma once
// Full-batch GD, standard training, parameter transfer, and Monte-Carlo test
// error. All randomness is drawn from substreams of one master seed, so a run
// is a pure function of (configs, seed).

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xferlab/data.hpp"
#include "xferlab/model.hpp"

namespace xferlab::train {

enum class TransferMode { contiguous, random_subset };

TransferMode transfer_mode_from_string(const std::string& s);
std::string to_string(TransferMode m);

struct TrainConfig {
    double eta = 0.01;
    int t_upstream = 800;
    int t_downstream = 400;
    double alpha = 0.5;
    TransferMode mode = TransferMode::contiguous;
    uint64_t seed = 1;
    void validate() const;
};

// Per-step record for the decomposition tracker: loss derivatives and ReLU
// activity, captured before the update at step t.
struct StepTrace {
    std::vector<double> neg_lp;     // [n]
    std::vector<double> sig_pre;    // [2][m], pre-activation with +(u+v)
    std::vector<uint8_t> noise_act; // [2][m][n], <w_{j,r},xi_i> > 0
};

struct TrainTrace {
    int m = 0, n = 0;
    std::vector<StepTrace> steps;
};

// called after each applied update with (steps_done, current weights)
using StepCallback = std::function<void(int, const model::FilterBank&)>;

struct TrainHooks {
    model::TrainLog* log = nullptr;   // gets steps+1 rows (final row is eval-only)
    TrainTrace* trace = nullptr;      // gets one entry per applied step
    const StepCallback* after_step = nullptr;
};

void train_gd(model::FilterBank& w, const data::Dataset& ds, int steps, double eta,
              const TrainHooks& hooks = {});

model::FilterBank gd_step(const model::FilterBank& w, const data::Dataset& ds, double eta);

model::FilterBank transplant(const model::FilterBank& upstream, double alpha, TransferMode mode,
                             const model::ModelConfig& cfg, rng::Philox& fresh, rng::Philox& subset,
                             std::vector<uint8_t>* copied_out = nullptr);

double test_error_mc(const model::FilterBank& w, const data::SignalSet& sig,
                     const data::TaskSpec& task2, int n_test, uint64_t seed);

struct RunResult {
    model::ModelConfig mcfg;
    TrainConfig cfg;
    data::TaskSpec task1, task2; // task1 meaningful only for transfer runs
    bool transfer = false;
    model::FilterBank final_weights;
    std::optional<model::FilterBank> upstream_weights; // at the end of upstream training
    model::FilterBank downstream_init;                 // post-transplant (or fresh) init
    model::TrainLog upstream_log, train_log;
    std::vector<uint8_t> copied; // [2][m], 1 if filter transplanted
    double test_error = -1;
    double final_loss = -1;
    int n_test = 0;
};

struct RunHooks {
    TrainHooks upstream, downstream;
};

RunResult train_standard(const data::SignalSet& sig, const data::TaskSpec& task2,
                         const TrainConfig& cfg, const model::ModelConfig& mcfg, int n_test,
                         const RunHooks& hooks = {});

// Upstream stage alone, so sweeps can reuse one upstream model across several
// transplant fractions. transfer_downstream(train_upstream(...)) is the same
// computation as train_with_transfer: identical substreams, identical bits.
struct UpstreamResult {
    model::FilterBank weights;
    model::TrainLog log;
};

UpstreamResult train_upstream(const data::SignalSet& sig, const data::TaskSpec& task1,
                              const TrainConfig& cfg, const model::ModelConfig& mcfg,
                              const TrainHooks& hooks = {});

RunResult transfer_downstream(const data::SignalSet& sig, const data::TaskSpec& task1,
                              const data::TaskSpec& task2, const TrainConfig& cfg,
                              const model::ModelConfig& mcfg, int n_test,
                              const UpstreamResult& upstream, const RunHooks& hooks = {});

RunResult train_with_transfer(const data::SignalSet& sig, const data::TaskSpec& task1,
                              const data::TaskSpec& task2, const TrainConfig& cfg,
                              const model::ModelConfig& mcfg, int n_test,
                              const RunHooks& hooks = {});

} // namespace xferlab::train

#pragma once
// Sweep and heatmap harness: resolved parameter cells, a resume-safe on-disk
// record store, seed-paired with/without-transfer arms, aggregation, and the
// CSV record table. One master seed per sweep; the per-run seed is derived
// from (master seed, cell parameters, seed index), so arms within a cell share
// their Task-2 data and test stream while cells stay independent.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xferlab/theory.hpp"
#include "xferlab/training.hpp"

namespace xferlab::exp {

// Every parameter a single run needs, fully resolved (no pending axis).
struct CellParams {
    int d = 2000;
    int m = 40;
    double eta = 0.01;
    double sigma0 = 0.01;
    int t1 = 800;
    int t2 = 400;
    int n1 = 1000;
    int n2 = 100;
    double sigma1 = 5;
    double sigma2 = 5;
    double norm_u = 2;
    double norm_v1 = 2.2360679774997896; // sqrt(5), so |u+v1| = 3
    double norm_v2 = 2.2360679774997896;
    int n_test = 1000;
    train::TransferMode mode = train::TransferMode::contiguous;
    void validate() const;
    bool operator==(const CellParams&) const = default;
};

struct Arm {
    bool transfer = true;
    double alpha = 0.5;
    bool operator==(const Arm&) const = default;
};
std::string arm_name(const Arm& a); // "transfer-a0.5" / "standard"

struct SweepSpec {
    std::string name;           // store subdirectory, e.g. "setting1"
    CellParams base;
    std::string axis;           // "n1" | "sigma1" | "norm_u" | "d"
    std::vector<double> values;
    std::string axis2;          // second axis for heatmaps, else empty
    std::vector<double> values2;
    int seeds = 5;
    std::vector<Arm> arms;
    uint64_t master_seed = 1;
    theory::Constants consts;
    void validate() const;
};

// Applies one axis value; sweeping |u| holds both |u+v1| and |u+v2| at their
// base values so only the universal share of the signal moves.
CellParams apply_axis(const CellParams& base, const std::string& axis, double value);

// One CSV row: the resolved cell, which (seed, arm), and the outcomes.
struct RunRecord {
    std::string setting;
    std::string axis;
    double axis_value = 0;
    std::string axis2;  // empty for line sweeps
    double axis2_value = 0;
    CellParams cell;
    int seed_index = 0;
    uint64_t run_seed = 0;
    std::string arm; // arm_name()
    double alpha = 0; // 0 for the standard arm
    double test_error = -1;
    double accuracy = -1;
    double train_loss_final = -1;
    double upstream_loss_final = -1;    // -1 for the standard arm
    double upstream_max_lossratio = -1; // max over logged upstream steps
    double downstream_max_lossratio = -1;
    // regime diagnostics evaluated at this cell and this arm's alpha
    double gamma_key = 0;
    double d_threshold_transfer = 0;
    double d_threshold_standard = 0;
    double neg_transfer_ratio = 0;
    double neg_transfer_gate = 0;
    bool negative_transfer = false;
    std::string predicted_regime;
    double error_bound = 0;
    bool ok = true;
    std::string error;

    bool operator==(const RunRecord&) const = default;
};

// Per-step trajectories kept next to the scalar record in the store.
struct RunCurves {
    std::vector<double> upstream_loss, upstream_max_lossratio;
    std::vector<double> downstream_loss, downstream_max_lossratio;
};

uint64_t derive_run_seed(const SweepSpec& spec, const CellParams& cell, int seed_index);
theory::RegimeReport cell_regime(const CellParams& cell, double alpha,
                                 const theory::Constants& consts);

// store layout: <store>/<spec.name>/<cellkey>.json, plus spec.json
std::filesystem::path record_path(const std::filesystem::path& store, const SweepSpec& spec,
                                  const CellParams& cell, int seed_index, const Arm& arm);

using RecordCallback = std::function<void(const RunRecord&)>;

// Runs every (cell, seed, arm) not yet in the store; completed records are
// loaded, never recomputed, so interrupted sweeps resume. Failures are stored
// under <key>.failed.json (retried on the next pass) and returned with
// ok=false. Units run on `threads` workers; store writes are serialized.
// When `cancel` flips to true, no new unit starts; finished records are
// returned and the rest are simply absent (a later call picks them up).
std::vector<RunRecord> run_sweep(const SweepSpec& spec, const std::filesystem::path& store,
                                 int threads = 1, const RecordCallback& on_record = {},
                                 const std::atomic<bool>* cancel = nullptr);

std::optional<RunRecord> load_record(const std::filesystem::path& file);
std::optional<RunCurves> load_curves(const std::filesystem::path& file);

// mean +- standard error over seeds, grouped by (axis value(s), arm)
struct CellStat {
    double axis_value = 0, axis2_value = 0;
    std::string arm;
    int n = 0; // seeds aggregated (ok records only)
    double mean_accuracy = 0, se_accuracy = 0;
    double mean_error = 0, se_error = 0;
    double mean_final_loss = 0;
};
std::vector<CellStat> aggregate(const std::vector<RunRecord>& records);

struct HeatmapGrid {
    std::vector<double> u_values; // x axis
    std::vector<double> d_values; // y axis
    std::vector<double> acc;      // [d][u] mean accuracy over seeds
    std::vector<std::string> regime;
    std::vector<double> thresholds{0.65, 0.70};

    double at(int di, int ui) const { return acc[std::size_t(di) * u_values.size() + ui]; }
};

HeatmapGrid heatmap_from_records(const SweepSpec& spec, const std::vector<RunRecord>& records);
HeatmapGrid run_heatmap(const SweepSpec& spec, const std::filesystem::path& store,
                        int threads = 1, const RecordCallback& on_record = {});

// 1 where mean accuracy >= threshold else 0, laid out like HeatmapGrid::acc
std::vector<int> truncate_heatmap(const HeatmapGrid& g, double threshold);

// record-table CSV; %.17g doubles, so re-parsing reproduces records exactly
extern const char* kRecordsCsvHeader;
void write_records_csv(const std::vector<RunRecord>& records, const std::filesystem::path& file);
std::vector<RunRecord> read_records_csv(const std::filesystem::path& file);

// the four predefined sweeps
SweepSpec setting1_spec(uint64_t master_seed = 1, int seeds = 5); // vary n1
SweepSpec setting2_spec(uint64_t master_seed = 1, int seeds = 5); // vary sigma1
SweepSpec setting3_spec(uint64_t master_seed = 1, int seeds = 5); // vary |u|, |u+v2| fixed
SweepSpec setting4_spec(uint64_t master_seed = 1, int seeds = 5); // heatmap d x |u|

} // namespace xferlab::exp

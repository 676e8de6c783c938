#pragma once
// Synthetic two-patch data. Each sample has one signal patch y*(u + v_task)
// and one noise patch drawn from N(0, sigma_p^2 * P), where P projects out
// span{u, v_task}. Patch order is randomized per sample.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "xferlab/rng.hpp"

namespace xferlab::data {

// Fixed task directions. u, v1, v2 are mutually orthogonal by construction;
// unit directions are kept even at norm 0 (the noise projector needs them).
struct SignalSet {
    int d = 0;
    std::vector<double> u, v1, v2;             // scaled: |u| = norm_u etc.
    std::vector<double> u_hat, v1_hat, v2_hat; // unit length regardless of norms
    double norm_u = 0, norm_v1 = 0, norm_v2 = 0;
    std::vector<double> signal1, signal2;      // u+v1, u+v2

    const std::vector<double>& v(int task_id) const { return task_id == 1 ? v1 : v2; }
    const std::vector<double>& v_hat(int task_id) const { return task_id == 1 ? v1_hat : v2_hat; }
    const std::vector<double>& signal(int task_id) const { return task_id == 1 ? signal1 : signal2; }
    double norm_v(int task_id) const { return task_id == 1 ? norm_v1 : norm_v2; }
};

SignalSet build_signal_set(int d, double norm_u, double norm_v1, double norm_v2, uint64_t seed);

struct TaskSpec {
    int task_id = 1;      // 1 or 2
    double sigma_p = 5.0; // noise scale, > 0
    int n = 100;          // sample count, >= 1
    void validate() const;
};

struct Dataset {
    TaskSpec spec;
    uint64_t seed = 0;
    int d = 0;
    std::vector<int8_t> y;            // +1 / -1
    std::vector<uint8_t> signal_slot; // 1 or 2: which patch carries the signal
    std::vector<double> xi;           // [n][d] noise patches
    std::vector<double> sig_pos, sig_neg; // +(u+v), -(u+v)

    int n() const { return spec.n; }

    std::span<const double> noise(std::size_t i) const {
        return {xi.data() + i * std::size_t(d), std::size_t(d)};
    }
    std::span<const double> signal_patch(std::size_t i) const {
        return y[i] > 0 ? std::span<const double>(sig_pos) : std::span<const double>(sig_neg);
    }
    // patch as fed to the model, which = 1 or 2
    std::span<const double> patch(std::size_t i, int which) const {
        return signal_slot[i] == which ? signal_patch(i) : noise(i);
    }

    void write_binary(const std::filesystem::path& file) const;
    void write_csv(const std::filesystem::path& file) const;
};

Dataset read_binary(const std::filesystem::path& file);

// Draw one noise patch: sigma_p * (z - <z,u_hat>u_hat - <z,v_hat>v_hat), z ~ N(0, I).
std::vector<double> sample_noise(const SignalSet& sig, int task_id, double sigma_p, rng::Philox& g);

// Deterministic: sample i uses substream (seed, "sample", task_id, i).
Dataset generate_dataset(const SignalSet& sig, const TaskSpec& spec, uint64_t seed);

} // namespace xferlab::data

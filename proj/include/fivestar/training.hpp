#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "fivestar/evaluation.hpp"
#include "fivestar/model.hpp"

namespace fivestar {

struct TrainConfig {
    std::size_t dim = 100;
    double learning_rate = 0.1;
    std::size_t batch_size = 1000;
    double reg_weight = 0.05;
    std::size_t epochs = 100;
    std::uint64_t seed = 0;
    BaselineKind kind = BaselineKind::FiveStar;
    double init_scale = 1e-3;
    std::size_t eval_every = 5; // 0 disables periodic validation
};

/// Gradient buffers shaped like ModelParams. Complex entries carry the real
/// gradient pair (d/d re, d/d im) in their components; rel_a_phase carries
/// d/dθ for phase-parameterized kinds.
struct ParamGrads {
    std::vector<Complex> entities;
    std::array<std::vector<Complex>, 4> rel;
    std::vector<double> rel_a_phase;

    static ParamGrads like(const ModelParams& p);
    void zero();
};

struct ClampEvent {
    std::uint32_t entity = 0;
    std::uint32_t relation = 0;
    std::uint32_t dim = 0;
};

struct LossReport {
    double cross_entropy = 0.0;
    double regularizer = 0.0;
    double total = 0.0;
    std::size_t batch_count = 0;
    std::vector<ClampEvent> clamp_events;
};

/// Mean over the batch of the 1-N cross entropy -log softmax(scores)[tail]
/// plus reg_weight times the cube-of-modulus penalty on the triple's own
/// head, tail and relation entries. Fills grads (when non-null) with the
/// exact derivatives of that objective; masked components stay zero.
LossReport loss_and_grad(const ModelParams& p, std::span<const Triple> batch, double reg_weight,
                         ParamGrads* grads);

/// Adagrad squared-gradient accumulators, one per trainable real component.
struct OptimizerState {
    std::vector<double> entities;          // 2 per complex entry (re, im)
    std::array<std::vector<double>, 4> rel;
    std::vector<double> rel_a_phase;

    static OptimizerState like(const ModelParams& p);
};

inline constexpr double kAdagradEpsilon = 1e-10;

/// G += g²; θ -= lr · g / (√G + 1e-10), skipping frozen components.
void adagrad_step(ModelParams& p, const ParamGrads& grads, OptimizerState& state, double lr);

struct GradCheckFamily {
    std::string family;
    bool frozen = false;       // entire family masked (nothing to compare)
    std::size_t compared = 0;
    std::size_t skipped_clamped = 0;
    double max_rel_err = 0.0;
    bool pass = true;
};

struct GradCheckReport {
    std::vector<GradCheckFamily> families; // entities, rel_a, rel_b, rel_c, rel_d
    std::size_t clamp_events = 0;
    bool all_pass = true;
};

struct GradCheckOptions {
    BaselineKind kind = BaselineKind::FiveStar;
    double tolerance = 1e-5;
    double fd_step = 1e-5;
    bool include_clamp_probe = true; // rig one exactly-singular denominator
    // Negative control: add corrupt_amount to one analytic gradient entry.
    int corrupt_family = -1; // 0 = entities, 1..4 = rel_a..rel_d
    std::size_t corrupt_index = 0;
    double corrupt_amount = 1e-3;
};

/// Central finite differences against the analytic gradients on a small
/// random model (n_e = 7, d = 4, n_r = 3). Coordinates hit by denominator
/// clamping are excluded from the comparison and reported separately.
GradCheckReport gradient_check(std::uint64_t seed, const GradCheckOptions& opts = {});

struct EpochRecord {
    std::size_t epoch = 0;
    double loss = 0.0;
    double cross_entropy = 0.0;
    double regularizer = 0.0;
    double min_det = 0.0;
    bool det_warning = false;
    std::optional<RankingMetrics> valid;
};

struct TrainLog {
    std::vector<EpochRecord> epochs;
    std::size_t best_epoch = 0;    // epoch of the returned parameters
    double best_valid_mrr = -1.0;  // -1 when no validation ran
};

struct TrainResult {
    ModelParams params;
    TrainLog log;
};

std::string to_json_line(const EpochRecord& rec);

/// Seeded full-shuffle mini-batch epochs of loss_and_grad + adagrad_step.
/// When eval_every > 0 and the valid split is non-empty, filtered validation
/// runs periodically and the parameters with the best valid MRR are
/// returned; otherwise the final parameters are. Fully deterministic given
/// (seed, config, dataset). Per-epoch records go to jsonl_sink when given.
TrainResult train(const SplitDataset& ds, const TrainConfig& cfg, std::ostream* jsonl_sink = nullptr);

} // namespace fivestar

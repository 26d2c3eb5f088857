#ifndef GAZE_LOSS_HPP
#define GAZE_LOSS_HPP

#include "gaze/json_io.hpp"
#include "gaze/rng.hpp"
#include "gaze/types.hpp"

#include <cstdint>
#include <vector>

namespace gaze {

/// Row-major T x V logit grid with per-position targets, a prompt mask, and
/// gaze-derived weights.
struct LossInput {
    std::size_t seq_len = 0;    // T
    std::size_t vocab = 0;      // V
    std::vector<double> logits;  // seq_len * vocab, row-major
    std::vector<std::size_t> targets;
    std::vector<std::uint8_t> target_mask;
    std::vector<double> weights;

    double& logit(std::size_t t, std::size_t v) { return logits[t * vocab + v]; }
    double logit(std::size_t t, std::size_t v) const { return logits[t * vocab + v]; }

    void validate() const;
};

struct PreferencePair {
    double policy_logprob_w = 0.0;
    double policy_logprob_l = 0.0;
    double ref_logprob_w = 0.0;
    double ref_logprob_l = 0.0;

    void validate() const;
};

struct DpoConfig {
    double beta_kl = 0.1;
    double gamma = 0.5;

    void validate() const {
        if (!(beta_kl > 0.0)) throw ValidationError("beta_kl must be strictly positive");
        if (gamma < 0.0) throw ValidationError("gamma must be nonnegative");
    }
};

/// -sum_j w_j * mask_j * log softmax(logits_j)[target_j], with the
/// log-sum-exp computed stably. Summed (not averaged) over positions.
double weighted_sft_loss(const LossInput& in);

/// Analytic gradient: per position, w_j * mask_j * (softmax - onehot).
/// Returned row-major, same shape as the logits.
std::vector<double> weighted_sft_grad(const LossInput& in);

/// -log sigmoid(beta * [(lp_w - rp_w) - (lp_l - rp_l)]), stable for large
/// margins in either direction.
double dpo_loss(const PreferencePair& pair, const DpoConfig& cfg);

struct Candidate {
    std::size_t id = 0;
    double weight_sum = 0.0;
};

/// Draws two distinct candidates without replacement, proportional to their
/// shard-weight sums; the larger sum is the winner (ties go to the lower id).
std::pair<Candidate, Candidate> sample_preference_pair(const std::vector<Candidate>& candidates,
                                                       Rng& rng);

double combined_loss(double sft, double dpo, const DpoConfig& cfg);

LossInput loss_input_from_json(const json& j);
PreferencePair preference_pair_from_json(const json& j);

/// A loss-evaluation batch: per-example SFT inputs plus optional preference
/// pairs for the DPO term.
struct LossBatch {
    std::vector<LossInput> examples;
    std::vector<PreferencePair> pairs;
};
LossBatch loss_batch_from_json(const json& j);
LossBatch load_loss_batch(const std::string& path);

}  // namespace gaze

#endif

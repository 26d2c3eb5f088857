#include "gaze/loss.hpp"

#include <algorithm>
#include <cmath>

namespace gaze {

void LossInput::validate() const {
    if (seq_len == 0 || vocab == 0) throw ValidationError("loss input must have T >= 1 and V >= 1");
    if (logits.size() != seq_len * vocab)
        throw ValidationError("logits size does not equal seq_len * vocab");
    if (targets.size() != seq_len || target_mask.size() != seq_len || weights.size() != seq_len)
        throw ValidationError("targets, mask, and weights must all have length T");
    for (double v : logits)
        if (!std::isfinite(v)) throw ValidationError("non-finite logit");
    for (double w : weights)
        if (!std::isfinite(w)) throw ValidationError("non-finite weight");
    for (std::size_t t : targets)
        if (t >= vocab) throw ValidationError("target id out of vocabulary range");
}

void PreferencePair::validate() const {
    for (double v : {policy_logprob_w, policy_logprob_l, ref_logprob_w, ref_logprob_l})
        if (!std::isfinite(v)) throw ValidationError("non-finite preference log-probability");
}

namespace {

/// log(sum exp(row)) with the max subtracted first.
double log_sum_exp(const double* row, std::size_t n) {
    double mx = row[0];
    for (std::size_t i = 1; i < n; ++i) mx = std::max(mx, row[i]);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::exp(row[i] - mx);
    return mx + std::log(s);
}

/// -log sigmoid(z) = softplus(-z), stable on both tails.
double neg_log_sigmoid(double z) {
    if (z >= 0.0) return std::log1p(std::exp(-z));
    return -z + std::log1p(std::exp(z));
}

}  // namespace

double weighted_sft_loss(const LossInput& in) {
    in.validate();
    double loss = 0.0;
    for (std::size_t t = 0; t < in.seq_len; ++t) {
        if (!in.target_mask[t]) continue;
        const double* row = in.logits.data() + t * in.vocab;
        const double lse = log_sum_exp(row, in.vocab);
        loss -= in.weights[t] * (row[in.targets[t]] - lse);
    }
    return loss;
}

std::vector<double> weighted_sft_grad(const LossInput& in) {
    in.validate();
    std::vector<double> grad(in.seq_len * in.vocab, 0.0);
    for (std::size_t t = 0; t < in.seq_len; ++t) {
        if (!in.target_mask[t]) continue;
        const double* row = in.logits.data() + t * in.vocab;
        double* out = grad.data() + t * in.vocab;
        const double lse = log_sum_exp(row, in.vocab);
        const double w = in.weights[t];
        for (std::size_t v = 0; v < in.vocab; ++v) out[v] = w * std::exp(row[v] - lse);
        out[in.targets[t]] -= w;
    }
    return grad;
}

double dpo_loss(const PreferencePair& pair, const DpoConfig& cfg) {
    pair.validate();
    cfg.validate();
    const double margin = (pair.policy_logprob_w - pair.ref_logprob_w) -
                          (pair.policy_logprob_l - pair.ref_logprob_l);
    return neg_log_sigmoid(cfg.beta_kl * margin);
}

std::pair<Candidate, Candidate> sample_preference_pair(const std::vector<Candidate>& candidates,
                                                       Rng& rng) {
    if (candidates.size() < 2)
        throw ValidationError("preference sampling requires at least two candidates");
    for (const auto& c : candidates)
        if (!(c.weight_sum > 0.0))
            throw ValidationError("candidate weight sums must be strictly positive");

    auto draw = [&](const std::vector<Candidate>& pool) {
        double total = 0.0;
        for (const auto& c : pool) total += c.weight_sum;
        const double u = rng.uniform() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            acc += pool[i].weight_sum;
            if (u < acc) return i;
        }
        return pool.size() - 1;
    };

    std::vector<Candidate> pool = candidates;
    const std::size_t first = draw(pool);
    const Candidate a = pool[first];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(first));
    const Candidate b = pool[draw(pool)];

    const bool a_wins = a.weight_sum > b.weight_sum ||
                        (a.weight_sum == b.weight_sum && a.id < b.id);
    return a_wins ? std::make_pair(a, b) : std::make_pair(b, a);
}

double combined_loss(double sft, double dpo, const DpoConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(sft) || !std::isfinite(dpo))
        throw ValidationError("combined loss requires finite inputs");
    return sft + cfg.gamma * dpo;
}

LossInput loss_input_from_json(const json& j) {
    LossInput in;
    try {
        const json& logits = j.at("logits");
        if (!logits.is_array() || logits.empty())
            throw ValidationError("logits must be a nonempty T x V array");
        in.seq_len = logits.size();
        in.vocab = logits[0].size();
        for (const auto& row : logits) {
            if (row.size() != in.vocab) throw ValidationError("ragged logits grid");
            for (const auto& v : row) in.logits.push_back(v.get<double>());
        }
        in.targets = j.at("targets").get<std::vector<std::size_t>>();
        for (const auto& b : j.at("mask"))
            in.target_mask.push_back(static_cast<std::uint8_t>(b.get<int>() ? 1 : 0));
        in.weights = j.at("weights").get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad loss input: ") + e.what());
    }
    in.validate();
    return in;
}

PreferencePair preference_pair_from_json(const json& j) {
    PreferencePair p;
    try {
        p.policy_logprob_w = j.at("policy_logprob_w").get<double>();
        p.policy_logprob_l = j.at("policy_logprob_l").get<double>();
        p.ref_logprob_w = j.at("ref_logprob_w").get<double>();
        p.ref_logprob_l = j.at("ref_logprob_l").get<double>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad preference pair: ") + e.what());
    }
    p.validate();
    return p;
}

LossBatch loss_batch_from_json(const json& j) {
    LossBatch batch;
    try {
        for (const auto& e : j.at("examples")) batch.examples.push_back(loss_input_from_json(e));
        if (j.contains("pairs"))
            for (const auto& p : j.at("pairs")) batch.pairs.push_back(preference_pair_from_json(p));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad loss batch: ") + e.what());
    }
    return batch;
}

LossBatch load_loss_batch(const std::string& path) {
    return loss_batch_from_json(read_json_file(path));
}

}  // namespace gaze

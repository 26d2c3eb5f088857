#ifndef GAZE_METRICS_HPP
#define GAZE_METRICS_HPP

#include "gaze/json_io.hpp"
#include "gaze/types.hpp"

#include <cstddef>
#include <vector>

namespace gaze {

/// A normalized attention distribution over n input tokens. Rows whose sum
/// is within 1e-3 of 1 are renormalized on construction; anything further
/// off (or any negative entry) is rejected.
struct AttentionRow {
    std::vector<double> a;

    static AttentionRow from_values(std::vector<double> values);
    std::size_t size() const { return a.size(); }
};

struct CriticalSet {
    std::vector<std::size_t> indices;  // 0-based

    void validate(std::size_t n) const;
};

/// Mean generated-token log-probability.
double gcs(const std::vector<double>& token_logprobs);

/// Fraction of attention mass on the last k tokens.
double rfs(const AttentionRow& row, std::size_t k = 20);

/// Mean attention weight over the critical token set.
double afs(const AttentionRow& row, const CriticalSet& critical);

/// Shannon entropy (natural log) with 0*log 0 = 0.
double attention_entropy(const AttentionRow& row);

/// Batch aggregation: the per-row entropies summed over a matrix, matching
/// reports that accumulate over many heads/rows.
double entropy_sum(const std::vector<AttentionRow>& rows);

/// Two-sided Welch t-test over paired per-example metric samples.
struct WelchResult {
    double t = 0.0;
    double df = 0.0;
    double p = 1.0;
};
WelchResult welch_test(const std::vector<double>& a, const std::vector<double>& b);

struct MetricsInput {
    std::vector<AttentionRow> rows;
    CriticalSet critical;
    std::size_t k = 20;
    std::vector<double> logprobs;  // optional; empty when absent
    // optional Welch samples
    std::vector<double> welch_a;
    std::vector<double> welch_b;
};
MetricsInput metrics_input_from_json(const json& j);
json evaluate_metrics(const MetricsInput& in);

}  // namespace gaze

#endif

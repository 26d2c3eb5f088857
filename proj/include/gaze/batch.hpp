#ifndef GAZE_BATCH_HPP
#define GAZE_BATCH_HPP

#include "gaze/gaze_ingest.hpp"
#include "gaze/loss.hpp"
#include "gaze/metrics.hpp"
#include "gaze/pseudo.hpp"

#include <vector>

namespace gaze {

/// Batch kernels over independent examples. Each kernel has a serial
/// reference implementation and an OpenMP one; both write per-example slots
/// and reduce sequentially over example order, so their outputs are
/// bit-identical regardless of thread count. The pipeline calls the
/// parallel variants; the serial ones are the reference the tests and the
/// benchmark compare against.

std::vector<std::vector<Fixation>> segment_sessions_serial(
    const std::vector<std::vector<GazeSample>>& sessions, const SessionGeometry& geom,
    double dispersion_deg, double min_duration_ms);
std::vector<std::vector<Fixation>> segment_sessions_parallel(
    const std::vector<std::vector<GazeSample>>& sessions, const SessionGeometry& geom,
    double dispersion_deg, double min_duration_ms);

struct SftBatchResult {
    std::vector<double> per_example;
    double total = 0.0;
};

SftBatchResult sft_loss_batch_serial(const std::vector<LossInput>& examples);
SftBatchResult sft_loss_batch_parallel(const std::vector<LossInput>& examples);

std::vector<std::vector<double>> sft_grad_batch_serial(const std::vector<LossInput>& examples);
std::vector<std::vector<double>> sft_grad_batch_parallel(const std::vector<LossInput>& examples);

struct RowMetrics {
    std::vector<double> entropy;
    std::vector<double> rfs;
    double entropy_total = 0.0;
};

RowMetrics row_metrics_serial(const std::vector<AttentionRow>& rows, std::size_t k);
RowMetrics row_metrics_parallel(const std::vector<AttentionRow>& rows, std::size_t k);

/// Per-example pseudo generation with seeds derived per example id, so the
/// schedule cannot reorder draws.
std::vector<PseudoExample> gen_pseudo_batch_serial(
    const std::vector<const TokenMap*>& maps, const SaliencePriorSet& priors,
    const TransitionTables& tables, const NGramIndex& index, const MaskConfig& cfg);
std::vector<PseudoExample> gen_pseudo_batch_parallel(
    const std::vector<const TokenMap*>& maps, const SaliencePriorSet& priors,
    const TransitionTables& tables, const NGramIndex& index, const MaskConfig& cfg);

}  // namespace gaze

#endif

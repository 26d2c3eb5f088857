#ifndef GAZE_WEIGHTS_HPP
#define GAZE_WEIGHTS_HPP

#include "gaze/json_io.hpp"
#include "gaze/pseudo.hpp"
#include "gaze/salience.hpp"
#include "gaze/token_align.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gaze {

constexpr double kDefaultBaseWeight = 3.0;

/// Ordered subword slot indices per AST token. Slots must be disjoint and,
/// concatenated in token order, form the contiguous range 0..N-1.
struct ShardMap {
    std::vector<std::vector<std::size_t>> slots_per_token;

    std::size_t total_slots() const;
    void validate() const;
};

/// One weight per input-sequence slot.
using WeightVector = std::vector<double>;

/// w = w_base + 1/ln(freq + 2) + posterior mean of the covering gram's
/// token class. Natural log.
double token_weight(double w_base, std::int64_t freq, double posterior_mean_value);

/// Per-AST-token weights: every token starts at w_base; tokens covered by a
/// path gram add the rarity and salience bonuses. freqs are corpus-level
/// gram counts aggregated over all generated pseudo paths.
std::vector<double> assemble_ast_weights(const PseudoPath& path, const NGramCounts& freqs,
                                         const SaliencePriorSet& priors, SessionMode mode,
                                         const TokenMap& map,
                                         double w_base = kDefaultBaseWeight);

/// Every shard inherits its parent token's weight unchanged.
WeightVector project_shards(const std::vector<double>& ast_weights, const ShardMap& shard_map);

/// Tallies how often each gram occurs across a run's pseudo paths.
NGramCounts count_gram_freqs(const std::vector<PseudoExample>& examples);

/// Demonstration tokenizer for fixtures: splits a token's text into
/// alphanumeric runs chunked at four characters plus single punctuation
/// shards, then assigns contiguous slots across the map.
ShardMap demo_shard_map(const TokenMap& map);

ShardMap shard_map_from_json(const json& j, std::size_t token_count);
json shard_map_to_json(const ShardMap& map);
ShardMap load_shard_map(const std::string& path, std::size_t token_count);

}  // namespace gaze

#endif

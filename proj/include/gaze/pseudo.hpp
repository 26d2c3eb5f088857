#ifndef GAZE_PSEUDO_HPP
#define GAZE_PSEUDO_HPP

#include "gaze/json_io.hpp"
#include "gaze/rng.hpp"
#include "gaze/salience.hpp"
#include "gaze/token_align.hpp"
#include "gaze/transitions.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gaze {

/// Line-span limits per session mode: 3 reading, 5 writing, 4 combined.
int default_line_span(SessionMode mode);

struct MaskConfig {
    SessionMode mode = SessionMode::combined;
    int line_span = 4;
    std::uint64_t rng_seed = 0;

    static MaskConfig for_mode(SessionMode mode, std::uint64_t seed) {
        return {mode, default_line_span(mode), seed};
    }

    void validate() const {
        if (line_span < 1) throw ValidationError("line span L must be >= 1");
    }
};

struct AttentionMask {
    std::vector<std::uint8_t> bits;       // length n
    double rho = 0.0;                     // sampled salience ratio
    std::map<std::string, std::size_t> quotas;  // nominal per-class m_s

    std::size_t popcount() const;
    std::vector<std::size_t> masked_indices() const;  // ascending token ids
};

struct PseudoGram {
    NGram gram;                        // 1..3 class labels
    std::size_t index = 0;             // position in the NGramIndex
    std::vector<std::size_t> tokens;   // covered token ids, ascending
};

struct PseudoPath {
    std::vector<PseudoGram> grams;
};

/// Inverse-transform draw from the prior: consumes exactly one uniform
/// variate, so Beta(1,1) returns the rng's uniform draw unchanged.
double sample_ratio(const BetaPrior& pooled_prior, Rng& rng);

/// Nominal quotas m_s = max(1, floor(p_s * m)) with p_s = c1(s)/sum c1, for
/// classes with c1 > 0. Exposed for testing.
std::map<std::string, std::size_t> class_quotas(const MonogramCounts& monograms, std::size_t m);

/// Samples m = floor(rho*n) positions: shuffles token positions, fills
/// per-class quotas in descending-p_s order (truncated once m selections are
/// reached), then fills any remaining slots class-agnostically.
AttentionMask sample_mask(const TokenMap& map, double rho, const MonogramCounts& monograms,
                          Rng& rng);

/// Greedy left-to-right cover of the masked positions: a trigram when the
/// line span fits within L and the class triple is in the trigram table, a
/// bigram on the same conditions, otherwise a monogram.
PseudoPath generate_path(const AttentionMask& mask, const TokenMap& map,
                         const TransitionTables& tables, const NGramIndex& index,
                         const MaskConfig& cfg);

/// One generated training example.
struct PseudoExample {
    std::size_t example_id = 0;
    AttentionMask mask;
    PseudoPath path;
};

json pseudo_example_to_json(const PseudoExample& ex);
PseudoExample pseudo_example_from_json(const json& j);
json pseudo_file_to_json(const std::vector<PseudoExample>& examples);
std::vector<PseudoExample> pseudo_file_from_json(const json& j);
std::vector<PseudoExample> load_pseudo(const std::string& path);

}  // namespace gaze

#endif

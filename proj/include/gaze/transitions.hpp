#ifndef GAZE_TRANSITIONS_HPP
#define GAZE_TRANSITIONS_HPP

#include "gaze/json_io.hpp"
#include "gaze/token_align.hpp"
#include "gaze/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gaze {

using NGramCounts = std::map<NGram, std::int64_t>;
using NGramProbs = std::map<NGram, double>;

constexpr std::int64_t kDefaultPruneThreshold = 5;

struct TransitionTables {
    NGramCounts c2;
    NGramCounts c3;
    NGramProbs p2;
    NGramProbs p3;

    bool has(const NGram& g) const {
        return (g.size() == 2 && c2.count(g)) || (g.size() == 3 && c3.count(g));
    }
};

/// Dense gram -> index dictionary: taxonomy classes first (taxonomy order),
/// then surviving bigrams and trigrams in lexicographic order.
struct NGramIndex {
    std::vector<NGram> grams;          // index -> gram
    std::map<NGram, std::size_t> ids;  // gram -> index

    bool contains(const NGram& g) const { return ids.count(g) > 0; }
    std::size_t at(const NGram& g) const;
    std::size_t size() const { return grams.size(); }
};

/// Sliding-window bigram/trigram counts over consecutive entry classes; a
/// path of length k contributes k-1 bigrams and k-2 trigrams.
std::pair<NGramCounts, NGramCounts> count_ngrams(const std::vector<ScanPath>& paths,
                                                 const TokenMap& map);

/// Removes entries with count below the threshold (kept at exactly the
/// threshold). Idempotent.
NGramCounts prune(const NGramCounts& counts, std::int64_t threshold = kDefaultPruneThreshold);

/// Normalizes surviving counts per conditioning context; contexts with no
/// surviving mass are absent from the result.
std::pair<NGramProbs, NGramProbs> conditional_probs(const NGramCounts& c2, const NGramCounts& c3);

NGramIndex build_index(const std::vector<std::string>& taxonomy, const NGramProbs& p2,
                       const NGramProbs& p3);

/// count + prune + normalize + index in one step.
struct TransitionFitResult {
    TransitionTables tables;
    NGramIndex index;
};
TransitionFitResult fit_transitions(const std::vector<ScanPath>& paths, const TokenMap& map,
                                    std::int64_t prune_threshold = kDefaultPruneThreshold);

json tables_to_json(const TransitionTables& tables, const NGramIndex& index);
TransitionFitResult tables_from_json(const json& j);
TransitionFitResult load_tables(const std::string& path);

}  // namespace gaze

#endif

#ifndef GAZE_SALIENCE_HPP
#define GAZE_SALIENCE_HPP

#include "gaze/json_io.hpp"
#include "gaze/token_align.hpp"
#include "gaze/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gaze {

/// Per-class fixation statistics: c1(s) fixation hits and n_tok(s) tokens of
/// the class seen across the corpus (each session's snippet counts once).
struct MonogramCounts {
    struct Entry {
        std::int64_t c1 = 0;
        std::int64_t n_tok = 0;
    };
    std::map<std::string, Entry> by_class;

    std::int64_t c1(const std::string& cls) const;
    std::int64_t total_c1() const;
    void merge(const MonogramCounts& other);
};

struct BetaPrior {
    double alpha = 1.0;
    double beta = 1.0;
    std::string semantic_class;
    SessionMode mode = SessionMode::combined;
};

/// Key reserved for the pooled combined-over-classes prior in the priors
/// file; star cannot collide with taxonomy labels, which are word-like.
inline const char* kPooledClassKey = "*";

/// Priors per (class, mode) plus one pooled prior per mode, used for
/// saliency-ratio sampling. Immutable after fitting.
struct SaliencePriorSet {
    // mode -> class -> prior; pooled prior stored under kPooledClassKey.
    std::map<std::string, std::map<std::string, BetaPrior>> priors;

    const BetaPrior& at(SessionMode mode, const std::string& cls) const;
    const BetaPrior& pooled(SessionMode mode) const;

    /// Recovers c1 counts from fitted alphas (alpha = c1 + 1); used for the
    /// per-class share p_s in mask sampling when only a priors file is
    /// available.
    MonogramCounts monograms(SessionMode mode) const;
};

/// Tallies c1(s) over path entries and n_tok(s) over the map, counted once
/// per path (the same snippet viewed in k sessions contributes k times).
MonogramCounts count_monograms(const std::vector<ScanPath>& paths, const TokenMap& map);

/// alpha = c1 + 1; beta = max(1, n_tok - c1 + 1). Repeated fixations can
/// push c1 above n_tok, which would make the textbook beta nonpositive; it
/// clamps to 1 (fully salient class).
BetaPrior fit_beta(std::int64_t c1, std::int64_t n_tok);

double posterior_mean(const BetaPrior& prior);

/// Density at x in (0,1), evaluated in log space so Table-1-scale
/// parameters (tens of thousands) do not overflow.
double beta_pdf(const BetaPrior& prior, double x);

/// Conjugate update: k successes in n trials -> Beta(alpha+k, beta+n-k).
BetaPrior bayes_update(const BetaPrior& prior, std::int64_t k, std::int64_t n);

/// Fits one prior per (taxonomy class, mode) from per-mode monogram counts,
/// plus the pooled prior fitted from counts summed over classes. Modes with
/// no sessions get uninformative Beta(1,1) priors.
SaliencePriorSet fit_prior_set(const std::map<SessionMode, MonogramCounts>& counts_by_mode,
                               const std::vector<std::string>& taxonomy);

json priors_to_json(const SaliencePriorSet& set);
SaliencePriorSet priors_from_json(const json& j);
SaliencePriorSet load_priors(const std::string& path);

}  // namespace gaze

#endif

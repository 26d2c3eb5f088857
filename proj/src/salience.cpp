#include "gaze/salience.hpp"

#include <algorithm>
#include <cmath>

namespace gaze {

std::int64_t MonogramCounts::c1(const std::string& cls) const {
    auto it = by_class.find(cls);
    return it == by_class.end() ? 0 : it->second.c1;
}

std::int64_t MonogramCounts::total_c1() const {
    std::int64_t total = 0;
    for (const auto& [cls, e] : by_class) total += e.c1;
    return total;
}

void MonogramCounts::merge(const MonogramCounts& other) {
    for (const auto& [cls, e] : other.by_class) {
        auto& mine = by_class[cls];
        mine.c1 += e.c1;
        mine.n_tok += e.n_tok;
    }
}

MonogramCounts count_monograms(const std::vector<ScanPath>& paths, const TokenMap& map) {
    MonogramCounts counts;
    for (const auto& cls : map.taxonomy) counts.by_class[cls];
    std::map<std::string, std::int64_t> per_map;
    for (const auto& t : map.tokens) per_map[t.semantic_class] += 1;
    for (const auto& path : paths) {
        for (const auto& [cls, k] : per_map) counts.by_class[cls].n_tok += k;
        for (const auto& e : path.entries) {
            if (e.token_id >= map.tokens.size())
                throw ValidationError("scan path references token id " +
                                      std::to_string(e.token_id) + " outside the map");
            const std::string& cls = map.tokens[e.token_id].semantic_class;
            if (!map.has_class(cls))
                throw ValidationError("class '" + cls + "' missing from taxonomy");
            counts.by_class[cls].c1 += 1;
        }
    }
    return counts;
}

BetaPrior fit_beta(std::int64_t c1, std::int64_t n_tok) {
    if (c1 < 0 || n_tok < 0) throw ValidationError("monogram counts must be nonnegative");
    BetaPrior p;
    p.alpha = static_cast<double>(c1) + 1.0;
    p.beta = std::max<double>(1.0, static_cast<double>(n_tok - c1) + 1.0);
    return p;
}

double posterior_mean(const BetaPrior& prior) {
    return prior.alpha / (prior.alpha + prior.beta);
}

double beta_pdf(const BetaPrior& prior, double x) {
    if (!(x > 0.0 && x < 1.0))
        throw ValidationError("beta_pdf requires x in (0,1)");
    const double log_b =
        std::lgamma(prior.alpha) + std::lgamma(prior.beta) - std::lgamma(prior.alpha + prior.beta);
    return std::exp((prior.alpha - 1.0) * std::log(x) + (prior.beta - 1.0) * std::log1p(-x) - log_b);
}

BetaPrior bayes_update(const BetaPrior& prior, std::int64_t k, std::int64_t n) {
    if (k < 0 || n < 0 || k > n) throw ValidationError("bayes_update requires 0 <= k <= n");
    BetaPrior p = prior;
    p.alpha += static_cast<double>(k);
    p.beta += static_cast<double>(n - k);
    return p;
}

SaliencePriorSet fit_prior_set(const std::map<SessionMode, MonogramCounts>& counts_by_mode,
                               const std::vector<std::string>& taxonomy) {
    SaliencePriorSet set;
    for (SessionMode mode : {SessionMode::reading, SessionMode::writing, SessionMode::combined}) {
        MonogramCounts empty;
        auto it = counts_by_mode.find(mode);
        const MonogramCounts& counts = it == counts_by_mode.end() ? empty : it->second;
        auto& per_class = set.priors[to_string(mode)];
        std::int64_t c1_sum = 0, ntok_sum = 0;
        for (const auto& cls : taxonomy) {
            auto cit = counts.by_class.find(cls);
            const MonogramCounts::Entry e =
                cit == counts.by_class.end() ? MonogramCounts::Entry{} : cit->second;
            BetaPrior p = fit_beta(e.c1, e.n_tok);
            p.semantic_class = cls;
            p.mode = mode;
            per_class[cls] = p;
            c1_sum += e.c1;
            ntok_sum += e.n_tok;
        }
        BetaPrior pooled = fit_beta(c1_sum, ntok_sum);
        pooled.semantic_class = kPooledClassKey;
        pooled.mode = mode;
        per_class[kPooledClassKey] = pooled;
    }
    return set;
}

const BetaPrior& SaliencePriorSet::at(SessionMode mode, const std::string& cls) const {
    auto mit = priors.find(to_string(mode));
    if (mit == priors.end()) throw ValidationError("priors missing mode " + to_string(mode));
    auto cit = mit->second.find(cls);
    if (cit == mit->second.end())
        throw ValidationError("priors missing class '" + cls + "' for mode " + to_string(mode));
    return cit->second;
}

const BetaPrior& SaliencePriorSet::pooled(SessionMode mode) const {
    return at(mode, kPooledClassKey);
}

MonogramCounts SaliencePriorSet::monograms(SessionMode mode) const {
    auto mit = priors.find(to_string(mode));
    if (mit == priors.end()) throw ValidationError("priors missing mode " + to_string(mode));
    MonogramCounts counts;
    for (const auto& [cls, prior] : mit->second) {
        if (cls == kPooledClassKey) continue;
        auto& e = counts.by_class[cls];
        e.c1 = static_cast<std::int64_t>(std::llround(prior.alpha - 1.0));
        // n_tok is recoverable only when beta was not clamped; good enough
        // for shares, which use c1 alone.
        e.n_tok = e.c1 + static_cast<std::int64_t>(std::llround(prior.beta - 1.0));
    }
    return counts;
}

json priors_to_json(const SaliencePriorSet& set) {
    json out = json::object();
    for (const auto& [mode, per_class] : set.priors) {
        json m = json::object();
        for (const auto& [cls, p] : per_class) {
            m[cls] = {{"alpha", p.alpha}, {"beta", p.beta}, {"mean", posterior_mean(p)}};
        }
        out[mode] = m;
    }
    return out;
}

SaliencePriorSet priors_from_json(const json& j) {
    SaliencePriorSet set;
    try {
        for (auto mit = j.begin(); mit != j.end(); ++mit) {
            const SessionMode mode = mode_from_string(mit.key());
            for (auto cit = mit.value().begin(); cit != mit.value().end(); ++cit) {
                BetaPrior p;
                p.alpha = cit.value().at("alpha").get<double>();
                p.beta = cit.value().at("beta").get<double>();
                p.semantic_class = cit.key();
                p.mode = mode;
                if (p.alpha < 1.0 || p.beta < 1.0)
                    throw ValidationError("fitted priors require alpha >= 1 and beta >= 1");
                set.priors[mit.key()][cit.key()] = p;
            }
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad priors file: ") + e.what());
    }
    return set;
}

SaliencePriorSet load_priors(const std::string& path) {
    return priors_from_json(read_json_file(path));
}

}  // namespace gaze

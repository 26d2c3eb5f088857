#include "gaze/pseudo.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>

namespace gaze {

int default_line_span(SessionMode mode) {
    switch (mode) {
        case SessionMode::reading: return 3;
        case SessionMode::writing: return 5;
        case SessionMode::combined: return 4;
    }
    return 4;
}

std::size_t AttentionMask::popcount() const {
    std::size_t c = 0;
    for (auto b : bits) c += b ? 1 : 0;
    return c;
}

std::vector<std::size_t> AttentionMask::masked_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) out.push_back(i);
    return out;
}

double sample_ratio(const BetaPrior& pooled_prior, Rng& rng) {
    const double u = rng.uniform();
    if (pooled_prior.alpha == 1.0 && pooled_prior.beta == 1.0) return u;
    if (u == 0.0) return 0.0;
    return boost::math::ibeta_inv(pooled_prior.alpha, pooled_prior.beta, u);
}

std::map<std::string, std::size_t> class_quotas(const MonogramCounts& monograms, std::size_t m) {
    std::map<std::string, std::size_t> quotas;
    const std::int64_t total = monograms.total_c1();
    if (total <= 0) return quotas;
    for (const auto& [cls, e] : monograms.by_class) {
        if (e.c1 <= 0) continue;
        const double p_s = static_cast<double>(e.c1) / static_cast<double>(total);
        quotas[cls] = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::floor(p_s * static_cast<double>(m))));
    }
    return quotas;
}

AttentionMask sample_mask(const TokenMap& map, double rho, const MonogramCounts& monograms,
                          Rng& rng) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw ValidationError("rho must lie in [0,1]");
    const std::size_t n = map.tokens.size();
    if (n < 1) throw ValidationError("cannot sample a mask over an empty token map");

    AttentionMask mask;
    mask.rho = rho;
    mask.bits.assign(n, 0);
    const std::size_t m = static_cast<std::size_t>(std::floor(rho * static_cast<double>(n)));
    mask.quotas = class_quotas(monograms, m);
    if (m == 0) return mask;

    std::vector<std::size_t> positions(n);
    for (std::size_t i = 0; i < n; ++i) positions[i] = i;
    rng.shuffle(positions);

    // Classes in descending share order; ties resolved by class label so the
    // pass order is reproducible.
    std::vector<std::pair<std::string, std::size_t>> order(mask.quotas.begin(), mask.quotas.end());
    std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        const std::int64_t ca = monograms.c1(a.first), cb = monograms.c1(b.first);
        if (ca != cb) return ca > cb;
        return a.first < b.first;
    });

    std::size_t selected = 0;
    for (const auto& [cls, quota] : order) {
        std::size_t taken = 0;
        for (std::size_t pos : positions) {
            if (selected >= m || taken >= quota) break;
            if (mask.bits[pos]) continue;
            if (map.tokens[pos].semantic_class != cls) continue;
            mask.bits[pos] = 1;
            ++selected;
            ++taken;
        }
        if (selected >= m) break;
    }
    for (std::size_t pos : positions) {
        if (selected >= m) break;
        if (mask.bits[pos]) continue;
        mask.bits[pos] = 1;
        ++selected;
    }
    return mask;
}

PseudoPath generate_path(const AttentionMask& mask, const TokenMap& map,
                         const TransitionTables& tables, const NGramIndex& index,
                         const MaskConfig& cfg) {
    cfg.validate();
    if (mask.bits.size() != map.tokens.size())
        throw ValidationError("mask length does not match token map size");
    const std::vector<std::size_t> idxs = mask.masked_indices();
    for (std::size_t t : idxs) {
        const NGram mono = {map.tokens[t].semantic_class};
        if (!index.contains(mono))
            throw ValidationError("masked token class '" + map.tokens[t].semantic_class +
                                  "' is not in the n-gram index");
    }

    PseudoPath path;
    const int L = cfg.line_span;
    std::size_t i = 0;
    while (i < idxs.size()) {
        const auto cls = [&](std::size_t j) -> const std::string& {
            return map.tokens[idxs[j]].semantic_class;
        };
        const auto line = [&](std::size_t j) { return map.tokens[idxs[j]].line; };
        if (i + 2 < idxs.size() && line(i + 2) - line(i) <= L &&
            tables.c3.count({cls(i), cls(i + 1), cls(i + 2)})) {
            NGram g = {cls(i), cls(i + 1), cls(i + 2)};
            path.grams.push_back({g, index.at(g), {idxs[i], idxs[i + 1], idxs[i + 2]}});
            i += 3;
        } else if (i + 1 < idxs.size() && line(i + 1) - line(i) <= L &&
                   tables.c2.count({cls(i), cls(i + 1)})) {
            NGram g = {cls(i), cls(i + 1)};
            path.grams.push_back({g, index.at(g), {idxs[i], idxs[i + 1]}});
            i += 2;
        } else {
            NGram g = {cls(i)};
            path.grams.push_back({g, index.at(g), {idxs[i]}});
            i += 1;
        }
    }
    return path;
}

json pseudo_example_to_json(const PseudoExample& ex) {
    json mask_bits = json::array();
    for (auto b : ex.mask.bits) mask_bits.push_back(static_cast<int>(b));
    json grams = json::array();
    for (const auto& g : ex.path.grams) {
        grams.push_back({{"gram", g.gram}, {"index", g.index}, {"tokens", g.tokens}});
    }
    return json{{"example_id", ex.example_id},
                {"rho", ex.mask.rho},
                {"mask", mask_bits},
                {"path", grams}};
}

PseudoExample pseudo_example_from_json(const json& j) {
    PseudoExample ex;
    try {
        ex.example_id = j.at("example_id").get<std::size_t>();
        ex.mask.rho = j.at("rho").get<double>();
        for (const auto& b : j.at("mask"))
            ex.mask.bits.push_back(static_cast<std::uint8_t>(b.get<int>() ? 1 : 0));
        for (const auto& g : j.at("path")) {
            PseudoGram pg;
            pg.gram = g.at("gram").get<NGram>();
            pg.index = g.at("index").get<std::size_t>();
            pg.tokens = g.at("tokens").get<std::vector<std::size_t>>();
            ex.path.grams.push_back(pg);
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad pseudo example: ") + e.what());
    }
    return ex;
}

json pseudo_file_to_json(const std::vector<PseudoExample>& examples) {
    json out = json::array();
    for (const auto& ex : examples) out.push_back(pseudo_example_to_json(ex));
    return out;
}

std::vector<PseudoExample> pseudo_file_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("pseudo file must be a JSON array of examples");
    std::vector<PseudoExample> out;
    for (const auto& e : j) out.push_back(pseudo_example_from_json(e));
    return out;
}

std::vector<PseudoExample> load_pseudo(const std::string& path) {
    return pseudo_file_from_json(read_json_file(path));
}

}  // namespace gaze

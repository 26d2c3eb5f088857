#include "gaze/weights.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace gaze {

std::size_t ShardMap::total_slots() const {
    std::size_t total = 0;
    for (const auto& s : slots_per_token) total += s.size();
    return total;
}

void ShardMap::validate() const {
    std::size_t next = 0;
    for (std::size_t i = 0; i < slots_per_token.size(); ++i) {
        const auto& slots = slots_per_token[i];
        if (slots.empty())
            throw ValidationError("token " + std::to_string(i) +
                                  " has zero shards; every source token must tokenize to >= 1");
        for (std::size_t s : slots) {
            if (s != next)
                throw ValidationError("shard slots must be disjoint and contiguous in token order"
                                      "; token " + std::to_string(i) + " breaks the range at slot " +
                                      std::to_string(s));
            ++next;
        }
    }
}

double token_weight(double w_base, std::int64_t freq, double posterior_mean_value) {
    if (freq < 0) throw ValidationError("n-gram frequency must be nonnegative");
    return w_base + 1.0 / std::log(static_cast<double>(freq) + 2.0) + posterior_mean_value;
}

std::vector<double> assemble_ast_weights(const PseudoPath& path, const NGramCounts& freqs,
                                         const SaliencePriorSet& priors, SessionMode mode,
                                         const TokenMap& map, double w_base) {
    std::vector<double> weights(map.tokens.size(), w_base);
    std::vector<bool> covered(map.tokens.size(), false);
    for (const auto& g : path.grams) {
        auto fit = freqs.find(g.gram);
        if (fit == freqs.end())
            throw ValidationError("gram '" + join_ngram(g.gram) + "' absent from corpus frequencies");
        const std::int64_t freq = fit->second;
        for (std::size_t tid : g.tokens) {
            if (tid >= map.tokens.size())
                throw ValidationError("pseudo path covers token id outside the map");
            if (covered[tid])
                throw ValidationError("token " + std::to_string(tid) +
                                      " covered by more than one gram");
            covered[tid] = true;
            const double mean = posterior_mean(priors.at(mode, map.tokens[tid].semantic_class));
            weights[tid] = token_weight(w_base, freq, mean);
        }
    }
    return weights;
}

WeightVector project_shards(const std::vector<double>& ast_weights, const ShardMap& shard_map) {
    if (ast_weights.size() != shard_map.slots_per_token.size())
        throw ValidationError("shard map token count does not match weight count");
    shard_map.validate();
    WeightVector out(shard_map.total_slots(), 0.0);
    for (std::size_t i = 0; i < ast_weights.size(); ++i)
        for (std::size_t slot : shard_map.slots_per_token[i]) out[slot] = ast_weights[i];
    return out;
}

NGramCounts count_gram_freqs(const std::vector<PseudoExample>& examples) {
    NGramCounts freqs;
    for (const auto& ex : examples)
        for (const auto& g : ex.path.grams) freqs[g.gram] += 1;
    return freqs;
}

ShardMap demo_shard_map(const TokenMap& map) {
    constexpr std::size_t kChunk = 4;
    ShardMap shards;
    std::size_t slot = 0;
    for (const auto& tok : map.tokens) {
        std::size_t pieces = 0;
        std::size_t i = 0;
        const std::string& text = tok.text;
        while (i < text.size()) {
            const unsigned char c = static_cast<unsigned char>(text[i]);
            if (std::isspace(c)) {
                ++i;
                continue;
            }
            if (std::isalnum(c) || c == '_') {
                std::size_t j = i;
                while (j < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                    ++j;
                const std::size_t run = j - i;
                pieces += (run + kChunk - 1) / kChunk;
                i = j;
            } else {
                ++pieces;
                ++i;
            }
        }
        if (pieces == 0) pieces = 1;  // whitespace-only or empty text still occupies one slot
        std::vector<std::size_t> slots(pieces);
        for (auto& s : slots) s = slot++;
        shards.slots_per_token.push_back(std::move(slots));
    }
    shards.validate();
    return shards;
}

ShardMap shard_map_from_json(const json& j, std::size_t token_count) {
    ShardMap shards;
    shards.slots_per_token.resize(token_count);
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::size_t tid = static_cast<std::size_t>(std::stoull(it.key()));
            if (tid >= token_count)
                throw ValidationError("shard map token id " + it.key() + " outside the map");
            shards.slots_per_token[tid] = it.value().get<std::vector<std::size_t>>();
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad shard map: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ValidationError("shard map keys must be token ids");
    }
    shards.validate();
    return shards;
}

json shard_map_to_json(const ShardMap& map) {
    json out = json::object();
    for (std::size_t i = 0; i < map.slots_per_token.size(); ++i)
        out[std::to_string(i)] = map.slots_per_token[i];
    return out;
}

ShardMap load_shard_map(const std::string& path, std::size_t token_count) {
    return shard_map_from_json(read_json_file(path), token_count);
}

}  // namespace gaze

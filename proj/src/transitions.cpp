#include "gaze/transitions.hpp"

#include <algorithm>

namespace gaze {

std::size_t NGramIndex::at(const NGram& g) const {
    auto it = ids.find(g);
    if (it == ids.end()) throw ValidationError("n-gram '" + join_ngram(g) + "' not in index");
    return it->second;
}

std::pair<NGramCounts, NGramCounts> count_ngrams(const std::vector<ScanPath>& paths,
                                                 const TokenMap& map) {
    NGramCounts c2, c3;
    for (const auto& path : paths) {
        std::vector<std::string> classes;
        classes.reserve(path.entries.size());
        for (const auto& e : path.entries) {
            if (e.token_id >= map.tokens.size())
                throw ValidationError("scan path references token id " +
                                      std::to_string(e.token_id) + " outside the map");
            classes.push_back(map.tokens[e.token_id].semantic_class);
        }
        for (std::size_t i = 0; i + 1 < classes.size(); ++i)
            c2[{classes[i], classes[i + 1]}] += 1;
        for (std::size_t i = 0; i + 2 < classes.size(); ++i)
            c3[{classes[i], classes[i + 1], classes[i + 2]}] += 1;
    }
    return {c2, c3};
}

NGramCounts prune(const NGramCounts& counts, std::int64_t threshold) {
    NGramCounts out;
    for (const auto& [gram, count] : counts)
        if (count >= threshold) out[gram] = count;
    return out;
}

namespace {

NGramProbs normalize_per_context(const NGramCounts& counts) {
    std::map<NGram, std::int64_t> context_total;
    for (const auto& [gram, count] : counts) {
        NGram ctx(gram.begin(), gram.end() - 1);
        context_total[ctx] += count;
    }
    NGramProbs probs;
    for (const auto& [gram, count] : counts) {
        NGram ctx(gram.begin(), gram.end() - 1);
        probs[gram] = static_cast<double>(count) / static_cast<double>(context_total[ctx]);
    }
    return probs;
}

}  // namespace

std::pair<NGramProbs, NGramProbs> conditional_probs(const NGramCounts& c2, const NGramCounts& c3) {
    return {normalize_per_context(c2), normalize_per_context(c3)};
}

NGramIndex build_index(const std::vector<std::string>& taxonomy, const NGramProbs& p2,
                       const NGramProbs& p3) {
    NGramIndex index;
    for (const auto& cls : taxonomy) index.grams.push_back({cls});
    for (const auto& [gram, p] : p2) index.grams.push_back(gram);  // map order = lexicographic
    for (const auto& [gram, p] : p3) index.grams.push_back(gram);
    for (std::size_t i = 0; i < index.grams.size(); ++i) {
        if (!index.ids.emplace(index.grams[i], i).second)
            throw ValidationError("duplicate n-gram in index: " + join_ngram(index.grams[i]));
    }
    return index;
}

TransitionFitResult fit_transitions(const std::vector<ScanPath>& paths, const TokenMap& map,
                                    std::int64_t prune_threshold) {
    auto [c2_raw, c3_raw] = count_ngrams(paths, map);
    TransitionFitResult res;
    res.tables.c2 = prune(c2_raw, prune_threshold);
    res.tables.c3 = prune(c3_raw, prune_threshold);
    std::tie(res.tables.p2, res.tables.p3) = conditional_probs(res.tables.c2, res.tables.c3);
    res.index = build_index(map.taxonomy, res.tables.p2, res.tables.p3);
    return res;
}

namespace {

json counts_to_json(const NGramCounts& counts) {
    json out = json::object();
    for (const auto& [gram, count] : counts) out[join_ngram(gram)] = count;
    return out;
}

json probs_to_json(const NGramProbs& probs) {
    json out = json::object();
    for (const auto& [gram, p] : probs) out[join_ngram(gram)] = p;
    return out;
}

NGramCounts counts_from_json(const json& j) {
    NGramCounts out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[split_ngram(it.key())] = it.value().get<std::int64_t>();
    return out;
}

NGramProbs probs_from_json(const json& j) {
    NGramProbs out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[split_ngram(it.key())] = it.value().get<double>();
    return out;
}

}  // namespace

json tables_to_json(const TransitionTables& tables, const NGramIndex& index) {
    json idx = json::object();
    for (std::size_t i = 0; i < index.grams.size(); ++i) idx[join_ngram(index.grams[i])] = i;
    return json{{"c2", counts_to_json(tables.c2)},
                {"c3", counts_to_json(tables.c3)},
                {"p2", probs_to_json(tables.p2)},
                {"p3", probs_to_json(tables.p3)},
                {"index", idx}};
}

TransitionFitResult tables_from_json(const json& j) {
    TransitionFitResult res;
    try {
        res.tables.c2 = counts_from_json(j.at("c2"));
        res.tables.c3 = counts_from_json(j.at("c3"));
        res.tables.p2 = probs_from_json(j.at("p2"));
        res.tables.p3 = probs_from_json(j.at("p3"));
        const json& idx = j.at("index");
        res.index.grams.resize(idx.size());
        for (auto it = idx.begin(); it != idx.end(); ++it) {
            const std::size_t i = it.value().get<std::size_t>();
            if (i >= res.index.grams.size())
                throw ValidationError("index entries must be dense 0..N-1");
            res.index.grams[i] = split_ngram(it.key());
        }
        for (std::size_t i = 0; i < res.index.grams.size(); ++i) {
            if (!res.index.ids.emplace(res.index.grams[i], i).second)
                throw ValidationError("duplicate index entry");
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad tables file: ") + e.what());
    }
    return res;
}

TransitionFitResult load_tables(const std::string& path) {
    return tables_from_json(read_json_file(path));
}

}  // namespace gaze

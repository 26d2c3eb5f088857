#include "gaze/token_align.hpp"

#include <algorithm>
#include <set>

namespace gaze {

const std::vector<std::string>& default_taxonomy() {
    static const std::vector<std::string> classes = {
        "variable declaration", "function declaration", "conditional statement", "loop",
        "function call",        "parameter",            "argument",              "other",
    };
    return classes;
}

bool TokenMap::has_class(const std::string& c) const {
    return std::find(taxonomy.begin(), taxonomy.end(), c) != taxonomy.end();
}

void TokenMap::validate() const {
    {
        std::set<std::string> seen(taxonomy.begin(), taxonomy.end());
        if (seen.size() != taxonomy.size())
            throw ValidationError("taxonomy contains duplicate class labels");
        if (taxonomy.empty()) throw ValidationError("taxonomy must not be empty");
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const AstToken& t = tokens[i];
        if (t.id != i)
            throw ValidationError("token ids must be dense 0..M-1; found id " +
                                  std::to_string(t.id) + " at position " + std::to_string(i));
        if (t.line < 1)
            throw ValidationError("token " + std::to_string(t.id) + " has line < 1");
        if (!(t.bbox.x1 > t.bbox.x0 && t.bbox.y1 > t.bbox.y0))
            throw ValidationError("token " + std::to_string(t.id) + " has a degenerate bbox");
        if (!has_class(t.semantic_class))
            throw ValidationError("token " + std::to_string(t.id) + " has unknown class '" +
                                  t.semantic_class + "'");
    }
    for (std::size_t i = 0; i < tokens.size(); ++i)
        for (std::size_t j = i + 1; j < tokens.size(); ++j)
            if (tokens[i].bbox.overlaps(tokens[j].bbox))
                throw ValidationError("tokens " + std::to_string(i) + " and " +
                                      std::to_string(j) + " have overlapping bboxes");
}

TokenMap token_map_from_json(const json& j) {
    TokenMap map;
    try {
        if (j.contains("taxonomy")) map.taxonomy = j.at("taxonomy").get<std::vector<std::string>>();
        for (const auto& t : j.at("tokens")) {
            AstToken tok;
            tok.id = t.at("id").get<std::size_t>();
            tok.text = t.at("text").get<std::string>();
            tok.semantic_class = t.at("class").get<std::string>();
            tok.line = t.at("line").get<int>();
            const auto& b = t.at("bbox");
            if (!b.is_array() || b.size() != 4)
                throw ValidationError("token bbox must be [x0,y0,x1,y1]");
            tok.bbox = {b[0].get<double>(), b[1].get<double>(), b[2].get<double>(),
                        b[3].get<double>()};
            map.tokens.push_back(tok);
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad token map: ") + e.what());
    }
    map.validate();
    return map;
}

json token_map_to_json(const TokenMap& map) {
    json toks = json::array();
    for (const auto& t : map.tokens) {
        toks.push_back({{"id", t.id},
                        {"text", t.text},
                        {"class", t.semantic_class},
                        {"line", t.line},
                        {"bbox", {t.bbox.x0, t.bbox.y0, t.bbox.x1, t.bbox.y1}}});
    }
    return json{{"taxonomy", map.taxonomy}, {"tokens", toks}};
}

TokenMap load_token_map(const std::string& path) {
    return token_map_from_json(read_json_file(path));
}

ScanPath scan_path_from_json(const json& j) {
    ScanPath p;
    try {
        p.mode = mode_from_string(j.at("mode").get<std::string>());
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 2)
                throw ValidationError("scan path entry must be [fixation_index, token_id]");
            p.entries.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad scan path: ") + e.what());
    }
    return p;
}

json scan_path_to_json(const ScanPath& path) {
    json entries = json::array();
    for (const auto& e : path.entries) entries.push_back({e.fixation_index, e.token_id});
    return json{{"mode", to_string(path.mode)}, {"entries", entries}};
}

ScanPath load_scan_path(const std::string& path) {
    return scan_path_from_json(read_json_file(path));
}

AlignResult align_fixations(const std::vector<Fixation>& fixations, const TokenMap& map,
                            SessionMode mode) {
    if (map.tokens.empty()) throw ValidationError("cannot align against an empty token map");
    AlignResult res;
    res.path.mode = mode;
    for (std::size_t i = 0; i < fixations.size(); ++i) {
        const Fixation& f = fixations[i];
        for (const auto& t : map.tokens) {
            if (t.bbox.contains(f.centroid_x, f.centroid_y)) {
                res.path.entries.push_back({i, t.id});
                break;
            }
        }
    }
    res.discard_ratio =
        fixations.empty()
            ? 0.0
            : 1.0 - static_cast<double>(res.path.entries.size()) / static_cast<double>(fixations.size());
    return res;
}

}  // namespace gaze

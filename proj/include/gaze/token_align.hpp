#ifndef GAZE_TOKEN_ALIGN_HPP
#define GAZE_TOKEN_ALIGN_HPP

#include "gaze/json_io.hpp"
#include "gaze/types.hpp"

#include <string>
#include <vector>

namespace gaze {

struct BBox {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    /// Half-open containment, so tokens sharing an edge cannot both match.
    bool contains(double x, double y) const { return x >= x0 && x < x1 && y >= y0 && y < y1; }

    /// Open-interval overlap: boxes touching only along an edge do not overlap.
    bool overlaps(const BBox& other) const {
        return x0 < other.x1 && other.x0 < x1 && y0 < other.y1 && other.y0 < y1;
    }
};

/// A leaf token with its semantic class, source line, and screen bounds.
struct AstToken {
    std::size_t id = 0;
    std::string text;
    std::string semantic_class;
    int line = 1;  // 1-based
    BBox bbox;
};

/// The eight classes observed in the gaze corpus plus a catch-all.
const std::vector<std::string>& default_taxonomy();

struct TokenMap {
    std::vector<AstToken> tokens;
    std::vector<std::string> taxonomy = default_taxonomy();

    bool has_class(const std::string& c) const;

    /// Checks dense ids, known classes, non-degenerate and pairwise
    /// non-overlapping bboxes, and positive line numbers.
    void validate() const;
};

struct ScanPathEntry {
    std::size_t fixation_index = 0;
    std::size_t token_id = 0;
};

struct ScanPath {
    SessionMode mode = SessionMode::combined;
    std::vector<ScanPathEntry> entries;
};

struct AlignResult {
    ScanPath path;
    double discard_ratio = 0.0;
};

TokenMap token_map_from_json(const json& j);
json token_map_to_json(const TokenMap& map);
TokenMap load_token_map(const std::string& path);

ScanPath scan_path_from_json(const json& j);
json scan_path_to_json(const ScanPath& path);
ScanPath load_scan_path(const std::string& path);

/// Maps each fixation to the token whose bbox contains its centroid.
/// Unmatched fixations are dropped and counted in discard_ratio; consecutive
/// hits on one token are kept.
AlignResult align_fixations(const std::vector<Fixation>& fixations, const TokenMap& map,
                            SessionMode mode);

}  // namespace gaze

#endif

#ifndef GAZE_JSON_IO_HPP
#define GAZE_JSON_IO_HPP

#include <json.hpp>

#include <string>

namespace gaze {

using json = nlohmann::json;

/// Serializes with sorted object keys (nlohmann objects iterate sorted) and
/// floating-point values rendered at 17 significant digits, so identical
/// values always produce identical bytes.
std::string dump_canonical(const json& j);

/// dump_canonical plus trailing newline, written atomically enough for our
/// purposes (single write).
void write_json_file(const std::string& path, const json& j);

json read_json_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// FNV-1a 64-bit over a string, rendered as 16 hex digits. Used for config
/// hashes in run manifests.
std::string fnv1a_hex(const std::string& s);

}  // namespace gaze

#endif

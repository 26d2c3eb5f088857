#include "gaze/types.hpp"

namespace gaze {

Validity validity_from_string(const std::string& s) {
    if (s == "valid") return Validity::valid;
    if (s == "blink") return Validity::blink;
    if (s == "offscreen") return Validity::offscreen;
    throw ValidationError("unknown validity flag: '" + s + "'");
}

std::string to_string(Validity v) {
    switch (v) {
        case Validity::valid: return "valid";
        case Validity::blink: return "blink";
        case Validity::offscreen: return "offscreen";
    }
    return "valid";
}

SessionMode mode_from_string(const std::string& s) {
    if (s == "reading") return SessionMode::reading;
    if (s == "writing") return SessionMode::writing;
    if (s == "combined") return SessionMode::combined;
    throw ValidationError("unknown session mode: '" + s + "'");
}

std::string to_string(SessionMode m) {
    switch (m) {
        case SessionMode::reading: return "reading";
        case SessionMode::writing: return "writing";
        case SessionMode::combined: return "combined";
    }
    return "combined";
}

std::string join_ngram(const NGram& g) {
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) out += "\xe2\x86\x92";  // U+2192 rightwards arrow
        out += g[i];
    }
    return out;
}

NGram split_ngram(const std::string& joined) {
    static const std::string arrow = "\xe2\x86\x92";
    NGram out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = joined.find(arrow, pos);
        if (next == std::string::npos) {
            out.push_back(joined.substr(pos));
            break;
        }
        out.push_back(joined.substr(pos, next - pos));
        pos = next + arrow.size();
    }
    return out;
}

}  // namespace gaze

#include "gaze/json_io.hpp"

#include "gaze/types.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gaze {

namespace {

void dump_rec(const json& j, std::string& out) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += json(it.key()).dump();
                out += ':';
                dump_rec(it.value(), out);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ',';
                first = false;
                dump_rec(v, out);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float: {
            double d = j.get<double>();
            if (!std::isfinite(d))
                throw ValidationError("non-finite value cannot be serialized to JSON");
            if (d == 0.0) d = 0.0;  // normalize -0.0
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", d);
            out += buf;
            break;
        }
        default:
            out += j.dump();
            break;
    }
}

}  // namespace

std::string dump_canonical(const json& j) {
    std::string out;
    dump_rec(j, out);
    return out;
}

void write_json_file(const std::string& path, const json& j) {
    write_text_file(path, dump_canonical(j) + "\n");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("JSON parse failure in " + path + ": " + e.what());
    }
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open file for writing: " + path);
    out << text;
    if (!out) throw ValidationError("write failed: " + path);
}

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace gaze

#include "gaze/gaze_ingest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gaze {

std::vector<GazeSample> filter_artifacts(const std::vector<GazeSample>& samples,
                                         const SessionGeometry& geom,
                                         double max_velocity_deg_s) {
    geom.validate();
    std::vector<GazeSample> kept;
    kept.reserve(samples.size());
    for (const auto& s : samples) {
        if (s.validity != Validity::valid) continue;
        if (!kept.empty()) {
            const auto& prev = kept.back();
            const double dt_s = (s.t_ms - prev.t_ms) / 1000.0;
            if (dt_s <= 0) throw ValidationError("gaze timestamps must be strictly increasing");
            const double dist_px = std::hypot(s.x - prev.x, s.y - prev.y);
            const double deg_s = dist_px / geom.pixels_per_degree / dt_s;
            if (deg_s > max_velocity_deg_s) continue;
        }
        kept.push_back(s);
    }
    return kept;
}

std::vector<Fixation> segment_fixations(const std::vector<GazeSample>& samples,
                                        const SessionGeometry& geom,
                                        double dispersion_deg,
                                        double min_duration_ms) {
    geom.validate();
    if (dispersion_deg <= 0 || min_duration_ms <= 0)
        throw ValidationError("dispersion and min duration must be strictly positive");

    const double max_span_px = dispersion_deg * geom.pixels_per_degree;
    std::vector<Fixation> fixations;

    std::size_t start = 0;
    const std::size_t n = samples.size();
    while (start < n) {
        double min_x = samples[start].x, max_x = samples[start].x;
        double min_y = samples[start].y, max_y = samples[start].y;
        double sum_x = 0.0, sum_y = 0.0;
        std::size_t end = start;  // inclusive window end
        while (end < n) {
            const auto& s = samples[end];
            const double nmin_x = std::min(min_x, s.x), nmax_x = std::max(max_x, s.x);
            const double nmin_y = std::min(min_y, s.y), nmax_y = std::max(max_y, s.y);
            if ((nmax_x - nmin_x) + (nmax_y - nmin_y) > max_span_px) break;
            min_x = nmin_x; max_x = nmax_x; min_y = nmin_y; max_y = nmax_y;
            sum_x += s.x; sum_y += s.y;
            ++end;
        }
        // window is [start, end), broken by sample `end` (or stream end)
        const std::size_t count = end - start;
        const double span_ms = samples[end - 1].t_ms - samples[start].t_ms;
        if (span_ms >= min_duration_ms) {
            Fixation f;
            f.start_ms = samples[start].t_ms;
            f.duration_ms = span_ms;
            f.centroid_x = sum_x / static_cast<double>(count);
            f.centroid_y = sum_y / static_cast<double>(count);
            f.sample_count = count;
            fixations.push_back(f);
        }
        start = end == start ? start + 1 : end;
    }
    return fixations;
}

std::vector<Saccade> derive_saccades(const std::vector<Fixation>& fixations) {
    std::vector<Saccade> out;
    if (fixations.size() < 2) return out;
    out.reserve(fixations.size() - 1);
    for (std::size_t i = 0; i + 1 < fixations.size(); ++i) {
        Saccade s;
        s.from_fixation = i;
        s.to_fixation = i + 1;
        s.duration_ms = fixations[i + 1].start_ms - (fixations[i].start_ms + fixations[i].duration_ms);
        out.push_back(s);
    }
    return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<GazeSample> parse_gaze_csv(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    const std::string where = origin.empty() ? "gaze stream" : origin;
    if (!std::getline(in, line))
        throw ValidationError(where + ": empty stream, header expected");
    {
        auto cols = split_csv_line(line);
        for (auto& c : cols) c = strip(c);
        if (cols != std::vector<std::string>{"timestamp_ms", "x_px", "y_px", "validity"})
            throw ValidationError(where + ": header must be 'timestamp_ms,x_px,y_px,validity'");
    }
    std::vector<GazeSample> samples;
    int line_no = 1;
    double prev_t = -1.0;
    bool have_prev = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        auto cols = split_csv_line(line);
        if (cols.size() != 4)
            throw ValidationError(where + ": line " + std::to_string(line_no) +
                                  " has " + std::to_string(cols.size()) + " columns, expected 4");
        GazeSample s;
        try {
            s.t_ms = std::stod(strip(cols[0]));
            s.x = std::stod(strip(cols[1]));
            s.y = std::stod(strip(cols[2]));
        } catch (const std::exception&) {
            throw ValidationError(where + ": numeric parse failure at line " + std::to_string(line_no));
        }
        s.validity = validity_from_string(strip(cols[3]));
        if (have_prev && s.t_ms <= prev_t)
            throw ValidationError(where + ": timestamps not strictly increasing at line " +
                                  std::to_string(line_no));
        if (s.validity == Validity::valid && (!std::isfinite(s.x) || !std::isfinite(s.y)))
            throw ValidationError(where + ": non-finite coordinates on valid sample at line " +
                                  std::to_string(line_no));
        prev_t = s.t_ms;
        have_prev = true;
        samples.push_back(s);
    }
    return samples;
}

std::vector<GazeSample> load_gaze_csv(const std::string& path) {
    return parse_gaze_csv(read_text_file(path), path);
}

SessionGeometry geometry_from_json(const json& j) {
    SessionGeometry g;
    try {
        g.sample_rate_hz = j.at("sample_rate").get<double>();
        g.pixels_per_degree = j.at("pixels_per_degree").get<double>();
        g.screen_w = j.at("screen_w").get<double>();
        g.screen_h = j.at("screen_h").get<double>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad geometry file: ") + e.what());
    }
    g.validate();
    return g;
}

SessionGeometry load_geometry(const std::string& path) {
    return geometry_from_json(read_json_file(path));
}

json fixations_to_json(const std::vector<Fixation>& fixations, const std::vector<Saccade>& saccades) {
    json fx = json::array();
    for (const auto& f : fixations) {
        fx.push_back({{"start_ms", f.start_ms},
                      {"duration_ms", f.duration_ms},
                      {"x", f.centroid_x},
                      {"y", f.centroid_y},
                      {"samples", f.sample_count}});
    }
    json sc = json::array();
    for (const auto& s : saccades) {
        sc.push_back({{"from", s.from_fixation}, {"to", s.to_fixation}, {"duration_ms", s.duration_ms}});
    }
    return json{{"fixations", fx}, {"saccades", sc}};
}

std::vector<Fixation> fixations_from_json(const json& j) {
    std::vector<Fixation> out;
    try {
        for (const auto& f : j.at("fixations")) {
            Fixation fx;
            fx.start_ms = f.at("start_ms").get<double>();
            fx.duration_ms = f.at("duration_ms").get<double>();
            fx.centroid_x = f.at("x").get<double>();
            fx.centroid_y = f.at("y").get<double>();
            fx.sample_count = f.at("samples").get<std::size_t>();
            out.push_back(fx);
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad fixations file: ") + e.what());
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].start_ms < out[i - 1].start_ms)
            throw ValidationError("fixations not time-ordered");
    return out;
}

}  // namespace gaze

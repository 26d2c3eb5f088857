#include "gaze/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gaze {

void PlantedModel::validate() const {
    if (classes.empty()) throw ValidationError("planted model needs at least one class");
    if (salience.size() != classes.size() || transition.size() != classes.size())
        throw ValidationError("salience and transition must match the class list");
    for (double s : salience)
        if (!(s > 0.0 && s < 1.0))
            throw ValidationError("planted salience probabilities must lie in (0,1)");
    for (const auto& row : transition) {
        if (row.size() != classes.size())
            throw ValidationError("transition rows must be square over the class list");
        double sum = 0.0;
        for (double p : row) {
            if (p < 0.0) throw ValidationError("transition probabilities must be nonnegative");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw ValidationError("transition rows must sum to 1");
    }
    if (fix_duration_mean_ms <= 0 || fix_duration_sd_ms < 0)
        throw ValidationError("fixation duration parameters must be positive");
    if (min_steps < 1 || max_steps < min_steps)
        throw ValidationError("session length range must satisfy 1 <= min <= max");
    if (jitter_deg < 0) throw ValidationError("jitter must be nonnegative");
}

PlantedModel PlantedModel::from_salience(std::vector<std::string> classes,
                                         std::vector<double> salience, std::uint64_t seed) {
    PlantedModel m;
    m.classes = std::move(classes);
    m.salience = std::move(salience);
    double total = 0.0;
    for (double s : m.salience) total += s;
    std::vector<double> row;
    for (double s : m.salience) row.push_back(s / total);
    m.transition.assign(m.classes.size(), row);
    m.seed = seed;
    m.validate();
    return m;
}

namespace {

double draw_normal(Rng& rng, double mean, double sd) {
    const double u1 = 1.0 - rng.uniform();  // (0, 1]
    const double u2 = rng.uniform();
    return mean + sd * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::size_t draw_categorical(Rng& rng, const std::vector<double>& probs) {
    const double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        if (u < acc) return i;
    }
    return probs.size() - 1;
}

}  // namespace

std::vector<SimulatedSession> simulate_sessions(const PlantedModel& model, const TokenMap& map,
                                                const SessionGeometry& geom) {
    model.validate();
    geom.validate();
    if (map.tokens.empty()) throw ValidationError("cannot simulate over an empty token map");

    // tokens per walked class
    std::vector<std::vector<std::size_t>> tokens_of(model.classes.size());
    for (std::size_t c = 0; c < model.classes.size(); ++c) {
        for (const auto& t : map.tokens)
            if (t.semantic_class == model.classes[c]) tokens_of[c].push_back(t.id);
        if (tokens_of[c].empty())
            throw ValidationError("token map has no tokens of planted class '" +
                                  model.classes[c] + "'");
    }

    std::vector<double> start_probs;
    {
        double total = 0.0;
        for (double s : model.salience) total += s;
        for (double s : model.salience) start_probs.push_back(s / total);
    }

    const double dt_ms = 1000.0 / geom.sample_rate_hz;
    const double jitter_px = model.jitter_deg * geom.pixels_per_degree;
    // Clamp per-axis jitter so a window's Manhattan span stays at
    // 4 * 1.125 * jitter_deg = 4.5 * jitter_deg, under the 1 degree
    // dispersion window at the 0.2 degree default.
    const double jitter_clamp_px = 1.125 * jitter_px;

    std::vector<SimulatedSession> sessions;
    for (std::size_t s = 0; s < model.session_count; ++s) {
        Rng rng = Rng::derived(model.seed, s);
        SimulatedSession session;
        session.truth_path.mode = model.mode;

        const std::size_t steps =
            model.min_steps +
            static_cast<std::size_t>(rng.uniform_int(model.max_steps - model.min_steps + 1));

        double t_ms = 0.0;
        double prev_x = 0.0, prev_y = 0.0;
        std::size_t prev_token = map.tokens.size();  // sentinel: none
        std::size_t cls = draw_categorical(rng, start_probs);
        for (std::size_t step = 0; step < steps; ++step) {
            if (step > 0) cls = draw_categorical(rng, model.transition[cls]);
            const auto& pool = tokens_of[cls];
            std::size_t token = pool[rng.uniform_int(pool.size())];
            if (token == prev_token && pool.size() > 1) {
                while (token == prev_token) token = pool[rng.uniform_int(pool.size())];
            }
            const BBox& b = map.tokens[token].bbox;
            const double cx = 0.5 * (b.x0 + b.x1), cy = 0.5 * (b.y0 + b.y1);

            if (step > 0) {
                // two fast transit samples; their sub-minimum window emits
                // no fixation
                for (double frac : {1.0 / 3.0, 2.0 / 3.0}) {
                    GazeSample g;
                    g.t_ms = t_ms;
                    g.x = prev_x + frac * (cx - prev_x);
                    g.y = prev_y + frac * (cy - prev_y);
                    session.samples.push_back(g);
                    t_ms += dt_ms;
                }
            }

            double duration = draw_normal(rng, model.fix_duration_mean_ms, model.fix_duration_sd_ms);
            duration = std::max(duration, 125.0);
            const std::size_t count = static_cast<std::size_t>(std::ceil(duration / dt_ms)) + 1;
            for (std::size_t k = 0; k < count; ++k) {
                GazeSample g;
                g.t_ms = t_ms;
                g.x = cx + std::clamp(draw_normal(rng, 0.0, jitter_px), -jitter_clamp_px,
                                      jitter_clamp_px);
                g.y = cy + std::clamp(draw_normal(rng, 0.0, jitter_px), -jitter_clamp_px,
                                      jitter_clamp_px);
                session.samples.push_back(g);
                t_ms += dt_ms;
            }
            session.truth_path.entries.push_back({step, token});
            prev_x = cx;
            prev_y = cy;
            prev_token = token;
        }
        sessions.push_back(std::move(session));
    }
    return sessions;
}

PlantedModel planted_model_from_json(const json& j) {
    PlantedModel m;
    try {
        m.classes = j.at("classes").get<std::vector<std::string>>();
        m.salience = j.at("salience").get<std::vector<double>>();
        m.transition = j.at("transition").get<std::vector<std::vector<double>>>();
        if (j.contains("fix_duration_mean_ms"))
            m.fix_duration_mean_ms = j.at("fix_duration_mean_ms").get<double>();
        if (j.contains("fix_duration_sd_ms"))
            m.fix_duration_sd_ms = j.at("fix_duration_sd_ms").get<double>();
        if (j.contains("session_count")) m.session_count = j.at("session_count").get<std::size_t>();
        if (j.contains("min_steps")) m.min_steps = j.at("min_steps").get<std::size_t>();
        if (j.contains("max_steps")) m.max_steps = j.at("max_steps").get<std::size_t>();
        if (j.contains("jitter_deg")) m.jitter_deg = j.at("jitter_deg").get<double>();
        if (j.contains("seed")) m.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("mode")) m.mode = mode_from_string(j.at("mode").get<std::string>());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad planted model: ") + e.what());
    }
    m.validate();
    return m;
}

json planted_model_to_json(const PlantedModel& model) {
    return json{{"classes", model.classes},
                {"salience", model.salience},
                {"transition", model.transition},
                {"fix_duration_mean_ms", model.fix_duration_mean_ms},
                {"fix_duration_sd_ms", model.fix_duration_sd_ms},
                {"session_count", model.session_count},
                {"min_steps", model.min_steps},
                {"max_steps", model.max_steps},
                {"jitter_deg", model.jitter_deg},
                {"seed", model.seed},
                {"mode", to_string(model.mode)}};
}

PlantedModel load_planted_model(const std::string& path) {
    return planted_model_from_json(read_json_file(path));
}

std::string session_to_csv(const std::vector<GazeSample>& samples) {
    std::string out = "timestamp_ms,x_px,y_px,validity\n";
    char buf[160];
    for (const auto& s : samples) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%s\n", s.t_ms, s.x, s.y,
                      to_string(s.validity).c_str());
        out += buf;
    }
    return out;
}

}  // namespace gaze

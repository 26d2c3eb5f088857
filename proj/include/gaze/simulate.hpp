#ifndef GAZE_SIMULATE_HPP
#define GAZE_SIMULATE_HPP

#include "gaze/json_io.hpp"
#include "gaze/rng.hpp"
#include "gaze/token_align.hpp"
#include "gaze/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gaze {

/// Generator of synthetic gaze sessions with planted statistics, used to
/// validate the distillation pipeline by parameter recovery.
///
/// Exact fixation-count recovery under I-DT holds when consecutive planted
/// fixations are farther apart than the dispersion window allows merging;
/// token maps with centers >= 2x the dispersion apart (and >= 2 tokens per
/// walked class) guarantee it.
struct PlantedModel {
    std::vector<std::string> classes;              // classes the walk visits
    std::vector<double> salience;                  // per class, in (0,1)
    std::vector<std::vector<double>> transition;   // row-stochastic over classes
    double fix_duration_mean_ms = 200.0;
    double fix_duration_sd_ms = 30.0;
    std::size_t session_count = 10;
    std::size_t min_steps = 50;
    std::size_t max_steps = 100;
    double jitter_deg = 0.2;
    std::uint64_t seed = 0;
    SessionMode mode = SessionMode::combined;

    void validate() const;

    /// Model whose transition rows all equal the normalized salience vector:
    /// visits become i.i.d. proportional to salience, so class-level visit
    /// frequencies recover the planted salience ordering.
    static PlantedModel from_salience(std::vector<std::string> classes,
                                      std::vector<double> salience, std::uint64_t seed);
};

struct SimulatedSession {
    std::vector<GazeSample> samples;
    ScanPath truth_path;  // planted (fixation_index, token_id) sequence
};

std::vector<SimulatedSession> simulate_sessions(const PlantedModel& model, const TokenMap& map,
                                                const SessionGeometry& geom);

PlantedModel planted_model_from_json(const json& j);
json planted_model_to_json(const PlantedModel& model);
PlantedModel load_planted_model(const std::string& path);

std::string session_to_csv(const std::vector<GazeSample>& samples);

}  // namespace gaze

#endif

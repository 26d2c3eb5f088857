#ifndef GAZE_GAZE_INGEST_HPP
#define GAZE_GAZE_INGEST_HPP

#include "gaze/json_io.hpp"
#include "gaze/types.hpp"

#include <string>
#include <vector>

namespace gaze {

/// Drops blink/offscreen samples, then removes velocity outliers. Velocity
/// is measured between each candidate and the previous kept sample, so a
/// single displaced sample is removed without discarding its neighbors.
std::vector<GazeSample> filter_artifacts(const std::vector<GazeSample>& samples,
                                         const SessionGeometry& geom,
                                         double max_velocity_deg_s = 1000.0);

/// Dispersion-threshold (I-DT) fixation detection. A window grows while its
/// Manhattan span (max(x)-min(x)) + (max(y)-min(y)) stays within
/// dispersion_deg * pixels_per_degree; when a sample breaks the bound the
/// window ends at the previous sample and restarts at the breaking sample.
/// Windows spanning at least min_duration_ms become fixations with centroid
/// equal to the mean of their member samples.
std::vector<Fixation> segment_fixations(const std::vector<GazeSample>& samples,
                                        const SessionGeometry& geom,
                                        double dispersion_deg = 1.0,
                                        double min_duration_ms = 100.0);

/// Gaps between consecutive fixations; empty for fewer than two fixations.
std::vector<Saccade> derive_saccades(const std::vector<Fixation>& fixations);

/// Parses the comma-separated gaze record stream. Header must be exactly
/// `timestamp_ms,x_px,y_px,validity`; timestamps must be strictly
/// increasing; x,y must be finite for validity=valid rows.
std::vector<GazeSample> parse_gaze_csv(const std::string& text, const std::string& origin = "");

std::vector<GazeSample> load_gaze_csv(const std::string& path);

SessionGeometry geometry_from_json(const json& j);
SessionGeometry load_geometry(const std::string& path);

json fixations_to_json(const std::vector<Fixation>& fixations, const std::vector<Saccade>& saccades);
std::vector<Fixation> fixations_from_json(const json& j);

}  // namespace gaze

#endif

#ifndef GAZE_TYPES_HPP
#define GAZE_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaze {

/// Raised when input data violates a format or invariant contract.
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a source snippet cannot be lexed. Carries line/column.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& msg, int line, int column)
        : ValidationError(msg + " at line " + std::to_string(line) + ", column " +
                          std::to_string(column)),
          line(line),
          column(column) {}

    int line;
    int column;
};

enum class Validity { valid, blink, offscreen };

Validity validity_from_string(const std::string& s);
std::string to_string(Validity v);

/// One raw eye-tracker sample. Timestamps are milliseconds since session
/// start and must be strictly increasing within a session.
struct GazeSample {
    double t_ms = 0.0;
    double x = 0.0;
    double y = 0.0;
    Validity validity = Validity::valid;
};

/// A stable-gaze interval emitted by I-DT segmentation.
struct Fixation {
    double start_ms = 0.0;
    double duration_ms = 0.0;
    double centroid_x = 0.0;
    double centroid_y = 0.0;
    std::size_t sample_count = 0;
};

/// The gap between two consecutive fixations.
struct Saccade {
    std::size_t from_fixation = 0;
    std::size_t to_fixation = 0;
    double duration_ms = 0.0;
};

/// Screen/tracker geometry needed to express angular thresholds in pixels.
struct SessionGeometry {
    double sample_rate_hz = 120.0;
    double pixels_per_degree = 40.0;
    double screen_w = 1920.0;
    double screen_h = 1080.0;

    void validate() const {
        if (sample_rate_hz <= 0 || pixels_per_degree <= 0 || screen_w <= 0 || screen_h <= 0)
            throw ValidationError("session geometry fields must be strictly positive");
    }
};

enum class SessionMode { reading, writing, combined };

SessionMode mode_from_string(const std::string& s);
std::string to_string(SessionMode m);

/// An n-gram of semantic class labels (1 to 3 classes). Orders
/// lexicographically by component, which fixes index layouts.
using NGram = std::vector<std::string>;

std::string join_ngram(const NGram& g);
NGram split_ngram(const std::string& joined);

}  // namespace gaze

#endif

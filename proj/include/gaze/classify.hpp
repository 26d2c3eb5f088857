#ifndef GAZE_CLASSIFY_HPP
#define GAZE_CLASSIFY_HPP

#include "gaze/token_align.hpp"

#include <string>

namespace gaze {

/// Monospace layout model used to synthesize token bboxes: a token at
/// (line, col) of length n covers (col*cell_w, (line-1)*cell_h) ..
/// ((col+n)*cell_w, line*cell_h).
struct LayoutModel {
    double cell_w = 10.0;
    double cell_h = 20.0;
};

/// Lexes a single-function Java-like snippet and labels each leaf token
/// with one of the default semantic classes. Supported constructs:
/// declarations, calls, if/else/switch, while/for/do, parameters and call
/// arguments; everything else is labeled `other`. Unbalanced brackets or
/// illegal characters raise ParseError with line/column.
TokenMap classify_source(const std::string& source, const LayoutModel& layout = LayoutModel());

}  // namespace gaze

#endif

#pragma once

#include <string>

#include "quandle/quandle.hpp"

namespace quandle {

/// Text format: first line n, then n lines of n space-separated integers;
/// line x, column y holds s_x(y). '#' starts a comment.
std::string serialize(const FiniteQuandle& q);

/// JSON form {"n": n, "table": [[...]]}, compact.
std::string serialize_json(const FiniteQuandle& q);

/// Parses either format (JSON is detected by a leading '{'). Runs verify
/// and throws AxiomError on non-quandles unless `raw` is set; format
/// problems throw FormatError either way.
FiniteQuandle parse(const std::string& text, bool raw = false);

} // namespace quandle

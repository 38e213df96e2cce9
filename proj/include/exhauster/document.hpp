#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "exhauster/geometry.hpp"

namespace exh {

inline constexpr const char* kDocumentVersion = "1";

/// Reads an exhauster document:
///
///   {"version": "1", "bodies": [
///     {"type": "polygon", "label": "C0", "vertices": [[0,0],[1,1],[-1,1]]},
///     {"type": "point",   "point": [1,2]},
///     {"type": "segment", "endpoints": [[-2,1],[-2,2]]},
///     {"type": "disc",    "center": [0,0], "radius": 1}
///   ]}
///
/// Unknown keys are rejected. Syntax and schema problems throw ParseError
/// (with line and field); empty bodies, empty vertex lists and negative radii
/// throw ValidationError.
Exhauster parse_exhauster(std::string_view text);

// One body record per line. parse_exhauster(serialize_exhauster(ex)) reproduces ex.
std::string serialize_exhauster(const Exhauster& ex);

Exhauster load_exhauster(const std::filesystem::path& path);
void save_exhauster(const Exhauster& ex, const std::filesystem::path& path);

// Shortest decimal that round-trips to the same double.
std::string format_real(double value);

}  // namespace exh

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "geobench/geo.hpp"

namespace geobench {

enum class ParseStatus {
    Ok,                // exactly one valid candidate in the winning tier
    AmbiguousResolved, // several candidates; the last one was chosen
    NoCandidate,       // nothing coordinate-shaped in the text
    OutOfRange,        // pair-shaped matches existed but none was in range
};

struct ParseResult {
    ParseStatus status = ParseStatus::NoCandidate;
    std::optional<GeoCoordinate> coordinate;
    std::size_t span_begin = 0;  // [begin, end) of the winning (or last rejected) match
    std::size_t span_end = 0;
    int candidates_found = 0;

    bool ok() const { return coordinate.has_value(); }
};

// Extracts one coordinate pair from free text. Recognition tiers, highest
// wins; within a tier the LAST occurrence wins (final answers come last in
// chain-of-thought output):
//   1. labeled pair -- "Latitude and Longitude: 51.5, -0.12",
//      "latitude/longitude: ...", or split "Latitude: 51.5 ... Longitude: -0.12"
//   2. bare decimal pair "s1, s2" with s1 in [-90,90] and s2 in [-180,180];
//      both components must be in range under (lat, lon) order -- no swap guess
//   3. DMS pair with hemisphere letters, Unicode or ASCII symbols
// Total over arbitrary byte strings; never throws.
ParseResult parse_coordinates(std::string_view text) noexcept;

// deg + min/60 + sec/3600, negated for S/W. Throws on out-of-range
// components or an unknown hemisphere letter.
double dms_to_decimal(int degrees, int minutes, double seconds, char hemisphere);

}  // namespace geobench

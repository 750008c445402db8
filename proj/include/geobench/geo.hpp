#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace geobench {

// Validated WGS-style geographic coordinate in decimal degrees.
// Latitude is checked against [-90, +90]; longitude is normalized into
// [-180, +180) at construction (190 becomes -170).
class GeoCoordinate {
public:
    GeoCoordinate(double latitude_deg, double longitude_deg);

    static std::optional<GeoCoordinate> try_make(double latitude_deg,
                                                 double longitude_deg) noexcept;

    double latitude() const { return latitude_; }
    double longitude() const { return longitude_; }

    friend bool operator==(const GeoCoordinate& a, const GeoCoordinate& b) {
        return a.latitude_ == b.latitude_ && a.longitude_ == b.longitude_;
    }

private:
    GeoCoordinate() = default;
    double latitude_ = 0.0;
    double longitude_ = 0.0;
};

// Wraps an arbitrary finite longitude into [-180, +180).
double normalize_longitude(double longitude_deg);

// Spherical earth. The radius is configurable so fixtures can pin it; the
// default is the mean spherical radius in kilometers.
class EarthModel {
public:
    EarthModel() = default;
    explicit EarthModel(double radius_km);
    double radius_km() const { return radius_km_; }

private:
    double radius_km_ = 6371.0;
};

enum class BoundaryLevel { Street, City, Region, Country, Continent, Beyond };

inline constexpr std::array<double, 5> kBoundaryThresholdsKm{1.0, 25.0, 200.0, 750.0,
                                                             2500.0};

// Threshold in km for a non-Beyond level; throws for Beyond.
double boundary_threshold_km(BoundaryLevel level);
std::string_view boundary_name(BoundaryLevel level);

// Great-circle distance in kilometers:
//   d = 2r * asin(sqrt(v))
//   v = sin^2(dphi/2) + cos(phi1)cos(phi2)sin^2(dlambda/2)
// The asin argument is clamped to [0, 1] to absorb rounding near antipodes.
double haversine_distance(const GeoCoordinate& a, const GeoCoordinate& b,
                          const EarthModel& earth = EarthModel{});

// 5000 * exp(-d / 1492.7); rejects negative distances.
double geoscore(double distance_km);

inline constexpr double kGeoScoreMax = 5000.0;
inline constexpr double kGeoScoreDecayKm = 1492.7;

// Tightest level whose threshold is >= d (thresholds are inclusive);
// anything past 2500 km is Beyond. Rejects negative distances.
BoundaryLevel classify_boundary(double distance_km);

// Cumulative share of distances within each non-Beyond threshold, as
// percentages. Street% <= City% <= ... <= Continent% by construction.
class BoundaryAccuracies {
public:
    double percent_at(BoundaryLevel level) const;
    const std::array<double, 5>& percentages() const { return pct_; }

    friend BoundaryAccuracies boundary_accuracies(std::span<const double>);

private:
    std::array<double, 5> pct_{};
};

// Rejects an empty list or any negative distance.
BoundaryAccuracies boundary_accuracies(std::span<const double> distances_km);

}  // namespace geobench

#include "geobench/geo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace geobench {

namespace {
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
}

double normalize_longitude(double longitude_deg) {
    double lon = std::fmod(longitude_deg + 180.0, 360.0);
    if (lon < 0.0) lon += 360.0;
    return lon - 180.0;
}

GeoCoordinate::GeoCoordinate(double latitude_deg, double longitude_deg) {
    if (!std::isfinite(latitude_deg) || !std::isfinite(longitude_deg)) {
        throw std::invalid_argument("coordinate components must be finite");
    }
    if (latitude_deg < -90.0 || latitude_deg > 90.0) {
        throw std::invalid_argument("latitude out of range [-90, 90]: " +
                                    std::to_string(latitude_deg));
    }
    latitude_ = latitude_deg;
    longitude_ = normalize_longitude(longitude_deg);
}

std::optional<GeoCoordinate> GeoCoordinate::try_make(double latitude_deg,
                                                     double longitude_deg) noexcept {
    if (!std::isfinite(latitude_deg) || !std::isfinite(longitude_deg)) return std::nullopt;
    if (latitude_deg < -90.0 || latitude_deg > 90.0) return std::nullopt;
    GeoCoordinate c;
    c.latitude_ = latitude_deg;
    c.longitude_ = normalize_longitude(longitude_deg);
    return c;
}

EarthModel::EarthModel(double radius_km) : radius_km_(radius_km) {
    if (!(radius_km > 0.0)) {
        throw std::invalid_argument("earth radius must be positive");
    }
}

double boundary_threshold_km(BoundaryLevel level) {
    if (level == BoundaryLevel::Beyond) {
        throw std::invalid_argument("Beyond carries no threshold");
    }
    return kBoundaryThresholdsKm[static_cast<std::size_t>(level)];
}

std::string_view boundary_name(BoundaryLevel level) {
    switch (level) {
        case BoundaryLevel::Street: return "street";
        case BoundaryLevel::City: return "city";
        case BoundaryLevel::Region: return "region";
        case BoundaryLevel::Country: return "country";
        case BoundaryLevel::Continent: return "continent";
        case BoundaryLevel::Beyond: return "beyond";
    }
    return "unknown";
}

double haversine_distance(const GeoCoordinate& a, const GeoCoordinate& b,
                          const EarthModel& earth) {
    const double phi1 = a.latitude() * kDegToRad;
    const double phi2 = b.latitude() * kDegToRad;
    const double dphi = (b.latitude() - a.latitude()) * kDegToRad;
    const double dlambda = (b.longitude() - a.longitude()) * kDegToRad;

    const double sp = std::sin(dphi / 2.0);
    const double sl = std::sin(dlambda / 2.0);
    const double v = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
    const double root = std::sqrt(std::clamp(v, 0.0, 1.0));
    return 2.0 * earth.radius_km() * std::asin(root);
}

double geoscore(double distance_km) {
    if (!(distance_km >= 0.0)) {
        throw std::invalid_argument("geoscore requires a non-negative distance");
    }
    return kGeoScoreMax * std::exp(-distance_km / kGeoScoreDecayKm);
}

BoundaryLevel classify_boundary(double distance_km) {
    if (!(distance_km >= 0.0)) {
        throw std::invalid_argument("boundary classification requires a non-negative distance");
    }
    for (std::size_t i = 0; i < kBoundaryThresholdsKm.size(); ++i) {
        if (distance_km <= kBoundaryThresholdsKm[i]) {
            return static_cast<BoundaryLevel>(i);
        }
    }
    return BoundaryLevel::Beyond;
}

double BoundaryAccuracies::percent_at(BoundaryLevel level) const {
    if (level == BoundaryLevel::Beyond) {
        throw std::invalid_argument("Beyond has no accuracy bucket");
    }
    return pct_[static_cast<std::size_t>(level)];
}

BoundaryAccuracies boundary_accuracies(std::span<const double> distances_km) {
    if (distances_km.empty()) {
        throw std::invalid_argument("boundary_accuracies requires a non-empty list");
    }
    std::array<std::size_t, 5> counts{};
    for (double d : distances_km) {
        if (!(d >= 0.0)) {
            throw std::invalid_argument("distances must be non-negative");
        }
        for (std::size_t i = 0; i < kBoundaryThresholdsKm.size(); ++i) {
            if (d <= kBoundaryThresholdsKm[i]) counts[i] += 1;
        }
    }
    BoundaryAccuracies out;
    const double n = static_cast<double>(distances_km.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        out.pct_[i] = 100.0 * static_cast<double>(counts[i]) / n;
    }
    return out;
}

}  // namespace geobench

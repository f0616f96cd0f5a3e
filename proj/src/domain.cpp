#include "netlat/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace netlat {

bool GeoPoint::valid() const {
    return std::isfinite(lat) && std::isfinite(lon) && lat >= -90.0 &&
           lat <= 90.0 && lon >= -180.0 && lon <= 180.0;
}

const char* hop_state_name(HopState s) {
    switch (s) {
        case HopState::Low: return "low";
        case HopState::Avg: return "avg";
        case HopState::High: return "high";
        case HopState::Spike: return "spike";
    }
    return "?";
}

const char* speed_label_name(SpeedLabel l) {
    switch (l) {
        case SpeedLabel::Fastest: return "Fastest";
        case SpeedLabel::Fast: return "Fast";
        case SpeedLabel::NormalFast: return "NormalFast";
        case SpeedLabel::NormalSlow: return "NormalSlow";
        case SpeedLabel::Slow: return "Slow";
        case SpeedLabel::Slowest: return "Slowest";
        case SpeedLabel::Unusable: return "Unusable";
    }
    return "?";
}

SpeedLabel bin_speed_label(double rtt_ms) {
    if (!std::isfinite(rtt_ms) || rtt_ms < 0.0)
        throw std::domain_error("bin_speed_label: rtt must be finite and >= 0");
    if (rtt_ms <= 30.0) return SpeedLabel::Fastest;
    if (rtt_ms <= 60.0) return SpeedLabel::Fast;
    if (rtt_ms <= 90.0) return SpeedLabel::NormalFast;
    if (rtt_ms <= 120.0) return SpeedLabel::NormalSlow;
    if (rtt_ms <= 150.0) return SpeedLabel::Slow;
    if (rtt_ms <= 180.0) return SpeedLabel::Slowest;
    return SpeedLabel::Unusable;
}

HopState bin_hop_state(double delay_ms, const HopBinning& bins) {
    if (!bins.valid())
        throw std::domain_error("bin_hop_state: invalid binning thresholds");
    if (!std::isfinite(delay_ms) || delay_ms < 0.0)
        throw std::domain_error("bin_hop_state: delay must be finite and >= 0");
    if (delay_ms < bins.low_upper) return HopState::Low;
    if (delay_ms < bins.avg_upper) return HopState::Avg;
    if (delay_ms < bins.spike_threshold) return HopState::High;
    return HopState::Spike;
}

bool TracerouteRecord::valid() const {
    if (!source.valid() || !dest.valid()) return false;
    if (hops.empty() || hops.size() > kMaxHops) return false;
    for (double h : hops)
        if (!std::isfinite(h) || h < 0.0) return false;
    return true;
}

bool RttRecord::valid() const {
    return client_timestamp >= 0.0 && std::isfinite(client_timestamp) &&
           source.valid() && dest.valid() && !proxy1_name.empty() &&
           std::isfinite(gpn_rtt) && gpn_rtt >= 0.0 &&
           std::isfinite(non_gpn_rtt) && non_gpn_rtt >= 0.0;
}

bool MergedRecord::valid() const {
    if (!rtt.valid() || !proxy1.valid()) return false;
    if (proxy2 && !proxy2->valid()) return false;
    for (double d : {dist_src_dst, dist_src_p1, dist_p1_p2, dist_p2_dst})
        if (!(d >= 0.0 && d <= kMaxDistanceKm)) return false;
    return true;
}

}  // namespace netlat

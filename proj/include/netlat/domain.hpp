#pragma once

// Shared domain types for the latency toolkit: geolocated measurement
// records, the seven RTT speed bands and the four hop-delay states.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace netlat {

struct GeoPoint {
    double lat = 0.0;  // degrees, [-90, 90]
    double lon = 0.0;  // degrees, [-180, 180]

    bool valid() const;
    bool operator==(const GeoPoint&) const = default;
};

// Hop-delay states, ordinal order matches the delay bins.
enum class HopState : int { Low = 0, Avg = 1, High = 2, Spike = 3 };

constexpr int kNumHopStates = 4;

// Bin edges for hop delays, in ms. Low [0, low_upper), Avg [low_upper,
// avg_upper), High [avg_upper, spike_threshold), Spike [spike_threshold, inf).
struct HopBinning {
    double low_upper = 0.5;
    double avg_upper = 2.0;
    double spike_threshold = 15.0;

    bool valid() const {
        return 0.0 < low_upper && low_upper < avg_upper &&
               avg_upper < spike_threshold;
    }
};

// RTT speed bands, 30 ms wide up to 180 ms, then Unusable.
enum class SpeedLabel : int {
    Fastest = 1,
    Fast = 2,
    NormalFast = 3,
    NormalSlow = 4,
    Slow = 5,
    Slowest = 6,
    Unusable = 7,
};

constexpr int kNumSpeedLabels = 7;

const char* hop_state_name(HopState s);
const char* speed_label_name(SpeedLabel l);

// Fastest [0,30], Fast (30,60], ..., Slowest (150,180], Unusable (180,inf).
// Throws std::domain_error for negative or non-finite rtt.
SpeedLabel bin_speed_label(double rtt_ms);

// Throws std::domain_error for negative or non-finite delay, or invalid bins.
HopState bin_hop_state(double delay_ms, const HopBinning& bins = {});

struct TracerouteRecord {
    std::string source_ip;
    GeoPoint source;
    std::string dest_ip;
    GeoPoint dest;
    std::vector<double> hops;  // ms, 1..25 entries, each >= 0

    bool valid() const;
};

constexpr std::size_t kMaxHops = 25;

struct RttRecord {
    double client_timestamp = 0.0;  // seconds since Unix epoch (UTC)
    std::string source_ip;
    GeoPoint source;
    std::string dest_ip;
    GeoPoint dest;
    std::string proxy1_name;
    std::optional<std::string> proxy2_name;
    double gpn_rtt = 0.0;      // ms
    double non_gpn_rtt = 0.0;  // ms

    bool valid() const;
};

struct ProxyRecord {
    std::string name;  // unique key within a proxy table
    std::string ip;
    GeoPoint location;
};

// Half Earth circumference plus margin; no two surface points are farther.
constexpr double kMaxDistanceKm = 20040.0;

struct MergedRecord {
    RttRecord rtt;
    GeoPoint proxy1;
    std::optional<GeoPoint> proxy2;
    double dist_src_dst = 0.0;  // km
    double dist_src_p1 = 0.0;   // km
    double dist_p1_p2 = 0.0;    // km, 0 when proxy2 absent
    double dist_p2_dst = 0.0;   // km, measured from proxy1 when proxy2 absent

    bool valid() const;
};

}  // namespace netlat

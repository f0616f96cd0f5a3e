#include "netlat/features.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "netlat/ingest.hpp"

namespace netlat::features {

double encode_time_of_day(double ts_seconds) {
    constexpr double seconds_in_day = 24.0 * 60.0 * 60.0;
    double t = std::fmod(ts_seconds, seconds_in_day);
    return std::cos(2.0 * std::numbers::pi * t / seconds_in_day);
}

static double sine_of_day(double ts_seconds) {
    constexpr double seconds_in_day = 24.0 * 60.0 * 60.0;
    double t = std::fmod(ts_seconds, seconds_in_day);
    return std::sin(2.0 * std::numbers::pi * t / seconds_in_day);
}

double haversine_km(const GeoPoint& a, const GeoPoint& b) {
    constexpr double deg = std::numbers::pi / 180.0;
    const double lat1 = a.lat * deg, lat2 = b.lat * deg;
    const double dlat = (b.lat - a.lat) * deg;
    const double dlon = (b.lon - a.lon) * deg;
    const double s1 = std::sin(dlat / 2.0), s2 = std::sin(dlon / 2.0);
    double h = s1 * s1 + std::cos(lat1) * std::cos(lat2) * s2 * s2;
    if (h < 0.0) h = 0.0;
    if (h > 1.0) h = 1.0;
    return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

CategoryCoder::CategoryCoder(const std::vector<std::string>& values) {
    for (const auto& v : values) fit(v);
}

int CategoryCoder::fit(const std::string& value) {
    auto it = codes_.find(value);
    if (it != codes_.end()) return it->second;
    int c = static_cast<int>(order_.size()) + 1;
    codes_.emplace(value, c);
    order_.push_back(value);
    return c;
}

int CategoryCoder::code(const std::string& value) const {
    auto it = codes_.find(value);
    return it == codes_.end() ? 0 : it->second;
}

std::vector<int> encode_categorical(const std::vector<std::string>& values,
                                    CategoryCoder& coder) {
    std::vector<int> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(coder.fit(v));
    return out;
}

bool FeatureMatrix::all_finite() const {
    for (double v : data)
        if (!std::isfinite(v)) return false;
    for (double v : target)
        if (!std::isfinite(v)) return false;
    return true;
}

ScalerParams fit_scaler(const FeatureMatrix& train) {
    if (train.rows == 0 || train.cols() == 0)
        throw std::invalid_argument("fit_scaler: empty matrix");
    const std::size_t n = train.rows, d = train.cols();
    ScalerParams p;
    p.mean.assign(d, 0.0);
    p.std.assign(d, 0.0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < d; ++c) p.mean[c] += train.at(r, c);
    for (std::size_t c = 0; c < d; ++c) p.mean[c] /= static_cast<double>(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            double t = train.at(r, c) - p.mean[c];
            p.std[c] += t * t;
        }
    for (std::size_t c = 0; c < d; ++c) {
        p.std[c] = std::sqrt(p.std[c] / static_cast<double>(n));
        if (p.std[c] == 0.0) p.std[c] = 1.0;  // constant column
    }
    return p;
}

void apply_scaler_row(const ScalerParams& params, std::span<double> row) {
    if (row.size() != params.mean.size())
        throw std::invalid_argument("apply_scaler_row: dimension mismatch");
    for (std::size_t c = 0; c < row.size(); ++c)
        row[c] = (row[c] - params.mean[c]) / params.std[c];
}

FeatureMatrix apply_scaler(const ScalerParams& params,
                           const FeatureMatrix& m) {
    if (m.cols() != params.mean.size())
        throw std::invalid_argument("apply_scaler: dimension mismatch");
    FeatureMatrix out = m;
    for (std::size_t r = 0; r < out.rows; ++r)
        apply_scaler_row(params, out.row(r));
    return out;
}

FeatureMatrix assemble_nn_features(const ingest::Dataset& data,
                                   const NnFeatureOptions& opts) {
    FeatureMatrix m;
    m.columns = {"time_cos", "src_lat", "src_lon", "dst_lat", "dst_lon",
                 "p1_lat",   "p1_lon",  "p2_lat",  "p2_lon"};
    if (opts.include_sine) m.columns.insert(m.columns.begin() + 1, "time_sin");
    m.target_name = "gpn_rtt";
    m.rows = data.records.size();
    m.data.reserve(m.rows * m.cols());
    m.target.reserve(m.rows);
    for (const auto& rec : data.records) {
        const GeoPoint p2 = rec.proxy2.value_or(rec.proxy1);
        m.data.push_back(encode_time_of_day(rec.rtt.client_timestamp));
        if (opts.include_sine)
            m.data.push_back(sine_of_day(rec.rtt.client_timestamp));
        for (double v : {rec.rtt.source.lat, rec.rtt.source.lon,
                         rec.rtt.dest.lat, rec.rtt.dest.lon, rec.proxy1.lat,
                         rec.proxy1.lon, p2.lat, p2.lon})
            m.data.push_back(v);
        m.target.push_back(rec.rtt.gpn_rtt);
    }
    return m;
}

FeatureMatrix assemble_svm_features(const ingest::Dataset& data,
                                    const SvmFeatureOptions& opts) {
    FeatureMatrix m;
    m.columns = {"non_gpn_rtt", "time_cos", "src_lat",      "src_lon",
                 "dst_lat",     "dst_lon",  "p1_lat",       "p1_lon",
                 "p2_lat",      "p2_lon",   "dist_src_dst", "dist_src_p1",
                 "dist_p1_p2",  "dist_p2_dst"};
    if (opts.include_categorical)
        for (const char* c : {"src_ip_code", "dst_ip_code", "proxy1_code",
                              "proxy2_code"})
            m.columns.push_back(c);
    m.target_name = "speed_label";
    m.rows = data.records.size();
    m.data.reserve(m.rows * m.cols());
    m.target.reserve(m.rows);

    // Codes are fit over the whole dataset before any split, the way factor
    // columns are coded at load time.
    CategoryCoder src_coder, dst_coder, p1_coder, p2_coder;
    if (opts.include_categorical)
        for (const auto& rec : data.records) {
            src_coder.fit(rec.rtt.source_ip);
            dst_coder.fit(rec.rtt.dest_ip);
            p1_coder.fit(rec.rtt.proxy1_name);
            p2_coder.fit(rec.rtt.proxy2_name.value_or(""));
        }

    for (const auto& rec : data.records) {
        const GeoPoint p2 = rec.proxy2.value_or(rec.proxy1);
        m.data.push_back(rec.rtt.non_gpn_rtt);
        m.data.push_back(encode_time_of_day(rec.rtt.client_timestamp));
        for (double v : {rec.rtt.source.lat, rec.rtt.source.lon,
                         rec.rtt.dest.lat, rec.rtt.dest.lon, rec.proxy1.lat,
                         rec.proxy1.lon, p2.lat, p2.lon, rec.dist_src_dst,
                         rec.dist_src_p1, rec.dist_p1_p2, rec.dist_p2_dst})
            m.data.push_back(v);
        if (opts.include_categorical) {
            m.data.push_back(src_coder.code(rec.rtt.source_ip));
            m.data.push_back(dst_coder.code(rec.rtt.dest_ip));
            m.data.push_back(p1_coder.code(rec.rtt.proxy1_name));
            m.data.push_back(p2_coder.code(rec.rtt.proxy2_name.value_or("")));
        }
        m.target.push_back(
            static_cast<double>(bin_speed_label(rec.rtt.gpn_rtt)));
    }
    return m;
}

}  // namespace netlat::features

#pragma once

// Deterministic feature engineering: cyclical time-of-day encoding,
// great-circle distances, categorical coding, column standardization and
// the feature-matrix assemblies consumed by the regressor and classifier.

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "netlat/domain.hpp"

namespace netlat::ingest {
struct Dataset;
}

namespace netlat::features {

// Mean radius of the IUGG sphere model, km.
constexpr double kEarthRadiusKm = 6371.0088;

// cos(2*pi * ts / 86400). Reduced mod 86400 first, so adding whole days
// leaves the result bit-identical.
double encode_time_of_day(double ts_seconds);

// Great-circle distance on a sphere of radius kEarthRadiusKm.
double haversine_km(const GeoPoint& a, const GeoPoint& b);

// Integer codes in first-appearance order, 1..k. Unseen values code to 0.
class CategoryCoder {
  public:
    CategoryCoder() = default;
    explicit CategoryCoder(const std::vector<std::string>& values);

    // Fit codes for any value not seen yet; returns the value's code.
    int fit(const std::string& value);
    // 0 when the value was not seen during fitting.
    int code(const std::string& value) const;

    std::size_t size() const { return order_.size(); }
    const std::vector<std::string>& categories() const { return order_; }

  private:
    std::unordered_map<std::string, int> codes_;
    std::vector<std::string> order_;
};

std::vector<int> encode_categorical(const std::vector<std::string>& values,
                                    CategoryCoder& coder);

// Row-major numeric matrix with named columns and an optional target.
struct FeatureMatrix {
    std::vector<std::string> columns;
    std::vector<double> data;  // rows * columns.size()
    std::size_t rows = 0;
    std::vector<double> target;  // empty or length rows
    std::string target_name;

    std::size_t cols() const { return columns.size(); }
    double& at(std::size_t r, std::size_t c) { return data[r * cols() + c]; }
    double at(std::size_t r, std::size_t c) const {
        return data[r * cols() + c];
    }
    std::span<const double> row(std::size_t r) const {
        return {data.data() + r * cols(), cols()};
    }
    std::span<double> row(std::size_t r) {
        return {data.data() + r * cols(), cols()};
    }
    bool all_finite() const;
};

// Per-column mean and population (ddof 0) standard deviation. Stats must
// come from a training split only; a constant column gets std 1 so it maps
// to all zeros.
struct ScalerParams {
    std::vector<double> mean;
    std::vector<double> std;
};

// Throws std::invalid_argument on an empty matrix.
ScalerParams fit_scaler(const FeatureMatrix& train);
FeatureMatrix apply_scaler(const ScalerParams& params,
                           const FeatureMatrix& m);
void apply_scaler_row(const ScalerParams& params, std::span<double> row);

struct NnFeatureOptions {
    bool include_sine = false;  // optional sin column next to the cosine
};

// Columns: encoded time, src/dst/p1/p2 lat+lon (9). Absent proxy2
// coordinates are imputed with proxy1's. Target: gpn_rtt.
FeatureMatrix assemble_nn_features(const ingest::Dataset& data,
                                   const NnFeatureOptions& opts = {});

struct SvmFeatureOptions {
    bool include_categorical = true;  // IP / proxy-name codes
};

// Columns: non_gpn_rtt, encoded time, the 8 lat/lon columns, the 4 distance
// columns, plus categorical codes for src_ip/dst_ip/proxy names. gpn_rtt is
// never a feature; it becomes the SpeedLabel target.
FeatureMatrix assemble_svm_features(const ingest::Dataset& data,
                                    const SvmFeatureOptions& opts = {});

}  // namespace netlat::features

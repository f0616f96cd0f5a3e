#pragma once

// CSV ingestion for the three measurement schemas, null cleaning, and the
// merge that joins RTT rows with proxy geolocations and derived distances.
//
// Schemas (UTF-8, comma delimiter, '.' decimal point, header row, empty
// cell = null):
//   traceroute: src_ip,src_lat,src_lon,dst_ip,dst_lat,dst_lon,hop1,...,hop25
//   rtt:        client_ts,src_ip,src_lat,src_lon,dst_ip,dst_lat,dst_lon,
//               proxy1,proxy2,gpn_rtt,non_gpn_rtt
//   proxy:      name,ip,lat,lon
//   merged:     rtt columns + p1_lat,p1_lon,p2_lat,p2_lon,
//               dist_src_dst,dist_src_p1,dist_p1_p2,dist_p2_dst

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netlat/domain.hpp"

namespace netlat::ingest {

struct RowError {
    std::size_t line = 0;  // 1-based line number in the source file
    std::string message;
};

// Row-level problems are collected, never fatal; only file-level I/O or a
// missing/invalid header aborts a parse.
struct RejectsReport {
    std::size_t rows_in = 0;   // data rows seen (header excluded)
    std::size_t rows_out = 0;  // records produced
    std::vector<RowError> rejects;
    std::size_t warnings = 0;  // e.g. duplicate proxy names

    std::size_t rejected() const { return rejects.size(); }
};

// An RTT row as read from disk, before null cleaning. Required fields are
// optional here so na_omit has something to do.
struct RawRttRow {
    std::size_t line = 0;
    std::optional<double> client_ts;
    std::string source_ip;
    std::optional<double> src_lat, src_lon;
    std::string dest_ip;
    std::optional<double> dst_lat, dst_lon;
    std::string proxy1_name;
    std::optional<std::string> proxy2_name;
    std::optional<double> gpn_rtt, non_gpn_rtt;

    bool complete() const;  // all required fields present (proxy2 optional)
};

struct Provenance {
    std::vector<std::string> sources;  // file paths or stream tags
    std::size_t rows_before_cleaning = 0;
    std::size_t rows_after_cleaning = 0;
};

struct Dataset {
    std::vector<MergedRecord> records;
    Provenance provenance;
};

using ProxyTable = std::map<std::string, ProxyRecord>;

// Empty hop cells terminate the hop list; rows with zero hops are rejected
// and counted. Throws std::runtime_error on stream failure or bad header.
std::vector<TracerouteRecord> parse_traceroute_csv(std::istream& in,
                                                   RejectsReport& report);

// Missing proxy2 yields an absent optional; rows with any other null are
// cleaned out via na_omit and counted as rejects.
std::vector<RttRecord> parse_rtt_csv(std::istream& in, RejectsReport& report);

// Duplicate names: last one wins, warning counted.
ProxyTable parse_proxy_csv(std::istream& in, RejectsReport& report);

// Drops rows with any missing required field, order preserved. Idempotent.
std::vector<RawRttRow> na_omit(const std::vector<RawRttRow>& rows,
                               std::size_t* removed = nullptr);

// Joins proxy geolocations and computes the four distance columns with
// features::haversine_km. Records naming an unknown proxy are rejected.
Dataset merge(const std::vector<RttRecord>& rtt_records,
              const ProxyTable& proxies, RejectsReport& report);

// 6-decimal numeric cells; absent proxy2 leaves its columns empty.
void write_merged_csv(const Dataset& data, std::ostream& out);

// Reads back what write_merged_csv wrote (distances are taken from the
// file, not recomputed).
Dataset parse_merged_csv(std::istream& in, RejectsReport& report);

// Accepts epoch seconds or "YYYY-MM-DDTHH:MM:SSZ"; returns epoch seconds.
std::optional<double> parse_timestamp(const std::string& cell);

}  // namespace netlat::ingest

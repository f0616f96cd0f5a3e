#include "netlat/ingest.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "netlat/csv.hpp"
#include "netlat/features.hpp"

namespace netlat::ingest {

namespace {

const char* kTracerouteHeaderPrefix =
    "src_ip,src_lat,src_lon,dst_ip,dst_lat,dst_lon";
const char* kRttHeader =
    "client_ts,src_ip,src_lat,src_lon,dst_ip,dst_lat,dst_lon,proxy1,proxy2,"
    "gpn_rtt,non_gpn_rtt";
const char* kProxyHeader = "name,ip,lat,lon";
const char* kMergedHeader =
    "client_ts,src_ip,src_lat,src_lon,dst_ip,dst_lat,dst_lon,proxy1,proxy2,"
    "gpn_rtt,non_gpn_rtt,p1_lat,p1_lon,p2_lat,p2_lon,dist_src_dst,"
    "dist_src_p1,dist_p1_p2,dist_p2_dst";

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

std::vector<std::string> load_data_lines(std::istream& in,
                                         const char* expected_header,
                                         bool prefix_match) {
    std::vector<std::string> lines;
    if (!csv::read_lines(in, lines))
        throw std::runtime_error("I/O error while reading CSV stream");
    if (lines.empty())
        throw std::runtime_error("empty CSV stream, header row required");
    const std::string& header = lines.front();
    bool ok = prefix_match ? header.rfind(expected_header, 0) == 0
                           : header == expected_header;
    if (!ok)
        throw std::runtime_error("unexpected CSV header '" + header +
                                 "', expected '" + expected_header + "'");
    lines.erase(lines.begin());
    // Trailing blank line from a final newline is not a data row.
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    return lines;
}

bool valid_geo_cells(double lat, double lon) {
    return GeoPoint{lat, lon}.valid();
}

}  // namespace

bool RawRttRow::complete() const {
    return client_ts && src_lat && src_lon && dst_lat && dst_lon && gpn_rtt &&
           non_gpn_rtt && !source_ip.empty() && !dest_ip.empty() &&
           !proxy1_name.empty();
}

std::optional<double> parse_timestamp(const std::string& cell) {
    std::string t = trim(cell);
    if (t.empty()) return std::nullopt;
    int y, mo, d, h, mi, s;
    if (std::sscanf(t.c_str(), "%d-%d-%dT%d:%d:%dZ", &y, &mo, &d, &h, &mi,
                    &s) == 6) {
        if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 ||
            s > 60)
            throw std::invalid_argument("invalid timestamp '" + t + "'");
        // Days since 1970-01-01 (civil-to-days, Gregorian).
        long long yy = y - (mo <= 2 ? 1 : 0);
        long long era = (yy >= 0 ? yy : yy - 399) / 400;
        long long yoe = yy - era * 400;
        long long doy = (153 * (mo + (mo > 2 ? -3 : 9)) + 2) / 5 + d - 1;
        long long doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
        long long days = era * 146097 + doe - 719468;
        return static_cast<double>(days * 86400LL + h * 3600 + mi * 60 + s);
    }
    return csv::parse_double_cell(t);
}

std::vector<TracerouteRecord> parse_traceroute_csv(std::istream& in,
                                                   RejectsReport& report) {
    auto lines = load_data_lines(in, kTracerouteHeaderPrefix, true);
    std::vector<TracerouteRecord> out;
    out.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 2;
        ++report.rows_in;
        auto cells = csv::split_row(lines[i]);
        if (cells.size() < 6 || cells.size() > 6 + kMaxHops) {
            report.rejects.push_back({line_no, "wrong column count"});
            continue;
        }
        try {
            TracerouteRecord rec;
            rec.source_ip = trim(cells[0]);
            auto slat = csv::parse_double_cell(cells[1]);
            auto slon = csv::parse_double_cell(cells[2]);
            rec.dest_ip = trim(cells[3]);
            auto dlat = csv::parse_double_cell(cells[4]);
            auto dlon = csv::parse_double_cell(cells[5]);
            if (!slat || !slon || !dlat || !dlon)
                throw std::invalid_argument("missing endpoint coordinate");
            if (!valid_geo_cells(*slat, *slon) || !valid_geo_cells(*dlat, *dlon))
                throw std::invalid_argument("coordinate out of range");
            rec.source = {*slat, *slon};
            rec.dest = {*dlat, *dlon};
            for (std::size_t c = 6; c < cells.size(); ++c) {
                auto hop = csv::parse_double_cell(cells[c]);
                if (!hop) break;  // first empty hop cell ends the list
                if (!std::isfinite(*hop) || *hop < 0.0)
                    throw std::invalid_argument("negative hop delay");
                rec.hops.push_back(*hop);
            }
            if (rec.hops.empty())
                throw std::invalid_argument("route with zero hops");
            out.push_back(std::move(rec));
            ++report.rows_out;
        } catch (const std::invalid_argument& e) {
            report.rejects.push_back({line_no, e.what()});
        }
    }
    return out;
}

std::vector<RawRttRow> na_omit(const std::vector<RawRttRow>& rows,
                               std::size_t* removed) {
    std::vector<RawRttRow> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        if (r.complete()) out.push_back(r);
    if (removed) *removed = rows.size() - out.size();
    return out;
}

std::vector<RttRecord> parse_rtt_csv(std::istream& in,
                                     RejectsReport& report) {
    auto lines = load_data_lines(in, kRttHeader, false);
    std::vector<RawRttRow> raw;
    raw.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 2;
        ++report.rows_in;
        auto cells = csv::split_row(lines[i]);
        if (cells.size() != 11) {
            report.rejects.push_back({line_no, "wrong column count"});
            continue;
        }
        try {
            RawRttRow r;
            r.line = line_no;
            r.client_ts = parse_timestamp(cells[0]);
            r.source_ip = trim(cells[1]);
            r.src_lat = csv::parse_double_cell(cells[2]);
            r.src_lon = csv::parse_double_cell(cells[3]);
            r.dest_ip = trim(cells[4]);
            r.dst_lat = csv::parse_double_cell(cells[5]);
            r.dst_lon = csv::parse_double_cell(cells[6]);
            r.proxy1_name = trim(cells[7]);
            std::string p2 = trim(cells[8]);
            if (!p2.empty()) r.proxy2_name = p2;
            r.gpn_rtt = csv::parse_double_cell(cells[9]);
            r.non_gpn_rtt = csv::parse_double_cell(cells[10]);
            raw.push_back(std::move(r));
        } catch (const std::invalid_argument& e) {
            report.rejects.push_back({line_no, e.what()});
        }
    }

    for (const auto& r : raw)
        if (!r.complete())
            report.rejects.push_back({r.line, "missing required field"});
    raw = na_omit(raw);

    std::vector<RttRecord> out;
    out.reserve(raw.size());
    for (const auto& r : raw) {
        RttRecord rec;
        rec.client_timestamp = *r.client_ts;
        rec.source_ip = r.source_ip;
        rec.source = {*r.src_lat, *r.src_lon};
        rec.dest_ip = r.dest_ip;
        rec.dest = {*r.dst_lat, *r.dst_lon};
        rec.proxy1_name = r.proxy1_name;
        rec.proxy2_name = r.proxy2_name;
        rec.gpn_rtt = *r.gpn_rtt;
        rec.non_gpn_rtt = *r.non_gpn_rtt;
        if (!rec.valid()) {
            report.rejects.push_back({r.line, "field out of range"});
            continue;
        }
        out.push_back(std::move(rec));
        ++report.rows_out;
    }
    return out;
}

ProxyTable parse_proxy_csv(std::istream& in, RejectsReport& report) {
    auto lines = load_data_lines(in, kProxyHeader, false);
    ProxyTable table;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 2;
        ++report.rows_in;
        auto cells = csv::split_row(lines[i]);
        if (cells.size() != 4) {
            report.rejects.push_back({line_no, "wrong column count"});
            continue;
        }
        try {
            ProxyRecord p;
            p.name = trim(cells[0]);
            p.ip = trim(cells[1]);
            auto lat = csv::parse_double_cell(cells[2]);
            auto lon = csv::parse_double_cell(cells[3]);
            if (p.name.empty() || !lat || !lon)
                throw std::invalid_argument("missing name or coordinate");
            if (!valid_geo_cells(*lat, *lon))
                throw std::invalid_argument("coordinate out of range");
            p.location = {*lat, *lon};
            if (table.count(p.name)) ++report.warnings;  // last one wins
            table[p.name] = std::move(p);
            ++report.rows_out;
        } catch (const std::invalid_argument& e) {
            report.rejects.push_back({line_no, e.what()});
        }
    }
    return table;
}

Dataset merge(const std::vector<RttRecord>& rtt_records,
              const ProxyTable& proxies, RejectsReport& report) {
    Dataset data;
    data.provenance.rows_before_cleaning = rtt_records.size();
    data.records.reserve(rtt_records.size());
    for (std::size_t i = 0; i < rtt_records.size(); ++i) {
        const RttRecord& r = rtt_records[i];
        auto p1 = proxies.find(r.proxy1_name);
        if (p1 == proxies.end()) {
            report.rejects.push_back(
                {i, "unknown proxy '" + r.proxy1_name + "'"});
            continue;
        }
        MergedRecord m;
        m.rtt = r;
        m.proxy1 = p1->second.location;
        if (r.proxy2_name) {
            auto p2 = proxies.find(*r.proxy2_name);
            if (p2 == proxies.end()) {
                report.rejects.push_back(
                    {i, "unknown proxy '" + *r.proxy2_name + "'"});
                continue;
            }
            m.proxy2 = p2->second.location;
        }
        const GeoPoint p2loc = m.proxy2.value_or(m.proxy1);
        m.dist_src_dst = features::haversine_km(r.source, r.dest);
        m.dist_src_p1 = features::haversine_km(r.source, m.proxy1);
        m.dist_p1_p2 =
            m.proxy2 ? features::haversine_km(m.proxy1, *m.proxy2) : 0.0;
        m.dist_p2_dst = features::haversine_km(p2loc, r.dest);
        data.records.push_back(std::move(m));
    }
    data.provenance.rows_after_cleaning = data.records.size();
    report.rows_in += rtt_records.size();
    report.rows_out += data.records.size();
    return data;
}

void write_merged_csv(const Dataset& data, std::ostream& out) {
    out << kMergedHeader << "\n";
    for (const auto& m : data.records) {
        const RttRecord& r = m.rtt;
        std::vector<std::string> cells = {
            csv::format6(r.client_timestamp),
            r.source_ip,
            csv::format6(r.source.lat),
            csv::format6(r.source.lon),
            r.dest_ip,
            csv::format6(r.dest.lat),
            csv::format6(r.dest.lon),
            r.proxy1_name,
            r.proxy2_name.value_or(""),
            csv::format6(r.gpn_rtt),
            csv::format6(r.non_gpn_rtt),
            csv::format6(m.proxy1.lat),
            csv::format6(m.proxy1.lon),
            m.proxy2 ? csv::format6(m.proxy2->lat) : "",
            m.proxy2 ? csv::format6(m.proxy2->lon) : "",
            csv::format6(m.dist_src_dst),
            csv::format6(m.dist_src_p1),
            csv::format6(m.dist_p1_p2),
            csv::format6(m.dist_p2_dst)};
        out << csv::join_row(cells) << "\n";
    }
    if (!out) throw std::runtime_error("I/O error while writing merged CSV");
}

Dataset parse_merged_csv(std::istream& in, RejectsReport& report) {
    auto lines = load_data_lines(in, kMergedHeader, false);
    Dataset data;
    data.records.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 2;
        ++report.rows_in;
        auto cells = csv::split_row(lines[i]);
        if (cells.size() != 19) {
            report.rejects.push_back({line_no, "wrong column count"});
            continue;
        }
        try {
            auto req = [&](std::size_t c) {
                auto v = csv::parse_double_cell(cells[c]);
                if (!v) throw std::invalid_argument("missing required field");
                return *v;
            };
            MergedRecord m;
            m.rtt.client_timestamp = req(0);
            m.rtt.source_ip = trim(cells[1]);
            m.rtt.source = {req(2), req(3)};
            m.rtt.dest_ip = trim(cells[4]);
            m.rtt.dest = {req(5), req(6)};
            m.rtt.proxy1_name = trim(cells[7]);
            std::string p2 = trim(cells[8]);
            if (!p2.empty()) m.rtt.proxy2_name = p2;
            m.rtt.gpn_rtt = req(9);
            m.rtt.non_gpn_rtt = req(10);
            m.proxy1 = {req(11), req(12)};
            auto p2lat = csv::parse_double_cell(cells[13]);
            auto p2lon = csv::parse_double_cell(cells[14]);
            if (p2lat && p2lon) m.proxy2 = GeoPoint{*p2lat, *p2lon};
            m.dist_src_dst = req(15);
            m.dist_src_p1 = req(16);
            m.dist_p1_p2 = req(17);
            m.dist_p2_dst = req(18);
            if (!m.valid())
                throw std::invalid_argument("field out of range");
            data.records.push_back(std::move(m));
            ++report.rows_out;
        } catch (const std::invalid_argument& e) {
            report.rejects.push_back({line_no, e.what()});
        }
    }
    data.provenance.rows_before_cleaning = report.rows_in;
    data.provenance.rows_after_cleaning = data.records.size();
    return data;
}

}  // namespace netlat::ingest

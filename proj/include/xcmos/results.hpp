#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "xcmos/errors.hpp"

namespace xcmos {

/// One benchmark outcome for one device. Skipped device/benchmark
/// combinations become rows with empty metrics and a note.
struct ResultRow {
    std::string benchmark; // alu | alu_pipelined | wire | span | throughput | cnn
    std::string device;
    std::map<std::string, double> metrics;
    std::string note;
};

struct ResultSet {
    std::vector<ResultRow> rows;

    /// Stable output order: (benchmark, device, sweep position).
    void sort();
    /// Sorted union of metric names across rows.
    std::vector<std::string> metric_names() const;
};

/// SI unit for a metric name ("1" for dimensionless); unknown names
/// report "?".
std::string metric_unit(const std::string& name);

/// Wide CSV: header "benchmark,device,<metric> (<unit>)...,note", one
/// line per row, RFC 4180 quoting, 17 significant digits (lossless
/// double round-trip). Rows lacking a metric leave the cell empty.
void emit_csv(const ResultSet& rs, std::ostream& out);
void emit_csv(const ResultSet& rs, const std::string& path);

ResultSet parse_csv(std::istream& in);
ResultSet parse_csv_file(const std::string& path);

/// Log-log scatter of metric y against metric x, one labeled marker per
/// row carrying both metrics, with a preferred-corner star at the
/// low-x/low-y corner. Metrics present in no row at all raise
/// Errc::UnknownMetric listing what is available.
void emit_svg_scatter(const ResultSet& rs, const std::string& x_metric,
                      const std::string& y_metric, std::ostream& out);
void emit_svg_scatter(const ResultSet& rs, const std::string& x_metric,
                      const std::string& y_metric, const std::string& path);

} // namespace xcmos

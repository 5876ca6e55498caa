#pragma once

#include <map>
#include <string>
#include <vector>

#include "leja/checks.hpp"
#include "leja/dyadic_angle.hpp"
#include "leja/intertwine.hpp"
#include "leja/leja_disk.hpp"
#include "leja/rleja.hpp"

namespace leja {

/// One double with enough digits to round-trip exactly, '.' decimal point
/// regardless of locale.
std::string format_double(double v);

/// {"num": N, "log2den": Q}
std::string angle_to_json(const DyadicAngle& a);
DyadicAngle angle_from_json(const std::string& json);

/// Key/value metadata attached to every emitted document. Keys are written
/// in sorted order so equal configurations serialize byte-identically.
using Meta = std::map<std::string, std::string>;

/// {"meta": {...}, "angles": [...], "values": [[re, im], ...]}
std::string disk_sequence_to_json(const DiskLejaSequence& seq, std::size_t len,
                                  const Meta& meta);

/// {"meta": {...}, "angles": [...], "values": [x0, x1, ...]}
std::string rleja_to_json(const RLejaSequence& x, const Meta& meta);

/// {"meta": {...}, "values": [...]} with exact angles included when known.
std::string nodes_to_json(const std::vector<double>& values,
                          const std::vector<DyadicAngle>& angles, const Meta& meta);

/// Node values from a document produced by nodes_to_json / rleja_to_json.
std::vector<double> nodes_from_json(const std::string& json);

/// {"meta": {...}, "points": [{"alpha": [...], "point": [...]}, ...]}
std::string grid_to_json(const IntertwinedGrid& grid, const Meta& meta);

std::string report_to_json(const BoundCheckReport& report, const Meta& meta);

/// A rectangular numeric table with named columns; the on-disk form of
/// every experiment result.
struct ReportTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// CSV: header row, '.' decimal separator, '\n' line endings, 17
/// significant digits.
std::string table_to_csv(const ReportTable& table);

/// JSON: a single object {"meta": {...}, "rows": [...]}.
std::string table_to_json(const ReportTable& table, const Meta& meta);

/// Writes content to path, throwing std::runtime_error on I/O failure.
void write_file(const std::string& path, const std::string& content);

} // namespace leja

#include "leja/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace leja {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

json angle_json(const DyadicAngle& a) {
    return json{{"num", a.numerator()}, {"log2den", a.log2_den()}};
}

json meta_json(const Meta& meta) {
    json m = json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    return m;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string angle_to_json(const DyadicAngle& a) { return angle_json(a).dump(); }

DyadicAngle angle_from_json(const std::string& text) {
    const json j = json::parse(text);
    return DyadicAngle(j.at("num").get<std::uint64_t>(), j.at("log2den").get<unsigned>());
}

std::string disk_sequence_to_json(const DiskLejaSequence& seq, std::size_t len,
                                  const Meta& meta) {
    json j;
    j["meta"] = meta_json(meta);
    json angles = json::array();
    json values = json::array();
    for (std::size_t k = 0; k < len; ++k) {
        const DyadicAngle a = seq.angle(k);
        angles.push_back(angle_json(a));
        values.push_back(json::array({a.cos_value(), a.sin_value()}));
    }
    j["angles"] = std::move(angles);
    j["values"] = std::move(values);
    return dump(j);
}

std::string rleja_to_json(const RLejaSequence& x, const Meta& meta) {
    json j;
    j["meta"] = meta_json(meta);
    json angles = json::array();
    for (const DyadicAngle& a : x.angles()) angles.push_back(angle_json(a));
    j["angles"] = std::move(angles);
    j["values"] = x.values();
    return dump(j);
}

std::string nodes_to_json(const std::vector<double>& values,
                          const std::vector<DyadicAngle>& angles, const Meta& meta) {
    json j;
    j["meta"] = meta_json(meta);
    j["values"] = values;
    if (!angles.empty()) {
        json a = json::array();
        for (const DyadicAngle& x : angles) a.push_back(angle_json(x));
        j["angles"] = std::move(a);
    }
    return dump(j);
}

std::vector<double> nodes_from_json(const std::string& text) {
    const json j = json::parse(text);
    return j.at("values").get<std::vector<double>>();
}

std::string grid_to_json(const IntertwinedGrid& grid, const Meta& meta) {
    json j;
    j["meta"] = meta_json(meta);
    json points = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        json entry;
        entry["alpha"] = grid.indices()[i];
        const auto p = grid.point(i);
        entry["point"] = std::vector<double>(p.begin(), p.end());
        points.push_back(std::move(entry));
    }
    j["points"] = std::move(points);
    return dump(j);
}

std::string report_to_json(const BoundCheckReport& report, const Meta& meta) {
    json j;
    j["meta"] = meta_json(meta);
    j["claim"] = report.claim;
    j["mode"] = report.mode;
    j["pass"] = report.pass;
    j["worst_ratio"] = report.worst_ratio;
    j["seed"] = report.seed;
    j["sweep_size"] = report.sweep_size;
    json witness = json::object();
    for (const auto& [k, v] : report.witness) witness[k] = v;
    j["witness"] = std::move(witness);
    j["window_sups"] = report.window_sups;
    json stats = json::object();
    for (const auto& [k, v] : report.stats) stats[k] = v;
    j["stats"] = std::move(stats);
    return dump(j);
}

std::string table_to_csv(const ReportTable& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::invalid_argument("table_to_csv: ragged row");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string table_to_json(const ReportTable& table, const Meta& meta) {
    json j;
    j["meta"] = meta_json(meta);
    j["columns"] = table.columns;
    json rows = json::array();
    for (const auto& row : table.rows) rows.push_back(row);
    j["rows"] = std::move(rows);
    return dump(j);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for " + path);
}

} // namespace leja

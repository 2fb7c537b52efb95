#include "dgold/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dgold {

nlohmann::ordered_json RunConfig::echo() const {
  nlohmann::ordered_json j;
  j["base"] = base;
  j["digits"] = digits;
  j["k"] = k;
  j["delta0"] = round12(delta0);
  if (command == "arcs") {
    j["y"] = round12(y);
    j["grid_n"] = grid_n;
  }
  if (command == "moments") {
    j["s_min"] = s_min;
    j["s_max"] = s_max;
  }
  if (command == "ucolumn") j["s"] = s;
  if (command == "sievebound") {
    j["m_min"] = m_min;
    j["m_max"] = m_max;
  }
  if (command == "scan") {
    j["cutoff"] = cutoff;
    j["ref_delta"] = round12(ref_delta);
  }
  j["threads"] = threads;
  return j;
}

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double round12(double v) { return std::strtod(format12(v).c_str(), nullptr); }

namespace {

std::string csv_cell(const nlohmann::ordered_json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format12(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

void write_csv(const Report& report, std::ostream& out) {
  out << "# " << kToolVersion << "\n";
  out << "# command: " << report.command << "\n";
  out << "# config: " << report.config.dump() << "\n";
  for (std::size_t i = 0; i < report.columns.size(); ++i)
    out << (i ? "," : "") << report.columns[i];
  out << "\n";
  for (const auto& row : report.rows) {
    if (row.is_object()) {
      for (std::size_t i = 0; i < report.columns.size(); ++i)
        out << (i ? "," : "") << csv_cell(row.at(report.columns[i]));
    } else {
      out << csv_cell(row);
    }
    out << "\n";
  }
  out << "# summary: " << report.summary.dump() << "\n";
}

void write_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["tool"] = kToolVersion;
  doc["command"] = report.command;
  doc["config"] = report.config;
  doc["rows"] = report.rows;
  doc["summary"] = report.summary;
  out << doc.dump(2) << "\n";
}

void write_report(const Report& report, const RunConfig& config) {
  std::ostringstream buf;
  if (config.format == "json")
    write_json(report, buf);
  else
    write_csv(report, buf);
  if (config.output.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(config.output, std::ios::trunc);
    if (!f) throw validation_error("cannot open output file: " + config.output);
    f << buf.str();
  }
}

ParsedCsv parse_csv(std::istream& in) {
  ParsedCsv parsed;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::size_t start = line.size() > 1 && line[1] == ' ' ? 2 : 1;
      parsed.metadata.push_back(line.substr(start));
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!header_seen) {
      parsed.columns = cells;
      header_seen = true;
    } else {
      parsed.rows.push_back(cells);
    }
  }
  return parsed;
}

}  // namespace dgold

#include "agrolattice/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include "json.hpp"
#include <set>
#include <sstream>

#include "agrolattice/errors.hpp"

namespace agro {

namespace {

using json = nlohmann::json;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

// Comma-separated, optional double quotes with "" escapes, LF or CRLF.
std::vector<CsvRow> read_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) continue;

    CsvRow row{line, {}};
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const char c = raw[i];
      if (quoted) {
        if (c == '"' && i + 1 < raw.size() && raw[i + 1] == '"') {
          field += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          field += c;
        }
      } else if (c == '"') {
        quoted = true;
        was_quoted = true;
      } else if (c == ',') {
        row.fields.push_back(was_quoted ? field : trim(field));
        field.clear();
        was_quoted = false;
      } else {
        field += c;
      }
    }
    if (quoted) throw ParseError(line, "unterminated quoted field");
    row.fields.push_back(was_quoted ? field : trim(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Collects axis names in first-appearance order unless fixed axes are given.
class LabelCollector {
 public:
  explicit LabelCollector(const std::optional<AxisLabels>& axes) : axes_(axes) {}

  std::size_t resolve(Axis axis, const std::string& name, std::size_t line) {
    if (name.empty()) throw ParseError(line, "empty " + std::string(axis_name(axis)) + " name");
    if (axes_) return axes_->index_of(axis, name);
    auto& names = names_[static_cast<int>(axis)];
    auto& index = index_[static_cast<int>(axis)];
    auto [it, inserted] = index.emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  }

  AxisLabels labels() const {
    if (axes_) return *axes_;
    return AxisLabels(names_[0], names_[1], names_[2]);
  }

 private:
  const std::optional<AxisLabels>& axes_;
  std::vector<std::string> names_[3];
  std::map<std::string, std::size_t> index_[3];
};

DataCube parse_long_csv(std::string_view text, const std::optional<AxisLabels>& axes) {
  const auto rows = read_csv(text);
  if (rows.empty()) throw ParseError(1, "missing header");
  const auto& header = rows.front();
  if (header.fields != std::vector<std::string>{"location", "dimension", "timestamp"})
    throw ParseError(header.line, "expected header 'location,dimension,timestamp'");
  LabelCollector labels(axes);
  std::vector<Cell> cells;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != 3) throw ParseError(row.line, "expected 3 fields, got " + std::to_string(row.fields.size()));
    cells.push_back({labels.resolve(Axis::location, row.fields[0], row.line),
                     labels.resolve(Axis::dimension, row.fields[1], row.line),
                     labels.resolve(Axis::timestamp, row.fields[2], row.line)});
  }
  return DataCube(labels.labels(), cells);
}

DataCube parse_wide_csv(std::string_view text, const std::optional<AxisLabels>& axes) {
  const auto rows = read_csv(text);
  if (rows.empty()) throw ParseError(1, "missing header");
  const auto& header = rows.front();
  if (header.fields.size() < 3 || header.fields[0] != "location" || header.fields[1] != "timestamp")
    throw ParseError(header.line, "expected header 'location,timestamp,<dimensions...>'");
  std::set<std::string> seen;
  for (const auto& f : header.fields)
    if (!seen.insert(f).second) throw DuplicateHeader(f);

  LabelCollector labels(axes);
  std::vector<std::size_t> dim_index;
  for (std::size_t c = 2; c < header.fields.size(); ++c)
    dim_index.push_back(labels.resolve(Axis::dimension, header.fields[c], header.line));

  std::vector<Cell> cells;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != header.fields.size())
      throw ParseError(row.line, "expected " + std::to_string(header.fields.size()) + " fields, got " +
                                     std::to_string(row.fields.size()));
    const std::size_t loc = labels.resolve(Axis::location, row.fields[0], row.line);
    const std::size_t time = labels.resolve(Axis::timestamp, row.fields[1], row.line);
    for (std::size_t c = 2; c < row.fields.size(); ++c) {
      const std::string& v = row.fields[c];
      if (v == "1" || v == "c" || v == "C")
        cells.push_back({loc, dim_index[c - 2], time});
      else if (!v.empty() && v != "0")
        throw ParseError(row.line, "invalid cell value '" + v + "'");
    }
  }
  return DataCube(labels.labels(), cells);
}

std::vector<std::string> string_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) throw ParseError(1, std::string("missing array '") + key + "'");
  std::vector<std::string> out;
  for (const auto& v : doc[key]) {
    if (!v.is_string()) throw ParseError(1, std::string("non-string entry in '") + key + "'");
    out.push_back(v.get<std::string>());
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Map the byte offset back to a line number.
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw ParseError(line, e.what());
  }
}

DataCube parse_cube_json(std::string_view text, const std::optional<AxisLabels>& axes) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError(1, "expected a JSON object");
  AxisLabels labels = axes ? *axes
                           : AxisLabels(string_array(doc, "locations"), string_array(doc, "dimensions"),
                                        string_array(doc, "timestamps"));
  if (!doc.contains("incidence") || !doc["incidence"].is_array()) throw ParseError(1, "missing array 'incidence'");
  std::vector<NamedFact> facts;
  for (const auto& entry : doc["incidence"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() || !entry[1].is_string() ||
        !entry[2].is_string())
      throw ParseError(1, "incidence entries must be [location, dimension, timestamp] string triples");
    facts.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>(), entry[2].get<std::string>());
  }
  return build_cube(std::move(labels), facts);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos && trim(s) == s) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string_view format_name(InputFormat f) {
  switch (f) {
    case InputFormat::long_csv:
      return "long-csv";
    case InputFormat::wide_csv:
      return "wide-csv";
    case InputFormat::cube_json:
      return "cube-json";
  }
  return "?";
}

InputFormat parse_format(std::string_view text) {
  if (text == "long-csv") return InputFormat::long_csv;
  if (text == "wide-csv") return InputFormat::wide_csv;
  if (text == "cube-json") return InputFormat::cube_json;
  throw Error("unknown input format '" + std::string(text) + "'");
}

DataCube parse_cube(std::string_view text, InputFormat format, const std::optional<AxisLabels>& axes) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  switch (format) {
    case InputFormat::long_csv:
      return parse_long_csv(text, axes);
    case InputFormat::wide_csv:
      return parse_wide_csv(text, axes);
    case InputFormat::cube_json:
      return parse_cube_json(text, axes);
  }
  throw Error("unsupported format");
}

AxisLabels parse_axes(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw ParseError(1, "expected a JSON object");
  return AxisLabels(string_array(doc, "locations"), string_array(doc, "dimensions"), string_array(doc, "timestamps"));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("failed writing '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

DataCube ingest(const std::string& path, InputFormat format, const std::optional<std::string>& axes_path) {
  std::optional<AxisLabels> axes;
  if (axes_path) axes = parse_axes(read_file(*axes_path));
  return parse_cube(read_file(path), format, axes);
}

std::string export_cube(const DataCube& cube, InputFormat format) {
  const AxisLabels& lb = cube.labels();
  std::string out;
  switch (format) {
    case InputFormat::long_csv: {
      out = "location,dimension,timestamp\n";
      for (const Cell& c : cube.facts())
        out += csv_field(lb.locations()[c.loc]) + "," + csv_field(lb.dimensions()[c.dim]) + "," +
               csv_field(lb.timestamps()[c.time]) + "\n";
      return out;
    }
    case InputFormat::wide_csv: {
      // Every (location, timestamp) row is written so that all labels survive.
      out = "location,timestamp";
      for (const auto& d : lb.dimensions()) out += "," + csv_field(d);
      out += "\n";
      for (std::size_t t = 0; t < cube.num_timestamps(); ++t)
        for (std::size_t l = 0; l < cube.num_locations(); ++l) {
          out += csv_field(lb.locations()[l]) + "," + csv_field(lb.timestamps()[t]);
          for (std::size_t d = 0; d < cube.num_dimensions(); ++d) out += cube.contains(l, d, t) ? ",c" : ",";
          out += "\n";
        }
      return out;
    }
    case InputFormat::cube_json: {
      nlohmann::ordered_json doc;
      doc["locations"] = lb.locations();
      doc["dimensions"] = lb.dimensions();
      doc["timestamps"] = lb.timestamps();
      doc["incidence"] = nlohmann::ordered_json::array();
      for (const Cell& c : cube.facts())
        doc["incidence"].push_back({lb.locations()[c.loc], lb.dimensions()[c.dim], lb.timestamps()[c.time]});
      return doc.dump(2) + "\n";
    }
  }
  return out;
}

}  // namespace agro

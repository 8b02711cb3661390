#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "agrolattice/cube.hpp"

namespace agro {

enum class InputFormat { long_csv, wide_csv, cube_json };

std::string_view format_name(InputFormat f);
InputFormat parse_format(std::string_view text);

/// Parses cube text. When `axes` is given, names are resolved against it
/// (and it fixes the axis order); otherwise each axis is ordered by first
/// appearance. Throws ParseError, UnknownLabel, DuplicateHeader, EmptyAxis.
///
///  long-csv:  header `location,dimension,timestamp`, one fact per row.
///  wide-csv:  header `location,timestamp,<dim1>,...`, cells `1`/`c` present,
///             empty/`0` absent.
///  cube-json: {"locations":[..],"dimensions":[..],"timestamps":[..],
///              "incidence":[[loc,dim,time],..]}.
DataCube parse_cube(std::string_view text, InputFormat format, const std::optional<AxisLabels>& axes = std::nullopt);

/// Reads {"locations","dimensions","timestamps"} from JSON text.
AxisLabels parse_axes(std::string_view json_text);

DataCube ingest(const std::string& path, InputFormat format, const std::optional<std::string>& axes_path = std::nullopt);

std::string export_cube(const DataCube& cube, InputFormat format);

std::string read_file(const std::string& path);
/// Writes via a temporary sibling file and rename.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace agro

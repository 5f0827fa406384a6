#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rstrace/bounds.hpp"
#include "rstrace/listdec.hpp"

namespace rstrace {

// Elements travel as their canonical decimal index; erased trace
// positions as "?".
std::string trace_word_to_string(const TraceWord& w);
TraceWord parse_trace_word(const std::string& s);

enum class TableFormat { Md, Csv, Json };
std::optional<TableFormat> parse_format(const std::string& s);

// A table as header + string cells; absent values are already rendered as
// "-".  The JSON rendering is produced separately from typed rows.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_table(const TextTable& tab, TableFormat fmt);

std::string opt_cell(const std::optional<long long>& v);

// One row of the bounds table, with the list-decoder search column.
struct BoundsRow {
  BoundsReport report;
  std::optional<GsParams> gs;
};

std::string render_bounds_rows(const std::vector<BoundsRow>& rows,
                               TableFormat fmt);
std::string bounds_report_json(const BoundsReport& r);

}  // namespace rstrace

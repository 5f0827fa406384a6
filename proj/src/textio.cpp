#include "rstrace/textio.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rstrace {

std::string trace_word_to_string(const TraceWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.sym.size(); ++i) {
    if (i) out += ',';
    if (w.sym[i] == kNoSub)
      out += '?';
    else
      out += std::to_string(w.sym[i]);
  }
  return out;
}

TraceWord parse_trace_word(const std::string& s) {
  TraceWord w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "?") {
      w.sym.push_back(kNoSub);
      continue;
    }
    std::size_t pos = 0;
    unsigned long v = std::stoul(tok, &pos);
    if (pos != tok.size() || v >= kNoSub)
      throw std::invalid_argument("bad trace word token: " + tok);
    w.sym.push_back(BElem(v));
  }
  return w;
}

std::optional<TableFormat> parse_format(const std::string& s) {
  if (s == "md") return TableFormat::Md;
  if (s == "csv") return TableFormat::Csv;
  if (s == "json") return TableFormat::Json;
  return std::nullopt;
}

std::string opt_cell(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : "-";
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string render_table(const TextTable& tab, TableFormat fmt) {
  std::string out;
  if (fmt == TableFormat::Csv) {
    for (std::size_t i = 0; i < tab.header.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(tab.header[i]);
    }
    out += '\n';
    for (const auto& row : tab.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += csv_cell(row[i]);
      }
      out += '\n';
    }
    return out;
  }
  if (fmt == TableFormat::Md) {
    out += '|';
    for (const auto& h : tab.header) out += ' ' + h + " |";
    out += "\n|";
    for (std::size_t i = 0; i < tab.header.size(); ++i) out += "---|";
    out += '\n';
    for (const auto& row : tab.rows) {
      out += '|';
      for (const auto& c : row) out += ' ' + c + " |";
      out += '\n';
    }
    return out;
  }
  throw std::invalid_argument("json rendering needs typed rows");
}

namespace {

nlohmann::json report_to_json(const BoundsReport& r) {
  nlohmann::json j;
  auto put = [&](const char* key, const std::optional<long long>& v) {
    if (v)
      j[key] = *v;
    else
      j[key] = nullptr;
  };
  j["p"] = r.p;
  j["m"] = r.m;
  j["t"] = r.t;
  j["k"] = r.k;
  j["n"] = r.n;
  j["delta"] = r.delta;
  put("d1", r.d1);
  put("d2", r.d2);
  put("d3", r.d3);
  put("d_exact", r.d_exact);
  put("e1", r.e1);
  put("e2", r.e2);
  put("e3", r.e3);
  put("e_exact", r.e_exact);
  put("d_star", r.d_star);
  return j;
}

}  // namespace

std::string bounds_report_json(const BoundsReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

std::string render_bounds_rows(const std::vector<BoundsRow>& rows,
                               TableFormat fmt) {
  if (fmt == TableFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json j = report_to_json(row.report);
      if (row.gs) {
        j["gs_e"] = row.gs->e_capped;
        j["gs_mu"] = row.gs->mu;
      } else {
        j["gs_e"] = nullptr;
        j["gs_mu"] = nullptr;
      }
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  TextTable tab;
  tab.header = {"k",       "exact", "degree", "lifted",
                "charsum", "gs_e",  "gs_mu"};
  for (const auto& row : rows) {
    const BoundsReport& r = row.report;
    tab.rows.push_back({std::to_string(r.k), opt_cell(r.e_exact),
                        opt_cell(r.e1), opt_cell(r.e2), opt_cell(r.e3),
                        row.gs ? std::to_string(row.gs->e_capped) : "-",
                        row.gs ? std::to_string(row.gs->mu) : "-"});
  }
  return render_table(tab, fmt);
}

}  // namespace rstrace

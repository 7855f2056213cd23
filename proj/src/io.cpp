#include "wbayes/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "wbayes/errors.hpp"

namespace wbayes::io {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::pair<double, double> parse_domain(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DataError("domain must be written a:b, got '" + text + "'");
  return {parse_number(trim(text.substr(0, colon))), parse_number(trim(text.substr(colon + 1)))};
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "' for reading");
  return in;
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_number(const std::string& text) {
  if (text.empty()) throw DataError("empty numeric field");
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) throw DataError("not a number: '" + text + "'");
  if (errno == ERANGE && std::isinf(x)) throw DataError("number out of range: '" + text + "'");
  return x;
}

void write_curve_table(std::ostream& out, const CurveTable& table) {
  out << "# domain=" << format_number(table.a) << ':' << format_number(table.b) << '\n';
  out << "# reference=" << table.reference << '\n';
  out << "# kind=" << table.kind << '\n';
  out << 't';
  for (const auto& id : table.ids) out << ',' << id;
  out << '\n';
  for (std::size_t r = 0; r < table.t.size(); ++r) {
    out << format_number(table.t[r]);
    for (const auto& col : table.columns) out << ',' << format_number(col[r]);
    out << '\n';
  }
}

CurveTable read_curve_table(std::istream& in) {
  CurveTable table;
  bool have_domain = false;
  bool have_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = trim(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      const std::string meta = trim(s.substr(1));
      const auto eq = meta.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = trim(meta.substr(0, eq));
      const std::string value = trim(meta.substr(eq + 1));
      if (key == "domain") {
        std::tie(table.a, table.b) = parse_domain(value);
        have_domain = true;
      } else if (key == "reference") {
        parse_reference_spec(value);  // validates
        table.reference = value;
      } else if (key == "kind") {
        table.kind = value;
      }
      continue;
    }
    auto fields = split_fields(s);
    if (!have_header) {
      if (fields.empty() || fields.front() != "t") throw DataError("curve table header must start with 't'");
      table.ids.assign(fields.begin() + 1, fields.end());
      if (table.ids.empty()) throw DataError("curve table has no data columns");
      table.columns.assign(table.ids.size(), {});
      have_header = true;
      continue;
    }
    if (fields.size() != table.ids.size() + 1) {
      throw DataError("curve table line " + std::to_string(line_no) + ": expected " +
                      std::to_string(table.ids.size() + 1) + " fields");
    }
    table.t.push_back(parse_number(fields[0]));
    for (std::size_t c = 0; c < table.ids.size(); ++c) table.columns[c].push_back(parse_number(fields[c + 1]));
  }
  if (!have_header) throw DataError("curve table has no header row");
  if (!have_domain) {
    if (table.t.empty()) throw DataError("curve table has no rows");
    table.a = table.t.front();
    table.b = table.t.back();
  }
  return table;
}

void write_curve_table_file(const std::string& path, const CurveTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open '" + path + "' for writing");
  write_curve_table(out, table);
  if (!out) throw DataError("write failed for '" + path + "'");
}

CurveTable read_curve_table_file(const std::string& path) {
  auto in = open_in(path);
  return read_curve_table(in);
}

CurveTable densities_to_table(const std::vector<Density>& densities, const std::vector<std::string>& ids,
                              const std::string& kind) {
  if (densities.empty()) throw std::invalid_argument("no densities to write");
  if (densities.size() != ids.size()) throw std::invalid_argument("one id per density required");
  const Grid& grid = densities.front().grid();
  CurveTable table;
  table.a = grid.lower();
  table.b = grid.upper();
  table.reference = densities.front().reference().label();
  table.kind = kind;
  table.t.assign(grid.nodes().begin(), grid.nodes().end());
  table.ids = ids;
  for (const auto& f : densities) {
    require_same_grid(grid, f.grid());
    table.columns.emplace_back(f.values().begin(), f.values().end());
  }
  return table;
}

Grid table_grid(const CurveTable& table) {
  Grid grid = [&] {
    try {
      return make_grid(table.a, table.b, table.t.size());
    } catch (const std::invalid_argument& e) {
      throw DataError(std::string("curve table grid: ") + e.what());
    }
  }();
  const auto nodes = grid.nodes();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (std::abs(nodes[k] - table.t[k]) > 1e-9 * std::max(1.0, std::abs(nodes[k]))) {
      throw DataError("curve table nodes are not the uniform grid of its domain (row " + std::to_string(k + 1) + ")");
    }
  }
  return grid;
}

std::vector<Density> table_to_lambda_densities(const CurveTable& table) {
  const Grid grid = table_grid(table);
  const auto lambda = reference_lebesgue(grid);
  std::vector<Density> out;
  out.reserve(table.columns.size());
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    for (double v : table.columns[c]) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw DataError("density '" + table.ids[c] + "' has a non-positive or non-finite value");
      }
    }
    out.push_back(Density::from_values(lambda, table.columns[c]));
  }
  return out;
}

std::vector<Histogram> read_histograms_csv(std::istream& in) {
  std::vector<Histogram> out;
  std::map<std::string, std::size_t> index;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    const auto fields = split_fields(s);
    if (!header_seen) {
      if (fields.size() != 4 || fields[0] != "id" || fields[1] != "lower" || fields[2] != "upper" ||
          fields[3] != "count") {
        throw DataError("histogram CSV header must be id,lower,upper,count");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 4) throw DataError("histogram CSV line " + std::to_string(line_no) + ": expected 4 fields");
    const double lo = parse_number(fields[1]);
    const double hi = parse_number(fields[2]);
    const double count = parse_number(fields[3]);
    auto it = index.find(fields[0]);
    if (it == index.end()) {
      it = index.emplace(fields[0], out.size()).first;
      out.push_back({fields[0], {lo}, {}});
    } else if (it->second + 1 != out.size()) {
      throw DataError("histogram '" + fields[0] + "': classes must be listed contiguously");
    }
    Histogram& h = out[it->second];
    if (lo != h.edges.back()) {
      throw DataError("histogram '" + fields[0] + "': class [" + fields[1] + ", " + fields[2] +
                      "] does not continue the previous one");
    }
    h.edges.push_back(hi);
    h.counts.push_back(count);
  }
  if (!header_seen) throw DataError("histogram CSV is empty");
  for (const auto& h : out) h.validate();
  return out;
}

std::vector<Histogram> read_histograms_csv_file(const std::string& path) {
  auto in = open_in(path);
  return read_histograms_csv(in);
}

void write_histograms_csv(std::ostream& out, const std::vector<Histogram>& histograms) {
  out << "id,lower,upper,count\n";
  for (const auto& h : histograms) {
    for (std::size_t j = 0; j < h.classes(); ++j) {
      out << h.label << ',' << format_number(h.edges[j]) << ',' << format_number(h.edges[j + 1]) << ','
          << format_number(h.counts[j]) << '\n';
    }
  }
}

std::vector<std::pair<std::string, std::string>> read_groups_csv(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    const auto fields = split_fields(s);
    if (!header_seen) {
      if (fields.size() != 2 || fields[0] != "id" || fields[1] != "group") {
        throw DataError("groups CSV header must be id,group");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw DataError("groups CSV line " + std::to_string(line_no) + ": expected id,group");
    }
    out.emplace_back(fields[0], fields[1]);
  }
  if (!header_seen) throw DataError("groups CSV is empty");
  return out;
}

std::vector<std::pair<std::string, std::string>> read_groups_csv_file(const std::string& path) {
  auto in = open_in(path);
  return read_groups_csv(in);
}

}  // namespace wbayes::io

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wbayes/grid.hpp"
#include "wbayes/measure.hpp"
#include "wbayes/preprocess.hpp"

namespace wbayes::io {

/// Wide curve table: first column t, then one column per id.
///
///   # domain=a:b
///   # reference=<spec>
///   # kind=<density|clr_u|...>
///   t,<id_1>,...,<id_N>
struct CurveTable {
  double a = 0.0;
  double b = 1.0;
  std::string reference = "lebesgue";
  std::string kind = "density";
  std::vector<double> t;
  std::vector<std::string> ids;
  std::vector<std::vector<double>> columns;
};

/// 17 significant digits; "%.17g" round-trips every double exactly.
std::string format_number(double x);
/// Full-string strtod parse; throws DataError on trailing characters or overflow.
double parse_number(const std::string& text);

void write_curve_table(std::ostream& out, const CurveTable& table);
CurveTable read_curve_table(std::istream& in);
void write_curve_table_file(const std::string& path, const CurveTable& table);
CurveTable read_curve_table_file(const std::string& path);

/// Grid values of each density (values w.r.t. its own reference).
CurveTable densities_to_table(const std::vector<Density>& densities, const std::vector<std::string>& ids,
                              const std::string& kind = "density");
/// Rebuilds the grid from domain + row count and checks the node column.
/// The table's values are taken as lambda-densities.
std::vector<Density> table_to_lambda_densities(const CurveTable& table);
Grid table_grid(const CurveTable& table);

/// Long form `id,lower,upper,count` with a header row. Classes of one id
/// must be contiguous; ids keep their order of first appearance.
std::vector<Histogram> read_histograms_csv(std::istream& in);
std::vector<Histogram> read_histograms_csv_file(const std::string& path);
void write_histograms_csv(std::ostream& out, const std::vector<Histogram>& histograms);

/// `id,group` with a header row.
std::vector<std::pair<std::string, std::string>> read_groups_csv(std::istream& in);
std::vector<std::pair<std::string, std::string>> read_groups_csv_file(const std::string& path);

}  // namespace wbayes::io

#include "wbayes/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wbayes/anova_select.hpp"
#include "wbayes/bayes_ops.hpp"
#include "wbayes/clr.hpp"
#include "wbayes/errors.hpp"
#include "wbayes/io.hpp"
#include "wbayes/preprocess.hpp"
#include "wbayes/sfpca.hpp"
#include "wbayes/simgen.hpp"

namespace wbayes {

namespace {

namespace fs = std::filesystem;

struct Domain {
  double a = 1.0;
  double b = 10.0;
};

Domain parse_domain_flag(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("--domain must be written a:b");
  try {
    return {io::parse_number(text.substr(0, colon)), io::parse_number(text.substr(colon + 1))};
  } catch (const DataError&) {
    throw std::invalid_argument("--domain must be written a:b with numeric bounds");
  }
}

std::vector<double> parse_number_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(io::parse_number(item));
    } catch (const DataError&) {
      throw std::invalid_argument(std::string(flag) + ": '" + item + "' is not a number");
    }
  }
  return out;
}

struct SimulateOptions {
  std::string family = "lognormal-paper";
  std::string domain = "1:10";
  std::size_t n = 2048;
  std::string out;
};

int cmd_simulate(const SimulateOptions& o) {
  if (o.family != "lognormal-paper") throw std::invalid_argument("unknown --family '" + o.family + "'");
  const Domain d = parse_domain_flag(o.domain);
  const Grid grid = make_grid(d.a, d.b, o.n);
  const auto sample = design_lognormal_sample(grid);
  io::write_curve_table_file(o.out, io::densities_to_table(sample.densities, sample.ids));
  return kExitOk;
}

struct SmoothOptions {
  std::string input;
  std::string domain;
  std::string knots;
  double penalty = 1e-6;
  std::size_t n = 2048;
  bool impute = false;
  std::string out;
};

int cmd_smooth(const SmoothOptions& o) {
  const Domain d = parse_domain_flag(o.domain);
  const Grid grid = make_grid(d.a, d.b, o.n);
  SmoothingOptions opts;
  opts.penalty = o.penalty;
  opts.interior_knots = o.knots.empty() ? default_interior_knots(d.a, d.b)
                                        : interior_knots_from_list(parse_number_list(o.knots, "--knots"), d.a, d.b);
  const auto histograms = io::read_histograms_csv_file(o.input);
  if (histograms.empty()) throw DataError("no histograms in '" + o.input + "'");
  std::vector<Density> densities;
  std::vector<std::string> ids;
  for (const auto& h : histograms) {
    if (h.edges.front() < d.a || h.edges.back() > d.b) {
      throw DataError("histogram '" + h.label + "' extends beyond the domain");
    }
    densities.push_back(smooth_histogram(h, grid, opts, o.impute));
    ids.push_back(h.label);
  }
  io::write_curve_table_file(o.out, io::densities_to_table(densities, ids));
  return kExitOk;
}

struct FpcaOptions {
  std::string input;
  std::string reference = "lebesgue";
  std::size_t components = 2;
  std::string out_dir;
  double harmonic_multiple = 2.0;
};

std::vector<std::string> pc_names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= k; ++j) out.push_back("pc" + std::to_string(j));
  return out;
}

int cmd_fpca(const FpcaOptions& o) {
  const ReferenceSpec spec = parse_reference_spec(o.reference);
  const auto table = io::read_curve_table_file(o.input);
  const auto lambda_sample = io::table_to_lambda_densities(table);
  if (lambda_sample.size() < 2) throw DataError("fpca needs at least two densities");
  if (o.components < 1 || o.components > lambda_sample.size() - 1) {
    throw std::invalid_argument("--components must lie in [1, N-1]");
  }
  const Grid& grid = lambda_sample.front().grid();
  const auto ref = resolve_reference(spec, grid, lambda_sample);
  std::vector<Density> sample;
  sample.reserve(lambda_sample.size());
  for (const auto& f : lambda_sample) sample.push_back(change_reference(f, ref));

  const FpcaResult r = wsfpca(sample, o.components);
  const std::size_t k = r.components();
  const auto names = pc_names(k);

  fs::create_directories(o.out_dir);
  const fs::path dir(o.out_dir);

  io::write_curve_table_file((dir / "mean.csv").string(), io::densities_to_table({r.mean}, {"mean"}));
  io::write_curve_table_file((dir / "mean_unweighted.csv").string(),
                             io::densities_to_table({omega_inverse(r.mean)}, {"mean"}));

  io::CurveTable clr_table;
  clr_table.a = grid.lower();
  clr_table.b = grid.upper();
  clr_table.reference = spec.text;
  clr_table.kind = "clr_u";
  clr_table.t.assign(grid.nodes().begin(), grid.nodes().end());
  clr_table.ids = names;
  for (const auto& e : r.directions_clr) clr_table.columns.emplace_back(e.values().begin(), e.values().end());
  io::write_curve_table_file((dir / "directions_clr.csv").string(), clr_table);

  std::vector<Density> unweighted;
  for (const auto& xi : r.directions_density) unweighted.push_back(omega_inverse(xi));
  io::write_curve_table_file((dir / "directions_unweighted.csv").string(), io::densities_to_table(unweighted, names));

  std::vector<Density> harmonics;
  std::vector<std::string> harmonic_ids;
  for (std::size_t j = 1; j <= k; ++j) {
    auto [plus, minus] = harmonic(r, j, o.harmonic_multiple);
    harmonics.push_back(omega_inverse(plus));
    harmonics.push_back(omega_inverse(minus));
    harmonic_ids.push_back(names[j - 1] + "_plus");
    harmonic_ids.push_back(names[j - 1] + "_minus");
  }
  io::write_curve_table_file((dir / "harmonics_unweighted.csv").string(),
                             io::densities_to_table(harmonics, harmonic_ids));

  {
    std::ofstream s(dir / "scores.csv", std::ios::binary);
    if (!s) throw DataError("cannot write scores.csv");
    s << "id";
    for (const auto& n : names) s << ',' << n;
    s << '\n';
    for (std::size_t i = 0; i < table.ids.size(); ++i) {
      s << table.ids[i];
      for (std::size_t j = 0; j < k; ++j) {
        s << ',' << io::format_number(r.scores(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      }
      s << '\n';
    }
  }

  nlohmann::ordered_json doc;
  doc["reference"] = spec.text;
  doc["domain"] = {grid.lower(), grid.upper()};
  doc["grid_size"] = grid.size();
  doc["sample_size"] = r.sample_size();
  doc["components"] = k;
  doc["eigenvalues"] = r.eigenvalues;
  doc["explained_ratio"] = r.explained_ratio;
  doc["degenerate"] = std::vector<bool>(r.degenerate.begin(), r.degenerate.end());
  doc["harmonic_multiple"] = o.harmonic_multiple;
  nlohmann::ordered_json scores;
  scores["ids"] = table.ids;
  scores["components"] = names;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.sample_size(); ++i) {
    std::vector<double> row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = r.scores(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    rows.push_back(row);
  }
  scores["values"] = rows;
  doc["scores"] = scores;
  doc["files"] = {{"mean", "mean.csv"},
                  {"mean_unweighted", "mean_unweighted.csv"},
                  {"directions_clr", "directions_clr.csv"},
                  {"directions_unweighted", "directions_unweighted.csv"},
                  {"harmonics_unweighted", "harmonics_unweighted.csv"},
                  {"scores", "scores.csv"}};
  std::ofstream js(dir / "result.json", std::ios::binary);
  if (!js) throw DataError("cannot write result.json");
  js << doc.dump(2) << '\n';
  return kExitOk;
}

struct SelectOptions {
  std::string input;
  std::string groups;
  std::string candidates;
  std::string out;
};

void write_selection(std::ostream& s, const std::vector<CandidateResult>& results) {
  s << "rank,candidate,ss_between,ss_within,ss_total,ratio,winner\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& c = results[i];
    s << i + 1 << ',' << c.candidate << ',' << io::format_number(c.ss.ss_between) << ','
      << io::format_number(c.ss.ss_within) << ',' << io::format_number(c.ss.ss_total) << ','
      << io::format_number(c.ss.ratio) << ',' << (c.winner ? "yes" : "no") << '\n';
  }
}

int cmd_select(const SelectOptions& o, std::ostream& out) {
  const auto specs = parse_reference_list(o.candidates);
  const auto table = io::read_curve_table_file(o.input);
  const auto sample = io::table_to_lambda_densities(table);
  std::map<std::string, std::string> group_of;
  for (const auto& [id, g] : io::read_groups_csv_file(o.groups)) {
    if (!group_of.emplace(id, g).second) throw DataError("duplicate id '" + id + "' in groups file");
  }
  std::vector<std::string> groups;
  for (const auto& id : table.ids) {
    const auto it = group_of.find(id);
    if (it == group_of.end()) throw DataError("density '" + id + "' has no group");
    groups.push_back(it->second);
  }
  const auto results = select_reference(sample, groups, specs);
  if (o.out.empty() || o.out == "-") {
    write_selection(out, results);
  } else {
    std::ofstream s(o.out, std::ios::binary);
    if (!s) throw DataError("cannot open '" + o.out + "' for writing");
    write_selection(s, results);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted Bayes-space density analysis", "wbayes"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* c_sim = app.add_subcommand("simulate", "Write the 81-density truncated log-normal design");
  c_sim->add_option("--family", sim.family, "Density family")->capture_default_str();
  c_sim->add_option("--domain", sim.domain, "Domain a:b")->capture_default_str();
  c_sim->add_option("--n", sim.n, "Grid size")->capture_default_str();
  c_sim->add_option("--out", sim.out, "Output density table")->required();

  SmoothOptions sm;
  auto* c_sm = app.add_subcommand("smooth", "Smooth histograms into lambda-densities");
  c_sm->add_option("--input", sm.input, "Histogram CSV (id,lower,upper,count)")->required();
  c_sm->add_option("--domain", sm.domain, "Domain a:b")->required();
  c_sm->add_option("--knots", sm.knots, "Comma-separated knots; endpoints may be included");
  c_sm->add_option("--penalty", sm.penalty, "Roughness penalty")->capture_default_str();
  c_sm->add_option("--n", sm.n, "Grid size")->capture_default_str();
  c_sm->add_flag("--impute", sm.impute, "Add 0.5 to every class count");
  c_sm->add_option("--out", sm.out, "Output density table")->required();

  FpcaOptions fp;
  auto* c_fp = app.add_subcommand("fpca", "Weighted simplicial FPCA");
  c_fp->add_option("--input", fp.input, "Density table (lambda-densities)")->required();
  c_fp->add_option("--reference", fp.reference, "lebesgue | uniform | exp:<delta> | mean")->capture_default_str();
  c_fp->add_option("--components", fp.components, "Number of components")->capture_default_str();
  c_fp->add_option("--out-dir", fp.out_dir, "Output directory")->required();
  c_fp->add_option("--harmonic-multiple", fp.harmonic_multiple, "Harmonic multiple of the standard deviation")
      ->capture_default_str();

  SelectOptions se;
  auto* c_se = app.add_subcommand("select-reference", "Rank candidate references by PC1 ANOVA ratio");
  c_se->add_option("--input", se.input, "Density table (lambda-densities)")->required();
  c_se->add_option("--groups", se.groups, "Groups CSV (id,group)")->required();
  c_se->add_option("--candidates", se.candidates, "Comma-separated reference specs")->required();
  c_se->add_option("--out", se.out, "Output table (default: stdout)");

  std::vector<std::string> argv_store{"wbayes"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "wbayes: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (c_sim->parsed()) return cmd_simulate(sim);
    if (c_sm->parsed()) return cmd_smooth(sm);
    if (c_fp->parsed()) return cmd_fpca(fp);
    if (c_se->parsed()) return cmd_select(se, out);
  } catch (const DataError& e) {
    err << "wbayes: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    err << "wbayes: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "wbayes: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace wbayes

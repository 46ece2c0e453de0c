// hilrank: rank, dimension and degrees of freedom of hierarchical
// log-linear models, computed from the exponential Hilbert series of the
// underlying simplicial complex and checked against an explicit-matrix
// rank oracle.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilrank/enumeration.hpp"
#include "hilrank/families.hpp"
#include "hilrank/json_io.hpp"
#include "hilrank/rank.hpp"

namespace {

using hilrank::Int;
using hilrank::ModelSpec;
using hilrank::SimplicialComplex;

constexpr std::uint64_t kDefaultSeed = 12345;

struct CommonOptions {
  std::string family;
  int m = 0;
  std::string facets_json;
  std::string input_path;
  std::vector<int> levels;
  int constant_r = 0;
  std::string output = "text";
  std::size_t size_cap = hilrank::kDefaultColumnCap;
  std::uint64_t seed = kDefaultSeed;
};

void add_input_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--family", opt.family,
                  "named family: cyclic | main-effect | saturated | simplex-boundary");
  cmd->add_option("--m", opt.m, "number of vertices (with --family or --facets)");
  cmd->add_option("--facets", opt.facets_json, "inline facet list, e.g. \"[[1,2],[2,3]]\"");
  cmd->add_option("--input", opt.input_path, "path to a JSON model description");
  cmd->add_option("--output", opt.output, "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--size-cap", opt.size_cap, "column cap for explicit matrices");
}

void add_level_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--levels", opt.levels, "per-variable level counts, e.g. 2,3,4")
      ->delimiter(',');
  cmd->add_option("--r", opt.constant_r, "constant level count for every variable");
}

SimplicialComplex family_by_name(const std::string& name, int m) {
  if (name == "cyclic") return hilrank::cyclic_complex(m);
  if (name == "main-effect") return hilrank::main_effect_complex(m);
  if (name == "saturated") return hilrank::saturated_complex(m);
  if (name == "simplex-boundary") return hilrank::simplex_boundary_complex(m);
  throw std::invalid_argument("unknown family \"" + name +
                              "\"; expected cyclic, main-effect, saturated or simplex-boundary");
}

SimplicialComplex load_complex(const CommonOptions& opt,
                               std::optional<std::vector<int>>& file_levels) {
  const int sources = (!opt.family.empty() ? 1 : 0) + (!opt.facets_json.empty() ? 1 : 0) +
                      (!opt.input_path.empty() ? 1 : 0);
  if (sources != 1) {
    throw std::invalid_argument("exactly one of --family, --facets, --input must be given");
  }
  if (!opt.family.empty()) {
    if (opt.m <= 0) throw std::invalid_argument("--family requires --m");
    return family_by_name(opt.family, opt.m);
  }
  if (!opt.facets_json.empty()) {
    if (opt.m <= 0) throw std::invalid_argument("--facets requires --m");
    nlohmann::json facets = nlohmann::json::parse(opt.facets_json);
    return hilrank::complex_from_json(nlohmann::json{{"m", opt.m}, {"facets", facets}});
  }
  std::ifstream in(opt.input_path);
  if (!in) throw std::runtime_error("cannot open input file: " + opt.input_path);
  nlohmann::json j = nlohmann::json::parse(in);
  file_levels = hilrank::levels_from_json(j);
  return hilrank::complex_from_json(j);
}

std::vector<int> resolve_levels(const CommonOptions& opt, const SimplicialComplex& c,
                                const std::optional<std::vector<int>>& file_levels) {
  if (!opt.levels.empty() && opt.constant_r > 0) {
    throw std::invalid_argument("--levels and --r are mutually exclusive");
  }
  if (!opt.levels.empty()) return opt.levels;
  if (opt.constant_r > 0) {
    return std::vector<int>(static_cast<std::size_t>(c.vertex_count()), opt.constant_r);
  }
  if (file_levels) return *file_levels;
  throw std::invalid_argument("levels required: pass --r, --levels, or \"levels\" in the input");
}

std::string format_int_list(const std::vector<Int>& values) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ", ";
    os << values[i].get_str();
  }
  os << ")";
  return os.str();
}

std::string format_face(const hilrank::Face& f) {
  std::ostringstream os;
  os << "[";
  const auto& verts = f.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (i) os << ",";
    os << verts[i];
  }
  os << "]";
  return os.str();
}

std::string format_faces(const std::vector<hilrank::Face>& faces) {
  if (faces.empty()) return "(none)";
  std::ostringstream os;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i) os << " ";
    os << format_face(faces[i]);
  }
  return os.str();
}

// Closed form of the coarse series at real arguments, for the series check.
double coarse_closed_form(const SimplicialComplex& c, const std::vector<double>& x) {
  double total = 0.0;
  for (const hilrank::Face& face : c.faces()) {
    double product = 1.0;
    for (int v : face.vertices()) product *= std::expm1(x[static_cast<std::size_t>(v - 1)]);
    total += product;
  }
  return total;
}

int cmd_info(const CommonOptions& opt, int series_degree) {
  std::optional<std::vector<int>> file_levels;
  const SimplicialComplex c = load_complex(opt, file_levels);
  const hilrank::FVector f = c.f_vector();
  const hilrank::EVector e = hilrank::e_vector(f);
  const std::vector<hilrank::Face> nonfaces = c.minimal_nonfaces();
  const bool ds = hilrank::is_dehn_sommerville(c);

  bool series_ok = true;
  double series_deviation = 0.0;
  if (series_degree > 0) {
    std::mt19937_64 rng(opt.seed);
    std::vector<double> x;
    for (int i = 0; i < c.vertex_count(); ++i) {
      x.push_back(0.6 * (static_cast<double>(rng() % 100001) / 100000.0) - 0.3);
    }
    const double truncated = hilrank::truncated_coarse_series(c, x, series_degree);
    series_deviation = std::abs(truncated - coarse_closed_form(c, x));
    series_ok = series_deviation <= 1e-9;
  }

  if (opt.output == "json") {
    nlohmann::json j = hilrank::complex_to_json(c);
    j["dimension"] = c.dimension();
    j["f_vector"] = hilrank::fvector_to_json(f);
    j["e_vector"] = hilrank::evector_to_json(e);
    nlohmann::json nf = nlohmann::json::array();
    for (const auto& face : nonfaces) nf.push_back(face.vertices());
    j["minimal_nonfaces"] = nf;
    j["dehn_sommerville"] = ds;
    if (series_degree > 0) {
      j["series_check"] = {{"degree", series_degree},
                           {"deviation", series_deviation},
                           {"ok", series_ok}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "m:                 " << c.vertex_count() << "\n";
    std::cout << "facets:            " << format_faces(c.facets()) << "\n";
    std::cout << "dimension:         " << c.dimension() << "\n";
    std::cout << "f-vector:          " << format_int_list(f.counts) << "\n";
    std::cout << "e-vector:          " << format_int_list(e.coeffs) << "\n";
    std::cout << "minimal non-faces: " << format_faces(nonfaces) << "\n";
    std::cout << "dehn-sommerville:  " << (ds ? "yes" : "no") << "\n";
    if (series_degree > 0) {
      std::cout << "series check:      deviation " << series_deviation << " ("
                << (series_ok ? "ok" : "FAILED") << ")\n";
    }
  }
  return series_ok ? 0 : 1;
}

int cmd_evector(const CommonOptions& opt) {
  std::optional<std::vector<int>> file_levels;
  const SimplicialComplex c = load_complex(opt, file_levels);
  const hilrank::EVector e = hilrank::e_vector(c.f_vector());
  if (opt.output == "json") {
    std::cout << nlohmann::json{{"e_vector", hilrank::evector_to_json(e)}}.dump(2) << "\n";
  } else {
    std::cout << "e-vector: " << format_int_list(e.coeffs) << "\n";
  }
  return 0;
}

int cmd_rank(const CommonOptions& opt, bool verify) {
  std::optional<std::vector<int>> file_levels;
  const SimplicialComplex c = load_complex(opt, file_levels);
  const ModelSpec spec = ModelSpec::make(c, resolve_levels(opt, c, file_levels));
  const hilrank::RankReport rep = hilrank::report(spec, verify, opt.size_cap);

  if (opt.output == "json") {
    nlohmann::json j = hilrank::report_to_json(rep);
    j["m"] = spec.complex.vertex_count();
    j["levels"] = spec.levels;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "rank:               " << rep.rank.get_str() << "\n";
    std::cout << "model dimension:    " << rep.model_dimension.get_str() << "\n";
    std::cout << "degrees of freedom: " << rep.degrees_of_freedom.get_str() << "\n";
    std::cout << "method:             " << hilrank::to_string(rep.method) << "\n";
    std::ostringstream checks;
    for (std::size_t i = 0; i < rep.cross_checks.size(); ++i) {
      if (i) checks << ", ";
      checks << hilrank::to_string(rep.cross_checks[i]);
    }
    std::cout << "cross-checks:       " << (rep.cross_checks.empty() ? "(none)" : checks.str())
              << "\n";
    std::cout << "ds model:           " << (rep.ds_model ? "yes" : "no") << "\n";
    if (verify) {
      if (rep.oracle_checked) {
        std::cout << "oracle rank:        " << rep.oracle_rank->get_str() << " ("
                  << (rep.oracle_agrees ? "agrees" : "DISAGREES") << ")\n";
      } else {
        std::cout << "oracle rank:        skipped (size cap exceeded)\n";
      }
    }
  }

  if (verify && rep.oracle_checked && !rep.oracle_agrees) return 1;
  if (verify && !rep.oracle_checked) {
    std::cerr << "warning: matrix oracle skipped, formula value reported unverified\n";
  }
  return 0;
}

int cmd_dump_matrix(const CommonOptions& opt, const std::string& out_path) {
  std::optional<std::vector<int>> file_levels;
  const SimplicialComplex c = load_complex(opt, file_levels);
  const ModelSpec spec = ModelSpec::make(c, resolve_levels(opt, c, file_levels));
  const hilrank::DesignMatrix mat = hilrank::build_design_matrix(spec, opt.size_cap);
  if (out_path.empty()) {
    std::cout << mat.dump();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << mat.dump();
  }
  return 0;
}

struct SweepTotals {
  std::size_t cases = 0;
  std::size_t skipped = 0;
  std::size_t disagreements = 0;
};

void sweep_one(const ModelSpec& spec, std::size_t cap, SweepTotals& totals,
               std::vector<std::string>& failures) {
  ++totals.cases;
  const hilrank::VerifyOutcome outcome = hilrank::verify_spec(spec, cap);
  if (!outcome.oracle_checked()) {
    ++totals.skipped;
    return;
  }
  if (!outcome.agree) {
    ++totals.disagreements;
    std::ostringstream os;
    os << "disagreement: formula " << outcome.formula_rank.get_str() << " vs oracle "
       << outcome.oracle_rank->get_str() << " for model " << hilrank::model_to_json(spec).dump();
    failures.push_back(os.str());
  }
}

int cmd_verify_sweep(const CommonOptions& opt, int max_m, std::vector<int> level_set,
                     int random_count, int random_m, std::vector<int> random_level_set) {
  if (max_m == 0 && random_count == 0) {
    throw std::invalid_argument("nothing to sweep: pass --max-m and/or --random");
  }
  if (level_set.empty()) level_set = {2, 3};
  std::sort(level_set.begin(), level_set.end());
  SweepTotals totals;
  std::vector<std::string> failures;

  // Exhaustive pass over all complexes on [max_m] with all level assignments
  // drawn from level_set.
  std::size_t complexes_seen = 0;
  if (max_m > 0) {
    const auto complexes = hilrank::all_complexes(max_m);
    complexes_seen = complexes.size();
    std::vector<std::size_t> odometer(static_cast<std::size_t>(max_m), 0);
    for (const SimplicialComplex& c : complexes) {
      std::fill(odometer.begin(), odometer.end(), 0);
      while (true) {
        std::vector<int> levels;
        for (std::size_t i = 0; i < odometer.size(); ++i) levels.push_back(level_set[odometer[i]]);
        sweep_one(ModelSpec::make(c, levels), opt.size_cap, totals, failures);
        std::size_t pos = odometer.size();
        while (pos > 0 && odometer[pos - 1] + 1 == level_set.size()) odometer[--pos] = 0;
        if (pos == 0) break;
        ++odometer[pos - 1];
      }
    }
  }

  // Random pass for sizes beyond exhaustive reach.
  if (random_count > 0) {
    if (random_level_set.empty()) random_level_set = level_set;
    std::mt19937_64 rng(opt.seed);
    for (int k = 0; k < random_count; ++k) {
      const SimplicialComplex c = hilrank::random_complex(random_m, rng);
      const std::vector<int> levels =
          hilrank::random_levels(random_m, random_level_set, rng);
      sweep_one(ModelSpec::make(c, levels), opt.size_cap, totals, failures);
    }
  }

  for (const std::string& line : failures) std::cerr << line << "\n";
  if (opt.output == "json") {
    nlohmann::json j{{"max_m", max_m},
                     {"complexes", complexes_seen},
                     {"cases", totals.cases},
                     {"oracle_skipped", totals.skipped},
                     {"disagreements", totals.disagreements}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "complexes on [" << max_m << "]: " << complexes_seen << "\n";
    std::cout << "cases checked:     " << totals.cases << "\n";
    std::cout << "oracle skipped:    " << totals.skipped << "\n";
    std::cout << "disagreements:     " << totals.disagreements << "\n";
  }
  return totals.disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank, dimension and degrees of freedom of hierarchical log-linear models"};
  app.require_subcommand(1);

  CommonOptions opt;

  auto* info = app.add_subcommand("info", "f-vector, e-vector, minimal non-faces, DS flag");
  add_input_options(info, opt);
  int series_degree = 0;
  info->add_option("--series-check-degree", series_degree,
                   "run the truncated-series oracle at this total degree");
  info->add_option("--seed", opt.seed, "seed for the series check sample point");

  auto* evector = app.add_subcommand("evector", "e-vector of the complex");
  add_input_options(evector, opt);

  auto* rank = app.add_subcommand("rank", "rank, model dimension, degrees of freedom");
  add_input_options(rank, opt);
  add_level_options(rank, opt);
  bool verify = false;
  rank->add_flag("--verify", verify, "also compute the explicit-matrix rank oracle");

  auto* dump = app.add_subcommand("dump-matrix", "write the 0/1 design matrix as text");
  add_input_options(dump, opt);
  add_level_options(dump, opt);
  std::string out_path;
  dump->add_option("--out", out_path, "output file (default: stdout)");

  auto* sweep = app.add_subcommand(
      "verify-sweep", "exhaustive / randomized formula-vs-oracle verification");
  int max_m = 0;
  int random_count = 0;
  int random_m = 5;
  std::vector<int> level_set;
  std::vector<int> random_level_set;
  sweep->add_option("--max-m", max_m, "exhaustively sweep all complexes on this many vertices")
      ->check(CLI::Range(0, 4));
  sweep->add_option("--levels", level_set, "level set for the exhaustive pass (default 2,3)")
      ->delimiter(',');
  sweep->add_option("--random", random_count, "number of random cases to add");
  sweep->add_option("--random-m", random_m, "vertex count for random cases (default 5)");
  sweep->add_option("--random-levels", random_level_set, "level choices for random cases")
      ->delimiter(',');
  sweep->add_option("--seed", opt.seed, "seed for the random pass");
  sweep->add_option("--output", opt.output, "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  sweep->add_option("--size-cap", opt.size_cap, "column cap for explicit matrices");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(opt, series_degree);
    if (evector->parsed()) return cmd_evector(opt);
    if (rank->parsed()) return cmd_rank(opt, verify);
    if (dump->parsed()) return cmd_dump_matrix(opt, out_path);
    if (sweep->parsed()) {
      return cmd_verify_sweep(opt, max_m, level_set, random_count, random_m, random_level_set);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

// Command-line front end: exact spectra, energies, constructions, subset
// extraction, polynomial expansion reports, incidence counts, experiment
// sweeps, and the self-verification suite.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "disten/constructions.hpp"
#include "disten/energy.hpp"
#include "disten/expansion.hpp"
#include "disten/extraction.hpp"
#include "disten/harness.hpp"
#include "disten/incidence.hpp"
#include "disten/local_properties.hpp"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw disten::validation_error("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path == "-" || path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(path);
  if (!out) throw disten::validation_error("cannot write \"" + path + "\"");
  out << data;
}

bool looks_quad(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string tok;
    int count = 0;
    while (fields >> tok) ++count;
    if (count == 0) continue;
    return count == 3;
  }
  return false;
}

std::vector<disten::Rational> parse_rational_list(const std::string& text) {
  std::vector<disten::Rational> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(disten::parse_rational(item));
  }
  if (out.empty()) throw disten::validation_error("empty rational list");
  return out;
}

json spectrum_json(const disten::MultiplicitySpectrum& spectrum) {
  json entries = json::array();
  for (const auto& [key, count] : spectrum.entries) {
    entries.push_back({{"sqdist", disten::to_string(key)}, {"multiplicity", count}});
  }
  return json{{"distinct", spectrum.distinct()},
              {"total", spectrum.total},
              {"max_multiplicity", spectrum.max_multiplicity()},
              {"entries", entries}};
}

struct GlobalOptions {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t cap = 0;  // 0 = defaults
  std::string format = "csv";

  std::uint64_t cap_or(std::uint64_t fallback) const { return cap == 0 ? fallback : cap; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact distance-energy and polynomial-expansion experiments"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "global RNG seed")->capture_default_str();
  app.add_option("--threads", global.threads, "worker threads for enumerations and sweeps")
      ->capture_default_str();
  app.add_option("--cap", global.cap, "override count-typed enumeration caps (0 = defaults)");
  app.add_option("--format", global.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // --- spectrum ---
  std::string spec_input, spec_bipartite, spec_output = "-";
  auto* cmd_spectrum = app.add_subcommand("spectrum", "multiplicity spectrum of a point-set file");
  cmd_spectrum->add_option("--input", spec_input, "point-set file (- for stdin)")->required();
  cmd_spectrum->add_option("--bipartite", spec_bipartite, "second point-set file for cross distances");
  cmd_spectrum->add_option("-o,--output", spec_output, "output path (- for stdout)");

  // --- energy ---
  std::string energy_input;
  unsigned energy_d = 2;
  bool energy_bruteforce_flag = false, energy_distinct_flag = false;
  std::uint64_t energy_ncap = 0;
  auto* cmd_energy = app.add_subcommand("energy", "distance energy report");
  cmd_energy->add_option("--input", energy_input, "point-set file")->required();
  cmd_energy->add_option("--d", energy_d, "energy order d >= 1")->capture_default_str();
  cmd_energy->add_flag("--bruteforce", energy_bruteforce_flag, "also run the definitional oracle");
  cmd_energy->add_flag("--distinct", energy_distinct_flag, "also compute E_d over distinct tuples");
  cmd_energy->add_option("--ncap", energy_ncap, "point-count cap for the oracle paths");

  // --- extract ---
  std::string ext_input, ext_variant = "plane-E5", ext_c = "1", ext_output, ext_stats;
  std::uint64_t ext_maxpairs = 4;
  std::uint64_t ext_seed = 0;
  bool ext_seed_set = false;
  auto* cmd_extract = app.add_subcommand("extract", "sampling + repair subset extraction");
  cmd_extract->add_option("--input", ext_input, "point-set file")->required();
  cmd_extract->add_option("--maxpairs", ext_maxpairs, "max unordered pairs per distance")
      ->capture_default_str();
  cmd_extract->add_option("--variant", ext_variant, "plane-E5 | plane-E3 | curve(m)")
      ->capture_default_str();
  cmd_extract->add_option("--c", ext_c, "constant c in the sampling probability")
      ->capture_default_str();
  cmd_extract->add_option("--seed", ext_seed, "sampling seed (defaults to global --seed)")
      ->trigger_on_parse()
      ->each([&](const std::string&) { ext_seed_set = true; });
  cmd_extract->add_option("--output", ext_output, "subset point-set file (default stdout)");
  cmd_extract->add_option("--stats", ext_stats, "stats JSON path (default stdout/stderr)");

  // --- construct ---
  std::string con_kind, con_output = "-";
  std::uint64_t con_n = 0, con_m = 0, con_range = 0;
  auto* cmd_construct = app.add_subcommand("construct", "generate a named point set");
  cmd_construct
      ->add_option("--kind", con_kind, "grid | behrend-collinear | elekes | line | parabola | circle | random")
      ->required();
  cmd_construct->add_option("--n", con_n, "size parameter")->required();
  cmd_construct->add_option("--m", con_m, "line-point count (elekes)");
  cmd_construct->add_option("--coord-range", con_range, "coordinate range (random; default 4n)");
  cmd_construct->add_option("-o,--output", con_output, "output path (- for stdout)");

  // --- expand ---
  std::string exp_f, exp_a, exp_b, exp_tau_a, exp_tau_b;
  std::uint64_t exp_j = 1;
  auto* cmd_expand = app.add_subcommand("expand", "polynomial image spectrum and curve families");
  cmd_expand->add_option("--f", exp_f, "bivariate polynomial, e.g. \"x*y\"")->required();
  cmd_expand->add_option("--A", exp_a, "comma-separated rationals")->required();
  cmd_expand->add_option("--B", exp_b, "comma-separated rationals")->required();
  cmd_expand->add_option("--j", exp_j, "richness threshold")->capture_default_str();
  cmd_expand->add_option("--tauA", exp_tau_a, "structure polynomial for A (univariate)");
  cmd_expand->add_option("--tauB", exp_tau_b, "structure polynomial for B (univariate)");

  // --- incidence ---
  std::string inc_points, inc_curves;
  auto* cmd_incidence = app.add_subcommand("incidence", "exact point-curve incidence count");
  cmd_incidence->add_option("--points", inc_points, "point-set file")->required();
  cmd_incidence->add_option("--curves", inc_curves, "curves file, one polynomial per line")
      ->required();

  // --- experiment ---
  std::string expmt_descriptor, expmt_output = "-";
  auto* cmd_experiment = app.add_subcommand("experiment", "run a JSON experiment descriptor");
  cmd_experiment->add_option("--descriptor", expmt_descriptor, "descriptor JSON path")->required();
  cmd_experiment->add_option("-o,--output", expmt_output, "CSV output path (- for stdout)");

  // --- verify ---
  auto* cmd_verify = app.add_subcommand("verify", "run every exact module invariant");

  for (auto* sub : {cmd_spectrum, cmd_energy, cmd_extract, cmd_construct, cmd_expand,
                    cmd_incidence, cmd_experiment, cmd_verify}) {
    sub->fallthrough();  // let global flags appear after the subcommand
  }

  try {
    app.parse(argc, argv);

    if (cmd_spectrum->parsed()) {
      auto parsed = disten::parse_pointset(read_input(spec_input));
      if (parsed.duplicates_dropped > 0) {
        std::cerr << "warning: dropped " << parsed.duplicates_dropped << " duplicate points\n";
      }
      disten::MultiplicitySpectrum spectrum;
      if (!spec_bipartite.empty()) {
        auto other_text = read_input(spec_bipartite);
        if (looks_quad(other_text)) {
          spectrum = disten::bipartite_spectrum(parsed.set, disten::parse_quadset(other_text).set);
        } else {
          spectrum = disten::bipartite_spectrum(parsed.set, disten::parse_pointset(other_text).set);
        }
      } else {
        spectrum = disten::multiplicity_spectrum(parsed.set, global.threads);
      }
      if (global.format == "json") {
        write_output(spec_output, spectrum_json(spectrum).dump(2) + "\n");
      } else {
        write_output(spec_output, disten::spectrum_csv(spectrum));
      }
    } else if (cmd_energy->parsed()) {
      auto set = disten::parse_pointset(read_input(energy_input)).set;
      auto report = disten::energy_report(set, energy_d, global.threads);
      json doc{{"n", report.n},
               {"d", report.d},
               {"D", report.distinct},
               {"E_d", report.e_d.str()},
               {"holder_lower", disten::to_string(report.holder_lower)},
               {"max_multiplicity", report.max_multiplicity}};
      if (energy_bruteforce_flag) {
        doc["E_d_bruteforce"] = disten::energy_bruteforce(set, energy_d, energy_ncap).str();
      }
      if (energy_distinct_flag) {
        doc["E_d_distinct"] = disten::distinct_energy(set, energy_d, energy_ncap).str();
      }
      if (global.format == "json") {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "key,value\n";
        for (const auto& [key, value] : doc.items()) {
          std::cout << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump())
                    << "\n";
        }
      }
    } else if (cmd_extract->parsed()) {
      auto set = disten::parse_pointset(read_input(ext_input)).set;
      unsigned curve_m = 2;
      auto variant = disten::parse_variant(ext_variant, curve_m);
      std::uint64_t seed = ext_seed_set ? ext_seed : global.seed;
      auto plan = disten::sampling_plan(std::max<std::uint64_t>(set.size(), 3), variant, curve_m,
                                        disten::parse_rational(ext_c), seed);
      auto result = disten::extract_subset(set, ext_maxpairs, plan);
      json stats{{"input_size", set.size()},
                 {"subset_size", result.subset.size()},
                 {"p", plan.p},
                 {"seed", seed},
                 {"removed_isosceles", result.removed_isosceles},
                 {"removed_multiplicity", result.removed_multiplicity},
                 {"max_pair_multiplicity", result.max_pair_multiplicity},
                 {"verified", disten::verify_max_pair_multiplicity(result.subset, ext_maxpairs)}};
      if (ext_output.empty()) {
        std::cout << disten::write_pointset(result.subset);
        if (ext_stats.empty()) {
          std::cerr << stats.dump(2) << "\n";
        } else {
          write_output(ext_stats, stats.dump(2) + "\n");
        }
      } else {
        write_output(ext_output, disten::write_pointset(result.subset));
        write_output(ext_stats.empty() ? std::string("-") : ext_stats, stats.dump(2) + "\n");
      }
    } else if (cmd_construct->parsed()) {
      if (con_kind == "elekes") {
        if (con_m == 0) throw disten::validation_error("elekes needs --m");
        auto c = disten::elekes_bipartite(con_m, con_n);
        write_output(con_output, disten::write_quadset(c.plane_points));
        std::cerr << "line points: 1.." << con_m << " on the x-axis; plane points written ("
                  << c.plane_points.size() << ")\n";
      } else if (con_kind == "grid") {
        write_output(con_output, disten::write_pointset(disten::integer_grid(con_n)));
      } else if (con_kind == "behrend-collinear") {
        write_output(con_output, disten::write_pointset(disten::behrend_collinear(con_n)));
      } else if (con_kind == "random") {
        std::uint64_t range = con_range == 0 ? 4 * con_n : con_range;
        write_output(con_output,
                     disten::write_pointset(disten::random_pointset(con_n, range, global.seed)));
      } else if (con_kind == "line" || con_kind == "parabola" || con_kind == "circle") {
        write_output(con_output, disten::write_pointset(disten::curve_pointset(con_kind, con_n)));
      } else {
        throw disten::validation_error("unknown construction kind \"" + con_kind + "\"");
      }
    } else if (cmd_expand->parsed()) {
      auto f = disten::parse_bivariate(exp_f);
      auto a_set = parse_rational_list(exp_a);
      auto b_set = parse_rational_list(exp_b);
      auto spectrum = disten::image_spectrum(f, a_set, b_set);
      json doc{{"f", f.str()},
               {"D", spectrum.distinct()},
               {"total", spectrum.total},
               {"E_f", disten::expansion_energy(spectrum).str()},
               {"j", exp_j}};
      if (!f.is_constant()) {
        auto witness = disten::additive_degeneracy(f);
        if (witness) {
          doc["additively_degenerate"] = true;
          doc["witness"] = {{"a", disten::to_string(witness->a)},
                            {"b", disten::to_string(witness->b)},
                            {"h", witness->h.str()}};
        } else {
          doc["additively_degenerate"] = false;
        }
        if (auto dec = disten::decompose(f)) {
          doc["decomposable"] = true;
          doc["decomposition"] = {{"outer", dec->outer.str()}, {"inner", dec->inner.str()}};
        } else {
          doc["decomposable"] = false;
        }
        std::optional<std::pair<disten::StructuredSet, disten::StructuredSet>> structured;
        if (!exp_tau_a.empty() || !exp_tau_b.empty()) {
          if (exp_tau_a.empty() || exp_tau_b.empty()) {
            throw disten::validation_error("structured mode needs both --tauA and --tauB");
          }
          auto tau_a = disten::parse_univariate(exp_tau_a);
          auto tau_b = disten::parse_univariate(exp_tau_b);
          structured = std::make_pair(disten::StructuredSet::make(a_set, tau_a),
                                      disten::StructuredSet::make(b_set, tau_b));
          doc["composed"] = disten::compose_structured(f, tau_a, tau_b).str();
        }
        auto family = disten::curve_family(f, a_set, b_set, exp_j, structured,
                                           global.cap_or(200'000));
        doc["family_size"] = family.members.size();
        doc["proportional_collisions"] = family.proportional_collisions;
        if (!structured) {
          auto richness = disten::richness_incidence_check(f, a_set, b_set, exp_j,
                                                           global.cap_or(200'000));
          doc["richness"] = {{"incidences", richness.incidences.str()},
                             {"required", richness.required.str()},
                             {"k_j", richness.k_j},
                             {"holds", richness.holds}};
        }
        auto bound = disten::check_value_bound(f, a_set, b_set);
        doc["value_bound_holds"] = bound.bound_holds;
      }
      if (global.format == "json") {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "key,value\n";
        for (const auto& [key, value] : doc.items()) {
          std::cout << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump())
                    << "\n";
        }
      }
    } else if (cmd_incidence->parsed()) {
      auto points = disten::parse_pointset(read_input(inc_points)).set;
      std::vector<disten::PlaneCurve> curves;
      std::istringstream lines(read_input(inc_curves));
      std::string line;
      while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        curves.push_back(disten::PlaneCurve::from_poly(disten::parse_bivariate(line)));
      }
      auto report = disten::count_incidences(points, curves, global.cap_or(100'000'000));
      double pts = static_cast<double>(points.size());
      double ncurves = static_cast<double>(curves.size());
      double ps = std::pow(pts, 2.0 / 3.0) * std::pow(ncurves, 2.0 / 3.0) + pts + ncurves;
      double sz = std::pow(pts, 6.0 / 11.0) * std::pow(ncurves, 9.0 / 11.0) *
                      std::pow(std::max(std::log(ncurves), 1.0), 2.0 / 11.0) +
                  std::pow(pts, 2.0 / 3.0) * std::pow(ncurves, 2.0 / 3.0) + pts + ncurves;
      json doc{{"count", report.count},
               {"k22_free", report.k22_free},
               {"points", points.size()},
               {"curves", curves.size()},
               {"ratio_pach_sharir", report.count / ps},
               {"ratio_sharir_zahl_s3", report.count / sz},
               {"per_curve", report.per_curve}};
      std::cout << doc.dump(2) << "\n";
    } else if (cmd_experiment->parsed()) {
      auto descriptor = disten::parse_experiment_descriptor(read_input(expmt_descriptor));
      write_output(expmt_output, disten::run_experiment(descriptor, global.threads));
    } else if (cmd_verify->parsed()) {
      return disten::verify_suite(std::cout) == 0 ? 0 : 1;
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const disten::cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const disten::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#include "disten/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "disten/expansion.hpp"
#include "disten/incidence.hpp"
#include "disten/local_properties.hpp"

namespace disten {

std::string format_sig6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

namespace {

const std::vector<std::string> kGenerators = {
    "grid", "behrend_collinear", "random", "elekes", "line", "parabola", "circle", "intrange"};
const std::vector<std::string> kMetrics = {
    "E2", "E3", "E4", "D", "t", "max_mult", "k2", "subset_E5", "subset_E3", "Ef_xy",
    "incidence_ratio_ps", "incidence_ratio_sz3"};
const std::vector<std::string> kReferences = {
    "n^3 log n", "n/sqrt(log n)", "sqrt(m n)", "n^{4/3}", "n^{2.137}",
    "n^2", "n^3", "n^4", "n^{8/3}", "n^{11/3}"};

bool registered(const std::vector<std::string>& registry, const std::string& id) {
  return std::find(registry.begin(), registry.end(), id) != registry.end();
}

struct GenOutput {
  std::optional<PointSet> points;
  std::optional<BipartiteConstruction> bipartite;
  std::optional<std::vector<Rational>> range;
  double ref_n = 0;
  double ref_m = 0;
};

GenOutput run_generator(const std::string& id, std::uint64_t value, std::uint64_t seed) {
  GenOutput out;
  if (id == "grid") {
    out.points = integer_grid(value);
  } else if (id == "behrend_collinear") {
    out.points = behrend_collinear(value);
  } else if (id == "random") {
    out.points = random_pointset(value, 4 * value, seed);
  } else if (id == "elekes") {
    out.bipartite = elekes_bipartite(value, 4 * value * value * value);
    out.ref_m = static_cast<double>(value);
    out.ref_n = static_cast<double>(out.bipartite->n);
    return out;
  } else if (id == "line" || id == "parabola" || id == "circle") {
    out.points = curve_pointset(id, value);
  } else if (id == "intrange") {
    std::vector<Rational> range;
    for (std::uint64_t i = 1; i <= value; ++i) range.emplace_back(i);
    out.range = std::move(range);
    out.ref_n = static_cast<double>(value);
    return out;
  } else {
    throw validation_error("unknown generator \"" + id + "\"");
  }
  out.ref_n = static_cast<double>(out.points->size());
  return out;
}

struct MetricValue {
  std::string cell;
  double numeric = 0;
};

MetricValue exact_metric(const BigInt& value) {
  return MetricValue{value.str(), value.convert_to<double>()};
}

MultiplicitySpectrum spectrum_of(const GenOutput& gen) {
  if (gen.points) return multiplicity_spectrum(*gen.points);
  if (gen.bipartite) return bipartite_spectrum(gen.bipartite->line_points, gen.bipartite->plane_points);
  throw validation_error("metric needs a point-set generator");
}

double pach_sharir_bound(double pts, double curves) {
  return std::pow(pts, 2.0 / 3.0) * std::pow(curves, 2.0 / 3.0) + pts + curves;
}

double sharir_zahl_s3_bound(double pts, double curves) {
  return std::pow(pts, 6.0 / 11.0) * std::pow(curves, 9.0 / 11.0) *
             std::pow(std::max(std::log(curves), 1.0), 2.0 / 11.0) +
         std::pow(pts, 2.0 / 3.0) * std::pow(curves, 2.0 / 3.0) + pts + curves;
}

// Circles centered at every point whose squared radius is the modal distance
// class; the standard configuration for incidence-ratio reports.
MetricValue incidence_ratio_metric(const PointSet& points, bool sharir_zahl) {
  auto spectrum = multiplicity_spectrum(points);
  if (spectrum.entries.empty()) return MetricValue{"0", 0};
  Rational modal_key = spectrum.entries.front().first;
  std::uint64_t modal_count = 0;
  for (const auto& [key, count] : spectrum.entries) {
    if (count > modal_count) {
      modal_count = count;
      modal_key = key;
    }
  }
  std::vector<PlaneCurve> curves;
  std::set<std::pair<Rational, Rational>> unique;
  for (const auto& p : points) unique.emplace(p.x, p.y);
  for (const auto& [cx, cy] : unique) {
    curves.push_back(PlaneCurve::circle(Rational(-2) * cx, Rational(-2) * cy,
                                        cx * cx + cy * cy - modal_key));
  }
  auto report = count_incidences(points, curves);
  double pts = static_cast<double>(points.size());
  double ncurves = static_cast<double>(curves.size());
  double denom = sharir_zahl ? sharir_zahl_s3_bound(pts, ncurves) : pach_sharir_bound(pts, ncurves);
  double ratio = static_cast<double>(report.count) / denom;
  return MetricValue{format_sig6(ratio), ratio};
}

MetricValue eval_metric(const std::string& id, const GenOutput& gen, std::uint64_t seed) {
  if (id == "E2" || id == "E3" || id == "E4") {
    unsigned d = static_cast<unsigned>(id[1] - '0');
    return exact_metric(energy(spectrum_of(gen), d));
  }
  if (id == "D") return exact_metric(BigInt(spectrum_of(gen).distinct()));
  if (id == "max_mult") return exact_metric(BigInt(spectrum_of(gen).max_multiplicity()));
  if (id == "k2") {
    auto spectrum = spectrum_of(gen);
    std::uint64_t k2 = 0;
    for (const auto& [key, count] : spectrum.entries) {
      if (count >= 2) ++k2;
    }
    return exact_metric(BigInt(k2));
  }
  if (id == "t") {
    if (!gen.points) throw validation_error("metric t needs a planar point set");
    return exact_metric(BigInt(isosceles_count(*gen.points)));
  }
  if (id == "subset_E5" || id == "subset_E3") {
    if (!gen.points) throw validation_error("subset metrics need a planar point set");
    bool e5 = id == "subset_E5";
    auto plan = sampling_plan(std::max<std::uint64_t>(gen.points->size(), 3),
                              e5 ? PlanVariant::plane_e5 : PlanVariant::plane_e3, 2, Rational(1),
                              seed);
    auto result = extract_subset(*gen.points, e5 ? 4 : 2, plan);
    return exact_metric(BigInt(result.subset.size()));
  }
  if (id == "Ef_xy") {
    if (!gen.range) throw validation_error("Ef_xy needs the intrange generator");
    auto f = parse_bivariate("x*y");
    return exact_metric(expansion_energy(image_spectrum(f, *gen.range, *gen.range)));
  }
  if (id == "incidence_ratio_ps" || id == "incidence_ratio_sz3") {
    if (!gen.points) throw validation_error("incidence metrics need a planar point set");
    return incidence_ratio_metric(*gen.points, id == "incidence_ratio_sz3");
  }
  throw validation_error("unknown metric \"" + id + "\"");
}

double eval_reference(const std::string& id, double n, double m) {
  if (id == "n^3 log n") return n * n * n * std::log(n);
  if (id == "n/sqrt(log n)") return n / std::sqrt(std::log(n));
  if (id == "sqrt(m n)") return std::sqrt(m * n);
  if (id == "n^{4/3}") return std::pow(n, 4.0 / 3.0);
  if (id == "n^{2.137}") return std::pow(n, 2.137);
  if (id == "n^2") return n * n;
  if (id == "n^3") return n * n * n;
  if (id == "n^4") return n * n * n * n;
  if (id == "n^{8/3}") return std::pow(n, 8.0 / 3.0);
  if (id == "n^{11/3}") return std::pow(n, 11.0 / 3.0);
  throw validation_error("unknown reference formula \"" + id + "\"");
}

}  // namespace

const std::vector<std::string>& registered_generators() { return kGenerators; }
const std::vector<std::string>& registered_metrics() { return kMetrics; }
const std::vector<std::string>& registered_references() { return kReferences; }

ExperimentDescriptor parse_experiment_descriptor(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw validation_error(std::string("descriptor is not valid JSON: ") + e.what());
  }
  ExperimentDescriptor desc;
  try {
    desc.name = doc.at("name").get<std::string>();
    desc.generator = doc.at("generator").get<std::string>();
    desc.measurements = doc.at("measurements").get<std::vector<std::string>>();
    desc.sweep = doc.at("sweep").get<std::vector<std::uint64_t>>();
    if (doc.contains("seeds")) desc.seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
    if (doc.contains("reference")) desc.reference = doc.at("reference").get<std::string>();
  } catch (const std::exception& e) {
    throw validation_error(std::string("descriptor field error: ") + e.what());
  }
  if (!registered(kGenerators, desc.generator)) {
    throw validation_error("unknown generator \"" + desc.generator + "\"");
  }
  for (const auto& m : desc.measurements) {
    if (!registered(kMetrics, m)) throw validation_error("unknown metric \"" + m + "\"");
  }
  if (desc.reference && !registered(kReferences, *desc.reference)) {
    throw validation_error("unknown reference formula \"" + *desc.reference + "\"");
  }
  if (desc.measurements.empty()) throw validation_error("descriptor needs at least one metric");
  if (desc.sweep.empty()) throw validation_error("descriptor needs a nonempty sweep");
  if (desc.seeds.empty()) desc.seeds = {0};
  return desc;
}

std::string run_experiment(const ExperimentDescriptor& descriptor, unsigned threads) {
  struct RowKey {
    std::uint64_t value;
    std::uint64_t seed;
  };
  std::vector<RowKey> rows;
  std::vector<std::uint64_t> sweep = descriptor.sweep;
  std::sort(sweep.begin(), sweep.end());
  for (auto value : sweep) {
    for (auto seed : descriptor.seeds) rows.push_back({value, seed});
  }

  auto compute_row = [&](const RowKey& key) {
    GenOutput gen = run_generator(descriptor.generator, key.value, key.seed);
    std::string row = std::to_string(key.value) + "," + std::to_string(key.seed);
    double first_metric = 0;
    for (std::size_t i = 0; i < descriptor.measurements.size(); ++i) {
      MetricValue mv = eval_metric(descriptor.measurements[i], gen, key.seed);
      if (i == 0) first_metric = mv.numeric;
      row += "," + mv.cell;
    }
    if (descriptor.reference) {
      double ref = eval_reference(*descriptor.reference, gen.ref_n, gen.ref_m);
      row += "," + format_sig6(ref) + "," + format_sig6(first_metric / ref);
    }
    row += "\n";
    return row;
  };

  std::vector<std::string> rendered(rows.size());
  const unsigned workers = std::max(1u, threads);
  if (workers == 1 || rows.size() <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) rendered[i] = compute_row(rows[i]);
  } else {
    std::vector<std::future<void>> futures;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&]() {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= rows.size()) break;
          rendered[i] = compute_row(rows[i]);
        }
      }));
    }
    for (auto& f : futures) f.get();
  }

  std::string out = "# experiment: " + descriptor.name + "\n";
  out += "param,seed";
  for (const auto& m : descriptor.measurements) out += "," + m;
  if (descriptor.reference) out += ",reference,ratio";
  out += "\n";
  for (const auto& row : rendered) out += row;
  return out;
}

namespace {

using CheckResult = std::optional<std::string>;  // failure detail, or pass

Rational random_rational(std::mt19937_64& gen, std::int64_t num_range = 20,
                         std::int64_t den_range = 8) {
  std::int64_t num = static_cast<std::int64_t>(gen() % (2 * num_range + 1)) - num_range;
  std::int64_t den = 1 + static_cast<std::int64_t>(gen() % den_range);
  return Rational(num, den);
}

PointSet random_rational_set(std::mt19937_64& gen, std::size_t n) {
  std::set<std::pair<Rational, Rational>> seen;
  while (seen.size() < n) seen.emplace(random_rational(gen), random_rational(gen));
  std::vector<Point> pts;
  for (const auto& [x, y] : seen) pts.push_back(Point{x, y});
  return PointSet::of(std::move(pts));
}

std::vector<Rational> random_rational_values(std::mt19937_64& gen, std::size_t n) {
  std::set<Rational> seen;
  while (seen.size() < n) seen.insert(random_rational(gen));
  return {seen.begin(), seen.end()};
}

BigInt ef_quadruple_bruteforce(const BivariatePolynomial& f, const std::vector<Rational>& a_set,
                               const std::vector<Rational>& b_set) {
  std::vector<Rational> values;
  for (const auto& a : a_set) {
    for (const auto& b : b_set) values.push_back(f(a, b));
  }
  BigInt count = 0;
  for (const auto& v1 : values) {
    for (const auto& v2 : values) {
      if (v1 == v2) ++count;
    }
  }
  return count;
}

CheckResult check_sqdist_basics() {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 60; ++i) {
    Point p{random_rational(gen), random_rational(gen)};
    Point q{random_rational(gen), random_rational(gen)};
    if (sqdist(p, q) != sqdist(q, p)) return "asymmetric sqdist";
    if ((sqdist(p, q) == 0) != (p == q)) return "zero iff equality violated";
  }
  return std::nullopt;
}

CheckResult check_sqdist_transforms() {
  std::mt19937_64 gen(12);
  for (int i = 0; i < 40; ++i) {
    Point p{random_rational(gen), random_rational(gen)};
    Point q{random_rational(gen), random_rational(gen)};
    Rational tx = random_rational(gen), ty = random_rational(gen);
    Rational base = sqdist(p, q);
    Point pt{p.x + tx, p.y + ty}, qt{q.x + tx, q.y + ty};
    if (sqdist(pt, qt) != base) return "translation changed sqdist";
    Point pr{-p.x, p.y}, qr{-q.x, q.y};
    if (sqdist(pr, qr) != base) return "reflection changed sqdist";
    Rational s = random_rational(gen);
    Point ps{p.x * s, p.y * s}, qs{q.x * s, q.y * s};
    if (sqdist(ps, qs) != base * s * s) return "scaling law violated";
  }
  return std::nullopt;
}

CheckResult check_spectrum_total() {
  std::mt19937_64 gen(13);
  for (std::size_t n : {2u, 5u, 9u, 14u, 23u}) {
    auto set = random_rational_set(gen, n);
    auto spectrum = multiplicity_spectrum(set);
    if (spectrum.total != static_cast<std::uint64_t>(n) * n - n) {
      return "unipartite total mismatch at n=" + std::to_string(n);
    }
  }
  auto p1 = random_rational_set(gen, 6);
  auto p2 = random_rational_set(gen, 7);
  std::uint64_t overlap = 0;
  for (const auto& p : p1) {
    if (p2.contains(p)) ++overlap;
  }
  auto cross = bipartite_spectrum(p1, p2);
  if (cross.total != p1.size() * p2.size() - overlap) return "bipartite total mismatch";
  return std::nullopt;
}

CheckResult check_energy_oracle() {
  std::mt19937_64 gen(14);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 4 + gen() % 7;  // up to 10
    auto set = (trial % 2 == 0) ? random_rational_set(gen, n)
                                : random_pointset(n, 3 * n, gen());
    auto spectrum = multiplicity_spectrum(set);
    for (unsigned d : {2u, 3u}) {
      if (energy(spectrum, d) != energy_bruteforce(set, d)) {
        return "spectrum energy != brute force (trial " + std::to_string(trial) + ")";
      }
    }
  }
  return std::nullopt;
}

CheckResult check_distinct_energy() {
  // Raw definitional oracle at tiny n: ordered pair tuples with distinct
  // endpoints.
  std::mt19937_64 gen(15);
  for (int trial = 0; trial < 6; ++trial) {
    auto set = random_pointset(4 + gen() % 3, 10, gen());
    const std::size_t n = set.size();
    BigInt raw = 0;
    for (std::size_t a1 = 0; a1 < n; ++a1)
      for (std::size_t b1 = 0; b1 < n; ++b1)
        for (std::size_t a2 = 0; a2 < n; ++a2)
          for (std::size_t b2 = 0; b2 < n; ++b2) {
            if (a1 == b1 || a2 == b2) continue;
            std::set<std::size_t> distinct{a1, b1, a2, b2};
            if (distinct.size() != 4) continue;
            if (sqdist(set[a1], set[b1]) == sqdist(set[a2], set[b2])) ++raw;
          }
    if (raw != distinct_energy(set, 2)) return "distinct energy disagrees with raw enumeration";
    if (distinct_energy(set, 2) > energy_bruteforce(set, 2)) return "E* exceeds E";
  }
  return std::nullopt;
}

CheckResult check_holder_eq3() {
  std::mt19937_64 gen(16);
  std::vector<PointSet> sets;
  sets.push_back(integer_grid(16));
  sets.push_back(integer_grid(64));
  sets.push_back(behrend_collinear(200));
  sets.push_back(random_pointset(40, 160, 7));
  sets.push_back(random_rational_set(gen, 25));
  for (const auto& set : sets) {
    auto spectrum = multiplicity_spectrum(set);
    for (unsigned d : {2u, 3u, 4u}) {
      Rational bound = holder_lower_bound(set.size(), spectrum.distinct(), d);
      if (Rational(energy(spectrum, d)) < bound) return "Hoelder lower bound violated";
    }
  }
  return std::nullopt;
}

CheckResult check_bipartite_holder() {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto p1 = random_pointset(3 + gen() % 8, 40, gen());
    auto p2 = random_pointset(3 + gen() % 8, 40, gen() | 1);
    auto spectrum = bipartite_spectrum(p1, p2);
    if (spectrum.entries.empty()) continue;
    for (unsigned d : {2u, 3u}) {
      // Always-exact form with the actual pair total.
      Rational bound(ipow(BigInt(spectrum.total), d), ipow(BigInt(spectrum.distinct()), d - 1));
      if (Rational(energy(spectrum, d)) < bound) return "bipartite power-mean bound violated";
    }
  }
  return std::nullopt;
}

CheckResult check_energy_monotonicity() {
  std::mt19937_64 gen(18);
  for (int trial = 0; trial < 8; ++trial) {
    auto set = random_pointset(5 + gen() % 4, 20, gen());
    auto spectrum = multiplicity_spectrum(set);
    for (unsigned d : {2u, 3u}) {
      if (energy(spectrum, d + 1) < energy(spectrum, d)) return "E_{d+1} < E_d";
    }
    if (distinct_energy(set, 2) > energy_bruteforce(set, 2)) return "E* exceeds E";
  }
  return std::nullopt;
}

CheckResult check_spectrum_transforms() {
  auto base = integer_grid(25);
  auto spectrum = multiplicity_spectrum(base);
  Rational tx(3, 2), ty(-7, 3), s(3, 2);
  std::vector<Point> translated, reflected, scaled;
  for (const auto& p : base) {
    translated.push_back(Point{p.x + tx, p.y + ty});
    reflected.push_back(Point{p.x, -p.y});
    scaled.push_back(Point{p.x * s, p.y * s});
  }
  auto check_counts = [&](const PointSet& other, const Rational& key_scale) -> bool {
    auto got = multiplicity_spectrum(other);
    if (got.entries.size() != spectrum.entries.size()) return false;
    for (std::size_t i = 0; i < got.entries.size(); ++i) {
      if (got.entries[i].second != spectrum.entries[i].second) return false;
      if (got.entries[i].first != spectrum.entries[i].first * key_scale) return false;
    }
    return true;
  };
  if (!check_counts(PointSet::of(std::move(translated)), Rational(1))) return "translation";
  if (!check_counts(PointSet::of(std::move(reflected)), Rational(1))) return "reflection";
  if (!check_counts(PointSet::of(std::move(scaled)), s * s)) return "scaling";
  return std::nullopt;
}

CheckResult check_dyadic_bracket() {
  std::vector<PointSet> sets{integer_grid(36), behrend_collinear(100), random_pointset(30, 90, 3)};
  for (const auto& set : sets) {
    auto spectrum = multiplicity_spectrum(set);
    auto rich = rich_spectrum(spectrum);
    for (unsigned d : {2u, 3u}) {
      BigInt lower = 0;
      for (std::size_t i = 0; i < rich.thresholds.size(); ++i) {
        std::uint64_t next = (i + 1 < rich.thresholds.size()) ? rich.counts[i + 1] : 0;
        lower += BigInt(rich.counts[i] - next) * ipow(BigInt(rich.thresholds[i]), d);
      }
      BigInt actual = energy(spectrum, d);
      if (actual < lower) return "dyadic lower estimate exceeds energy";
      if (actual > lower * ipow(BigInt(2), d)) return "energy above 2^d dyadic estimate";
    }
  }
  return std::nullopt;
}

CheckResult check_lemma11() {
  std::mt19937_64 gen(19);
  for (unsigned d : {2u, 3u}) {
    for (std::uint64_t n : {12u, 20u}) {
      std::uint64_t m = n / 2;
      double k_needed = 2.0 * d * std::pow(static_cast<double>(n), d) /
                        std::pow(static_cast<double>(m), d);
      std::uint64_t k = static_cast<std::uint64_t>(std::ceil(k_needed));
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::vector<std::uint64_t>> family;
        for (std::uint64_t i = 0; i < k; ++i) {
          std::set<std::uint64_t> s;
          while (s.size() < m) s.insert(gen() % n);
          family.emplace_back(s.begin(), s.end());
        }
        auto witness = set_intersection_witness(family, d, 2'000'000);
        // witness.size >= m^d / (2 n^{d-1}), compared in integers
        if (BigInt(witness.size) * 2 * ipow(BigInt(n), d - 1) < ipow(BigInt(m), d)) {
          return "intersection guarantee violated (n=" + std::to_string(n) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

CheckResult check_behrend_pipeline() {
  for (std::uint64_t n : {10u, 100u, 1000u}) {
    auto values = behrend_set(n);
    if (!is_progression_free(values)) return "behrend_set not 3-AP-free";
    auto set = behrend_collinear(n);
    if (isosceles_count(set) != 0) return "behrend_collinear spans an isosceles triple";
    if (set.size() >= 2 && max_codistance(set) > 1) {
      return "a point repeats a distance on the Behrend line";
    }
    if (set.size() >= 3) {
      auto report = min_distinct_over_ksubsets(set, 3, 2'000'000);
      if (report.min_distinct != 3) return "triple with fewer than 3 distinct distances";
    }
  }
  if (behrend_set(10).size() < 4) return "behrend_set(10) smaller than 4";
  return std::nullopt;
}

CheckResult check_elekes() {
  for (std::uint64_t m = 1; m <= 6; ++m) {
    std::uint64_t n = 4 * m * m * m;
    auto c = elekes_bipartite(m, n);
    if (c.plane_points.size() != n) return "wrong plane point count";
    auto spectrum = bipartite_spectrum(c.line_points, c.plane_points);
    if (spectrum.total != m * n) return "cross pair total mismatch";
    for (const auto& [key, count] : spectrum.entries) {
      if (denominator(key) != 1) return "non-integer cross squared distance";
    }
    BigInt d_bound = BigInt(m) * m + BigInt(m) * c.a_count + c.b_count;
    if (BigInt(spectrum.distinct()) > d_bound) return "D exceeds m^2 + mA + B";
    double ratio = static_cast<double>(spectrum.distinct()) /
                   std::sqrt(static_cast<double>(m) * static_cast<double>(n));
    if (ratio > 4.0) return "D exceeds 4 sqrt(mn)";
  }
  return std::nullopt;
}

CheckResult check_fixtures() {
  auto square = PointSet::of({{Rational(0), Rational(0)},
                              {Rational(1), Rational(0)},
                              {Rational(0), Rational(1)},
                              {Rational(1), Rational(1)}});
  auto spectrum = multiplicity_spectrum(square);
  if (spectrum.entries.size() != 2) return "unit square D != 2";
  if (spectrum.multiplicity_of(Rational(1)) != 8) return "unit square m_1 != 8";
  if (spectrum.multiplicity_of(Rational(2)) != 4) return "unit square m_2 != 4";
  if (energy(spectrum, 2) != 80) return "unit square E2 != 80";
  if (distinct_energy(square, 2) != 24) return "unit square E2* != 24";
  if (isosceles_count(square) != 4) return "unit square t != 4";

  auto collinear = PointSet::of(
      {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(2), Rational(0)}});
  auto cspec = multiplicity_spectrum(collinear);
  if (energy(cspec, 2) != 20) return "collinear E2 != 20";
  if (energy(cspec, 3) != 72) return "collinear E3 != 72";
  if (isosceles_count(collinear) != 1) return "collinear t != 1";
  if (multiplicity_spectrum(integer_grid(9)).distinct() != 5) return "3x3 grid D != 5";
  return std::nullopt;
}

CheckResult check_extraction() {
  for (std::uint64_t n : {64u, 100u}) {
    auto grid = integer_grid(n);
    for (auto variant : {PlanVariant::plane_e5, PlanVariant::plane_e3}) {
      std::uint64_t maxpairs = variant == PlanVariant::plane_e5 ? 4 : 2;
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto plan = sampling_plan(n, variant, 2, Rational(1), seed);
        auto result = extract_subset(grid, maxpairs, plan);
        if (!verify_max_pair_multiplicity(result.subset, maxpairs)) {
          return "extracted subset breaks the pair bound";
        }
        if (result.subset.size() >= 2 && max_codistance(result.subset) > 1) {
          return "extracted subset has an isosceles apex";
        }
        auto again = extract_subset(grid, maxpairs, plan);
        if (!(again.subset.points() == result.subset.points())) {
          return "extraction not deterministic";
        }
      }
    }
  }
  return std::nullopt;
}

CheckResult check_interpolation() {
  std::vector<MultiplicitySpectrum> spectra;
  spectra.push_back(multiplicity_spectrum(integer_grid(64)));
  spectra.push_back(multiplicity_spectrum(behrend_collinear(200)));
  spectra.push_back(multiplicity_spectrum(random_pointset(40, 160, 5)));
  MultiplicitySpectrum single;
  single.entries.emplace_back(Rational(7), 6);
  single.total = 6;
  spectra.push_back(single);
  for (const auto& spectrum : spectra) {
    auto report = holder_interpolation_check(spectrum);
    if (!report.e5_holds || !report.e3_holds) return "interpolation inequality not certified";
  }
  if (!holder_interpolation_check(single).equality_case) return "single class not equality case";
  return std::nullopt;
}

CheckResult check_parabola_energy() {
  for (std::uint64_t n : {50u, 100u}) {
    auto curve = curve_pointset("parabola", n);
    auto spectrum = multiplicity_spectrum(curve);
    for (unsigned m : {2u, 3u}) {
      double ratio = energy(spectrum, m).convert_to<double>() /
                     std::pow(static_cast<double>(n), m + 2.0 / 3.0);
      if (!(ratio > 0) || !std::isfinite(ratio)) return "curve energy ratio not finite";
    }
  }
  return std::nullopt;
}

CheckResult check_expansion_energy() {
  std::mt19937_64 gen(21);
  std::vector<BivariatePolynomial> fs{
      parse_bivariate("x + y"), parse_bivariate("x*y"), parse_bivariate("x^2 - 2*x*y + 2*y^2"),
      parse_bivariate("x^2*y^2 + x*y")};
  for (const auto& f : fs) {
    auto a_set = random_rational_values(gen, 5);
    auto b_set = random_rational_values(gen, 6);
    auto spectrum = image_spectrum(f, a_set, b_set);
    if (spectrum.total != a_set.size() * b_set.size()) return "image spectrum total mismatch";
    if (expansion_energy(spectrum) != ef_quadruple_bruteforce(f, a_set, b_set)) {
      return "expansion energy disagrees with quadruple count";
    }
    // Cauchy-Schwarz: Ef * D >= (|A||B|)^2
    BigInt lhs = expansion_energy(spectrum) * BigInt(spectrum.distinct());
    BigInt rhs = ipow(BigInt(spectrum.total), 2);
    if (lhs < rhs) return "Cauchy-Schwarz bound violated";
  }
  return std::nullopt;
}

CheckResult check_degeneracy_crossval() {
  std::vector<std::pair<BivariatePolynomial, bool>> cases;
  cases.emplace_back(parse_bivariate("x + y"), true);
  cases.emplace_back(parse_bivariate("(2*x + 3*y)^2 + 1"), true);
  cases.emplace_back(parse_bivariate("(x - y)^3 - (x - y)"), true);
  cases.emplace_back(parse_bivariate("x^2 + 2*x*y + y^2 + x + y"), true);
  cases.emplace_back(parse_bivariate("x*y"), false);
  cases.emplace_back(parse_bivariate("x^2 - 2*x*y + 2*y^2"), false);
  cases.emplace_back(parse_bivariate("x^2 - 2*x*y + 5*y^2"), false);
  cases.emplace_back(parse_bivariate("x^2 + y^3"), false);
  cases.emplace_back(parse_bivariate("x*y + x"), false);
  std::vector<Rational> shifts;
  for (int i = -2; i <= 2; ++i) shifts.emplace_back(i);
  for (const auto& [f, degenerate] : cases) {
    auto witness = additive_degeneracy(f);
    if (witness.has_value() != degenerate) return "degeneracy decision wrong for " + f.str();
    // f = h(ax+by) shifts trivially along (b, -a); make sure the searched
    // grid contains that direction.
    std::vector<Rational> a_shifts = shifts, b_shifts = shifts;
    if (witness) {
      a_shifts.push_back(witness->b);
      a_shifts.push_back(-witness->b);
      b_shifts.push_back(witness->a);
      b_shifts.push_back(-witness->a);
    }
    auto collisions = translation_symmetry_search(f, a_shifts, b_shifts);
    if (degenerate != !collisions.empty()) {
      return "translation search disagrees with degeneracy for " + f.str();
    }
    if (witness) {
      auto line = BivariatePolynomial::var_x() * witness->a + BivariatePolynomial::var_y() * witness->b;
      if (BivariatePolynomial::compose_outer(witness->h, line) != f) {
        return "witness does not recompose " + f.str();
      }
    }
  }
  return std::nullopt;
}

CheckResult check_decompose() {
  std::mt19937_64 gen(22);
  if (!decompose(parse_bivariate("x^2*y^2"))) return "x^2*y^2 not decomposed";
  if (decompose(parse_bivariate("x*y"))) return "x*y wrongly decomposed";
  // random compositions recompose exactly
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Rational> outer_coeffs;
    unsigned outer_deg = 2 + gen() % 2;
    for (unsigned i = 0; i <= outer_deg; ++i) outer_coeffs.push_back(random_rational(gen, 3, 2));
    if (outer_coeffs.back() == 0) outer_coeffs.back() = 1;
    UnivariatePolynomial f1{outer_coeffs};
    BivariatePolynomial f2;
    for (int t = 0; t < 4; ++t) {
      f2 = f2 + BivariatePolynomial::term(random_rational(gen, 3, 2), gen() % 3, gen() % 2);
    }
    if (f2.is_constant()) f2 = f2 + BivariatePolynomial::var_x();
    auto f = BivariatePolynomial::compose_outer(f1, f2);
    if (f.total_degree() < 2) continue;
    auto result = decompose(f);
    if (!result) return "composition not recognized: " + f.str();
    if (BivariatePolynomial::compose_outer(result->outer, result->inner) != f) {
      return "recomposition identity failed";
    }
    if (result->outer.degree() < 2) return "outer degree below 2";
  }
  return std::nullopt;
}

CheckResult check_curve_family() {
  std::vector<Rational> small_set{Rational(1), Rational(2), Rational(3)};
  std::vector<BivariatePolynomial> good{parse_bivariate("x*y"),
                                        parse_bivariate("x^2 - 2*x*y + 2*y^2"),
                                        parse_bivariate("x^2 + y^3")};
  for (const auto& f : good) {
    auto spectrum = image_spectrum(f, small_set, small_set);
    std::set<std::uint64_t> js{1};
    for (const auto& [key, count] : spectrum.entries) js.insert(count);
    for (auto j : js) {
      auto family = curve_family(f, small_set, small_set, j);
      if (family.proportional_collisions != 0) {
        return "proportional pair in a non-degenerate family: " + f.str();
      }
      auto report = richness_incidence_check(f, small_set, small_set, j);
      if (!report.holds) return "richness incidence bound failed for " + f.str();
    }
  }
  auto degenerate_family = curve_family(parse_bivariate("x + y"), small_set, small_set, 1);
  if (degenerate_family.proportional_collisions == 0) {
    return "additively degenerate family had no collisions";
  }
  return std::nullopt;
}

CheckResult check_value_bounds() {
  std::vector<BivariatePolynomial> fs{parse_bivariate("x*y"), parse_bivariate("x^2 + y^3"),
                                      parse_bivariate("x^2 - 2*x*y + 2*y^2")};
  std::vector<Rational> grid_set;
  for (int i = 1; i <= 6; ++i) grid_set.emplace_back(i);
  for (const auto& f : fs) {
    auto report = check_value_bound(f, grid_set, grid_set);
    if (!report.bound_holds) return "value multiplicity bound violated for " + f.str();
  }
  auto lattice = variety_lattice_count(parse_bivariate("x - y"), grid_set, grid_set);
  if (lattice.count != 6 || lattice.axis_parallel_factor) return "diagonal lattice count wrong";
  return std::nullopt;
}

CheckResult check_circle_k22() {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Point> centers;
    std::set<Rational> cxs;
    while (cxs.size() < 4) cxs.insert(random_rational(gen, 10, 4));
    for (const auto& cx : cxs) centers.push_back(Point{cx, Rational(0)});
    std::vector<Rational> radii;
    std::set<Rational> rset;
    while (rset.size() < 3) {
      Rational r = random_rational(gen, 8, 4);
      if (r > 0) rset.insert(r);
    }
    radii.assign(rset.begin(), rset.end());
    auto curves = circles_on_line(PointSet::of(std::move(centers)), radii);
    std::set<std::pair<Rational, Rational>> pts;
    while (pts.size() < 12) {
      Rational y = random_rational(gen, 8, 4);
      if (y <= 0) continue;
      pts.emplace(random_rational(gen, 10, 4), y);
    }
    std::vector<Point> upper;
    for (const auto& [x, y] : pts) upper.push_back(Point{x, y});
    auto report = count_incidences(PointSet::of(std::move(upper)), curves);
    if (!report.k22_free) return "axis circles shared two upper-half points";
  }
  return std::nullopt;
}

CheckResult check_incidence_translation() {
  auto grid = integer_grid(9);
  std::vector<Rational> radii{Rational(1), Rational(2)};
  auto curves = circles_on_line(
      PointSet::of({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}), radii);
  auto before = count_incidences(grid, curves);
  Rational tx(5, 3), ty(-1, 2);
  std::vector<Point> moved;
  for (const auto& p : grid) moved.push_back(Point{p.x + tx, p.y + ty});
  std::vector<PlaneCurve> moved_curves;
  for (const auto& c : curves) moved_curves.push_back(PlaneCurve::from_poly(c.poly.shift(-tx, -ty)));
  auto after = count_incidences(PointSet::of(std::move(moved)), moved_curves);
  if (before.count != after.count) return "incidence count changed under translation";

  auto square = integer_grid(4);
  auto unit_circles = [&] {
    std::vector<PlaneCurve> out;
    for (const auto& p : square) {
      out.push_back(PlaneCurve::circle(Rational(-2) * p.x, Rational(-2) * p.y,
                                       p.x * p.x + p.y * p.y - 1));
    }
    return out;
  }();
  if (count_incidences(square, unit_circles).count != 8) return "unit-circle fixture count != 8";
  return std::nullopt;
}

CheckResult check_experiment_determinism() {
  ExperimentDescriptor desc;
  desc.name = "verify-determinism";
  desc.generator = "grid";
  desc.measurements = {"E2", "D"};
  desc.sweep = {16, 64};
  desc.seeds = {0, 1};
  desc.reference = "n^3 log n";
  auto once = run_experiment(desc, 1);
  auto twice = run_experiment(desc, 1);
  auto threaded = run_experiment(desc, 4);
  if (once != twice) return "repeat run differs";
  if (once != threaded) return "threaded run differs";
  return std::nullopt;
}

}  // namespace

int verify_suite(std::ostream& out) {
  struct NamedCheck {
    const char* name;
    CheckResult (*run)();
  };
  const NamedCheck checks[] = {
      {"sqdist-symmetry-zero", check_sqdist_basics},
      {"sqdist-transform-invariance", check_sqdist_transforms},
      {"spectrum-pair-totals", check_spectrum_total},
      {"energy-oracle-equivalence", check_energy_oracle},
      {"distinct-energy-oracle", check_distinct_energy},
      {"holder-lower-bound", check_holder_eq3},
      {"bipartite-power-mean", check_bipartite_holder},
      {"energy-monotonicity", check_energy_monotonicity},
      {"spectrum-transform-invariance", check_spectrum_transforms},
      {"dyadic-energy-bracket", check_dyadic_bracket},
      {"set-intersection-guarantee", check_lemma11},
      {"behrend-pipeline", check_behrend_pipeline},
      {"elekes-construction", check_elekes},
      {"hand-fixtures", check_fixtures},
      {"extraction-property", check_extraction},
      {"interpolation-inequalities", check_interpolation},
      {"curve-energy-ratios", check_parabola_energy},
      {"expansion-energy-oracle", check_expansion_energy},
      {"degeneracy-crossval", check_degeneracy_crossval},
      {"decompose-recompose", check_decompose},
      {"curve-family-distinctness", check_curve_family},
      {"value-multiplicity-bounds", check_value_bounds},
      {"axis-circle-k22-free", check_circle_k22},
      {"incidence-translation", check_incidence_translation},
      {"experiment-determinism", check_experiment_determinism},
  };
  int failures = 0;
  for (const auto& check : checks) {
    CheckResult result;
    try {
      result = check.run();
    } catch (const std::exception& e) {
      result = std::string("exception: ") + e.what();
    }
    if (result) {
      ++failures;
      out << "FAIL " << check.name << ": " << *result << "\n";
    } else {
      out << "ok " << check.name << "\n";
    }
  }
  return failures;
}

}  // namespace disten


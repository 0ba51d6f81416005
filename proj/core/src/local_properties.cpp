#include "disten/local_properties.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace disten {

LocalPropertyParams LocalPropertyParams::from_cd(std::uint64_t c, std::uint64_t d) {
  if (c < 2 || d < 2) throw validation_error("LocalPropertyParams requires c, d >= 2");
  LocalPropertyParams params;
  params.k = c * (d + 1);
  BigInt l = binomial(params.k, 2) - BigInt(d) * BigInt(c) + BigInt(d + 1);
  params.l = l.convert_to<std::uint64_t>();
  params.cd = std::make_pair(c, d);
  return params;
}

namespace {

// Pairwise distance classes as small dense ids; id 0 is reserved for "same
// point" and never queried.
std::vector<std::vector<std::uint32_t>> class_id_matrix(const PointSet& set) {
  const std::size_t n = set.size();
  std::map<Rational, std::uint32_t> ids;
  std::vector<std::vector<std::uint32_t>> matrix(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto [it, inserted] = ids.emplace(sqdist(set[i], set[j]), 0);
      (void)inserted;
    }
  }
  std::uint32_t next = 1;
  for (auto& [key, id] : ids) id = next++;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::uint32_t id = ids.at(sqdist(set[i], set[j]));
      matrix[i][j] = id;
      matrix[j][i] = id;
    }
  }
  return matrix;
}

}  // namespace

LocalPropertyReport min_distinct_over_ksubsets(const PointSet& set, std::uint64_t k,
                                               std::uint64_t subset_cap) {
  const std::size_t n = set.size();
  if (k > n) throw validation_error("min_distinct_over_ksubsets: k exceeds |P|");
  if (k < 1) throw validation_error("min_distinct_over_ksubsets: k must be positive");
  BigInt subsets = binomial(n, k);
  if (subsets > subset_cap) {
    throw cap_exceeded("min_distinct_over_ksubsets: C(" + std::to_string(n) + "," +
                       std::to_string(k) + ") exceeds cap " + std::to_string(subset_cap));
  }

  auto matrix = class_id_matrix(set);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;

  LocalPropertyReport report;
  report.min_distinct = UINT64_MAX;
  std::vector<std::uint32_t> seen;
  seen.reserve(k * (k - 1) / 2);
  while (true) {
    seen.clear();
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) seen.push_back(matrix[idx[a]][idx[b]]);
    }
    std::sort(seen.begin(), seen.end());
    std::uint64_t distinct =
        static_cast<std::uint64_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
    if (distinct < report.min_distinct) {
      report.min_distinct = distinct;
      report.witness.clear();
      for (auto i : idx) report.witness.push_back(set[i]);
    }
    // next combination
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  if (report.min_distinct == UINT64_MAX) report.min_distinct = 0;
  return report;
}

ForbiddenConfigReport forbidden_configuration_scan(const PointSet& set, std::uint64_t c,
                                                   std::uint64_t d) {
  if (c < 2 || d < 2) throw validation_error("forbidden_configuration_scan requires c, d >= 2");
  ForbiddenConfigReport report;
  report.codistance_limit = d * c - d + 1;
  report.max_codistance = disten::max_codistance(set);
  report.codistance_violation = report.max_codistance >= report.codistance_limit;

  auto spectrum = multiplicity_spectrum(set);
  report.max_pairs_unordered = spectrum.max_multiplicity() / 2;
  report.pair_ceiling = Rational(BigInt(d) * BigInt(c - 1) * BigInt(set.size()), 2);
  report.pair_violation = Rational(report.max_pairs_unordered) > report.pair_ceiling;
  return report;
}

IntersectionWitness set_intersection_witness(const std::vector<std::vector<std::uint64_t>>& family,
                                             unsigned d, std::uint64_t tuple_cap) {
  if (d < 2) throw validation_error("set_intersection_witness requires d >= 2");
  if (family.size() < d) throw validation_error("set_intersection_witness: family smaller than d");
  if (binomial(family.size(), d) > tuple_cap) {
    throw cap_exceeded("set_intersection_witness: C(" + std::to_string(family.size()) + "," +
                       std::to_string(d) + ") exceeds cap " + std::to_string(tuple_cap));
  }

  std::uint64_t universe = 0;
  for (const auto& s : family) {
    for (auto e : s) universe = std::max(universe, e + 1);
  }
  const std::size_t words = (universe + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(family.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (auto e : family[i]) masks[i][e / 64] |= std::uint64_t{1} << (e % 64);
  }

  IntersectionWitness best;
  std::vector<std::size_t> idx(d);
  for (unsigned i = 0; i < d; ++i) idx[i] = i;
  std::vector<std::uint64_t> buf(words);
  while (true) {
    buf = masks[idx[0]];
    for (unsigned i = 1; i < d; ++i) {
      for (std::size_t w = 0; w < words; ++w) buf[w] &= masks[idx[i]][w];
    }
    std::uint64_t size = 0;
    for (auto w : buf) size += static_cast<std::uint64_t>(std::popcount(w));
    if (best.indices.empty() || size > best.size) {
      best.size = size;
      best.indices.assign(idx.begin(), idx.end());
    }
    std::size_t pos = d;
    while (pos > 0 && idx[pos - 1] == family.size() - d + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < d; ++i) idx[i] = idx[i - 1] + 1;
  }
  return best;
}

}  // namespace disten

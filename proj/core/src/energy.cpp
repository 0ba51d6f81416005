#include "disten/energy.hpp"

#include <algorithm>
#include <map>

namespace disten {

BigInt energy(const MultiplicitySpectrum& spectrum, unsigned d) {
  if (d < 1) throw validation_error("energy requires d >= 1");
  BigInt sum = 0;
  for (const auto& [key, count] : spectrum.entries) sum += ipow(BigInt(count), d);
  return sum;
}

namespace {

std::uint64_t default_n_cap(unsigned d) { return d <= 3 ? 12 : 8; }

struct OrderedPair {
  std::uint32_t a;
  std::uint32_t b;
  std::uint32_t klass;
};

// All ordered pairs of distinct points, tagged with the id of their distance
// class. Class ids are assigned in ascending squared-distance order.
std::vector<OrderedPair> classed_pairs(const PointSet& set) {
  std::map<Rational, std::uint32_t> ids;
  const std::size_t n = set.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) ids.emplace(sqdist(set[i], set[j]), 0);
  }
  std::uint32_t next = 0;
  for (auto& [key, id] : ids) id = next++;
  std::vector<OrderedPair> pairs;
  pairs.reserve(n * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      pairs.push_back(OrderedPair{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                  ids.at(sqdist(set[i], set[j]))});
    }
  }
  return pairs;
}

}  // namespace

BigInt energy_bruteforce(const PointSet& set, unsigned d, std::uint64_t n_cap) {
  if (d < 1) throw validation_error("energy_bruteforce requires d >= 1");
  const std::uint64_t cap = n_cap == 0 ? default_n_cap(d) : n_cap;
  if (set.size() > cap) {
    throw cap_exceeded("energy_bruteforce: n = " + std::to_string(set.size()) +
                       " exceeds cap " + std::to_string(cap));
  }
  auto pairs = classed_pairs(set);
  BigInt count = 0;
  // Walks every ordered 2d-tuple with equal positive distances one at a
  // time, pruning branches whose class differs from the first pair's.
  for (const auto& first : pairs) {
    auto recurse = [&](auto&& self, unsigned depth) -> void {
      if (depth == d) {
        ++count;
        return;
      }
      for (const auto& p : pairs) {
        if (p.klass == first.klass) self(self, depth + 1);
      }
    };
    recurse(recurse, 1);
  }
  return count;
}

BigInt distinct_energy(const PointSet& set, unsigned d, std::uint64_t n_cap) {
  if (d < 1) throw validation_error("distinct_energy requires d >= 1");
  const std::uint64_t cap = n_cap == 0 ? default_n_cap(d) : n_cap;
  if (set.size() > cap) {
    throw cap_exceeded("distinct_energy: n = " + std::to_string(set.size()) +
                       " exceeds cap " + std::to_string(cap));
  }
  if (set.size() < 2 * static_cast<std::size_t>(d)) return 0;  // pigeonhole

  auto pairs = classed_pairs(set);
  std::uint32_t classes = 0;
  for (const auto& p : pairs) classes = std::max(classes, p.klass + 1);
  std::vector<std::vector<OrderedPair>> by_class(classes);
  for (const auto& p : pairs) by_class[p.klass].push_back(p);

  BigInt count = 0;
  std::vector<char> used(set.size(), 0);
  for (const auto& klass : by_class) {
    // Ordered d-tuples of vertex-disjoint ordered pairs within one class.
    auto recurse = [&](auto&& self, unsigned depth) -> void {
      if (depth == d) {
        ++count;
        return;
      }
      for (const auto& p : klass) {
        if (used[p.a] || used[p.b]) continue;
        used[p.a] = used[p.b] = 1;
        self(self, depth + 1);
        used[p.a] = used[p.b] = 0;
      }
    };
    recurse(recurse, 0);
  }
  return count;
}

Rational holder_lower_bound(std::uint64_t n, std::uint64_t distinct, unsigned d) {
  if (d < 1) throw validation_error("holder_lower_bound requires d >= 1");
  if (n < 2) throw validation_error("holder_lower_bound requires n >= 2");
  if (distinct == 0) throw validation_error("holder_lower_bound: D = 0 with n >= 2 is inconsistent");
  BigInt pairs = BigInt(n) * BigInt(n) - BigInt(n);
  return Rational(ipow(pairs, d), ipow(BigInt(distinct), d - 1));
}

namespace {

std::uint64_t choose2(std::uint64_t g) { return g * (g - 1) / 2; }

// Per-apex equidistant-neighbor groups. Rational coordinates admit no
// equilateral triangles (the area would be irrational), so each isosceles
// triple has exactly one apex and the apex sum counts triples once.
template <typename GroupFn>
void for_each_apex_group(const PointSet& set, GroupFn&& fn) {
  auto scaled = integerize(set);
  const std::size_t n = set.size();
  if (scaled) {
    std::vector<std::uint64_t> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t out = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        std::int64_t dx = scaled->coords[i].first - scaled->coords[j].first;
        std::int64_t dy = scaled->coords[i].second - scaled->coords[j].second;
        keys[out++] = static_cast<std::uint64_t>(dx * dx) + static_cast<std::uint64_t>(dy * dy);
      }
      std::sort(keys.begin(), keys.begin() + out);
      std::size_t run = 1;
      for (std::size_t j = 1; j <= out; ++j) {
        if (j < out && keys[j] == keys[j - 1]) {
          ++run;
        } else {
          fn(run);
          run = 1;
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      std::map<Rational, std::uint64_t> groups;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        ++groups[sqdist(set[i], set[j])];
      }
      for (const auto& [key, g] : groups) fn(g);
    }
  }
}

}  // namespace

std::uint64_t isosceles_count(const PointSet& set) {
  if (set.size() < 3) return 0;
  std::uint64_t triples = 0;
  for_each_apex_group(set, [&](std::uint64_t g) { triples += choose2(g); });
  return triples;
}

std::uint64_t max_codistance(const PointSet& set) {
  if (set.size() < 2) return 0;
  std::uint64_t best = 0;
  for_each_apex_group(set, [&](std::uint64_t g) { best = std::max(best, g); });
  return best;
}

EnergyReport energy_report(const PointSet& set, unsigned d, unsigned threads) {
  auto spectrum = multiplicity_spectrum(set, threads);
  EnergyReport report;
  report.n = set.size();
  report.d = d;
  report.distinct = spectrum.distinct();
  report.e_d = energy(spectrum, d);
  report.max_multiplicity = spectrum.max_multiplicity();
  report.holder_lower =
      set.size() >= 2 ? holder_lower_bound(set.size(), spectrum.distinct(), d) : Rational(0);
  return report;
}

}  // namespace disten

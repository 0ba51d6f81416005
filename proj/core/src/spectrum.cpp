#include "disten/spectrum.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <unordered_map>

namespace disten {

std::uint64_t MultiplicitySpectrum::max_multiplicity() const {
  std::uint64_t best = 0;
  for (const auto& [key, count] : entries) best = std::max(best, count);
  return best;
}

std::uint64_t MultiplicitySpectrum::multiplicity_of(const Rational& key) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), key,
                             [](const auto& entry, const Rational& k) { return entry.first < k; });
  if (it == entries.end() || it->first != key) return 0;
  return it->second;
}

namespace {

// Dense counting is worthwhile only while the table stays cache-friendly.
constexpr std::uint64_t kDenseKeyLimit = 1u << 22;

MultiplicitySpectrum from_integer_counts(std::vector<std::pair<std::uint64_t, std::uint64_t>> counts,
                                         const BigInt& scale) {
  std::sort(counts.begin(), counts.end());
  MultiplicitySpectrum spectrum;
  spectrum.entries.reserve(counts.size());
  const BigInt scale_sq = scale * scale;
  for (const auto& [key, count] : counts) {
    spectrum.entries.emplace_back(Rational(BigInt(key), scale_sq), count);
    spectrum.total += count;
  }
  return spectrum;
}

std::uint64_t int_sqdist(const std::pair<std::int64_t, std::int64_t>& a,
                         const std::pair<std::int64_t, std::int64_t>& b) {
  std::int64_t dx = a.first - b.first;
  std::int64_t dy = a.second - b.second;
  return static_cast<std::uint64_t>(dx * dx) + static_cast<std::uint64_t>(dy * dy);
}

MultiplicitySpectrum spectrum_fast(const ScaledInts& scaled, unsigned threads) {
  const std::size_t n = scaled.coords.size();
  std::uint64_t max_key = 0;
  if (n > 1) {
    std::int64_t min_x = scaled.coords[0].first, max_x = min_x;
    std::int64_t min_y = scaled.coords[0].second, max_y = min_y;
    for (const auto& [x, y] : scaled.coords) {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
    std::int64_t sx = max_x - min_x, sy = max_y - min_y;
    max_key = static_cast<std::uint64_t>(sx * sx) + static_cast<std::uint64_t>(sy * sy);
  }

  const unsigned workers = std::max(1u, threads);
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> maps(workers);
  std::vector<std::vector<std::uint64_t>> dense;
  const bool use_dense = max_key < kDenseKeyLimit / workers;
  if (use_dense) dense.assign(workers, std::vector<std::uint64_t>(max_key + 1, 0));

  auto work = [&](unsigned w) {
    auto& map = maps[w];
    auto* table = use_dense ? dense[w].data() : nullptr;
    for (std::size_t i = w; i < n; i += workers) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::uint64_t key = int_sqdist(scaled.coords[i], scaled.coords[j]);
        if (key == 0) continue;  // deduplicated input; defensive only
        if (use_dense) {
          table[key] += 2;  // ordered pairs (i,j) and (j,i)
        } else {
          map[key] += 2;
        }
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;
  if (use_dense) {
    for (std::uint64_t key = 1; key <= max_key; ++key) {
      std::uint64_t total = 0;
      for (unsigned w = 0; w < workers; ++w) total += dense[w][key];
      if (total > 0) counts.emplace_back(key, total);
    }
  } else {
    std::unordered_map<std::uint64_t, std::uint64_t> merged;
    for (auto& map : maps) {
      for (const auto& [key, count] : map) merged[key] += count;
    }
    counts.assign(merged.begin(), merged.end());
  }
  return from_integer_counts(std::move(counts), scaled.scale);
}

MultiplicitySpectrum spectrum_exact(const PointSet& set) {
  std::map<Rational, std::uint64_t> counts;
  const std::size_t n = set.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      counts[sqdist(set[i], set[j])] += 2;
    }
  }
  MultiplicitySpectrum spectrum;
  for (auto& [key, count] : counts) {
    spectrum.entries.emplace_back(key, count);
    spectrum.total += count;
  }
  return spectrum;
}

}  // namespace

MultiplicitySpectrum multiplicity_spectrum(const PointSet& set, unsigned threads) {
  if (set.size() < 2) return {};
  if (auto scaled = integerize(set)) return spectrum_fast(*scaled, threads);
  return spectrum_exact(set);
}

MultiplicitySpectrum bipartite_spectrum(const PointSet& p1, const PointSet& p2) {
  std::map<Rational, std::uint64_t> counts;
  for (const auto& a : p1) {
    for (const auto& b : p2) {
      Rational key = sqdist(a, b);
      if (key == 0) continue;
      counts[key] += 1;
    }
  }
  MultiplicitySpectrum spectrum;
  for (auto& [key, count] : counts) {
    spectrum.entries.emplace_back(key, count);
    spectrum.total += count;
  }
  return spectrum;
}

MultiplicitySpectrum bipartite_spectrum(const PointSet& p1, const QuadSet& p2) {
  for (const auto& a : p1) {
    if (a.y != 0) throw validation_error("bipartite_spectrum with a QuadSet requires P1 on the x-axis");
  }
  std::map<Rational, std::uint64_t> counts;
  for (const auto& a : p1) {
    for (const auto& b : p2) {
      Rational key = cross_sqdist(a, b);
      if (key == 0) continue;
      counts[key] += 1;
    }
  }
  MultiplicitySpectrum spectrum;
  for (auto& [key, count] : counts) {
    spectrum.entries.emplace_back(key, count);
    spectrum.total += count;
  }
  return spectrum;
}

RichSpectrum rich_spectrum(const MultiplicitySpectrum& spectrum) {
  RichSpectrum rich;
  const std::uint64_t max_mult = spectrum.max_multiplicity();
  if (max_mult == 0) return rich;
  std::vector<std::uint64_t> mults;
  mults.reserve(spectrum.entries.size());
  for (const auto& [key, count] : spectrum.entries) mults.push_back(count);
  std::sort(mults.begin(), mults.end());
  for (std::uint64_t j = 1; j <= max_mult; j *= 2) {
    auto it = std::lower_bound(mults.begin(), mults.end(), j);
    rich.thresholds.push_back(j);
    rich.counts.push_back(static_cast<std::uint64_t>(mults.end() - it));
    if (j > max_mult / 2) break;  // avoid overflow on j *= 2
  }
  return rich;
}

std::string spectrum_csv(const MultiplicitySpectrum& spectrum) {
  std::string out = "sqdist,multiplicity\n";
  for (const auto& [key, count] : spectrum.entries) {
    out += to_string(key);
    out += ',';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

}  // namespace disten

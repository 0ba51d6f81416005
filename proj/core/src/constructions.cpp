#include "disten/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <unordered_set>

namespace disten {

PointSet integer_grid(std::uint64_t n) {
  if (n < 1) throw validation_error("integer_grid requires n >= 1");
  std::uint64_t side = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  while (side * side < n) ++side;
  while (side > 1 && (side - 1) * (side - 1) >= n) --side;
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::uint64_t x = 0; x < side && pts.size() < n; ++x) {
    for (std::uint64_t y = 0; y < side && pts.size() < n; ++y) {
      pts.push_back(Point{Rational(x), Rational(y)});
    }
  }
  return PointSet::of(std::move(pts), "grid");
}

namespace {

constexpr std::int64_t kMaxSphereDigitBound = 32;

// Digit vectors in {0,...,q-1}^dim bucketed by squared norm; values read in
// base 2q-1 never carry when two set elements are added, so each fixed-norm
// bucket is 3-AP-free. Enumerates most-significant digit first and prunes
// prefixes whose completions all overflow the limit.
void enumerate_sphere(std::int64_t q, std::int64_t dim, std::int64_t raw_limit,
                      std::vector<std::vector<std::int64_t>>& by_norm) {
  const std::int64_t base = 2 * q - 1;
  std::vector<std::int64_t> tail_pow(dim + 1, 1);
  for (std::int64_t i = 1; i <= dim; ++i) tail_pow[i] = tail_pow[i - 1] * base;

  auto recurse = [&](auto&& self, std::int64_t pos, std::int64_t value, std::int64_t norm) -> void {
    if (pos == dim) {
      by_norm[norm].push_back(value + 1);
      return;
    }
    std::int64_t remaining = dim - pos - 1;
    for (std::int64_t digit = 0; digit < q; ++digit) {
      std::int64_t next = value * base + digit;
      if (next > raw_limit / tail_pow[remaining]) break;
      self(self, pos + 1, next, norm + digit * digit);
    }
  };
  recurse(recurse, 0, 0, 0);
}

std::vector<std::int64_t> best_sphere_set(std::uint64_t n_limit) {
  std::vector<std::int64_t> best;
  const std::int64_t raw_limit = static_cast<std::int64_t>(n_limit) - 1;  // values are shifted by +1
  for (std::int64_t q = 2; q <= kMaxSphereDigitBound; ++q) {
    const std::int64_t base = 2 * q - 1;
    std::int64_t scale = 1;  // base^(dim-1)
    for (std::int64_t dim = 1; scale <= raw_limit; ++dim) {
      std::vector<std::vector<std::int64_t>> by_norm(
          static_cast<std::size_t>(dim * (q - 1) * (q - 1)) + 1);
      enumerate_sphere(q, dim, raw_limit, by_norm);
      for (auto& bucket : by_norm) {
        if (bucket.size() > best.size()) {
          std::sort(bucket.begin(), bucket.end());
          best = bucket;
        }
      }
      if (scale > raw_limit / base) break;
      scale *= base;
    }
  }
  return best;
}

// First-fit scan over {1,...,N}; beats thin spheres at desk-scale N.
std::vector<std::int64_t> greedy_ap_free(std::uint64_t n_limit) {
  std::vector<std::int64_t> out;
  std::unordered_set<std::int64_t> members;
  for (std::int64_t v = 1; v <= static_cast<std::int64_t>(n_limit); ++v) {
    bool ok = true;
    for (auto x : out) {
      if ((x + v) % 2 == 0 && members.count((x + v) / 2)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.push_back(v);
      members.insert(v);
    }
  }
  return out;
}

}  // namespace

std::vector<std::int64_t> behrend_set(std::uint64_t n_limit) {
  if (n_limit < 1) throw validation_error("behrend_set requires N >= 1");
  if (n_limit == 1) return {1};
  auto sphere = best_sphere_set(n_limit);
  if (n_limit <= 100'000) {
    auto greedy = greedy_ap_free(n_limit);
    if (greedy.size() > sphere.size()) return greedy;
  }
  return sphere;
}

bool is_progression_free(const std::vector<std::int64_t>& values) {
  std::vector<std::int64_t> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::unordered_set<std::int64_t> members(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      std::int64_t sum = sorted[i] + sorted[j];
      if (sum % 2 == 0 && members.count(sum / 2) && sum / 2 != sorted[i] && sum / 2 != sorted[j]) {
        return false;
      }
    }
  }
  return true;
}

PointSet behrend_collinear(std::uint64_t n_limit) {
  auto values = behrend_set(n_limit);
  std::vector<Point> pts;
  pts.reserve(values.size());
  for (auto v : values) pts.push_back(Point{Rational(v), Rational(0)});
  return PointSet::of(std::move(pts), "behrend_collinear");
}

BipartiteConstruction elekes_bipartite(std::uint64_t m, std::uint64_t n) {
  if (m < 1) throw validation_error("elekes_bipartite requires m >= 1");
  if (n < 4 * m * m * m) throw validation_error("elekes_bipartite requires n >= 4m^3");

  BipartiteConstruction out;
  out.m = m;
  out.n = n;
  out.a_count = static_cast<std::uint64_t>(
      std::ceil(std::sqrt(static_cast<double>(n) / static_cast<double>(m))));
  while (out.a_count * out.a_count * m < n) ++out.a_count;
  while (out.a_count > 1 && (out.a_count - 1) * (out.a_count - 1) * m >= n) --out.a_count;
  out.b_count = (n + out.a_count - 1) / out.a_count;

  std::vector<Point> line;
  line.reserve(m);
  for (std::uint64_t i = 1; i <= m; ++i) line.push_back(Point{Rational(i), Rational(0)});
  out.line_points = PointSet::of(std::move(line), "elekes_line");

  // b - a^2/4 stays positive for every digit a thanks to the shared offset.
  const std::uint64_t offset = (out.a_count * out.a_count + 3) / 4;  // ceil(A^2/4)
  std::vector<QuadPoint> plane;
  plane.reserve(n);
  for (std::uint64_t a = 1; a <= out.a_count && plane.size() < n; ++a) {
    for (std::uint64_t b = offset + 1; b <= offset + out.b_count && plane.size() < n; ++b) {
      Rational x = Rational(a, 2);
      Rational ysq = Rational(b) - Rational(a * a, 4);
      plane.push_back(QuadPoint{x, ysq});
    }
  }
  out.plane_points = QuadSet::of(std::move(plane), "elekes_plane");
  return out;
}

PointSet random_pointset(std::uint64_t n, std::uint64_t coord_range, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  while (seen.size() < n) {
    std::uint64_t x = gen() % (coord_range + 1);
    std::uint64_t y = gen() % (coord_range + 1);
    seen.emplace(x, y);
  }
  std::vector<Point> pts;
  pts.reserve(n);
  for (const auto& [x, y] : seen) pts.push_back(Point{Rational(x), Rational(y)});
  return PointSet::of(std::move(pts), "random");
}

}  // namespace disten

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "disten/rational.hpp"

namespace disten {

/// Planar point with exact rational coordinates.
struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

/// Point above the x-axis given as (x, y^2); the y-coordinate itself may be
/// irrational, but every squared distance to an axis point stays rational.
struct QuadPoint {
  Rational x;
  Rational ysq;  // >= 0

  friend bool operator==(const QuadPoint& a, const QuadPoint& b) {
    return a.x == b.x && a.ysq == b.ysq;
  }
  friend bool operator<(const QuadPoint& a, const QuadPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.ysq < b.ysq;
  }
};

/// Deduplicated set of points kept in ascending lexicographic (x, y) order.
class PointSet {
 public:
  PointSet() = default;
  static PointSet of(std::vector<Point> points, std::string label = {});

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  bool contains(const Point& p) const;
  const std::string& label() const { return label_; }

 private:
  std::vector<Point> points_;
  std::string label_;
};

/// Deduplicated set of QuadPoints in ascending (x, ysq) order.
class QuadSet {
 public:
  QuadSet() = default;
  static QuadSet of(std::vector<QuadPoint> points, std::string label = {});

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const QuadPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<QuadPoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const std::string& label() const { return label_; }

 private:
  std::vector<QuadPoint> points_;
  std::string label_;
};

/// Squared Euclidean distance; zero iff p == q.
Rational sqdist(const Point& p, const Point& q);

/// Squared distance from an axis point a (a.y must be 0) to a QuadPoint:
/// (a.x - b.x)^2 + b.ysq.
Rational cross_sqdist(const Point& a, const QuadPoint& b);

struct ParsedPoints {
  PointSet set;
  std::size_t duplicates_dropped = 0;
};

struct ParsedQuadPoints {
  QuadSet set;
  std::size_t duplicates_dropped = 0;
};

/// Point-set file: one point per line, two whitespace-separated rationals;
/// '#' starts a comment; duplicates are dropped (count reported).
ParsedPoints parse_pointset(std::string_view text, std::string label = {});

/// Same format with a third column carrying ysq.
ParsedQuadPoints parse_quadset(std::string_view text, std::string label = {});

std::string write_pointset(const PointSet& set);
std::string write_quadset(const QuadSet& set);

/// Points rescaled to a common integer grid: coords[i] = scale * points[i],
/// valid only when every scaled coordinate fits comfortably in int64 so that
/// squared distances cannot overflow. Squared distances in the scaled frame
/// equal scale^2 times the true ones.
struct ScaledInts {
  std::vector<std::pair<std::int64_t, std::int64_t>> coords;
  BigInt scale;
};

std::optional<ScaledInts> integerize(const PointSet& set,
                                     std::int64_t coord_limit = 1'000'000'000);

}  // namespace disten

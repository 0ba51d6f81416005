#include "disten/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace disten {

PointSet PointSet::of(std::vector<Point> points, std::string label) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  PointSet set;
  set.points_ = std::move(points);
  set.label_ = std::move(label);
  return set;
}

bool PointSet::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

QuadSet QuadSet::of(std::vector<QuadPoint> points, std::string label) {
  for (const auto& p : points) {
    if (p.ysq < 0) throw validation_error("QuadPoint with negative ysq");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  QuadSet set;
  set.points_ = std::move(points);
  set.label_ = std::move(label);
  return set;
}

Rational sqdist(const Point& p, const Point& q) {
  Rational dx = p.x - q.x;
  Rational dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Rational cross_sqdist(const Point& a, const QuadPoint& b) {
  if (a.y != 0) throw validation_error("cross_sqdist requires the first point on the x-axis");
  Rational dx = a.x - b.x;
  return dx * dx + b.ysq;
}

namespace {

std::vector<std::vector<std::string>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> fields;
    std::istringstream iss{std::string(line)};
    std::string tok;
    while (iss >> tok) fields.push_back(tok);
    if (!fields.empty()) rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

ParsedPoints parse_pointset(std::string_view text, std::string label) {
  std::vector<Point> pts;
  for (const auto& fields : tokenize_lines(text)) {
    if (fields.size() != 2) {
      throw validation_error("point line must have exactly two fields");
    }
    pts.push_back(Point{parse_rational(fields[0]), parse_rational(fields[1])});
  }
  std::size_t raw = pts.size();
  PointSet set = PointSet::of(std::move(pts), std::move(label));
  return ParsedPoints{set, raw - set.size()};
}

ParsedQuadPoints parse_quadset(std::string_view text, std::string label) {
  std::vector<QuadPoint> pts;
  for (const auto& fields : tokenize_lines(text)) {
    if (fields.size() != 3) {
      throw validation_error("quad-point line must have exactly three fields (x y_ignored ysq) or (x 0 ysq)");
    }
    // Third column is ysq; the second is the nominal y and is not used beyond
    // the file format's two-coordinate shape.
    pts.push_back(QuadPoint{parse_rational(fields[0]), parse_rational(fields[2])});
  }
  std::size_t raw = pts.size();
  QuadSet set = QuadSet::of(std::move(pts), std::move(label));
  return ParsedQuadPoints{set, raw - set.size()};
}

std::string write_pointset(const PointSet& set) {
  std::string out;
  for (const auto& p : set) {
    out += to_string(p.x);
    out += ' ';
    out += to_string(p.y);
    out += '\n';
  }
  return out;
}

std::string write_quadset(const QuadSet& set) {
  std::string out;
  for (const auto& p : set) {
    out += to_string(p.x);
    out += " 0 ";
    out += to_string(p.ysq);
    out += '\n';
  }
  return out;
}

std::optional<ScaledInts> integerize(const PointSet& set, std::int64_t coord_limit) {
  BigInt lcm = 1;
  for (const auto& p : set) {
    lcm = boost::multiprecision::lcm(lcm, denominator(p.x));
    lcm = boost::multiprecision::lcm(lcm, denominator(p.y));
    if (lcm > coord_limit) return std::nullopt;
  }
  ScaledInts out;
  out.scale = lcm;
  out.coords.reserve(set.size());
  const BigInt limit = coord_limit;
  for (const auto& p : set) {
    BigInt sx = numerator(p.x) * (lcm / denominator(p.x));
    BigInt sy = numerator(p.y) * (lcm / denominator(p.y));
    if (abs(sx) > limit || abs(sy) > limit) return std::nullopt;
    out.coords.emplace_back(sx.convert_to<std::int64_t>(), sy.convert_to<std::int64_t>());
  }
  return out;
}

}  // namespace disten

#include "disten/incidence.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace disten {

PlaneCurve PlaneCurve::from_poly(BivariatePolynomial poly) {
  if (poly.is_zero()) throw validation_error("PlaneCurve requires a nonzero polynomial");
  PlaneCurve curve;
  curve.poly = std::move(poly);
  return curve;
}

PlaneCurve PlaneCurve::circle(Rational u, Rational v, Rational w) {
  Rational radius_sq = (u * u + v * v) / 4 - w;
  if (radius_sq <= 0) throw validation_error("circle with nonpositive squared radius");
  PlaneCurve curve;
  curve.poly = BivariatePolynomial::term(Rational(1), 2, 0) +
               BivariatePolynomial::term(Rational(1), 0, 2) +
               BivariatePolynomial::term(u, 1, 0) + BivariatePolynomial::term(v, 0, 1) +
               BivariatePolynomial::constant(w);
  curve.is_circle = true;
  curve.u = std::move(u);
  curve.v = std::move(v);
  curve.w = std::move(w);
  return curve;
}

IncidenceReport count_incidences(const PointSet& points, const std::vector<PlaneCurve>& curves,
                                 std::uint64_t eval_cap) {
  const std::uint64_t evals = static_cast<std::uint64_t>(points.size()) * curves.size();
  if (evals > eval_cap) {
    throw cap_exceeded("count_incidences: " + std::to_string(evals) + " evaluations exceed cap " +
                       std::to_string(eval_cap));
  }
  IncidenceReport report;
  report.per_curve.assign(curves.size(), 0);
  // Pairs of points shared by some earlier curve; a repeat breaks K_{2,2}-freeness.
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  std::vector<std::size_t> incident;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    incident.clear();
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (curves[c].poly(points[i].x, points[i].y) == 0) incident.push_back(i);
    }
    report.per_curve[c] = incident.size();
    report.count += incident.size();
    for (std::size_t a = 0; a < incident.size(); ++a) {
      for (std::size_t b = a + 1; b < incident.size(); ++b) {
        if (!seen_pairs.emplace(incident[a], incident[b]).second) report.k22_free = false;
      }
    }
  }
  return report;
}

std::vector<PlaneCurve> circles_on_line(const PointSet& centers,
                                        const std::vector<Rational>& sq_radii) {
  for (const auto& c : centers) {
    if (c.y != 0) throw validation_error("circles_on_line requires centers on the x-axis");
  }
  std::set<std::pair<Rational, Rational>> unique;
  for (const auto& c : centers) {
    for (const auto& r2 : sq_radii) {
      if (r2 <= 0) throw validation_error("circles_on_line requires positive squared radii");
      unique.emplace(c.x, r2);
    }
  }
  std::vector<PlaneCurve> curves;
  curves.reserve(unique.size());
  for (const auto& [cx, r2] : unique) {
    // (x - cx)^2 + y^2 = r2  =>  u = -2cx, v = 0, w = cx^2 - r2
    curves.push_back(PlaneCurve::circle(Rational(-2) * cx, Rational(0), cx * cx - r2));
  }
  return curves;
}

LatticeCountReport variety_lattice_count(const BivariatePolynomial& f,
                                         const std::vector<Rational>& a_set,
                                         const std::vector<Rational>& b_set) {
  if (f.is_zero()) throw validation_error("variety_lattice_count: zero polynomial");
  LatticeCountReport report;
  for (const auto& a : a_set) {
    if (f.at_x(a).is_zero()) {
      report.axis_parallel_factor = true;
      break;
    }
  }
  if (!report.axis_parallel_factor) {
    for (const auto& b : b_set) {
      if (f.at_y(b).is_zero()) {
        report.axis_parallel_factor = true;
        break;
      }
    }
  }
  for (const auto& a : a_set) {
    auto row = f.at_x(a);
    for (const auto& b : b_set) {
      if (row(b) == 0) ++report.count;
    }
  }
  return report;
}

}  // namespace disten

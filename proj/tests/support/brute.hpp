#ifndef COVPACK_TESTS_BRUTE_HPP
#define COVPACK_TESTS_BRUTE_HPP

// Test-only geometric oracles, deliberately independent of the library's
// simplex/witness machinery: hulls by monotone chain, gauges by ray casting,
// distances by golden-section search along hull edges.

#include <algorithm>
#include <cmath>
#include <vector>

#include "covpack/body.hpp"

namespace covpack::testsupport {

inline double brute_gauge(const ConvexBody<double>& B, const Vec<double>& w) {
  switch (B.kind()) {
    case BodyKind::HPolytope: {
      double best = 0;
      for (const auto& a : B.generators()) best = std::max(best, std::fabs(dot(a, w)));
      return best / B.scale();
    }
    case BodyKind::Ellipsoid:
      return std::sqrt(std::max(0.0, dot(w, matvec(B.ellipsoid_matrix(), w)))) / B.scale();
    case BodyKind::LpBall: {
      double p = B.lp_exponent();
      double s = 0;
      if (std::isinf(p)) {
        for (double v : w) s = std::max(s, std::fabs(v));
      } else {
        for (double v : w) s += std::pow(std::fabs(v), p);
        s = std::pow(s, 1.0 / p);
      }
      return s / (B.lp_radius() * B.scale());
    }
    case BodyKind::VPolytope: {
      // 2-D only: cast the ray t*w against the generator polygon boundary.
      if (is_zero(w)) return 0.0;
      std::vector<Vec<double>> pts;
      for (const auto& g : B.generators()) {
        pts.push_back(scaled(g, B.scale()));
        pts.push_back(scaled(g, -B.scale()));
      }
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      auto cross = [](const Vec<double>& o, const Vec<double>& a, const Vec<double>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
      };
      std::vector<Vec<double>> hull;
      for (int pass = 0; pass < 2; ++pass) {
        std::size_t start = hull.size();
        for (const auto& p : pts) {
          while (hull.size() >= start + 2 &&
                 cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
            hull.pop_back();
          hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
      }
      double tmax = 0;
      for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        // solve t*w = a + s*(b-a)
        double m00 = w[0], m01 = a[0] - b[0], m10 = w[1], m11 = a[1] - b[1];
        double det = m00 * m11 - m01 * m10;
        if (std::fabs(det) < 1e-14) continue;
        double t = (a[0] * m11 - a[1] * m01) / det;
        double s = (m00 * a[1] - m10 * a[0]) / det;
        if (s >= -1e-12 && s <= 1 + 1e-12 && t > 1e-14) tmax = std::max(tmax, t);
      }
      if (tmax <= 0) return std::numeric_limits<double>::infinity();
      return 1.0 / tmax;
    }
  }
  return 0.0;
}

inline double segment_gauge_distance(const ConvexBody<double>& B, const Vec<double>& x,
                                     const Vec<double>& a, const Vec<double>& b) {
  auto eval = [&](double s) {
    Vec<double> p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + s * (b[i] - a[i]) - x[i];
    return brute_gauge(B, p);
  };
  double lo = 0, hi = 1;
  const double golden = 0.6180339887498949;
  double x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
  double f1 = eval(x1), f2 = eval(x2);
  for (int it = 0; it < 200; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - golden * (hi - lo);
      f1 = eval(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + golden * (hi - lo);
      f2 = eval(x2);
    }
  }
  return std::min({eval(0.0), eval(1.0), eval((lo + hi) / 2)});
}

/// Gauge distance from x to conv(prior), dimensions 1 and 2 only.
inline double brute_hull_distance(const Vec<double>& x, std::vector<Vec<double>> prior,
                                  const ConvexBody<double>& B) {
  std::sort(prior.begin(), prior.end());
  prior.erase(std::unique(prior.begin(), prior.end()), prior.end());
  if (prior.size() == 1) return brute_gauge(B, sub(x, prior[0]));
  if (x.size() == 1) {
    double lo = prior[0][0], hi = prior.back()[0];
    double v = x[0];
    double excess = v > hi ? v - hi : (v < lo ? lo - v : 0.0);
    return brute_gauge(B, {excess});
  }
  auto cross = [](const Vec<double>& o, const Vec<double>& a, const Vec<double>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vec<double>> hull;
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t start = hull.size();
    for (const auto& p : prior) {
      while (hull.size() >= start + 2 &&
             cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
        hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(prior.begin(), prior.end());
  }
  if (hull.size() >= 3) {
    bool inside = true;
    for (std::size_t i = 0; i < hull.size() && inside; ++i) {
      if (cross(hull[i], hull[(i + 1) % hull.size()], x) < -1e-12) inside = false;
    }
    if (inside) return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    best = std::min(best,
                    segment_gauge_distance(B, x, hull[i], hull[(i + 1) % hull.size()]));
  }
  return best;
}

}  // namespace covpack::testsupport

#endif  // COVPACK_TESTS_BRUTE_HPP

#ifndef COVPACK_ORACLE_HPP
#define COVPACK_ORACLE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covpack/body.hpp"
#include "covpack/linalg.hpp"
#include "covpack/simplex.hpp"

namespace covpack {

/// Numerical breakdown of a witness search; deliberately distinct from a
/// clean "infeasible" answer.
class oracle_error : public std::runtime_error {
 public:
  explicit oracle_error(const std::string& what) : std::runtime_error(what) {}
};

template <class S>
struct SeparationResult {
  bool feasible = false;         // (x + int B) and conv(prior) are disjoint
  bool margin_infinite = false;  // empty prior: every direction separates
  S margin{0};                   // certified margin of the witness below
  std::optional<Vec<S>> witness; // y in B° with <y, x - x_i> >= margin
  std::string method;
};

namespace detail {

template <class S>
S certified_margin(const Vec<S>& y, const Vec<S>& x, const std::vector<Vec<S>>& prior) {
  S m = dot(y, sub(x, prior[0]));
  for (std::size_t i = 1; i < prior.size(); ++i) m = std::min(m, dot(y, sub(x, prior[i])));
  return m;
}

template <class S>
bool margin_admissible(const S& m) {
  if constexpr (scalar_traits<S>::exact) {
    return m >= S(1);
  } else {
    return m >= 1.0 - scalar_traits<S>::tolerance();
  }
}

/// One-dimensional case: conv(prior) is the interval [lo, hi].
template <class S>
SeparationResult<S> separate_interval(const Vec<S>& x, const std::vector<Vec<S>>& prior,
                                      const ConvexBody<S>& B) {
  S lo = prior[0][0], hi = prior[0][0];
  for (const auto& p : prior) {
    lo = std::min(lo, p[0]);
    hi = std::max(hi, p[0]);
  }
  SeparationResult<S> out;
  out.method = "interval";
  const S v = x[0];
  const S excess = v > hi ? v - hi : (v < lo ? lo - v : S(0));
  out.margin = B.gauge(Vec<S>{excess});
  out.feasible = margin_admissible(out.margin);
  if (out.margin > S(0)) {
    S unit = B.gauge(Vec<S>{S(1)});  // B = [-1/unit, 1/unit], so B° = [-unit, unit]
    out.witness = Vec<S>{v > hi ? unit : -unit};
  }
  return out;
}

/// B = conv{+-g_i}: witness search is an LP over y (split) and the margin m.
template <class S>
SeparationResult<S> separate_vform(const Vec<S>& x, const std::vector<Vec<S>>& prior,
                                   const std::vector<Vec<S>>& gens) {
  const std::size_t n = x.size();
  Mat<S> A;
  std::vector<Rel> rel;
  Vec<S> b;
  auto push_row = [&](Vec<S> row, Rel r, S rhs) {
    A.push_back(std::move(row));
    rel.push_back(r);
    b.push_back(std::move(rhs));
  };
  for (const auto& g : gens) {
    Vec<S> row(2 * n + 1, S(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = g[j];
      row[n + j] = -g[j];
    }
    push_row(row, Rel::Le, S(1));
    push_row(negated(row), Rel::Le, S(1));
  }
  for (const auto& p : prior) {
    Vec<S> d = sub(x, p);
    Vec<S> row(2 * n + 1, S(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = d[j];
      row[n + j] = -d[j];
    }
    row[2 * n] = S(-1);
    push_row(row, Rel::Ge, S(0));
  }
  Vec<S> c(2 * n + 1, S(0));
  c[2 * n] = S(-1);  // maximize m
  auto res = solve_lp(A, rel, b, c);
  if (res.status != LpStatus::Optimal)
    throw oracle_error("witness LP did not solve (separating body degenerate?)");
  SeparationResult<S> out;
  out.method = "lp-vform";
  Vec<S> y(n);
  for (std::size_t j = 0; j < n; ++j) y[j] = res.x[j] - res.x[n + j];
  out.margin = res.x[2 * n];
  out.feasible = margin_admissible(out.margin);
  out.witness = std::move(y);
  return out;
}

/// B = {x : |<a_k,x>| <= 1}: parametrize y = sum c_k a_k with sum|c_k| <= 1.
template <class S>
SeparationResult<S> separate_hform(const Vec<S>& x, const std::vector<Vec<S>>& prior,
                                   const std::vector<Vec<S>>& normals) {
  const std::size_t m = normals.size();
  Mat<S> A;
  std::vector<Rel> rel;
  Vec<S> b;
  Vec<S> budget(2 * m + 1, S(1));
  budget[2 * m] = S(0);
  A.push_back(budget);
  rel.push_back(Rel::Le);
  b.push_back(S(1));
  for (const auto& p : prior) {
    Vec<S> d = sub(x, p);
    Vec<S> row(2 * m + 1, S(0));
    for (std::size_t k = 0; k < m; ++k) {
      S v = dot(normals[k], d);
      row[k] = v;
      row[m + k] = -v;
    }
    row[2 * m] = S(-1);
    A.push_back(std::move(row));
    rel.push_back(Rel::Ge);
    b.push_back(S(0));
  }
  Vec<S> c(2 * m + 1, S(0));
  c[2 * m] = S(-1);
  auto res = solve_lp(A, rel, b, c);
  if (res.status != LpStatus::Optimal) throw oracle_error("witness LP did not solve");
  SeparationResult<S> out;
  out.method = "lp-hform";
  Vec<S> y = zero_vec<S>(x.size());
  for (std::size_t k = 0; k < m; ++k) {
    S coef = res.x[k] - res.x[m + k];
    if (coef == S(0)) continue;
    for (std::size_t j = 0; j < x.size(); ++j) y[j] += coef * normals[k][j];
  }
  out.margin = res.x[2 * m];
  out.feasible = margin_admissible(out.margin);
  out.witness = std::move(y);
  return out;
}

inline double binomial_budget(std::size_t m, std::size_t k) {
  double v = 1;
  for (std::size_t i = 0; i < k; ++i) v *= static_cast<double>(m - i) / static_cast<double>(i + 1);
  return v;
}

/// Min-norm point of conv{w_1..w_m} by enumerating candidate faces
/// (subsets of at most n+1 points, Caratheodory). Returns the optimum z.
inline Vec<double> min_norm_point_enum(const std::vector<Vec<double>>& w) {
  const std::size_t m = w.size();
  const std::size_t n = w[0].size();
  double best = std::numeric_limits<double>::infinity();
  Vec<double> best_z;
  std::vector<int> idx;
  const std::size_t cap = std::min(m, n + 1);

  auto try_subset = [&]() {
    const std::size_t k = idx.size();
    // minimize |sum mu_i w_i|^2 subject to sum mu = 1 (KKT system)
    Mat<double> M(k + 1, Vec<double>(k + 2, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) M[i][j] = 2.0 * dot(w[idx[i]], w[idx[j]]);
      M[i][k] = 1.0;
      M[i][k + 1] = 0.0;
    }
    for (std::size_t j = 0; j < k; ++j) M[k][j] = 1.0;
    M[k][k + 1] = 1.0;
    // gaussian elimination with partial pivoting
    for (std::size_t col = 0; col <= k; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col; r <= k; ++r)
        if (std::fabs(M[r][col]) > std::fabs(M[piv][col])) piv = r;
      if (std::fabs(M[piv][col]) < 1e-12) return;  // affinely dependent: a subset covers it
      std::swap(M[piv], M[col]);
      for (std::size_t r = 0; r <= k; ++r) {
        if (r == col) continue;
        double f = M[r][col] / M[col][col];
        if (f == 0) continue;
        for (std::size_t c2 = col; c2 <= k + 1; ++c2) M[r][c2] -= f * M[col][c2];
      }
    }
    Vec<double> mu(k);
    for (std::size_t i = 0; i < k; ++i) {
      mu[i] = M[i][k + 1] / M[i][i];
      if (mu[i] < -1e-10) return;  // outside the face
    }
    Vec<double> z(n, 0.0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) z[j] += mu[i] * w[idx[i]][j];
    double val = dot(z, z);
    if (val < best) {
      best = val;
      best_z = z;
    }
  };

  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!idx.empty()) try_subset();
    if (idx.size() == cap) return;
    for (std::size_t i = start; i < m; ++i) {
      idx.push_back(static_cast<int>(i));
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return best_z;
}

/// Ellipsoidal separating body: transform to Euclidean coordinates with the
/// Cholesky factor and project onto the hull there.
inline SeparationResult<double> separate_ellipsoid(const Vec<double>& x,
                                                   const std::vector<Vec<double>>& prior,
                                                   const ConvexBody<double>& B) {
  const std::size_t n = x.size();
  Mat<double> Q = B.ellipsoid_matrix();
  const double t = B.scale();
  for (auto& row : Q)
    for (auto& v : row) v /= t * t;
  Mat<double> C = cholesky(Q);  // Q = C C^T, gauge(w) = |C^T w|
  auto transform = [&](const Vec<double>& v) {
    Vec<double> r(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) r[i] += C[k][i] * v[k];
    return r;
  };
  std::vector<Vec<double>> w;
  w.reserve(prior.size());
  Vec<double> qx = transform(x);
  for (const auto& p : prior) w.push_back(sub(transform(p), qx));

  if (binomial_budget(w.size(), std::min(w.size(), n + 1)) > 3e5)
    throw oracle_error("prior set too large for exact hull projection");
  Vec<double> z = min_norm_point_enum(w);
  double d = std::sqrt(dot(z, z));
  SeparationResult<double> out;
  out.method = "minnorm";
  if (d < 1e-14) {
    out.margin = 0;
    out.feasible = false;
    return out;
  }
  // y = -C z / d  pulls the optimality condition back to the original space.
  Vec<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) y[i] -= C[i][k] * z[k] / d;
  double sup = B.support(y);
  if (sup > 1.0) for (auto& v : y) v /= sup;
  out.margin = certified_margin(y, x, prior);
  out.feasible = margin_admissible(out.margin);
  out.witness = std::move(y);
  return out;
}

/// General smooth gauge (lp balls, 1 < p < inf): away-step Frank-Wolfe over
/// the simplex of hull weights with golden-section line search.
inline SeparationResult<double> separate_smooth_gauge(const Vec<double>& x,
                                                      const std::vector<Vec<double>>& prior,
                                                      const ConvexBody<double>& B) {
  const std::size_t m = prior.size();
  const std::size_t n = x.size();
  const double p = B.lp_exponent();
  const double denom = B.lp_radius() * B.scale();

  auto gauge_of = [&](const Vec<double>& w) {
    double s = 0;
    for (double v : w) s += std::pow(std::fabs(v), p);
    return std::pow(s, 1.0 / p) / denom;
  };
  auto grad_of = [&](const Vec<double>& w) {
    double np = 0;
    for (double v : w) np += std::pow(std::fabs(v), p);
    np = std::pow(np, 1.0 / p);
    Vec<double> g(n, 0.0);
    if (np <= 0) return g;
    for (std::size_t i = 0; i < n; ++i) {
      double s = w[i] >= 0 ? 1.0 : -1.0;
      g[i] = s * std::pow(std::fabs(w[i]) / np, p - 1.0) / denom;
    }
    return g;
  };
  auto point_of = [&](const Vec<double>& mu) {
    Vec<double> w(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) w[j] += mu[i] * (prior[i][j] - x[j]);
    return w;
  };

  Vec<double> mu(m, 0.0);
  std::size_t start = 0;
  double best0 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    double g = gauge_of(sub(prior[i], x));
    if (g < best0) {
      best0 = g;
      start = i;
    }
  }
  mu[start] = 1.0;

  for (int iter = 0; iter < 4000; ++iter) {
    Vec<double> w = point_of(mu);
    Vec<double> gw = grad_of(w);
    Vec<double> lin(m);
    for (std::size_t i = 0; i < m; ++i) lin[i] = dot(gw, sub(prior[i], x));
    std::size_t fw = 0, away = 0;
    bool has_away = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (lin[i] < lin[fw]) fw = i;
      if (mu[i] > 1e-15 && (!has_away || lin[i] > lin[away])) {
        away = i;
        has_away = true;
      }
    }
    double cur = dot(gw, w);
    double gap = cur - lin[fw];
    if (gap <= 1e-13 * (1.0 + std::fabs(cur))) break;
    bool use_away = has_away && (lin[away] - cur) > gap && mu[away] < 1.0 - 1e-15;
    Vec<double> dir(m, 0.0);
    double gamma_max;
    if (use_away) {
      for (std::size_t i = 0; i < m; ++i) dir[i] = mu[i];
      dir[away] -= 1.0;
      gamma_max = mu[away] / (1.0 - mu[away]);
    } else {
      for (std::size_t i = 0; i < m; ++i) dir[i] = -mu[i];
      dir[fw] += 1.0;
      gamma_max = 1.0;
    }
    auto eval = [&](double gamma) {
      Vec<double> trial(m);
      for (std::size_t i = 0; i < m; ++i) trial[i] = mu[i] + gamma * dir[i];
      return gauge_of(point_of(trial));
    };
    double lo = 0, hi = gamma_max;
    const double golden = 0.6180339887498949;
    double x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
    double f1 = eval(x1), f2 = eval(x2);
    for (int it2 = 0; it2 < 90; ++it2) {
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
    double gamma = (f1 < f2) ? x1 : x2;
    if (eval(0.0) <= std::min(f1, f2)) gamma = 0.0;
    if (gamma <= 0 && !use_away) break;
    double total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      mu[i] = std::max(0.0, mu[i] + gamma * dir[i]);
      total += mu[i];
    }
    for (std::size_t i = 0; i < m; ++i) mu[i] /= total;
  }

  Vec<double> w = point_of(mu);
  double d = gauge_of(w);
  SeparationResult<double> out;
  out.method = "frank-wolfe";
  if (d < 1e-12) {
    out.margin = 0;
    out.feasible = false;
    return out;
  }
  Vec<double> y = negated(grad_of(w));
  double sup = B.support(y);
  if (sup > 1.0) for (auto& v : y) v /= sup;
  out.margin = certified_margin(y, x, prior);
  out.feasible = margin_admissible(out.margin);
  out.witness = std::move(y);
  return out;
}

}  // namespace detail

/// Decides whether (x + int B) misses conv(prior) and, when it does, returns
/// a functional y in B° with <y, x - x_i> >= 1 for every prior point. The
/// margin equals the gauge distance from x to the hull on the LP routes.
template <class S>
SeparationResult<S> separation_margin(const Vec<S>& x, const std::vector<Vec<S>>& prior,
                                      const ConvexBody<S>& B) {
  if (static_cast<int>(x.size()) != B.dim())
    throw dimension_error("separation: point/body dimension mismatch");
  for (const auto& p : prior)
    if (p.size() != x.size()) throw dimension_error("separation: prior dimension mismatch");
  if (!B.full_dim())
    throw degenerate_error("separation: separating body must be full-dimensional");

  if (prior.empty()) {
    SeparationResult<S> out;
    out.feasible = true;
    out.margin_infinite = true;
    out.witness = zero_vec<S>(x.size());
    out.method = "vacuous";
    return out;
  }
  if (B.dim() == 1) return detail::separate_interval(x, prior, B);
  if (auto normals = B.h_form()) return detail::separate_hform(x, prior, *normals);
  if (auto gens = B.v_form()) return detail::separate_vform(x, prior, *gens);
  if constexpr (!scalar_traits<S>::exact) {
    if (as_ellipsoid(B)) {
      auto eb = as_ellipsoid(B);
      return detail::separate_ellipsoid(x, prior, *eb);
    }
    return detail::separate_smooth_gauge(x, prior, B);
  }
  throw backend_error("separation: representation requires the float backend");
}

/// The paper's witness form of convex separation: present iff the point can
/// be appended after `prior` in a B-convexly-separated sequence.
template <class S>
std::optional<Vec<S>> convex_separation_witness(const Vec<S>& x,
                                                const std::vector<Vec<S>>& prior,
                                                const ConvexBody<S>& B) {
  auto res = separation_margin(x, prior, B);
  if (!res.feasible) return std::nullopt;
  return res.witness;
}

// ---------------------------------------------------------------------------
// Certificates

template <class S>
struct ConvexSeparationCertificate {
  ConvexBody<S> K, B;
  std::vector<Vec<S>> points;      // x_1..x_N, the order matters
  std::vector<Vec<S>> witnesses;   // y_1..y_N; y_1 conventionally zero
  std::vector<S> margins;          // recorded m_j for j = 2..N (informative)

  json to_json() const {
    json j;
    j["type"] = "convex_separation";
    j["backend"] = scalar_traits<S>::backend_name();
    j["K"] = K.to_json();
    j["B"] = B.to_json();
    json pts = json::array();
    for (const auto& p : points) pts.push_back(vec_to_json(p));
    j["points"] = pts;
    json wit = json::array();
    for (const auto& w : witnesses) wit.push_back(vec_to_json(w));
    j["witnesses"] = wit;
    json mg = json::array();
    for (const auto& m : margins) mg.push_back(scalar_to_json(m));
    j["margins"] = mg;
    return j;
  }

  static ConvexSeparationCertificate from_json(const json& j) {
    ConvexSeparationCertificate c{ConvexBody<S>::from_json(j.at("K")),
                                  ConvexBody<S>::from_json(j.at("B")),
                                  {},
                                  {},
                                  {}};
    for (const auto& p : j.at("points")) c.points.push_back(vec_from_json<S>(p));
    if (j.contains("witnesses"))
      for (const auto& w : j.at("witnesses")) c.witnesses.push_back(vec_from_json<S>(w));
    if (j.contains("margins"))
      for (const auto& m : j.at("margins")) c.margins.push_back(scalar_from_json<S>(m));
    return c;
  }
};

template <class S>
struct SeparatedSetCertificate {
  ConvexBody<S> B;
  std::vector<Vec<S>> points;
  std::optional<S> d_min;  // min pairwise gauge distance (absent for <2 points)

  json to_json() const {
    json j;
    j["type"] = "separated_set";
    j["backend"] = scalar_traits<S>::backend_name();
    j["B"] = B.to_json();
    json pts = json::array();
    for (const auto& p : points) pts.push_back(vec_to_json(p));
    j["points"] = pts;
    if (d_min) j["d_min"] = scalar_to_json(*d_min);
    return j;
  }

  static SeparatedSetCertificate from_json(const json& j) {
    SeparatedSetCertificate c{ConvexBody<S>::from_json(j.at("B")), {}, std::nullopt};
    for (const auto& p : j.at("points")) c.points.push_back(vec_from_json<S>(p));
    if (j.contains("d_min")) c.d_min = scalar_from_json<S>(j.at("d_min"));
    return c;
  }
};

template <class S>
struct CoverCertificate {
  ConvexBody<S> B;
  std::vector<Vec<S>> centers;
  std::vector<Vec<S>> pool;
  std::vector<int> assignment;  // pool index -> center index

  json to_json() const {
    json j;
    j["type"] = "cover";
    j["backend"] = scalar_traits<S>::backend_name();
    j["B"] = B.to_json();
    json cs = json::array();
    for (const auto& c : centers) cs.push_back(vec_to_json(c));
    j["centers"] = cs;
    json ps = json::array();
    for (const auto& p : pool) ps.push_back(vec_to_json(p));
    j["pool"] = ps;
    j["assignment"] = assignment;
    return j;
  }

  static CoverCertificate from_json(const json& j) {
    CoverCertificate c{ConvexBody<S>::from_json(j.at("B")), {}, {}, {}};
    for (const auto& p : j.at("centers")) c.centers.push_back(vec_from_json<S>(p));
    for (const auto& p : j.at("pool")) c.pool.push_back(vec_from_json<S>(p));
    c.assignment = j.at("assignment").get<std::vector<int>>();
    return c;
  }
};

/// Certificate for the set-form variant: every point is separated from the
/// hull of all the others, witnessed per point.
template <class S>
struct MutualSeparationCertificate {
  ConvexBody<S> B;
  std::vector<Vec<S>> points;
  std::vector<Vec<S>> witnesses;  // one per point

  json to_json() const {
    json j;
    j["type"] = "mutual_separation";
    j["backend"] = scalar_traits<S>::backend_name();
    j["B"] = B.to_json();
    json pts = json::array();
    for (const auto& p : points) pts.push_back(vec_to_json(p));
    j["points"] = pts;
    json wit = json::array();
    for (const auto& w : witnesses) wit.push_back(vec_to_json(w));
    j["witnesses"] = wit;
    return j;
  }

  static MutualSeparationCertificate from_json(const json& j) {
    MutualSeparationCertificate c{ConvexBody<S>::from_json(j.at("B")), {}, {}};
    for (const auto& p : j.at("points")) c.points.push_back(vec_from_json<S>(p));
    for (const auto& w : j.at("witnesses")) c.witnesses.push_back(vec_from_json<S>(w));
    return c;
  }
};

// ---------------------------------------------------------------------------
// Checkers: recompute everything from scratch, trusting only the bodies.

template <class S>
struct CheckOutcome {
  bool valid = false;
  std::string backend = scalar_traits<S>::backend_name();
  std::string reason;                              // empty when valid
  std::optional<std::pair<int, int>> binding_pair; // 0-based offending (i, j)
  std::optional<S> worst_margin;

  explicit operator bool() const { return valid; }
};

template <class S>
CheckOutcome<S> check_convex_separation(const ConvexSeparationCertificate<S>& cert) {
  CheckOutcome<S> out;
  const std::size_t n = cert.points.size();
  if (n == 0) {
    out.valid = true;
    return out;
  }
  for (const auto& p : cert.points) {
    if (static_cast<int>(p.size()) != cert.K.dim()) {
      out.reason = "point dimension mismatch";
      return out;
    }
  }
  std::vector<Vec<S>> wit = cert.witnesses;
  if (wit.size() + 1 == n) wit.insert(wit.begin(), zero_vec<S>(cert.K.dim()));
  if (n >= 2 && wit.size() != n) {
    out.reason = "witnesses missing (need one per point from the second on)";
    return out;
  }
  if (wit.empty()) wit.push_back(zero_vec<S>(cert.K.dim()));
  for (std::size_t j = 0; j < n; ++j) {
    auto g = cert.K.try_gauge(cert.points[j]);
    if (!g || !approx_leq(*g, S(1))) {
      out.reason = "point " + std::to_string(j) + " lies outside K";
      out.binding_pair = std::make_pair(static_cast<int>(j), static_cast<int>(j));
      return out;
    }
  }
  for (std::size_t j = 0; j < wit.size(); ++j) {
    if (static_cast<int>(wit[j].size()) != cert.B.dim()) {
      out.reason = "witness dimension mismatch";
      return out;
    }
    if (!approx_leq(cert.B.support(wit[j]), S(1))) {
      out.reason = "witness " + std::to_string(j) + " lies outside the polar of B";
      out.binding_pair = std::make_pair(static_cast<int>(j), static_cast<int>(j));
      return out;
    }
  }
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      S m = dot(wit[j], sub(cert.points[j], cert.points[i]));
      if (!out.worst_margin || m < *out.worst_margin) out.worst_margin = m;
      if (!detail::margin_admissible(m)) {
        out.reason = "separation margin below one at pair (" + std::to_string(i) + "," +
                     std::to_string(j) + ")";
        out.binding_pair = std::make_pair(static_cast<int>(i), static_cast<int>(j));
        return out;
      }
    }
  }
  out.valid = true;
  return out;
}

template <class S>
CheckOutcome<S> check_separated(const SeparatedSetCertificate<S>& cert) {
  CheckOutcome<S> out;
  const std::size_t n = cert.points.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto g = cert.B.try_gauge(sub(cert.points[j], cert.points[i]));
      if (!g) {
        out.reason = "pair difference outside the span of B";
        out.binding_pair = std::make_pair(static_cast<int>(i), static_cast<int>(j));
        return out;
      }
      if (!out.worst_margin || *g < *out.worst_margin) {
        out.worst_margin = *g;
        out.binding_pair = std::make_pair(static_cast<int>(i), static_cast<int>(j));
      }
      if (!detail::margin_admissible(*g)) {
        out.reason = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                     ") closer than the separating body allows";
        return out;
      }
    }
  }
  out.valid = true;
  return out;
}

template <class S>
CheckOutcome<S> check_cover(const CoverCertificate<S>& cert) {
  CheckOutcome<S> out;
  if (cert.assignment.size() != cert.pool.size()) {
    out.reason = "assignment size does not match the pool";
    return out;
  }
  for (std::size_t i = 0; i < cert.pool.size(); ++i) {
    int c = cert.assignment[i];
    if (c < 0 || c >= static_cast<int>(cert.centers.size())) {
      out.reason = "assignment index out of range at pool point " + std::to_string(i);
      return out;
    }
    auto g = cert.B.try_gauge(sub(cert.pool[i], cert.centers[c]));
    if (!g || !approx_leq(*g, S(1))) {
      out.reason = "pool point " + std::to_string(i) + " not covered by its center";
      out.binding_pair = std::make_pair(static_cast<int>(i), c);
      return out;
    }
    if (!out.worst_margin || *g > *out.worst_margin) out.worst_margin = *g;
  }
  out.valid = true;
  return out;
}

template <class S>
CheckOutcome<S> check_mutual_separation(const MutualSeparationCertificate<S>& cert) {
  CheckOutcome<S> out;
  const std::size_t n = cert.points.size();
  if (n > 1 && cert.witnesses.size() != n) {
    out.reason = "need one witness per point";
    return out;
  }
  for (std::size_t j = 0; j < n && n > 1; ++j) {
    if (!approx_leq(cert.B.support(cert.witnesses[j]), S(1))) {
      out.reason = "witness " + std::to_string(j) + " lies outside the polar of B";
      return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      S m = dot(cert.witnesses[j], sub(cert.points[j], cert.points[i]));
      if (!out.worst_margin || m < *out.worst_margin) out.worst_margin = m;
      if (!detail::margin_admissible(m)) {
        out.reason = "margin below one at pair (" + std::to_string(i) + "," +
                     std::to_string(j) + ")";
        out.binding_pair = std::make_pair(static_cast<int>(i), static_cast<int>(j));
        return out;
      }
    }
  }
  out.valid = true;
  return out;
}

/// Equips an ordered sequence with oracle witnesses; throws oracle_error when
/// some point is not separated from the hull of its predecessors.
template <class S>
ConvexSeparationCertificate<S> make_separation_certificate(const ConvexBody<S>& K,
                                                           const ConvexBody<S>& B,
                                                           std::vector<Vec<S>> points) {
  ConvexSeparationCertificate<S> cert{K, B, std::move(points), {}, {}};
  std::vector<Vec<S>> prefix;
  for (std::size_t j = 0; j < cert.points.size(); ++j) {
    if (j == 0) {
      cert.witnesses.push_back(zero_vec<S>(K.dim()));
      prefix.push_back(cert.points[0]);
      continue;
    }
    auto res = separation_margin(cert.points[j], prefix, B);
    if (!res.feasible || !res.witness)
      throw oracle_error("sequence is not convexly separated at position " + std::to_string(j));
    cert.witnesses.push_back(*res.witness);
    cert.margins.push_back(res.margin);
    prefix.push_back(cert.points[j]);
  }
  return cert;
}

}  // namespace covpack

#endif  // COVPACK_ORACLE_HPP

#ifndef COVPACK_BODY_HPP
#define COVPACK_BODY_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "covpack/linalg.hpp"
#include "covpack/rng.hpp"
#include "covpack/scalar.hpp"
#include "covpack/simplex.hpp"

namespace covpack {

using json = nlohmann::json;

class body_error : public std::runtime_error {
 public:
  explicit body_error(const std::string& what) : std::runtime_error(what) {}
};
class dimension_error : public body_error {
 public:
  explicit dimension_error(const std::string& what) : body_error(what) {}
};
class degenerate_error : public body_error {
 public:
  explicit degenerate_error(const std::string& what) : body_error(what) {}
};
class backend_error : public body_error {
 public:
  explicit backend_error(const std::string& what) : body_error(what) {}
};

inline constexpr int kMaxDimension = 8;

enum class BodyKind { HPolytope, VPolytope, Ellipsoid, LpBall };

inline const char* kind_name(BodyKind k) {
  switch (k) {
    case BodyKind::HPolytope: return "hpolytope";
    case BodyKind::VPolytope: return "vpolytope";
    case BodyKind::Ellipsoid: return "ellipsoid";
    case BodyKind::LpBall: return "lpball";
  }
  return "?";
}

template <class S>
json scalar_to_json(const S& v) {
  if constexpr (scalar_traits<S>::exact) {
    return json(scalar_to_string(v));
  } else {
    return json(v);
  }
}

template <class S>
S scalar_from_json(const json& j) {
  if (j.is_string()) return scalar_from_string<S>(j.get<std::string>());
  if (j.is_number_integer()) return S(j.get<long long>());
  if (j.is_number_float()) return scalar_traits<S>::from_double(j.get<double>());
  throw body_error("expected a number or 'p/q' string");
}

template <class S>
json vec_to_json(const Vec<S>& v) {
  json a = json::array();
  for (const S& x : v) a.push_back(scalar_to_json(x));
  return a;
}

template <class S>
Vec<S> vec_from_json(const json& j) {
  if (!j.is_array()) throw body_error("expected an array of coordinates");
  Vec<S> v;
  for (const auto& e : j) v.push_back(scalar_from_json<S>(e));
  return v;
}

/// Symmetric convex body in R^n. Stored generators are implicitly
/// symmetrized: a normal or vertex v stands for the pair {v, -v}. A positive
/// scale factor t turns the base body into t*body.
template <class S>
class ConvexBody {
 public:
  static ConvexBody hpolytope(std::vector<Vec<S>> normals, S scale = S(1)) {
    ConvexBody b;
    b.kind_ = BodyKind::HPolytope;
    b.gens_ = std::move(normals);
    b.scale_ = std::move(scale);
    b.init_generators(/*require_span=*/true);
    return b;
  }

  static ConvexBody vpolytope(std::vector<Vec<S>> vertices, S scale = S(1)) {
    ConvexBody b;
    b.kind_ = BodyKind::VPolytope;
    b.gens_ = std::move(vertices);
    b.scale_ = std::move(scale);
    b.init_generators(/*require_span=*/false);
    return b;
  }

  static ConvexBody ellipsoid(Mat<S> Q, S scale = S(1)) {
    if constexpr (scalar_traits<S>::exact) {
      throw backend_error("ellipsoid bodies require the float backend");
    } else {
      ConvexBody b;
      b.kind_ = BodyKind::Ellipsoid;
      b.Q_ = std::move(Q);
      b.scale_ = scale;
      b.init_ellipsoid();
      return b;
    }
  }

  static ConvexBody lp_ball(double p, S radius, int dim, S scale = S(1)) {
    ConvexBody b;
    b.kind_ = BodyKind::LpBall;
    b.p_ = p;
    b.r_ = std::move(radius);
    b.dim_ = dim;
    b.scale_ = std::move(scale);
    if (dim < 1 || dim > kMaxDimension) throw dimension_error("dimension out of range [1,8]");
    if (p < 1.0) throw body_error("lp ball requires p >= 1");
    if (b.r_ <= S(0)) throw body_error("lp ball requires radius > 0");
    if (b.scale_ <= S(0)) throw body_error("scale must be positive");
    if (scalar_traits<S>::exact && p != 1.0 && !std::isinf(p)) {
      throw backend_error("lp ball with 1 < p < inf requires the float backend");
    }
    b.full_dim_ = true;
    return b;
  }

  BodyKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const S& scale() const { return scale_; }
  double lp_exponent() const { return p_; }
  const S& lp_radius() const { return r_; }
  const std::vector<Vec<S>>& generators() const { return gens_; }
  const Mat<S>& ellipsoid_matrix() const { return Q_; }
  bool full_dim() const { return full_dim_; }

  ConvexBody scaled(const S& t) const {
    if (t <= S(0)) throw body_error("scale must be positive");
    ConvexBody b = *this;
    b.scale_ = scale_ * t;
    return b;
  }

  /// Effective vertex generators (scale applied), when this body has a
  /// finite V-representation.
  std::optional<std::vector<Vec<S>>> v_form() const {
    if (kind_ == BodyKind::VPolytope) {
      std::vector<Vec<S>> out;
      for (const auto& v : gens_) out.push_back(scaled(v, scale_));
      return out;
    }
    if (kind_ == BodyKind::LpBall && p_ == 1.0) {
      std::vector<Vec<S>> out;
      for (int i = 0; i < dim_; ++i) out.push_back(scaled(unit_vec<S>(dim_, i), r_ * scale_));
      return out;
    }
    return std::nullopt;
  }

  /// Effective facet normals (scale applied), when this body has a finite
  /// H-representation: body = {x : |<a,x>| <= 1 for each a}.
  std::optional<std::vector<Vec<S>>> h_form() const {
    if (kind_ == BodyKind::HPolytope) {
      std::vector<Vec<S>> out;
      for (const auto& a : gens_) out.push_back(scaled(a, S(1) / scale_));
      return out;
    }
    if (kind_ == BodyKind::LpBall && std::isinf(p_)) {
      std::vector<Vec<S>> out;
      for (int i = 0; i < dim_; ++i)
        out.push_back(scaled(unit_vec<S>(dim_, i), S(1) / (r_ * scale_)));
      return out;
    }
    return std::nullopt;
  }

  /// Minkowski functional inf{t > 0 : x in t*body}. Returns nullopt when x
  /// lies outside the span of a degenerate (lower-dimensional) body.
  std::optional<S> try_gauge(const Vec<S>& x) const {
    check_dim(x);
    switch (kind_) {
      case BodyKind::HPolytope: {
        S best(0);
        for (const auto& a : gens_) best = std::max(best, abs_of(dot(a, x)));
        return best / scale_;
      }
      case BodyKind::VPolytope: {
        auto g = vform_gauge(gens_, x);
        if (!g) return std::nullopt;
        return *g / scale_;
      }
      case BodyKind::Ellipsoid: {
        if constexpr (!scalar_traits<S>::exact) {
          S q = dot(x, matvec(Q_, x));
          return std::sqrt(std::max(0.0, q)) / scale_;
        }
        throw backend_error("ellipsoid requires float backend");
      }
      case BodyKind::LpBall:
        return lp_norm(x) / (r_ * scale_);
    }
    throw body_error("unreachable");
  }

  S gauge(const Vec<S>& x) const {
    auto g = try_gauge(x);
    if (!g) throw degenerate_error("gauge: point outside the span of a degenerate body");
    return *g;
  }

  /// Support function sup{<u,x> : x in body}.
  S support(const Vec<S>& u) const {
    check_dim(u);
    switch (kind_) {
      case BodyKind::HPolytope: {
        // Polar of the base is conv{+-a_k}; its gauge is the base support.
        auto g = vform_gauge(gens_, u);
        if (!g) throw degenerate_error("support: normals do not span");
        return *g * scale_;
      }
      case BodyKind::VPolytope: {
        S best(0);
        for (const auto& v : gens_) best = std::max(best, abs_of(dot(v, u)));
        return best * scale_;
      }
      case BodyKind::Ellipsoid: {
        if constexpr (!scalar_traits<S>::exact) {
          S q = dot(u, matvec(Qinv_, u));
          return std::sqrt(std::max(0.0, q)) * scale_;
        }
        throw backend_error("ellipsoid requires float backend");
      }
      case BodyKind::LpBall:
        return dual_lp_norm(u) * r_ * scale_;
    }
    throw body_error("unreachable");
  }

  /// A point of the body attaining the support value in direction u.
  Vec<S> support_argmax(const Vec<S>& u) const {
    check_dim(u);
    switch (kind_) {
      case BodyKind::VPolytope: {
        std::size_t best = 0;
        S best_val(-1);
        bool neg = false;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
          S d = dot(gens_[i], u);
          S a = abs_of(d);
          if (a > best_val) {
            best_val = a;
            best = i;
            neg = d < S(0);
          }
        }
        if (best_val <= S(0)) return zero_vec<S>(dim_);
        Vec<S> v = gens_[best];
        if (neg) v = negated(v);
        return scaled(v, scale_);
      }
      case BodyKind::HPolytope: {
        // max <u,x> over |<a_k,x>| <= 1 with x free (split into x+ - x-).
        const std::size_t n = dim_;
        Mat<S> A;
        std::vector<Rel> rel;
        Vec<S> b;
        for (const auto& a : gens_) {
          Vec<S> row(2 * n);
          for (std::size_t j = 0; j < n; ++j) {
            row[j] = a[j];
            row[n + j] = -a[j];
          }
          A.push_back(row);
          rel.push_back(Rel::Le);
          b.push_back(S(1));
          A.push_back(negated(row));
          rel.push_back(Rel::Le);
          b.push_back(S(1));
        }
        Vec<S> c(2 * n);
        for (std::size_t j = 0; j < n; ++j) {
          c[j] = -u[j];
          c[n + j] = u[j];
        }
        auto res = solve_lp(A, rel, b, c);
        if (res.status != LpStatus::Optimal)
          throw degenerate_error("support_argmax: polytope unbounded or empty");
        Vec<S> x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = (res.x[j] - res.x[n + j]) * scale_;
        return x;
      }
      case BodyKind::Ellipsoid: {
        if constexpr (!scalar_traits<S>::exact) {
          Vec<S> w = matvec(Qinv_, u);
          S q = dot(u, w);
          if (q <= S(0)) return zero_vec<S>(dim_);
          return scaled(w, scale_ / std::sqrt(q));
        }
        throw backend_error("ellipsoid requires float backend");
      }
      case BodyKind::LpBall: {
        Vec<S> x = zero_vec<S>(dim_);
        if (p_ == 1.0) {
          std::size_t best = 0;
          S best_val(0);
          for (std::size_t i = 0; i < u.size(); ++i) {
            if (abs_of(u[i]) > best_val) {
              best_val = abs_of(u[i]);
              best = i;
            }
          }
          if (best_val == S(0)) return x;
          x[best] = (u[best] < S(0) ? S(-1) : S(1)) * r_ * scale_;
          return x;
        }
        if (std::isinf(p_)) {
          for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] > S(0)) x[i] = r_ * scale_;
            else if (u[i] < S(0)) x[i] = -r_ * scale_;
          }
          return x;
        }
        if constexpr (!scalar_traits<S>::exact) {
          double q = p_ / (p_ - 1.0);
          double nq = 0.0;
          for (const S& v : u) nq += std::pow(std::fabs(v), q);
          nq = std::pow(nq, 1.0 / q);
          if (nq <= 0) return x;
          for (std::size_t i = 0; i < u.size(); ++i) {
            double s = u[i] >= 0 ? 1.0 : -1.0;
            x[i] = s * std::pow(std::fabs(u[i]) / nq, q - 1.0) * r_ * scale_;
          }
          return x;
        }
        throw backend_error("lp ball requires float backend");
      }
    }
    throw body_error("unreachable");
  }

  /// Polar body {u : sup_{x in body} <u,x> <= 1}. Representations flip.
  ConvexBody polar() const {
    S inv_scale = S(1) / scale_;
    switch (kind_) {
      case BodyKind::HPolytope:
        return vpolytope(gens_, inv_scale);
      case BodyKind::VPolytope:
        if (!full_dim_)
          throw degenerate_error("polar of a lower-dimensional body is unbounded");
        return hpolytope(gens_, inv_scale);
      case BodyKind::Ellipsoid:
        if constexpr (!scalar_traits<S>::exact) {
          return ellipsoid(Qinv_, inv_scale);
        } else {
          throw backend_error("ellipsoid requires float backend");
        }
      case BodyKind::LpBall: {
        double q = std::isinf(p_) ? 1.0 : (p_ == 1.0 ? std::numeric_limits<double>::infinity()
                                                     : p_ / (p_ - 1.0));
        return lp_ball(q, S(1) / r_, dim_, inv_scale);
      }
    }
    throw body_error("unreachable");
  }

  bool contains(const Vec<S>& x) const {
    auto g = try_gauge(x);
    if (!g) return false;
    return approx_leq(*g, S(1));
  }

  json to_json() const {
    json j;
    j["type"] = kind_name(kind_);
    switch (kind_) {
      case BodyKind::HPolytope: {
        json rows = json::array();
        for (const auto& a : gens_) rows.push_back(vec_to_json(a));
        j["normals"] = rows;
        break;
      }
      case BodyKind::VPolytope: {
        json rows = json::array();
        for (const auto& v : gens_) rows.push_back(vec_to_json(v));
        j["vertices"] = rows;
        break;
      }
      case BodyKind::Ellipsoid: {
        json rows = json::array();
        for (const auto& r : Q_) rows.push_back(vec_to_json(r));
        j["Q"] = rows;
        break;
      }
      case BodyKind::LpBall: {
        j["p"] = std::isinf(p_) ? json("inf") : json(p_);
        j["r"] = scalar_to_json(r_);
        j["dim"] = dim_;
        break;
      }
    }
    if (scale_ != S(1)) j["scale"] = scalar_to_json(scale_);
    return j;
  }

  static ConvexBody from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
      throw body_error("body descriptor must be an object with a 'type' field");
    const std::string type = j.at("type").get<std::string>();
    S scale = j.contains("scale") ? scalar_from_json<S>(j.at("scale")) : S(1);
    if (type == "hpolytope") {
      std::vector<Vec<S>> rows;
      for (const auto& r : j.at("normals")) rows.push_back(vec_from_json<S>(r));
      return hpolytope(std::move(rows), scale);
    }
    if (type == "vpolytope") {
      std::vector<Vec<S>> rows;
      for (const auto& r : j.at("vertices")) rows.push_back(vec_from_json<S>(r));
      return vpolytope(std::move(rows), scale);
    }
    if (type == "ellipsoid") {
      Mat<S> Q;
      for (const auto& r : j.at("Q")) Q.push_back(vec_from_json<S>(r));
      return ellipsoid(std::move(Q), scale);
    }
    if (type == "lpball") {
      double p;
      const auto& pj = j.at("p");
      if (pj.is_string()) {
        std::string s = pj.get<std::string>();
        p = (s == "inf" || s == "infinity") ? std::numeric_limits<double>::infinity()
                                            : std::stod(s);
      } else {
        p = pj.get<double>();
      }
      S r = scalar_from_json<S>(j.at("r"));
      int dim = j.at("dim").get<int>();
      return lp_ball(p, std::move(r), dim, scale);
    }
    throw body_error("unknown body type '" + type + "'");
  }

 private:
  BodyKind kind_ = BodyKind::HPolytope;
  int dim_ = 0;
  std::vector<Vec<S>> gens_;  // normals (H) or vertices (V), implicit +-
  Mat<S> Q_, Qinv_;           // ellipsoid only
  double p_ = 2.0;            // lp ball only
  S r_{1};                    // lp ball only
  S scale_{1};
  bool full_dim_ = true;

  static Vec<S> scaled(const Vec<S>& v, const S& t) { return covpack::scaled(v, t); }

  void check_dim(const Vec<S>& x) const {
    if (static_cast<int>(x.size()) != dim_)
      throw dimension_error("point dimension does not match body dimension");
  }

  void init_generators(bool require_span) {
    if (gens_.empty()) throw body_error("body needs at least one generator");
    dim_ = static_cast<int>(gens_[0].size());
    if (dim_ < 1 || dim_ > kMaxDimension) throw dimension_error("dimension out of range [1,8]");
    for (const auto& g : gens_) {
      if (static_cast<int>(g.size()) != dim_) throw dimension_error("inconsistent generator sizes");
      if constexpr (!scalar_traits<S>::exact) {
        for (double v : g)
          if (!std::isfinite(v)) throw body_error("non-finite generator entry");
      }
      if (is_zero(g)) throw body_error("zero generator");
    }
    if (scale_ <= S(0)) throw body_error("scale must be positive");
    full_dim_ = rank_of(Mat<S>(gens_.begin(), gens_.end())) == dim_;
    if (require_span && !full_dim_)
      throw degenerate_error("hpolytope normals must span R^n (body would be unbounded)");
  }

  void init_ellipsoid() {
    if constexpr (!scalar_traits<S>::exact) {
      dim_ = static_cast<int>(Q_.size());
      if (dim_ < 1 || dim_ > kMaxDimension) throw dimension_error("dimension out of range [1,8]");
      for (const auto& row : Q_) {
        if (static_cast<int>(row.size()) != dim_) throw dimension_error("Q must be square");
        for (double v : row)
          if (!std::isfinite(v)) throw body_error("non-finite entry in Q");
      }
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < i; ++j)
          if (std::fabs(Q_[i][j] - Q_[j][i]) > 1e-12 * (1.0 + std::fabs(Q_[i][j])))
            throw body_error("Q must be symmetric");
      try {
        cholesky(Q_);
      } catch (const linalg_error&) {
        throw degenerate_error("Q must be positive definite");
      }
      Qinv_ = inverse(Q_);
      if (scale_ <= S(0)) throw body_error("scale must be positive");
      full_dim_ = true;
    }
  }

  S lp_norm(const Vec<S>& x) const {
    if (p_ == 1.0) {
      S s(0);
      for (const S& v : x) s += abs_of(v);
      return s;
    }
    if (std::isinf(p_)) {
      S s(0);
      for (const S& v : x) s = std::max(s, abs_of(v));
      return s;
    }
    if constexpr (!scalar_traits<S>::exact) {
      double s = 0;
      for (const S& v : x) s += std::pow(std::fabs(v), p_);
      return std::pow(s, 1.0 / p_);
    }
    throw backend_error("lp ball requires float backend");
  }

  S dual_lp_norm(const Vec<S>& x) const {
    if (p_ == 1.0) {  // dual exponent inf
      S s(0);
      for (const S& v : x) s = std::max(s, abs_of(v));
      return s;
    }
    if (std::isinf(p_)) {  // dual exponent 1
      S s(0);
      for (const S& v : x) s += abs_of(v);
      return s;
    }
    if constexpr (!scalar_traits<S>::exact) {
      double q = p_ / (p_ - 1.0);
      double s = 0;
      for (const S& v : x) s += std::pow(std::fabs(v), q);
      return std::pow(s, 1.0 / q);
    }
    throw backend_error("lp ball requires float backend");
  }

  /// Gauge of conv{+-g_i} at x: min sum |c_i| with sum c_i g_i = x.
  static std::optional<S> vform_gauge(const std::vector<Vec<S>>& gens, const Vec<S>& x) {
    const std::size_t m = gens.size();
    const std::size_t n = x.size();
    Mat<S> A(n, Vec<S>(2 * m));
    Vec<S> b(n);
    std::vector<Rel> rel(n, Rel::Eq);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        A[i][k] = gens[k][i];
        A[i][m + k] = -gens[k][i];
      }
      b[i] = x[i];
    }
    Vec<S> c(2 * m, S(1));
    auto res = solve_lp(A, rel, b, c);
    if (res.status != LpStatus::Optimal) return std::nullopt;
    return res.objective;
  }
};

/// Radius of K in the gauge of B: sup{|x|_B : x in K}. `exact` is false when
/// only the sampled lower bound is available for the representation pair.
template <class S>
struct RadiusResult {
  S value{0};
  bool exact = true;
  Vec<S> attainer;  // point of K attaining (or witnessing) the value
};

/// Euclidean balls are ellipsoids; promoting them lets radius() use the
/// generalized-eigenvalue form.
template <class S>
std::optional<ConvexBody<S>> as_ellipsoid(const ConvexBody<S>& b) {
  if (b.kind() == BodyKind::Ellipsoid) return b;
  if constexpr (!scalar_traits<S>::exact) {
    if (b.kind() == BodyKind::LpBall && b.lp_exponent() == 2.0) {
      Mat<S> Q(b.dim(), Vec<S>(b.dim(), S(0)));
      for (int i = 0; i < b.dim(); ++i) Q[i][i] = S(1) / (b.lp_radius() * b.lp_radius());
      return ConvexBody<S>::ellipsoid(std::move(Q), b.scale());
    }
  }
  return std::nullopt;
}

template <class S>
RadiusResult<S> radius(const ConvexBody<S>& K, const ConvexBody<S>& B) {
  if (K.dim() != B.dim()) throw dimension_error("radius: dimension mismatch");
  RadiusResult<S> out;
  if (auto vs = K.v_form()) {
    out.exact = true;
    out.value = S(0);
    out.attainer = zero_vec<S>(K.dim());
    for (const auto& v : *vs) {
      S g = B.gauge(v);
      if (g > out.value) {
        out.value = g;
        out.attainer = v;
      }
    }
    return out;
  }
  if (auto as = B.h_form()) {
    out.exact = true;
    out.value = S(0);
    out.attainer = zero_vec<S>(K.dim());
    for (const auto& a : *as) {
      S s = K.support(a);
      if (s > out.value) {
        out.value = s;
        out.attainer = K.support_argmax(a);
      }
    }
    return out;
  }
  if constexpr (!scalar_traits<S>::exact) {
    auto ek = as_ellipsoid(K);
    auto eb = as_ellipsoid(B);
    if (ek && eb) {
      const int n = K.dim();
      double tk = ek->scale(), tb = eb->scale();
      Mat<double> Qk = ek->ellipsoid_matrix(), Qb = eb->ellipsoid_matrix();
      for (auto& row : Qk)
        for (auto& v : row) v /= tk * tk;
      for (auto& row : Qb)
        for (auto& v : row) v /= tb * tb;
      Mat<double> L = cholesky(Qk);
      // M = L^{-1} Qb L^{-T}; columns of L^{-T} from triangular solves.
      Mat<double> Linv(n, Vec<double>(n, 0.0));
      for (int col = 0; col < n; ++col) {
        Vec<double> e = unit_vec<double>(n, col);
        for (int i = 0; i < n; ++i) {
          double s = e[i];
          for (int k = 0; k < i; ++k) s -= L[i][k] * Linv[k][col];
          Linv[i][col] = s / L[i][i];
        }
      }
      Mat<double> M(n, Vec<double>(n, 0.0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = 0;
          for (int a = 0; a < n; ++a)
            for (int b2 = 0; b2 < n; ++b2) s += Linv[i][a] * Qb[a][b2] * Linv[j][b2];
          M[i][j] = s;
        }
      EigenSym eig = jacobi_eigen(M);
      int best = 0;
      for (int i = 1; i < n; ++i)
        if (eig.values[i] > eig.values[best]) best = i;
      out.value = std::sqrt(std::max(0.0, eig.values[best]));
      // attainer solves L^T x = v_max, placing x on the K boundary
      Vec<double> v(n);
      for (int i = 0; i < n; ++i) v[i] = eig.vectors[i][best];
      Vec<double> x(n, 0.0);
      for (int i = n - 1; i >= 0; --i) {
        double s = v[i];
        for (int k = i + 1; k < n; ++k) s -= L[k][i] * x[k];
        x[i] = s / L[i][i];
      }
      out.attainer = x;
      out.exact = true;
      return out;
    }
    // Sampled support directions with local refinement; lower bound only.
    const int n = K.dim();
    CounterRng rng(0xC0FFEEull + static_cast<std::uint64_t>(n));
    auto probe = [&](const Vec<double>& u) {
      Vec<double> x = K.support_argmax(u);
      return std::pair<double, Vec<double>>(B.gauge(x), x);
    };
    out.value = -1;
    Vec<double> best_u;
    auto consider = [&](Vec<double> u) {
      double norm = std::sqrt(dot(u, u));
      if (norm < 1e-12) return;
      for (auto& v : u) v /= norm;
      auto [g, x] = probe(u);
      if (g > out.value) {
        out.value = g;
        out.attainer = x;
        best_u = u;
      }
    };
    for (int i = 0; i < n; ++i) consider(unit_vec<double>(n, i));
    for (int it = 0; it < 64 * n; ++it) {
      Vec<double> u(n);
      for (int i = 0; i < n; ++i) u[i] = rng.next_range(-1.0, 1.0);
      consider(u);
    }
    double step = 0.5;
    for (int round = 0; round < 60; ++round) {
      bool improved = false;
      for (int i = 0; i < n; ++i) {
        for (double sgn : {1.0, -1.0}) {
          Vec<double> u = best_u;
          u[i] += sgn * step;
          double prev = out.value;
          consider(u);
          if (out.value > prev) improved = true;
        }
      }
      if (!improved) step *= 0.5;
      if (step < 1e-10) break;
    }
    out.exact = false;
    return out;
  }
  throw backend_error("radius: representation pair needs the float backend");
}

}  // namespace covpack

#endif  // COVPACK_BODY_HPP

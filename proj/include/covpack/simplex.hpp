#ifndef COVPACK_SIMPLEX_HPP
#define COVPACK_SIMPLEX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "covpack/linalg.hpp"
#include "covpack/scalar.hpp"

namespace covpack {

enum class Rel { Le, Eq, Ge };
enum class LpStatus { Optimal, Infeasible, Unbounded };

class lp_numerical_error : public std::runtime_error {
 public:
  explicit lp_numerical_error(const std::string& what) : std::runtime_error(what) {}
};

template <class S>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vec<S> x;      // structural variables, x >= 0
  S objective{0};
};

/// Dense two-phase primal simplex for  min c'x  s.t.  A x (rel) b,  x >= 0.
/// Bland's rule throughout, so runs over rationals terminate and certify
/// feasibility exactly. Problem sizes here are tiny (tens of rows/columns).
template <class S>
class DenseSimplex {
 public:
  LpResult<S> solve(Mat<S> A, std::vector<Rel> rel, Vec<S> b, const Vec<S>& c) {
    const std::size_t m = A.size();
    n_ = c.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (A[i].size() != n_) throw linalg_error("lp: row size mismatch");
      if (b[i] < S(0)) {
        for (auto& v : A[i]) v = -v;
        b[i] = -b[i];
        rel[i] = rel[i] == Rel::Le ? Rel::Ge : (rel[i] == Rel::Ge ? Rel::Le : Rel::Eq);
      }
    }
    std::size_t slack_count = 0, art_count = 0;
    for (Rel r : rel) {
      if (r != Rel::Eq) ++slack_count;
      if (r != Rel::Le) ++art_count;
    }
    const std::size_t slack_start = n_;
    const std::size_t art_start = n_ + slack_count;
    cols_ = art_start + art_count;
    tab_.assign(m, Vec<S>(cols_ + 1, S(0)));
    basis_.assign(m, 0);
    active_.assign(m, true);

    std::size_t slack_at = slack_start, art_at = art_start;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = A[i][j];
      tab_[i][cols_] = b[i];
      if (rel[i] == Rel::Le) {
        tab_[i][slack_at] = S(1);
        basis_[i] = slack_at++;
      } else if (rel[i] == Rel::Ge) {
        tab_[i][slack_at++] = S(-1);
        tab_[i][art_at] = S(1);
        basis_[i] = art_at++;
      } else {
        tab_[i][art_at] = S(1);
        basis_[i] = art_at++;
      }
    }

    LpResult<S> res;
    // Phase 1: minimize the sum of artificials.
    if (art_count > 0) {
      cost_.assign(cols_ + 1, S(0));
      for (std::size_t j = art_start; j < cols_; ++j) cost_[j] = S(1);
      canonicalize();
      pivot_loop(art_start_sentinel());
      S phase1 = -cost_[cols_];
      if (!leq_zero(phase1)) {
        res.status = LpStatus::Infeasible;
        return res;
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (!active_[i] || basis_[i] < art_start) continue;
        std::size_t enter = cols_;
        for (std::size_t j = 0; j < art_start; ++j) {
          if (!is_negligible(tab_[i][j])) { enter = j; break; }
        }
        if (enter == cols_) {
          active_[i] = false;  // redundant constraint
        } else {
          pivot(i, enter);
        }
      }
    }

    // Phase 2 with the true objective; artificial columns are retired.
    cols_no_art_ = art_start;
    cost_.assign(cols_ + 1, S(0));
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = c[j];
    canonicalize();
    bool bounded = pivot_loop(cols_no_art_);
    if (!bounded) {
      res.status = LpStatus::Unbounded;
      return res;
    }

    res.status = LpStatus::Optimal;
    res.x.assign(n_, S(0));
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (active_[i] && basis_[i] < n_) res.x[basis_[i]] = tab_[i][cols_];
    }
    res.objective = dot(res.x, c);
    return res;
  }

 private:
  std::size_t n_ = 0, cols_ = 0, cols_no_art_ = 0;
  Mat<S> tab_;
  Vec<S> cost_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;

  std::size_t art_start_sentinel() const { return cols_; }

  static bool is_negligible(const S& v) {
    if constexpr (scalar_traits<S>::exact) {
      return v == S(0);
    } else {
      return abs_of(v) <= 1e-11;
    }
  }

  static bool leq_zero(const S& v) {
    if constexpr (scalar_traits<S>::exact) {
      return v <= S(0);
    } else {
      return v <= 1e-9;
    }
  }

  void canonicalize() {
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (!active_[i]) continue;
      const S f = cost_[basis_[i]];
      if (f == S(0)) continue;
      for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= f * tab_[i][j];
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const S d = tab_[row][col];
    for (std::size_t j = 0; j <= cols_; ++j) tab_[row][j] /= d;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i == row || !active_[i]) continue;
      const S f = tab_[i][col];
      if (f == S(0)) continue;
      for (std::size_t j = 0; j <= cols_; ++j) tab_[i][j] -= f * tab_[row][j];
    }
    const S fc = cost_[col];
    if (fc != S(0)) {
      for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= fc * tab_[row][j];
    }
    basis_[row] = col;
  }

  /// Returns false when unbounded. `col_limit` excludes retired columns.
  bool pivot_loop(std::size_t col_limit) {
    for (long iter = 0; iter < 100000; ++iter) {
      std::size_t enter = col_limit;
      for (std::size_t j = 0; j < col_limit; ++j) {
        const bool negative = scalar_traits<S>::exact ? cost_[j] < S(0) : cost_[j] < -1e-11;
        if (negative) { enter = j; break; }  // Bland: lowest index
      }
      if (enter == col_limit) return true;
      std::size_t leave = tab_.size();
      for (std::size_t i = 0; i < tab_.size(); ++i) {
        if (!active_[i]) continue;
        const S& a = tab_[i][enter];
        const bool positive = scalar_traits<S>::exact ? a > S(0) : a > 1e-11;
        if (!positive) continue;
        if (leave == tab_.size()) {
          leave = i;
          continue;
        }
        const S lhs = tab_[i][cols_] * tab_[leave][enter];
        const S rhs = tab_[leave][cols_] * a;
        if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave == tab_.size()) return false;
      pivot(leave, enter);
    }
    throw lp_numerical_error("simplex: iteration limit exceeded");
  }
};

template <class S>
LpResult<S> solve_lp(const Mat<S>& A, const std::vector<Rel>& rel, const Vec<S>& b,
                     const Vec<S>& c) {
  DenseSimplex<S> solver;
  return solver.solve(A, rel, b, c);
}

}  // namespace covpack

#endif  // COVPACK_SIMPLEX_HPP

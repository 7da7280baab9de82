#ifndef COVPACK_LINALG_HPP
#define COVPACK_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "covpack/scalar.hpp"

namespace covpack {

template <class S>
using Vec = std::vector<S>;

template <class S>
using Mat = std::vector<std::vector<S>>;

class linalg_error : public std::runtime_error {
 public:
  explicit linalg_error(const std::string& what) : std::runtime_error(what) {}
};

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw linalg_error("dot: dimension mismatch");
  S acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class S>
Vec<S> sub(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw linalg_error("sub: dimension mismatch");
  Vec<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class S>
Vec<S> add(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw linalg_error("add: dimension mismatch");
  Vec<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class S>
Vec<S> scaled(const Vec<S>& a, const S& t) {
  Vec<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
  return r;
}

template <class S>
Vec<S> negated(const Vec<S>& a) {
  return scaled(a, S(-1));
}

template <class S>
bool is_zero(const Vec<S>& a) {
  for (const S& v : a)
    if (v != S(0)) return false;
  return true;
}

template <class S>
Vec<S> zero_vec(std::size_t n) {
  return Vec<S>(n, S(0));
}

template <class S>
Vec<S> unit_vec(std::size_t n, std::size_t i) {
  Vec<S> r(n, S(0));
  r[i] = S(1);
  return r;
}

template <class S>
Vec<S> matvec(const Mat<S>& A, const Vec<S>& x) {
  Vec<S> r(A.size(), S(0));
  for (std::size_t i = 0; i < A.size(); ++i) r[i] = dot(A[i], x);
  return r;
}

/// Rank over the scalar's own comparison (exact for rationals, 1e-12 pivot
/// threshold for doubles). Used for body validity checks only.
template <class S>
int rank_of(Mat<S> A) {
  const std::size_t rows = A.size();
  if (rows == 0) return 0;
  const std::size_t cols = A[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    for (std::size_t r = row; r < rows; ++r) {
      if (abs_of(A[r][col]) > abs_of(A[piv][col])) piv = r;
    }
    bool zero;
    if constexpr (scalar_traits<S>::exact) {
      zero = A[piv][col] == S(0);
    } else {
      zero = abs_of(A[piv][col]) <= 1e-12;
    }
    if (zero) continue;
    std::swap(A[piv], A[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || A[r][col] == S(0)) continue;
      S f = A[r][col] / A[row][col];
      for (std::size_t c = col; c < cols; ++c) A[r][c] -= f * A[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Gauss-Jordan inverse with partial pivoting.
template <class S>
Mat<S> inverse(Mat<S> A) {
  const std::size_t n = A.size();
  Mat<S> inv(n, Vec<S>(n, S(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = S(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col; r < n; ++r)
      if (abs_of(A[r][col]) > abs_of(A[piv][col])) piv = r;
    bool zero;
    if constexpr (scalar_traits<S>::exact) {
      zero = A[piv][col] == S(0);
    } else {
      zero = abs_of(A[piv][col]) <= 1e-14;
    }
    if (zero) throw linalg_error("inverse: singular matrix");
    std::swap(A[piv], A[col]);
    std::swap(inv[piv], inv[col]);
    S d = A[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      A[col][c] /= d;
      inv[col][c] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      S f = A[r][col];
      if (f == S(0)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        A[r][c] -= f * A[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

/// Lower-triangular L with L L^T = A. Throws if A is not positive definite.
inline Mat<double> cholesky(const Mat<double>& A) {
  const std::size_t n = A.size();
  Mat<double> L(n, Vec<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = A[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= L[i][k] * L[j][k];
      if (i == j) {
        if (s <= 0) throw linalg_error("cholesky: matrix not positive definite");
        L[i][i] = std::sqrt(s);
      } else {
        L[i][j] = s / L[j][j];
      }
    }
  }
  return L;
}

/// Cyclic Jacobi for small symmetric matrices; returns eigenvalues and an
/// orthogonal V whose columns are eigenvectors.
struct EigenSym {
  Vec<double> values;
  Mat<double> vectors;  // vectors[i][j] = component i of eigenvector j
};

inline EigenSym jacobi_eigen(Mat<double> A) {
  const std::size_t n = A.size();
  Mat<double> V(n, Vec<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) V[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += A[p][q] * A[p][q];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(A[p][q]) < 1e-300) continue;
        double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = A[k][p], akq = A[k][q];
          A[k][p] = c * akp - s * akq;
          A[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = A[p][k], aqk = A[q][k];
          A[p][k] = c * apk - s * aqk;
          A[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = V[k][p], vkq = V[k][q];
          V[k][p] = c * vkp - s * vkq;
          V[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  EigenSym out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = A[i][i];
  out.vectors = V;
  return out;
}

}  // namespace covpack

#endif  // COVPACK_LINALG_HPP

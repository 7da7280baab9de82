#ifndef COVPACK_FAMILY_HPP
#define COVPACK_FAMILY_HPP

#include <cstdint>

#include "covpack/body.hpp"
#include "covpack/rng.hpp"

namespace covpack {

/// Snaps a uniform draw to a grid point k/denominator in [-1, 1]. The values
/// are exactly representable both as rationals and as doubles (denominator a
/// power of two), so exact and float runs see the same bodies.
template <class S>
S snapped_coordinate(CounterRng& rng, int denominator) {
  long k = static_cast<long>(rng.next_below(2 * denominator + 1)) - denominator;
  return S(k) / S(denominator);
}

template <class S>
Vec<S> random_grid_vector(int dim, CounterRng& rng, int denominator) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec<S> v(dim);
    for (int i = 0; i < dim; ++i) v[i] = snapped_coordinate<S>(rng, denominator);
    if (!is_zero(v)) return v;
  }
  throw body_error("random_grid_vector: could not draw a nonzero vector");
}

template <class S>
std::vector<Vec<S>> random_spanning_generators(int dim, int count, CounterRng& rng,
                                               int denominator) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Vec<S>> gens;
    for (int i = 0; i < count; ++i) gens.push_back(random_grid_vector<S>(dim, rng, denominator));
    if (rank_of(Mat<S>(gens.begin(), gens.end())) == dim) return gens;
  }
  // Extremely unlikely fallback: complete with coordinate directions.
  std::vector<Vec<S>> gens;
  for (int i = 0; i < count; ++i) gens.push_back(random_grid_vector<S>(dim, rng, denominator));
  for (int i = 0; i < dim; ++i) gens.push_back(unit_vec<S>(dim, i));
  return gens;
}

template <class S>
ConvexBody<S> random_vpolytope(int dim, int generator_count, CounterRng& rng,
                               int denominator = 8) {
  return ConvexBody<S>::vpolytope(
      random_spanning_generators<S>(dim, generator_count, rng, denominator));
}

template <class S>
ConvexBody<S> random_hpolytope(int dim, int normal_count, CounterRng& rng, int denominator = 8) {
  return ConvexBody<S>::hpolytope(
      random_spanning_generators<S>(dim, normal_count, rng, denominator));
}

/// Q = A^T A + diag, positive definite with moderate conditioning.
inline ConvexBody<double> random_ellipsoid(int dim, CounterRng& rng) {
  Mat<double> A(dim, Vec<double>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) A[i][j] = rng.next_range(-1.0, 1.0);
  Mat<double> Q(dim, Vec<double>(dim, 0.0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < dim; ++k) Q[i][j] += A[k][i] * A[k][j];
      if (i == j) Q[i][j] += 0.4;
    }
  return ConvexBody<double>::ellipsoid(Q);
}

}  // namespace covpack

#endif  // COVPACK_FAMILY_HPP

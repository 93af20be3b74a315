#ifndef ISGX_LINALG_HPP
#define ISGX_LINALG_HPP

#include <vector>

#include "isgx/algebra.hpp"

namespace isgx {
namespace linalg {

/// Largest singular value.
double operator_norm(const Mat& m);

/// Column-major stacking of a matrix into a vector.
Vec vectorize(const Mat& m);
Mat unvectorize(const Vec& v, int rows, int cols);

/// Frobenius inner product <a, b> = tr(a† b).
Complex frobenius_dot(const Mat& a, const Mat& b);

struct SpanBasis {
  std::vector<Mat> basis;  // Frobenius-orthonormal matrices spanning the input
  int rank() const { return static_cast<int>(basis.size()); }
};

/// Orthonormal basis of the span of the given matrices. Rank cut at
/// rel_tol times the largest singular value.
SpanBasis orthonormal_span(const std::vector<Mat>& mats, double rel_tol);

/// Residual of projecting m onto the orthonormal span, in Frobenius norm.
double projection_residual(const SpanBasis& span, const Mat& m);

/// Coordinates of m in the orthonormal basis (no residual check).
Vec coordinates_in(const SpanBasis& span, const Mat& m);

/// Numerical rank with a relative singular-value cutoff.
int rank_of(const Mat& m, double rel_tol);

/// Orthonormal basis of the kernel (columns).
Mat kernel_of(const Mat& m, double rel_tol);

}  // namespace linalg
}  // namespace isgx

#endif  // ISGX_LINALG_HPP

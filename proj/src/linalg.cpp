#include "isgx/linalg.hpp"

#include <Eigen/SVD>

namespace isgx {
namespace linalg {

double operator_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

Vec vectorize(const Mat& m) {
  return Eigen::Map<const Vec>(m.data(), m.size());
}

Mat unvectorize(const Vec& v, int rows, int cols) {
  return Eigen::Map<const Mat>(v.data(), rows, cols);
}

Complex frobenius_dot(const Mat& a, const Mat& b) {
  return (a.adjoint() * b).trace();
}

SpanBasis orthonormal_span(const std::vector<Mat>& mats, double rel_tol) {
  SpanBasis out;
  if (mats.empty()) return out;
  const int rows = static_cast<int>(mats[0].rows());
  const int cols = static_cast<int>(mats[0].cols());
  Mat stacked(rows * cols, static_cast<int>(mats.size()));
  for (std::size_t j = 0; j < mats.size(); ++j) stacked.col(static_cast<int>(j)) = vectorize(mats[j]);
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return out;
  const double cut = rel_tol * sv(0);
  for (int k = 0; k < sv.size(); ++k) {
    if (sv(k) <= cut) break;
    out.basis.push_back(unvectorize(svd.matrixU().col(k), rows, cols));
  }
  return out;
}

double projection_residual(const SpanBasis& span, const Mat& m) {
  Mat rem = m;
  for (const auto& q : span.basis) rem -= frobenius_dot(q, m) * q;
  return rem.norm();
}

Vec coordinates_in(const SpanBasis& span, const Mat& m) {
  Vec c(span.rank());
  for (int k = 0; k < span.rank(); ++k) c(k) = frobenius_dot(span.basis[k], m);
  return c;
}

int rank_of(const Mat& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = rel_tol * sv(0);
  int r = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv(k) > cut) ++r;
  return r;
}

Mat kernel_of(const Mat& m, double rel_tol) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const int r = rank_of(m, rel_tol);
  const int n = static_cast<int>(m.cols());
  return svd.matrixV().rightCols(n - r);
}

}  // namespace linalg
}  // namespace isgx

#include "ratelab/gauss.hpp"

#include <cmath>
#include <stdexcept>

namespace ratelab {

double gauss_c(double x) {
  if (!(x >= 0.0))
    throw std::invalid_argument("gauss_c: needs x >= 0, got " + std::to_string(x));
  return 0.5 * std::log2(1.0 + x);
}

GaussCovariance::GaussCovariance(std::vector<std::string> names_,
                                 Eigen::MatrixXd sigma_)
    : names(std::move(names_)), sigma(std::move(sigma_)) {
  const auto n = static_cast<Eigen::Index>(names.size());
  if (sigma.rows() != n || sigma.cols() != n)
    throw std::invalid_argument("covariance: matrix does not match name count");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (std::abs(sigma(i, j) - sigma(j, i)) > kCovSymTol)
        throw std::invalid_argument("covariance: not symmetric within 1e-12");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw std::invalid_argument("covariance: duplicate name " + names[i]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::invalid_argument("covariance: eigenvalue check failed");
  if (es.eigenvalues().minCoeff() < -kCovEigTol)
    throw std::invalid_argument("covariance: negative eigenvalue beyond 1e-9");
}

int GaussCovariance::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("covariance: unknown variable " + name);
}

namespace {

// log det of the principal block selected by idx, after regularization.
double block_logdet(const GaussCovariance& cov, const std::vector<int>& idx) {
  if (idx.empty()) return 0.0;
  const auto n = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd block(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      block(i, j) = cov.sigma(idx[static_cast<std::size_t>(i)],
                              idx[static_cast<std::size_t>(j)]);
  block.diagonal().array() += kCovReg;
  Eigen::LLT<Eigen::MatrixXd> llt(block);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("gauss_mi_from_cov: singular block beyond regularization");
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

std::vector<int> to_indices(const GaussCovariance& cov, const VarSet& s) {
  std::vector<int> idx;
  idx.reserve(s.size());
  for (const auto& n : s) idx.push_back(cov.index_of(n));
  return idx;
}

}  // namespace

double gauss_mi_from_cov(const GaussCovariance& cov, const VarSet& a,
                         const VarSet& b, const VarSet& c) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("gauss_mi_from_cov: empty argument set");
  for (const auto& n : a)
    if (vs_contains(b, n) || vs_contains(c, n))
      throw std::invalid_argument("gauss_mi_from_cov: sets overlap at " + n);
  for (const auto& n : b)
    if (vs_contains(c, n))
      throw std::invalid_argument("gauss_mi_from_cov: sets overlap at " + n);

  const double ld_ac = block_logdet(cov, to_indices(cov, vs_union(a, c)));
  const double ld_bc = block_logdet(cov, to_indices(cov, vs_union(b, c)));
  const double ld_abc =
      block_logdet(cov, to_indices(cov, vs_union(vs_union(a, b), c)));
  const double ld_c = block_logdet(cov, to_indices(cov, c));

  double mi = (ld_ac + ld_bc - ld_abc - ld_c) / (2.0 * M_LN2);
  if (mi < 0.0) {
    if (mi < -kNegMiTol)
      throw std::domain_error("gauss_mi_from_cov: negative beyond round-off");
    mi = 0.0;
  }
  return mi;
}

}  // namespace ratelab

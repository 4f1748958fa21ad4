#pragma once
// Scalar Gaussian capacity helper plus a covariance-based mutual-information
// oracle.  The oracle exists to cross-check every Gaussian closed form in
// this project from an independent direction (log-determinants of covariance
// blocks instead of hand-derived SNR expressions).

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "ratelab/pmf.hpp"

namespace ratelab {

// C(x) = 0.5 log2(1 + x), x >= 0.
double gauss_c(double x);

inline constexpr double kCovSymTol = 1e-12;
inline constexpr double kCovEigTol = 1e-9;
inline constexpr double kCovReg = 1e-12;  // diagonal regularization for log-det

// Jointly Gaussian variables identified by name with covariance matrix sigma.
// sigma must be symmetric within kCovSymTol and have eigenvalues >= -kCovEigTol.
struct GaussCovariance {
  std::vector<std::string> names;
  Eigen::MatrixXd sigma;

  GaussCovariance(std::vector<std::string> names_, Eigen::MatrixXd sigma_);
  int index_of(const std::string& name) const;  // throws on unknown name
};

// I(a;b|c) in bits:
//   0.5 log2[ det S_{ac} det S_{bc} / (det S_{abc} det S_c) ]
// with kCovReg added to each block's diagonal before factorization.  Throws
// if a block stays non-positive-definite after regularization.
double gauss_mi_from_cov(const GaussCovariance& cov, const VarSet& a,
                         const VarSet& b, const VarSet& c = {});

}  // namespace ratelab

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>

namespace csf {

/// Sparsity basis kinds. `identity` models time-domain sparsity, `dft`
/// models frequency-domain sparsity via the unitary DFT frame.
enum class BasisKind { identity, dft };

struct SparsityBasis {
  BasisKind kind = BasisKind::identity;
  std::size_t n = 0;
};

/// x = Psi * alpha. For `dft`, Psi is the unitary inverse DFT, so alpha
/// holds frequency coefficients.
Eigen::VectorXcd synthesize(const SparsityBasis& basis, const Eigen::VectorXcd& alpha);

/// alpha = Psi^H * x, the exact inverse of synthesize (both kinds unitary).
Eigen::VectorXcd analyze(const SparsityBasis& basis, const Eigen::VectorXcd& x);

BasisKind basis_kind_from_string(const std::string& name);
std::string to_string(BasisKind kind);

}  // namespace csf

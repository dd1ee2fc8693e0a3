#include "csf/basis.hpp"

#include "csf/errors.hpp"
#include "csf/fft.hpp"

namespace csf {

Eigen::VectorXcd synthesize(const SparsityBasis& basis, const Eigen::VectorXcd& alpha) {
  if (static_cast<std::size_t>(alpha.size()) != basis.n)
    throw ValidationError("synthesize: coefficient length does not match basis size");
  if (basis.kind == BasisKind::identity) return alpha;
  return idft(alpha);
}

Eigen::VectorXcd analyze(const SparsityBasis& basis, const Eigen::VectorXcd& x) {
  if (static_cast<std::size_t>(x.size()) != basis.n)
    throw ValidationError("analyze: signal length does not match basis size");
  if (basis.kind == BasisKind::identity) return x;
  return dft(x);
}

BasisKind basis_kind_from_string(const std::string& name) {
  if (name == "identity") return BasisKind::identity;
  if (name == "dft") return BasisKind::dft;
  throw ValidationError("unknown basis kind: " + name);
}

std::string to_string(BasisKind kind) {
  return kind == BasisKind::identity ? "identity" : "dft";
}

}  // namespace csf

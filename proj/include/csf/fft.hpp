#pragma once

#include <Eigen/Dense>

namespace csf {

// Unitary DFT pair (scale 1/sqrt(n) in both directions), backed by FFTW.
// Plans are cached per size behind a mutex; execution is reentrant, so the
// transforms may be called concurrently from any number of threads.

/// In-place forward unitary DFT.
void dft_inplace(Eigen::VectorXcd& v);

/// In-place inverse unitary DFT.
void idft_inplace(Eigen::VectorXcd& v);

Eigen::VectorXcd dft(const Eigen::VectorXcd& v);
Eigen::VectorXcd idft(const Eigen::VectorXcd& v);

}  // namespace csf

#include "csf/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "csf/errors.hpp"

namespace csf {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// Plan creation is not thread-safe in FFTW; execution via fftw_execute_dft
// is. Plans are created once per size with FFTW_UNALIGNED so they may run
// on any caller-provided buffer, and kept for the process lifetime.
PlanPair& plans_for(std::size_t n) {
  static std::mutex mtx;
  static std::map<std::size_t, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  fftw_complex* buf = fftw_alloc_complex(n);
  PlanPair p;
  p.forward = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.backward = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  return cache.emplace(n, p).first->second;
}

void execute(Eigen::VectorXcd& v, bool forward) {
  const std::size_t n = static_cast<std::size_t>(v.size());
  if (n == 0) throw ValidationError("dft: empty vector");
  PlanPair& p = plans_for(n);
  auto* data = reinterpret_cast<fftw_complex*>(v.data());
  fftw_execute_dft(forward ? p.forward : p.backward, data, data);
  v *= 1.0 / std::sqrt(static_cast<double>(n));
}

}  // namespace

void dft_inplace(Eigen::VectorXcd& v) { execute(v, true); }

void idft_inplace(Eigen::VectorXcd& v) { execute(v, false); }

Eigen::VectorXcd dft(const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out = v;
  dft_inplace(out);
  return out;
}

Eigen::VectorXcd idft(const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out = v;
  idft_inplace(out);
  return out;
}

}  // namespace csf

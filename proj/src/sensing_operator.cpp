#include "csf/sensing_operator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "csf/errors.hpp"
#include "csf/fft.hpp"
#include "csf/rng.hpp"

namespace csf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Largest k with cutoffs[k] >= f (cutoffs strictly decreasing); frequencies
// above cutoffs[0] clamp to the widest band, frequencies at or below the
// narrowest cutoff land in the last band.
std::size_t band_index(double freq_hz, const std::vector<double>& cutoffs) {
  std::size_t k = 0;
  while (k + 1 < cutoffs.size() && freq_hz <= cutoffs[k + 1]) ++k;
  return k;
}

void check_assembly_args(std::size_t n, const BandPlan& plan, double sample_rate_hz) {
  if (n == 0) throw ValidationError("transfer length must be positive");
  if (!(sample_rate_hz > 0.0)) throw ValidationError("sample rate must be positive");
  plan.validate();
  if (plan.cutoffs_hz.front() > 0.5 * sample_rate_hz) {
    throw ValidationError("widest cutoff exceeds the Nyquist frequency; raise the sample rate");
  }
}

void mirror_conjugate(Eigen::VectorXcd& gains) {
  const std::size_t n = static_cast<std::size_t>(gains.size());
  for (std::size_t j = 1; 2 * j < n; ++j) {
    gains[static_cast<Eigen::Index>(n - j)] = std::conj(gains[static_cast<Eigen::Index>(j)]);
  }
}

}  // namespace

void Transfer::validate() const {
  if (n == 0) throw ValidationError("transfer has zero length");
  if (static_cast<std::size_t>(gains.size()) != n) {
    throw ValidationError("transfer gain vector does not match its declared length");
  }
}

void SampleMask::validate() const {
  if (n == 0) throw ValidationError("mask domain must be non-empty");
  if (indices.empty()) throw ValidationError("mask keeps no samples");
  if (indices.size() > n) throw ValidationError("mask keeps more samples than exist");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= n) throw ValidationError("mask index out of range");
    if (i > 0 && indices[i] <= indices[i - 1]) {
      throw ValidationError("mask indices must be strictly increasing");
    }
  }
}

void SensingOperator::validate() const {
  transfer.validate();
  mask.validate();
  if (mask.n != transfer.n) {
    throw ValidationError("mask and transfer are defined on different lengths");
  }
}

Transfer assemble_ideal_transfer(std::size_t n, const BandPlan& plan, double sample_rate_hz) {
  check_assembly_args(n, plan, sample_rate_hz);

  Transfer t;
  t.n = n;
  t.mode = TransferMode::ideal;
  t.gains = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));

  const double df = sample_rate_hz / static_cast<double>(n);
  for (std::size_t j = 0; 2 * j <= n; ++j) {
    const double f = df * static_cast<double>(j);
    const double tau = plan.delays_s[band_index(f, plan.cutoffs_hz)];
    const double theta = -kTwoPi * f * tau;
    if (2 * j == n) {
      // The Nyquist bin must stay real under conjugate symmetry, so it gets
      // the sign of the phasor instead of the phasor itself.
      t.gains[static_cast<Eigen::Index>(j)] = (std::cos(theta) >= 0.0) ? 1.0 : -1.0;
    } else {
      t.gains[static_cast<Eigen::Index>(j)] = std::polar(1.0, theta);
    }
  }
  mirror_conjugate(t.gains);
  return t;
}

Transfer assemble_filterbank_transfer(std::size_t n, const BandPlan& plan,
                                      const FilterSpec& spec, double sample_rate_hz) {
  check_assembly_args(n, plan, sample_rate_hz);
  spec.validate();

  const std::size_t bands = plan.cutoffs_hz.size();
  std::vector<FilterSpec> sections(bands, spec);
  for (std::size_t i = 0; i < bands; ++i) {
    // increasing-cutoff order, so section differences telescope
    sections[i].cutoff_hz = plan.cutoffs_hz[bands - 1 - i];
  }

  Transfer t;
  t.n = n;
  t.mode = TransferMode::filterbank;
  t.gains = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));

  const double df = sample_rate_hz / static_cast<double>(n);
  for (std::size_t j = 0; 2 * j <= n; ++j) {
    const double f = df * static_cast<double>(j);
    std::complex<double> g(0.0, 0.0);
    double prev = 0.0;
    for (std::size_t i = 0; i < bands; ++i) {
      const double h = chebyshev_gain(sections[i], f);
      const double section = h - prev;
      prev = h;
      // section i covers the band between cutoffs[bands-i] and
      // cutoffs[bands-1-i], which owns delay bands-1-i in plan order
      g += section * std::polar(1.0, -kTwoPi * f * plan.delays_s[bands - 1 - i]);
    }
    if (2 * j == n) g = std::complex<double>(g.real(), 0.0);
    t.gains[static_cast<Eigen::Index>(j)] = g;
  }
  mirror_conjugate(t.gains);
  return t;
}

double max_inband_gain_deviation(const Transfer& transfer, const BandPlan& plan,
                                 double sample_rate_hz) {
  transfer.validate();
  plan.validate();
  if (!(sample_rate_hz > 0.0)) throw ValidationError("sample rate must be positive");

  const double df = sample_rate_hz / static_cast<double>(transfer.n);
  double worst = 0.0;
  for (std::size_t j = 0; 2 * j <= transfer.n; ++j) {
    const double f = df * static_cast<double>(j);
    if (f > plan.cutoffs_hz.front()) break;
    worst = std::max(worst, std::abs(std::abs(transfer.gains[static_cast<Eigen::Index>(j)]) - 1.0));
  }
  return worst;
}

SampleMask make_mask(std::size_t n, std::size_t m, MaskScheme scheme, std::uint64_t seed) {
  if (n == 0) throw ValidationError("mask domain must be non-empty");
  if (m == 0) throw ValidationError("mask must keep at least one sample");
  if (m > n) throw ValidationError("cannot keep more samples than the signal has");

  SampleMask mask;
  mask.n = n;
  mask.scheme = scheme;
  mask.seed = seed;
  if (scheme == MaskScheme::uniform_grid) {
    const std::size_t d = n / m;
    mask.indices.resize(m);
    for (std::size_t i = 0; i < m; ++i) mask.indices[i] = i * d;
  } else {
    Rng rng(seed);
    mask.indices = rng.sample_without_replacement(n, m);
  }
  return mask;
}

Eigen::VectorXcd apply_transfer(const Transfer& transfer, const Eigen::VectorXcd& x) {
  transfer.validate();
  if (static_cast<std::size_t>(x.size()) != transfer.n) {
    throw ValidationError("input length does not match the transfer length");
  }
  Eigen::VectorXcd spectrum = dft(x);
  spectrum.array() *= transfer.gains.array();
  return idft(spectrum);
}

Eigen::VectorXcd apply_forward(const SensingOperator& op, const Eigen::VectorXcd& x) {
  op.validate();
  const Eigen::VectorXcd full = apply_transfer(op.transfer, x);
  Eigen::VectorXcd y(static_cast<Eigen::Index>(op.m()));
  for (std::size_t i = 0; i < op.m(); ++i) {
    y[static_cast<Eigen::Index>(i)] = full[static_cast<Eigen::Index>(op.mask.indices[i])];
  }
  return y;
}

Eigen::VectorXcd apply_adjoint(const SensingOperator& op, const Eigen::VectorXcd& y) {
  op.validate();
  if (static_cast<std::size_t>(y.size()) != op.m()) {
    throw ValidationError("measurement length does not match the mask");
  }
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(op.n()));
  for (std::size_t i = 0; i < op.m(); ++i) {
    full[static_cast<Eigen::Index>(op.mask.indices[i])] = y[static_cast<Eigen::Index>(i)];
  }
  dft_inplace(full);
  full.array() *= op.transfer.gains.conjugate().array();
  idft_inplace(full);
  return full;
}

double coherence(const SensingOperator& op, const SparsityBasis& basis) {
  op.validate();
  if (basis.n != op.n()) {
    throw ValidationError("basis and operator are defined on different lengths");
  }
  if (op.n() > 4096) {
    throw ValidationError("coherence materializes operator rows; refuse lengths above 4096");
  }

  // Row k of the operator in the signal domain is conj(adjoint(e_k)); both
  // supported bases have unit-norm columns, so only the row norm divides.
  double mu = 0.0;
  Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(op.m()));
  for (std::size_t k = 0; k < op.m(); ++k) {
    unit[static_cast<Eigen::Index>(k)] = 1.0;
    Eigen::VectorXcd row = apply_adjoint(op, unit).conjugate();
    unit[static_cast<Eigen::Index>(k)] = 0.0;
    const double row_norm = row.norm();
    if (row_norm <= 0.0) continue;
    const Eigen::VectorXcd products = analyze(basis, row);
    mu = std::max(mu, products.cwiseAbs().maxCoeff() / row_norm);
  }
  return mu;
}

namespace {

nlohmann::json complex_vector_to_json(const Eigen::VectorXcd& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    arr.push_back(v[i].real());
    arr.push_back(v[i].imag());
  }
  return arr;
}

Eigen::VectorXcd complex_vector_from_json(const nlohmann::json& arr) {
  if (!arr.is_array() || arr.size() % 2 != 0) {
    throw IoError("complex vector must be a flat array of interleaved re/im pairs");
  }
  Eigen::VectorXcd v(static_cast<Eigen::Index>(arr.size() / 2));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v[i] = std::complex<double>(arr[2 * static_cast<std::size_t>(i)].get<double>(),
                                arr[2 * static_cast<std::size_t>(i) + 1].get<double>());
  }
  return v;
}

}  // namespace

nlohmann::json to_json(const Transfer& transfer) {
  return nlohmann::json{{"n", transfer.n},
                        {"mode", to_string(transfer.mode)},
                        {"gains", complex_vector_to_json(transfer.gains)}};
}

nlohmann::json to_json(const SampleMask& mask) {
  return nlohmann::json{{"n", mask.n},
                        {"scheme", to_string(mask.scheme)},
                        {"seed", mask.seed},
                        {"indices", mask.indices}};
}

nlohmann::json to_json(const SensingOperator& op) {
  return nlohmann::json{{"transfer", to_json(op.transfer)}, {"mask", to_json(op.mask)}};
}

Transfer transfer_from_json(const nlohmann::json& j) {
  Transfer t;
  try {
    t.n = j.at("n").get<std::size_t>();
    t.mode = transfer_mode_from_string(j.at("mode").get<std::string>());
    t.gains = complex_vector_from_json(j.at("gains"));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed transfer description: ") + e.what());
  }
  t.validate();
  return t;
}

SampleMask mask_from_json(const nlohmann::json& j) {
  SampleMask mask;
  try {
    mask.n = j.at("n").get<std::size_t>();
    mask.scheme = mask_scheme_from_string(j.at("scheme").get<std::string>());
    mask.seed = j.at("seed").get<std::uint64_t>();
    mask.indices = j.at("indices").get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed mask description: ") + e.what());
  }
  mask.validate();
  return mask;
}

SensingOperator operator_from_json(const nlohmann::json& j) {
  SensingOperator op;
  try {
    op.transfer = transfer_from_json(j.at("transfer"));
    op.mask = mask_from_json(j.at("mask"));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed operator description: ") + e.what());
  }
  op.validate();
  return op;
}

TransferMode transfer_mode_from_string(const std::string& name) {
  if (name == "ideal") return TransferMode::ideal;
  if (name == "filterbank") return TransferMode::filterbank;
  throw ValidationError("unknown transfer mode '" + name + "' (expected ideal or filterbank)");
}

MaskScheme mask_scheme_from_string(const std::string& name) {
  if (name == "uniform_grid") return MaskScheme::uniform_grid;
  if (name == "random_subset") return MaskScheme::random_subset;
  throw ValidationError("unknown mask scheme '" + name +
                        "' (expected uniform_grid or random_subset)");
}

std::string to_string(TransferMode mode) {
  return mode == TransferMode::ideal ? "ideal" : "filterbank";
}

std::string to_string(MaskScheme scheme) {
  return scheme == MaskScheme::uniform_grid ? "uniform_grid" : "random_subset";
}

}  // namespace csf

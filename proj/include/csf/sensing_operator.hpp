#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "csf/basis.hpp"
#include "csf/filter_bank.hpp"

namespace csf {

enum class TransferMode { ideal, filterbank };
enum class MaskScheme { uniform_grid, random_subset };

/// Frequency-domain transfer function of the whole filter cascade, one
/// complex gain per DFT bin, conjugate-symmetric so real signals map to
/// real signals. In ideal mode every gain has unit modulus.
struct Transfer {
  std::size_t n = 0;
  Eigen::VectorXcd gains;
  TransferMode mode = TransferMode::ideal;

  void validate() const;
};

/// Measurement index set: which of the n output samples are kept.
struct SampleMask {
  std::size_t n = 0;
  std::vector<std::size_t> indices;
  MaskScheme scheme = MaskScheme::uniform_grid;
  std::uint64_t seed = 0;

  std::size_t m() const { return indices.size(); }
  void validate() const;
};

struct SensingOperator {
  Transfer transfer;
  SampleMask mask;

  std::size_t n() const { return transfer.n; }
  std::size_t m() const { return mask.m(); }
  void validate() const;
};

/// Unit-modulus transfer: DFT bin j at frequency f_j = j*fs/n (j <= n/2) is
/// assigned to band k when cutoffs[k] >= f_j > cutoffs[k+1] (bins above the
/// widest cutoff get band 0, bins at or below the narrowest get the last
/// band) and receives gain exp(-i*2*pi*f_j*tau_k); the upper half mirrors
/// conjugate-symmetrically. Requires f_hi <= fs/2.
Transfer assemble_ideal_transfer(std::size_t n, const BandPlan& plan, double sample_rate_hz);

/// Finite-order model of the physical cascade: with H_1..H_N the Chebyshev
/// magnitudes in increasing-cutoff order, section differences
/// D_k = H_k - H_{k-1} (H_0 = 0) carry the delay of the band they cover,
/// and gains[j] = sum_k D_k(f_j) * exp(-i*2*pi*f_j*tau(band_k)). Magnitude
/// is near 1 in the covered band but not exactly 1; see
/// max_inband_gain_deviation.
Transfer assemble_filterbank_transfer(std::size_t n, const BandPlan& plan,
                                      const FilterSpec& spec, double sample_rate_hz);

/// max over bins with f_j <= widest cutoff of ||gains[j]| - 1|.
double max_inband_gain_deviation(const Transfer& transfer, const BandPlan& plan,
                                 double sample_rate_hz);

/// uniform_grid: {0, d, 2d, ...} with d = floor(n/m), truncated to m
/// entries. random_subset: m distinct seeded draws, sorted.
SampleMask make_mask(std::size_t n, std::size_t m, MaskScheme scheme, std::uint64_t seed);

/// Pre-mask output IDFT(gains .* DFT(x)), unitary convention.
Eigen::VectorXcd apply_transfer(const Transfer& transfer, const Eigen::VectorXcd& x);

/// y = subsample(IDFT(gains .* DFT(x)), mask).
Eigen::VectorXcd apply_forward(const SensingOperator& op, const Eigen::VectorXcd& x);

/// Exact adjoint: zero-fill onto mask positions, DFT, conj(gains), IDFT.
Eigen::VectorXcd apply_adjoint(const SensingOperator& op, const Eigen::VectorXcd& y);

/// Mutual coherence max_{k,j} |<phi_k, psi_j>| / (|phi_k| |psi_j|) between
/// the rows of the masked operator and the basis columns. Materializes the
/// m x n rows, so it is guarded to n <= 4096.
double coherence(const SensingOperator& op, const SparsityBasis& basis);

nlohmann::json to_json(const Transfer& transfer);
nlohmann::json to_json(const SampleMask& mask);
nlohmann::json to_json(const SensingOperator& op);
Transfer transfer_from_json(const nlohmann::json& j);
SampleMask mask_from_json(const nlohmann::json& j);
SensingOperator operator_from_json(const nlohmann::json& j);

TransferMode transfer_mode_from_string(const std::string& name);
MaskScheme mask_scheme_from_string(const std::string& name);
std::string to_string(TransferMode mode);
std::string to_string(MaskScheme scheme);

}  // namespace csf

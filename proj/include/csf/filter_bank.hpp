#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <json.hpp>

namespace csf {

/// Analytic Chebyshev type-I lowpass description.
struct FilterSpec {
  int order = 9;
  double ripple_db = 1.0;
  double cutoff_hz = 3e9;

  void validate() const;
};

/// Complex gain sampled on a frequency grid.
struct FrequencyResponse {
  Eigen::VectorXd grid_hz;
  Eigen::VectorXcd values;
};

/// Ordered cutoff grid plus one random delay per band. Cutoffs are strictly
/// decreasing; delays_s[k] belongs to the band whose upper edge is
/// cutoffs_hz[k]. Regenerating with the same seed is bit-identical.
struct BandPlan {
  std::vector<double> cutoffs_hz;
  std::vector<double> delays_s;
  std::uint64_t seed = 0;

  std::size_t size() const { return cutoffs_hz.size(); }
  void validate() const;
};

/// Chebyshev type-I magnitude at a single frequency,
///   |H(f)| = 1 / sqrt(1 + eps^2 * T_order(f / cutoff)^2),
/// eps^2 = 10^(ripple_db/10) - 1, via the cos/cosh closed form. Stable for
/// f/cutoff up to at least 1e3; far beyond that the gain underflows to 0,
/// which is the correct limit.
double chebyshev_gain(const FilterSpec& spec, double freq_hz);

/// Samples the ideal Chebyshev lowpass on a grid. Zero phase: delay phase is
/// injected by the sensing operator, not the filter prototype.
FrequencyResponse design_chebyshev(const FilterSpec& spec, const Eigen::VectorXd& grid_hz);

/// Cutoff ladder f_hi, f_hi - step, ..., down to f_lo inclusive, with one
/// delay per band drawn i.i.d. uniform on [0, delay_max_s] from `seed`.
BandPlan build_band_plan(double f_hi_hz, double f_lo_hz, double step_hz,
                         double delay_max_s, std::uint64_t seed);

/// JSON document carrying both the filter prototype and the band plan
/// (keys: order, ripple_db, cutoffs_hz, delays_s, seed).
nlohmann::json to_json(const FilterSpec& spec, const BandPlan& plan);
void from_json(const nlohmann::json& j, FilterSpec& spec, BandPlan& plan);

/// CSV with columns freq_hz,mag,phase_rad.
void write_response_csv(std::ostream& out, const FrequencyResponse& response);

/// Wide CSV for a whole bank: freq_hz followed by one magnitude column per
/// band, widest cutoff first.
void write_bank_csv(std::ostream& out, const Eigen::VectorXd& grid_hz,
                    const std::vector<FrequencyResponse>& responses);

}  // namespace csf

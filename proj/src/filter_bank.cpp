#include "csf/filter_bank.hpp"

#include <cmath>
#include <ostream>

#include "csf/errors.hpp"
#include "csf/rng.hpp"

namespace csf {

void FilterSpec::validate() const {
  if (order < 1) throw ValidationError("FilterSpec: order must be >= 1");
  if (!(ripple_db > 0)) throw ValidationError("FilterSpec: ripple_db must be positive");
  if (!(cutoff_hz > 0)) throw ValidationError("FilterSpec: cutoff_hz must be positive");
}

void BandPlan::validate() const {
  if (cutoffs_hz.empty()) throw ValidationError("BandPlan: no bands");
  if (delays_s.size() != cutoffs_hz.size())
    throw ValidationError("BandPlan: delays and cutoffs must have equal length");
  for (std::size_t k = 0; k + 1 < cutoffs_hz.size(); ++k) {
    if (!(cutoffs_hz[k] > cutoffs_hz[k + 1]))
      throw ValidationError("BandPlan: cutoffs must be strictly decreasing");
  }
  if (!(cutoffs_hz.back() > 0)) throw ValidationError("BandPlan: cutoffs must be positive");
  for (double d : delays_s) {
    if (!(d >= 0)) throw ValidationError("BandPlan: delays must be non-negative");
  }
}

double chebyshev_gain(const FilterSpec& spec, double freq_hz) {
  spec.validate();
  if (freq_hz < 0) throw ValidationError("chebyshev_gain: negative frequency");
  const double eps2 = std::pow(10.0, spec.ripple_db / 10.0) - 1.0;
  const double x = freq_hz / spec.cutoff_hz;
  double t;  // T_order(x)
  if (x <= 1.0) {
    t = std::cos(spec.order * std::acos(x));
  } else {
    // cosh(order*acosh(x)); clamp the argument so the square below cannot
    // produce inf*0-style surprises. cosh(710) already overflows a double,
    // and the gain there is 0 to full precision.
    const double a = std::min(spec.order * std::acosh(x), 700.0);
    t = std::cosh(a);
  }
  const double denom2 = 1.0 + eps2 * t * t;
  if (std::isinf(denom2)) return 0.0;
  return 1.0 / std::sqrt(denom2);
}

FrequencyResponse design_chebyshev(const FilterSpec& spec, const Eigen::VectorXd& grid_hz) {
  spec.validate();
  if (grid_hz.size() == 0) throw ValidationError("design_chebyshev: empty grid");
  if (grid_hz[0] < 0) throw ValidationError("design_chebyshev: negative grid frequency");
  for (Eigen::Index i = 1; i < grid_hz.size(); ++i) {
    if (!(grid_hz[i] > grid_hz[i - 1]))
      throw ValidationError("design_chebyshev: grid must be strictly increasing");
  }
  FrequencyResponse r;
  r.grid_hz = grid_hz;
  r.values.resize(grid_hz.size());
  for (Eigen::Index i = 0; i < grid_hz.size(); ++i) {
    r.values[i] = chebyshev_gain(spec, grid_hz[i]);
  }
  return r;
}

BandPlan build_band_plan(double f_hi_hz, double f_lo_hz, double step_hz,
                         double delay_max_s, std::uint64_t seed) {
  if (!(f_lo_hz > 0)) throw ValidationError("build_band_plan: f_lo must be positive");
  if (f_lo_hz > f_hi_hz) throw ValidationError("build_band_plan: f_lo exceeds f_hi");
  if (!(step_hz > 0)) throw ValidationError("build_band_plan: step must be positive");
  if (!(delay_max_s > 0)) throw ValidationError("build_band_plan: delay_max must be positive");

  const std::size_t bands =
      static_cast<std::size_t>(std::floor((f_hi_hz - f_lo_hz) / step_hz + 1e-9)) + 1;
  BandPlan plan;
  plan.seed = seed;
  plan.cutoffs_hz.resize(bands);
  for (std::size_t k = 0; k < bands; ++k) {
    plan.cutoffs_hz[k] = f_hi_hz - static_cast<double>(k) * step_hz;
  }
  Rng rng(seed);
  plan.delays_s.resize(bands);
  for (std::size_t k = 0; k < bands; ++k) {
    plan.delays_s[k] = rng.uniform(0.0, delay_max_s);
  }
  plan.validate();
  return plan;
}

nlohmann::json to_json(const FilterSpec& spec, const BandPlan& plan) {
  return nlohmann::json{{"order", spec.order},
                        {"ripple_db", spec.ripple_db},
                        {"cutoffs_hz", plan.cutoffs_hz},
                        {"delays_s", plan.delays_s},
                        {"seed", plan.seed}};
}

void from_json(const nlohmann::json& j, FilterSpec& spec, BandPlan& plan) {
  try {
    spec.order = j.at("order").get<int>();
    spec.ripple_db = j.at("ripple_db").get<double>();
    plan.cutoffs_hz = j.at("cutoffs_hz").get<std::vector<double>>();
    plan.delays_s = j.at("delays_s").get<std::vector<double>>();
    plan.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("band plan JSON: ") + e.what());
  }
  spec.cutoff_hz = plan.cutoffs_hz.empty() ? 0.0 : plan.cutoffs_hz.front();
  spec.validate();
  plan.validate();
}

namespace {

void write_double(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

}  // namespace

void write_response_csv(std::ostream& out, const FrequencyResponse& response) {
  out << "freq_hz,mag,phase_rad\n";
  for (Eigen::Index i = 0; i < response.grid_hz.size(); ++i) {
    write_double(out, response.grid_hz[i]);
    out << ',';
    write_double(out, std::abs(response.values[i]));
    out << ',';
    write_double(out, std::arg(response.values[i]));
    out << '\n';
  }
}

void write_bank_csv(std::ostream& out, const Eigen::VectorXd& grid_hz,
                    const std::vector<FrequencyResponse>& responses) {
  out << "freq_hz";
  for (std::size_t k = 0; k < responses.size(); ++k) out << ",mag_" << (k + 1);
  out << '\n';
  for (Eigen::Index i = 0; i < grid_hz.size(); ++i) {
    write_double(out, grid_hz[i]);
    for (const auto& r : responses) {
      out << ',';
      write_double(out, std::abs(r.values[i]));
    }
    out << '\n';
  }
}

}  // namespace csf

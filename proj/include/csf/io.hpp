#pragma once

#include <Eigen/Dense>
#include <string>

#include <json.hpp>

namespace csf {

/// Sample vector loaded from a CSF1 file. Real-valued files are widened to
/// complex with zero imaginary parts; complex_valued records which layout
/// the file used.
struct Signal {
  Eigen::VectorXcd samples;
  bool complex_valued = false;
};

/// CSF1 container: 16-byte header ("CSF1" magic, u32 little-endian length,
/// u8 complex flag, 7 zero bytes) followed by float64 little-endian
/// samples, interleaved re/im when complex. Throws IoError on bad magic,
/// nonzero reserved bytes, truncation, or trailing bytes.
Signal read_signal(const std::string& path);

void write_signal(const std::string& path, const Eigen::VectorXd& samples);
void write_signal(const std::string& path, const Eigen::VectorXcd& samples);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace csf

#include "csf/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "csf/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "CSF1 reader/writer assumes a little-endian host");

namespace csf {

namespace {

constexpr char kMagic[4] = {'C', 'S', 'F', '1'};
constexpr std::size_t kHeaderBytes = 16;

void write_header(std::ofstream& out, std::uint32_t n, bool complex_valued) {
  char header[kHeaderBytes] = {};
  std::memcpy(header, kMagic, 4);
  std::memcpy(header + 4, &n, 4);
  header[8] = complex_valued ? 1 : 0;
  out.write(header, kHeaderBytes);
}

void write_payload(const std::string& path, std::uint32_t n, bool complex_valued,
                   const double* data, std::size_t count) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_header(out, n, complex_valued);
  out.write(reinterpret_cast<const char*>(data),
            static_cast<std::streamsize>(count * sizeof(double)));
  if (!out) throw IoError("short write to '" + path + "'");
}

}  // namespace

Signal read_signal(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");

  char header[kHeaderBytes];
  in.read(header, kHeaderBytes);
  if (in.gcount() != static_cast<std::streamsize>(kHeaderBytes)) {
    throw IoError("'" + path + "' is shorter than a CSF1 header");
  }
  if (std::memcmp(header, kMagic, 4) != 0) {
    throw IoError("'" + path + "' is not a CSF1 file (bad magic)");
  }
  std::uint32_t n = 0;
  std::memcpy(&n, header + 4, 4);
  const char flag = header[8];
  if (flag != 0 && flag != 1) {
    throw IoError("'" + path + "' has an invalid complex flag");
  }
  for (std::size_t i = 9; i < kHeaderBytes; ++i) {
    if (header[i] != 0) throw IoError("'" + path + "' has nonzero reserved header bytes");
  }
  if (n == 0) throw IoError("'" + path + "' declares an empty signal");

  const bool complex_valued = flag == 1;
  const std::size_t count = complex_valued ? 2 * static_cast<std::size_t>(n) : n;
  std::vector<double> payload(count);
  in.read(reinterpret_cast<char*>(payload.data()),
          static_cast<std::streamsize>(count * sizeof(double)));
  if (in.gcount() != static_cast<std::streamsize>(count * sizeof(double))) {
    throw IoError("'" + path + "' is truncated");
  }
  char extra;
  in.read(&extra, 1);
  if (!in.eof()) throw IoError("'" + path + "' has trailing bytes after the payload");

  Signal sig;
  sig.complex_valued = complex_valued;
  sig.samples.resize(static_cast<Eigen::Index>(n));
  if (complex_valued) {
    for (std::uint32_t i = 0; i < n; ++i) {
      sig.samples[static_cast<Eigen::Index>(i)] =
          std::complex<double>(payload[2 * i], payload[2 * i + 1]);
    }
  } else {
    for (std::uint32_t i = 0; i < n; ++i) {
      sig.samples[static_cast<Eigen::Index>(i)] = payload[i];
    }
  }
  return sig;
}

void write_signal(const std::string& path, const Eigen::VectorXd& samples) {
  if (samples.size() == 0) throw ValidationError("refusing to write an empty signal");
  write_payload(path, static_cast<std::uint32_t>(samples.size()), false, samples.data(),
                static_cast<std::size_t>(samples.size()));
}

void write_signal(const std::string& path, const Eigen::VectorXcd& samples) {
  if (samples.size() == 0) throw ValidationError("refusing to write an empty signal");
  // std::complex<double> is layout-compatible with double[2] (re, im)
  write_payload(path, static_cast<std::uint32_t>(samples.size()), true,
                reinterpret_cast<const double*>(samples.data()),
                2 * static_cast<std::size_t>(samples.size()));
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("short write to '" + path + "'");
}

}  // namespace csf

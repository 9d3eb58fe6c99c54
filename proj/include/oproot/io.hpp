#pragma once

// CSV and JSON serialization. Matrix CSV holds one row per line with entries
// "re+imi" at 17 significant digits; series CSV is "index,re,im"; point
// clouds are "re,im". Files are written atomically (temp file then rename).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "oproot/matrix.hpp"
#include "oproot/series.hpp"
#include "oproot/verify.hpp"

namespace oproot {

inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string format_complex(cplx v) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", v.real(), v.imag());
  return buf;
}

inline std::string matrix_csv(const ComplexMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << format_complex(m(i, j));
    }
    os << '\n';
  }
  return os.str();
}

inline std::string series_csv(const PowerSeries& f) {
  std::ostringstream os;
  for (std::size_t k = 0; k <= f.order(); ++k)
    os << k << ',' << format_real(f[k].real()) << ',' << format_real(f[k].imag()) << '\n';
  return os.str();
}

inline std::string points_csv(const std::vector<cplx>& pts) {
  std::ostringstream os;
  for (const cplx& p : pts)
    os << format_real(p.real()) << ',' << format_real(p.imag()) << '\n';
  return os.str();
}

inline nlohmann::json report_json(const VerifyReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["claim_id"] = r.claim_id;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& p : r.params) params[p.first] = p.second;
  j["params"] = params;
  nlohmann::json metrics = nlohmann::json::object();
  for (const auto& m : r.metrics) metrics[m.first] = m.second;
  j["metrics"] = metrics;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  return j;
}

inline void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open for writing: " + tmp);
    os << content;
    if (!os) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace oproot

#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kmosaic/arith.hpp"
#include "kmosaic/closed_forms.hpp"
#include "kmosaic/frontier.hpp"
#include "kmosaic/region.hpp"

namespace kmosaic {

enum class CountMethod { Frontier, Brute };

inline const char* method_name(CountMethod m) {
  return m == CountMethod::Frontier ? "frontier" : "backtracking";
}

struct CensusRow {
  int n = 0;
  BigCount count;
  bool has_bounds = false;  // Theorem bounds are defined for n >= 3
  ExactRational lower, upper;
  BigCount ceil_lower, floor_upper;
  bool within_bounds = true;
  CountMethod method = CountMethod::Frontier;
  double elapsed_s = 0.0;
};

inline CensusRow make_census_row(int n, CountMethod method,
                                 int max_frontier_n = kDefaultMaxFrontierN) {
  CensusRow row;
  row.n = n;
  row.method = method;
  auto t0 = std::chrono::steady_clock::now();
  if (method == CountMethod::Frontier) {
    row.count = count_knot_mosaics(n, max_frontier_n);
  } else {
    row.count = count_fillings(RegionSpec::full(n));
  }
  row.elapsed_s = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0).count();
  if (n >= 3) {
    BoundPair b = bounds(n);
    row.has_bounds = true;
    row.lower = b.lower;
    row.upper = b.upper;
    row.ceil_lower = ceil_rat(b.lower);
    row.floor_upper = floor_rat(b.upper);
    row.within_bounds = row.ceil_lower <= row.count && row.count <= row.floor_upper;
  }
  return row;
}

inline std::string rational_string(const ExactRational& q) {
  return q.get_num().get_str() +
         (q.get_den() == 1 ? std::string() : "/" + q.get_den().get_str());
}

inline std::string elapsed_string(double s, bool with_timing) {
  if (!with_timing) return "0.000";
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << s;
  return out.str();
}

inline std::string census_csv_header() {
  return "n,count,lower_frac,upper_frac,ceil_lower,floor_upper,within_bounds,"
         "method,elapsed_s";
}

inline std::string census_csv_row(const CensusRow& r, bool with_timing = true) {
  std::ostringstream out;
  out << r.n << ',' << r.count.get_str() << ',';
  if (r.has_bounds)
    out << rational_string(r.lower) << ',' << rational_string(r.upper) << ','
        << r.ceil_lower.get_str() << ',' << r.floor_upper.get_str();
  else
    out << ",,,";
  out << ',' << (r.within_bounds ? "true" : "false") << ',' << method_name(r.method)
      << ',' << elapsed_string(r.elapsed_s, with_timing);
  return out.str();
}

// Big integers and exact rationals go out as decimal strings; JSON numbers
// would lose precision.
inline nlohmann::json census_json_row(const CensusRow& r, bool with_timing = true) {
  nlohmann::json j;
  j["n"] = r.n;
  j["count"] = r.count.get_str();
  if (r.has_bounds) {
    j["lower_frac"] = rational_string(r.lower);
    j["upper_frac"] = rational_string(r.upper);
    j["lower_decimal"] = decimal_string(r.lower);
    j["upper_decimal"] = decimal_string(r.upper);
    j["ceil_lower"] = r.ceil_lower.get_str();
    j["floor_upper"] = r.floor_upper.get_str();
  }
  j["within_bounds"] = r.within_bounds;
  j["method"] = method_name(r.method);
  j["elapsed_s"] = elapsed_string(r.elapsed_s, with_timing);
  return j;
}

inline nlohmann::json census_json_table(const std::vector<CensusRow>& rows,
                                        bool with_timing = true) {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const CensusRow& r : rows) j["rows"].push_back(census_json_row(r, with_timing));
  return j;
}

}  // namespace kmosaic

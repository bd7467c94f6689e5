// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact arithmetic; the timed criteria use wall
// clock budgets.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kmosaic/census.hpp"
#include "kmosaic/closed_forms.hpp"
#include "kmosaic/frontier.hpp"
#include "kmosaic/mosaic.hpp"
#include "kmosaic/region.hpp"

using namespace kmosaic;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_census(const std::string& args) {
  std::string cmd = std::string(CENSUS_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  pclose(p);
  return out;
}

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = count_knot_mosaics(1) == 1 && count_knot_mosaics(2) == 2 &&
            count_knot_mosaics(3) == 22 && count_knot_mosaics(4) == 2594;
  double el = seconds_since(t0);
  report(1, "count_knot_mosaics(1..4) = 1, 2, 22, 2594 in under 1 s",
         ok && el < 1.0, "elapsed " + std::to_string(el) + " s");
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n = 1; n <= 4; ++n)
    ok = ok && count_fillings(RegionSpec::full(n)) == count_knot_mosaics(n);
  double el_small = seconds_since(t0);
  bool small_ok = ok && el_small < 10.0;
  auto t1 = std::chrono::steady_clock::now();
  bool long_ok = count_fillings(RegionSpec::full(5)) == count_knot_mosaics(5);
  double el_long = seconds_since(t1);
  report(2, "backtracking equals frontier for n = 1..4 and n = 5 (long)",
         small_ok && long_ok && el_long < 600.0,
         "n<=4 in " + std::to_string(el_small) + " s, n=5 in " +
             std::to_string(el_long) + " s");
}

void criterion3() {
  bool ok = true;
  for (int n = 3; n <= 6; ++n)
    ok = ok && count_fillings(RegionSpec::k1(n)) == pow_big(2, 2ul * n - 3);
  report(3, "count_fillings(K1, n) = 2^(2n-3) for n = 3..6", ok);
}

void criterion4() {
  bool ok = true;
  for (int n = 3; n <= 5; ++n) {
    RegionSpec k1 = RegionSpec::k1(n);
    for (int j = 2; j <= n - 1; ++j)
      ok = ok && edge_cp_fraction(k1, EdgeRef{1, j, Side::Bottom}) ==
                     ExactRational(1, 2);
    for (int i = 2; i <= n - 1; ++i)
      ok = ok && edge_cp_fraction(k1, EdgeRef{i, 1, Side::Right}) ==
                     ExactRational(1, 2);
  }
  report(4, "edge_cp_fraction = 1/2 on every specified K1 edge, n = 3..5", ok);
}

void criterion5() {
  bool anchors = count_fillings(RegionSpec::k2(3)) == 22 &&
                 d2_closed(3) == 22 &&
                 edge_cp_fraction(RegionSpec::k2j(5, 2),
                                  EdgeRef{2, 2, Side::Right}) == ExactRational(7, 11);
  bool series = true;
  for (int j = 2; j <= 64; ++j) series = series && p_closed(j) == p_recurrence(j);
  BigCount k2_4 = count_fillings(RegionSpec::k2(4));
  ExactRational formula = d2_closed(4);
  std::cout << "  discrepancy report: enumerated |K2(4)| = " << k2_4
            << ", closed form gives " << formula
            << " (non-integral; the squared row factor assumes an independence"
               " that fails at the second block corner)" << std::endl;
  report(5, "K2 anchors: |K2(3)| = 22 = d2(3), p_2 = 7/11, p series exact to j = 64",
         anchors && series);
}

void criterion6() {
  bool casework = dc_casework() == 1297 &&
                  count_fillings(RegionSpec::kc4()) == 1297;
  bool extensions = true;
  BigCount sum = 0;
  enumerate_fillings(RegionSpec::kc4(), [&](const Filling& f) {
    BigCount e = extension_count(f);
    extensions = extensions && e == 2;
    sum += e;
    return true;
  });
  report(6, "d_c = 1297 by casework and enumeration; every Kc4 filling extends "
            "2 ways; total 2594",
         casework && extensions && sum == 2594);
}

void criterion7() {
  bool ok = true;
  BigCount d3_4 = 0, d3_5 = 0;
  enumerate_fillings(RegionSpec::k3(4), [&](const Filling& f) {
    ok = ok && extension_count(f) == 1;
    ++d3_4;
    return ok;
  });
  ok = ok && d3_4 == count_knot_mosaics(4);
  auto t0 = std::chrono::steady_clock::now();
  enumerate_fillings(RegionSpec::k3(5), [&](const Filling& f) {
    ok = ok && extension_count(f) == 1;
    ++d3_5;
    return ok;
  });
  ok = ok && d3_5 == count_knot_mosaics(5);
  report(7, "every (K3, n) filling extends uniquely, so D_n = d_3 (n = 4, 5)",
         ok, "n=5 long test " + std::to_string(seconds_since(t0)) + " s");
}

void criterion8() {
  BoundPair b3 = bounds(3);
  bool ok = b3.lower == 22 && b3.upper == 22 && count_knot_mosaics(3) == 22;
  for (int n = 4; n <= 6; ++n) {
    BoundPair b = bounds(n);
    BigCount d = count_knot_mosaics(n);
    ok = ok && ceil_rat(b.lower) <= d && d <= floor_rat(b.upper);
    if (n == 4) ok = ok && ceil_rat(b.lower) == 1537 && floor_rat(b.upper) == 3380;
  }
  report(8, "ceil(lower) <= D_n <= floor(upper) for n = 4..6; equality at n = 3", ok);
}

void criterion9() {
  std::set<std::string> all4;
  enumerate_fillings(RegionSpec::full(4), [&](const Filling& f) {
    all4.insert(serialize_text(to_mosaic(f)));
    return true;
  });
  bool ok = all4.size() == 2594;
  for (const std::string& s : all4) {
    if (!ok) break;
    ok = all4.count(serialize_text(rotate_mosaic(parse_text(s), 1))) == 1;
  }
  report(9, "the 2594 knot 4-mosaics are closed under 90-degree rotation", ok);
}

void criterion10() {
  auto t0 = std::chrono::steady_clock::now();
  BigCount d10 = count_knot_mosaics(10);
  double el = seconds_since(t0);
  FrontierStats stats;
  count_knot_mosaics(16, kDefaultMaxFrontierN, &stats);
  bool mem_ok = stats.max_live_states <= (std::size_t(1) << 17);
  report(10, "count_knot_mosaics(10) under 10 s; live states at n = 16 within 2^(n+1)",
         el < 10.0 && d10 > 0 && mem_ok,
         "n=10 in " + std::to_string(el) + " s, peak " +
             std::to_string(stats.max_live_states) + " states");
}

void criterion11() {
  std::string fixtures = FIXTURES_DIR;
  std::string golden = GOLDEN_DIR;
  bool ok = true;
  for (const char* name : {"/trefoil4.txt", "/hopf4.txt"}) {
    std::string text = slurp(fixtures + name);
    Mosaic m = parse_text(text);
    ok = ok && serialize_text(m) == text && is_valid(m);
  }
  std::string csv1 = run_census("table --n-max 4 --format csv --no-timing");
  std::string csv2 = run_census("table --n-max 4 --format csv --no-timing");
  std::string json1 = run_census("table --n-max 4 --format json --no-timing");
  ok = ok && !csv1.empty() && csv1 == csv2;
  ok = ok && csv1 == slurp(golden + "/census4.csv");
  ok = ok && json1 == slurp(golden + "/census4.json");
  report(11, "text-format round trip, valid trefoil/Hopf fixtures, byte-stable census",
         ok);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}

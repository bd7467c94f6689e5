// census: counting, bounds, enumeration, validation and rendering for
// knot n-mosaics.
//
// Exit codes: 0 success/valid, 1 invalid mosaic, 2 usage error,
// 3 resource guard refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kmosaic/census.hpp"
#include "kmosaic/closed_forms.hpp"
#include "kmosaic/frontier.hpp"
#include "kmosaic/mosaic.hpp"
#include "kmosaic/region.hpp"
#include "kmosaic/render.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

int env_limit(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    return fallback;
  }
}

struct GuardError {
  std::string msg;
};

void check_guard(bool ok, const std::string& what, bool force) {
  if (!ok && !force) throw GuardError{what + " (use --force to override)"};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << content;
  }
}

std::string bounds_check_suffix(int n, const kmosaic::BigCount& count) {
  using namespace kmosaic;
  if (n < 3) return "";
  BoundPair b = bounds(n);
  std::ostringstream out;
  out << " lower=" << rational_string(b.lower) << " upper=" << rational_string(b.upper)
      << " ceil_lower=" << ceil_rat(b.lower).get_str()
      << " floor_upper=" << floor_rat(b.upper).get_str() << " within_bounds="
      << ((ceil_rat(b.lower) <= count && count <= floor_rat(b.upper)) ? "true"
                                                                      : "false");
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace kmosaic;

  CLI::App app{"Exact counting and verification for knot n-mosaics"};
  app.require_subcommand(1);

  int max_brute = env_limit("KMOSAIC_MAX_BRUTE", 5);
  int max_frontier = env_limit("KMOSAIC_MAX_FRONTIER", kDefaultMaxFrontierN);
  int max_quasi = env_limit("KMOSAIC_MAX_QUASI", 6);

  // count
  auto* count_cmd = app.add_subcommand("count", "Count knot n-mosaics");
  int count_n = 0;
  std::string count_method = "frontier";
  bool count_force = false;
  bool no_timing = false;
  std::string w_blank, w_2cp, w_4cp;
  count_cmd->add_option("-n,--size", count_n, "mosaic side length")->required();
  count_cmd->add_option("--method", count_method, "frontier or brute")
      ->check(CLI::IsMember({"frontier", "brute"}));
  count_cmd->add_flag("--force", count_force, "override resource guards");
  count_cmd->add_flag("--no-timing", no_timing, "report elapsed_s as 0.000");
  count_cmd->add_option("--weight-blank", w_blank, "weight of the blank profile");
  count_cmd->add_option("--weight-2cp", w_2cp, "weight of every 2-cp profile");
  count_cmd->add_option("--weight-4cp", w_4cp, "weight of the all-cp profile class");

  // quasi
  auto* quasi_cmd = app.add_subcommand("quasi", "Count quasimosaic region fillings");
  std::string quasi_kind;
  int quasi_n = 0, quasi_j = 0;
  bool quasi_force = false;
  quasi_cmd->add_option("--kind", quasi_kind, "region kind: k1, k2, k2j, k3, kc")
      ->required()
      ->check(CLI::IsMember({"k1", "k2", "k2j", "k3", "kc"}));
  quasi_cmd->add_option("-n,--size", quasi_n, "mosaic side length")->required();
  quasi_cmd->add_option("-j", quasi_j, "second-row extent for k2j");
  quasi_cmd->add_flag("--force", quasi_force, "override resource guards");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Tabulate the D_n bound formulas");
  int bounds_n_max = 0;
  std::string bounds_format = "table";
  bounds_cmd->add_option("--n-max", bounds_n_max, "largest n (from 3)")->required();
  bounds_cmd->add_option("--format", bounds_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check a mosaic file");
  std::string validate_path;
  validate_cmd->add_option("file", validate_path, "mosaic text file")->required();

  // render
  auto* render_cmd = app.add_subcommand("render", "Render a mosaic file");
  std::string render_path, render_format = "ascii", render_out;
  render_cmd->add_option("file", render_path, "mosaic text file")->required();
  render_cmd->add_option("--format", render_format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("-o,--output", render_out, "output file (default stdout)");

  // table
  auto* table_cmd = app.add_subcommand("table", "Census table for n = 1..n_max");
  int table_n_max = 0;
  std::string table_format = "csv", table_out;
  bool table_force = false, table_no_timing = false;
  table_cmd->add_option("--n-max", table_n_max, "largest n")->required();
  table_cmd->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("-o,--output", table_out, "output file (default stdout)");
  table_cmd->add_flag("--force", table_force, "override resource guards");
  table_cmd->add_flag("--no-timing", table_no_timing, "report elapsed_s as 0.000");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count_cmd) {
      bool brute = count_method == "brute";
      check_guard(count_n <= (brute ? max_brute : max_frontier),
                  "n exceeds the guard for method " + count_method, count_force);
      bool weighted = !w_blank.empty() || !w_2cp.empty() || !w_4cp.empty();
      if (weighted && brute) {
        std::cerr << "error: profile weights require --method frontier\n";
        return kExitUsage;
      }
      CensusRow row;
      if (weighted) {
        ProfileWeights w;
        if (!w_blank.empty()) w.blank() = BigCount(w_blank);
        if (!w_2cp.empty()) w.set_two_cp_all(BigCount(w_2cp));
        if (!w_4cp.empty()) w.all_cp() = BigCount(w_4cp);
        row.n = count_n;
        row.method = CountMethod::Frontier;
        auto t0 = std::chrono::steady_clock::now();
        row.count = count_weighted(count_n, w, count_force ? count_n : max_frontier);
        row.elapsed_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        std::cout << "n=" << row.n << " method=frontier-weighted count="
                  << row.count.get_str()
                  << " elapsed_s=" << elapsed_string(row.elapsed_s, !no_timing)
                  << '\n';
        return 0;
      }
      row = make_census_row(count_n,
                            brute ? CountMethod::Brute : CountMethod::Frontier,
                            count_force ? count_n : max_frontier);
      std::cout << "n=" << row.n << " method=" << method_name(row.method)
                << " count=" << row.count.get_str()
                << bounds_check_suffix(row.n, row.count)
                << " elapsed_s=" << elapsed_string(row.elapsed_s, !no_timing) << '\n';
      return 0;
    }

    if (*quasi_cmd) {
      RegionSpec spec{};
      std::string closed;
      std::string note;
      if (quasi_kind == "k1") {
        check_guard(quasi_n <= std::max(max_quasi, 8), "k1 region too large", quasi_force);
        spec = RegionSpec::k1(quasi_n);
        closed = BigCount(d1_closed(quasi_n)).get_str();
      } else if (quasi_kind == "k2") {
        check_guard(quasi_n <= max_quasi, "k2 region too large", quasi_force);
        spec = RegionSpec::k2(quasi_n);
        closed = rational_string(d2_closed(quasi_n));
        note =
            "the closed form squares the single-row factor; top and left "
            "connection points of the corner cell of the second block are "
            "correlated, so for n >= 4 it is not an exact cardinality";
      } else if (quasi_kind == "k2j") {
        if (quasi_j < 2) {
          std::cerr << "error: --kind k2j requires -j >= 2\n";
          return kExitUsage;
        }
        check_guard(quasi_n <= max_quasi, "k2j region too large", quasi_force);
        spec = RegionSpec::k2j(quasi_n, quasi_j);
        ExactRational d = ExactRational(d1_closed(quasi_n)) * ExactRational(11, 4);
        for (int k = 2; k < quasi_j; ++k) d *= 2 + ExactRational(3, 2) * p_closed(k);
        closed = rational_string(d);
      } else if (quasi_kind == "k3") {
        check_guard(quasi_n <= std::min(max_quasi, 5), "k3 region too large",
                    quasi_force);
        spec = RegionSpec::k3(quasi_n);
      } else {  // kc
        if (quasi_n != 4) {
          std::cerr << "error: --kind kc is defined for n = 4 only\n";
          return kExitUsage;
        }
        spec = RegionSpec::kc4();
        closed = dc_casework().get_str();
      }
      BigCount count = count_fillings(spec);
      std::cout << "kind=" << quasi_kind << " n=" << quasi_n;
      if (quasi_kind == "k2j") std::cout << " j=" << quasi_j;
      std::cout << " cells=" << spec.cells.size() << '\n';
      std::cout << "enumerated=" << count.get_str() << '\n';
      if (!closed.empty()) {
        bool equal = rational_string(ExactRational(count)) == closed;
        std::cout << "closed_form=" << closed << '\n';
        std::cout << "comparison=" << (equal ? "equal" : "differs") << '\n';
        if (!equal && !note.empty()) std::cout << "note=" << note << '\n';
      } else {
        std::cout << "closed_form=none\n";
        if (quasi_n >= 3) {
          BoundPair b = bounds(quasi_n);
          bool within = ceil_rat(b.lower) <= count && count <= floor_rat(b.upper);
          std::cout << "bounds=" << rational_string(b.lower) << ".."
                    << rational_string(b.upper)
                    << " within=" << (within ? "true" : "false") << '\n';
        }
      }
      return 0;
    }

    if (*bounds_cmd) {
      if (bounds_n_max < 3) {
        std::cerr << "error: --n-max must be at least 3\n";
        return kExitUsage;
      }
      std::ostringstream out;
      if (bounds_format == "json") {
        nlohmann::json j;
        j["rows"] = nlohmann::json::array();
        for (int n = 3; n <= bounds_n_max; ++n) {
          BoundPair b = bounds(n);
          nlohmann::json row;
          row["n"] = n;
          row["lower_frac"] = rational_string(b.lower);
          row["upper_frac"] = rational_string(b.upper);
          row["lower_decimal"] = decimal_string(b.lower);
          row["upper_decimal"] = decimal_string(b.upper);
          row["ceil_lower"] = ceil_rat(b.lower).get_str();
          row["floor_upper"] = floor_rat(b.upper).get_str();
          j["rows"].push_back(row);
        }
        out << j.dump(2) << '\n';
      } else {
        const char sep = bounds_format == "csv" ? ',' : ' ';
        out << "n" << sep << "lower_frac" << sep << "upper_frac" << sep
            << "lower_decimal" << sep << "upper_decimal" << sep << "ceil_lower"
            << sep << "floor_upper" << '\n';
        for (int n = 3; n <= bounds_n_max; ++n) {
          BoundPair b = bounds(n);
          out << n << sep << rational_string(b.lower) << sep
              << rational_string(b.upper) << sep << decimal_string(b.lower) << sep
              << decimal_string(b.upper) << sep << ceil_rat(b.lower).get_str() << sep
              << floor_rat(b.upper).get_str() << '\n';
        }
      }
      std::cout << out.str();
      return 0;
    }

    if (*validate_cmd) {
      Mosaic m = parse_text(read_file(validate_path));
      auto bad = validate(m);
      if (bad.empty()) {
        std::cout << "valid " << m.n() << "-mosaic\n";
        return 0;
      }
      std::cout << "invalid " << m.n() << "-mosaic: " << bad.size()
                << " violating edge(s)\n";
      for (const EdgeRef& e : bad)
        std::cout << "  violation: cell (" << e.row << ',' << e.col << ") "
                  << side_name(e.side) << " edge\n";
      return kExitInvalid;
    }

    if (*render_cmd) {
      Mosaic m = parse_text(read_file(render_path));
      write_output(render_out, render(m, render_format == "svg"
                                             ? RenderFormat::Svg
                                             : RenderFormat::Ascii));
      return 0;
    }

    if (*table_cmd) {
      if (table_n_max < 1) {
        std::cerr << "error: --n-max must be at least 1\n";
        return kExitUsage;
      }
      check_guard(table_n_max <= max_frontier, "n_max exceeds the frontier guard",
                  table_force);
      std::vector<CensusRow> rows;
      for (int n = 1; n <= table_n_max; ++n)
        rows.push_back(make_census_row(n, CountMethod::Frontier,
                                       table_force ? table_n_max : max_frontier));
      std::ostringstream out;
      if (table_format == "json") {
        out << census_json_table(rows, !table_no_timing).dump(2) << '\n';
      } else {
        out << census_csv_header() << '\n';
        for (const CensusRow& r : rows)
          out << census_csv_row(r, !table_no_timing) << '\n';
      }
      write_output(table_out, out.str());
      return 0;
    }
  } catch (const GuardError& e) {
    std::cerr << "refused: " << e.msg << '\n';
    return kExitGuard;
  } catch (const ResourceLimitError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

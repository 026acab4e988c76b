#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "moonfill/classical.hpp"
#include "moonfill/error.hpp"
#include "moonfill/io.hpp"
#include "moonfill/kasraoui.hpp"
#include "moonfill/mixed_bijections.hpp"
#include "moonfill/verify.hpp"

using namespace moonfill;

namespace {

// Run envelope written to stderr; the payload goes to stdout or --output.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  std::string read(const std::string& path) {
    std::string text = read_file(path);
    inputs.emplace_back(path, digest(text));
    return text;
  }

  void finish(bool passed, bool quiet) const {
    if (quiet) return;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cerr << "command: " << command << "\n";
    for (const auto& [path, hash] : inputs) std::cerr << "input: " << path << " fnv1a " << hash << "\n";
    std::cerr << "wall_ms: " << ms << "\n";
    std::cerr << "status: " << (passed ? "pass" : "FAIL") << "\n";
  }
};

void emit(const std::string& payload, const std::string& output) {
  if (output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + output);
  out << payload;
}

std::string describe_shape(const MoonPolyomino& shape) {
  const auto cls = classify_columns(shape);
  int k = 0;
  for (const auto& row : shape.row_intervals()) k = std::max(k, row.length());
  std::ostringstream out;
  out << "rows: " << shape.rows() << "\n"
      << "columns: " << shape.cols() << "\n"
      << "cells: " << shape.cell_count() << "\n"
      << "longest_row: " << k << "\n"
      << "pivot: " << cls.pivot << "\n"
      << "left_part: " << format_int_list(cls.left_part) << "\n"
      << "right_part: " << format_int_list(cls.right_part) << "\n"
      << "order: " << format_int_list(precedence_order(shape)) << "\n"
      << "left_aligned: " << (shape.is_left_aligned() ? "yes" : "no") << "\n"
      << "top_aligned: " << (shape.is_top_aligned() ? "yes" : "no") << "\n";
  return out.str();
}

const std::map<std::string, MixedStatistic> mixed_kinds{{"alpha", MixedStatistic::top},
                                                        {"beta", MixedStatistic::bottom},
                                                        {"gamma", MixedStatistic::left},
                                                        {"delta", MixedStatistic::right}};

bool is_row_kind(MixedStatistic kind) {
  return kind == MixedStatistic::top || kind == MixedStatistic::bottom;
}

int universe_of(const MoonPolyomino& shape, MixedStatistic kind) {
  return is_row_kind(kind) ? shape.rows() : shape.cols();
}

std::vector<int> complement_of(const std::vector<int>& a, int universe) {
  std::vector<int> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int i = 1; i <= universe; ++i)
    if (!std::binary_search(sorted.begin(), sorted.end(), i)) out.push_back(i);
  return out;
}

std::string command_line(int argc, char** argv) {
  std::string out = "moonfill";
  for (int i = 1; i < argc; ++i) out += std::string(" ") + argv[i];
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fillings of moon polyominoes: statistics, distributions, bijections"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress the run report on stderr");

  std::string shape_path, filling_path, input_path, output_path, target_path, shape_out;
  std::string e_text, s_text, subset_text, stat = "se-ne", format = "text", map_name, theorem;
  bool count_only = false, list = false, inverse = false;
  int row = 1, col = 1;
  VerifyOptions vopt;

  auto* validate = app.add_subcommand("validate", "Check a shape file and print its data");
  validate->add_option("shape", shape_path, "Shape file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Count or list the fillings of a class");
  enumerate->add_option("--shape", shape_path, "Shape file")->required();
  enumerate->add_option("--e", e_text, "Row sums, comma separated")->required();
  enumerate->add_option("--s", s_text, "Column sums, comma separated")->required();
  auto* count_flag = enumerate->add_flag("--count", count_only, "Print the count");
  enumerate->add_flag("--list", list, "Print every filling")->excludes(count_flag);

  auto* stats = app.add_subcommand("stats", "Statistics of one filling");
  stats->add_option("--shape", shape_path, "Shape file")->required();
  stats->add_option("--filling", filling_path, "Filling file")->required();
  stats->add_option("--stat", stat, "ne, se, alpha, beta, gamma or delta")
      ->check(CLI::IsMember({"ne", "se", "alpha", "beta", "gamma", "delta"}));
  stats->add_option("--subset", subset_text, "Row or column subset, comma separated");

  auto* dist = app.add_subcommand("dist", "Distribution over a class");
  dist->add_option("--shape", shape_path, "Shape file")->required();
  dist->add_option("--e", e_text, "Row sums")->required();
  dist->add_option("--s", s_text, "Column sums")->required();
  dist->add_option("--stat", stat, "se-ne, alpha, beta, gamma or delta")
      ->check(CLI::IsMember({"se-ne", "alpha", "beta", "gamma", "delta"}));
  dist->add_option("--subset", subset_text, "Row or column subset");
  dist->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> theorems = suite_names();
  theorems.push_back("all");
  verify->add_option("--theorem", theorem, "Suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(theorems));
  verify->add_option("--seed", vopt.seed, "Random seed");
  verify->add_option("--shapes", vopt.shapes, "Random shapes per suite");
  verify->add_option("--max-rows", vopt.max_rows, "Row bound for random shapes");
  verify->add_option("--max-cols", vopt.max_cols, "Column bound for random shapes");
  verify->add_option("--max-matching", vopt.max_matching, "Largest n for matching classes");
  verify->add_option("--max-catalan", vopt.max_catalan, "Largest n for the Catalan count");
  verify->add_option("--threads", vopt.threads, "Worker threads for distributions");

  auto* bijection = app.add_subcommand("bijection", "Apply one map");
  bijection
      ->add_option("--map", map_name,
                   "psi, psi-inv, phi-alpha, theta, Theta, rho, phi-gamma, xi, Sigma, beta, "
                   "delta, h or lambda")
      ->required()
      ->check(CLI::IsMember({"psi", "psi-inv", "phi-alpha", "theta", "Theta", "rho", "phi-gamma",
                             "xi", "Sigma", "beta", "delta", "h", "lambda"}));
  bijection->add_option("--shape", shape_path, "Shape file")->required();
  bijection->add_option("--input", input_path, "Filling file (compositions for psi-inv)")
      ->required();
  bijection->add_option("--output", output_path, "Write the image here instead of stdout");
  bijection->add_option("--subset", subset_text, "Subset for Theta, Sigma, beta, delta, lambda");
  bijection->add_option("--row", row, "Row for theta");
  bijection->add_option("--col", col, "Column for xi");
  bijection->add_option("--target", target_path, "Target shape for lambda");
  bijection->add_option("--shape-out", shape_out, "Write the image shape for h and lambda");
  bijection->add_flag("--inverse", inverse, "Apply the inverse map");

  CLI11_PARSE(app, argc, argv);

  Report report;
  report.command = command_line(argc, argv);
  bool passed = true;
  try {
    if (*validate) {
      const auto shape = parse_shape(report.read(shape_path));
      std::cout << describe_shape(shape);
    } else if (*enumerate) {
      const auto shape = parse_shape(report.read(shape_path));
      const auto e = parse_int_list(e_text);
      const auto s = parse_int_list(s_text);
      if (list) {
        long long index = 0;
        for_each_filling(shape, e, s, [&](const Filling& f) {
          std::cout << "# filling " << ++index << "\n" << format_filling(f);
        });
        std::cout << "count: " << index << "\n";
      } else {
        std::cout << "count: " << count_fillings(shape, e, s) << "\n";
      }
    } else if (*stats) {
      const auto shape = parse_shape(report.read(shape_path));
      const auto f = parse_filling(report.read(filling_path), shape);
      if (stat == "ne" || stat == "se") {
        std::cout << "ne: " << ne_count(f) << "\nse: " << se_count(f) << "\n";
      } else {
        const auto kind = mixed_kinds.at(stat);
        const auto a = parse_int_list(subset_text);
        const int universe = universe_of(shape, kind);
        const auto rest = complement_of(a, universe);
        const auto value = [&](const std::vector<int>& x) {
          if (is_row_kind(kind)) {
            const RowSubset rs(x, universe);
            return kind == MixedStatistic::top ? top_mixed(f, rs) : bottom_mixed(f, rs);
          }
          const ColSubset cs(x, universe);
          return kind == MixedStatistic::left ? left_mixed(f, cs) : right_mixed(f, cs);
        };
        std::cout << stat << ": " << value(a) << "\n"
                  << stat << "_complement: " << value(rest) << "\n";
      }
    } else if (*dist) {
      const auto shape = parse_shape(report.read(shape_path));
      const auto e = parse_int_list(e_text);
      const auto s = parse_int_list(s_text);
      const BivarPoly poly =
          stat == "se-ne"
              ? se_ne_distribution(shape, e, s)
              : distribution(shape, e, s, mixed_kinds.at(stat), parse_int_list(subset_text));
      std::cout << (format == "json" ? poly_to_json(poly) : to_text(poly)) << "\n";
    } else if (*verify) {
      const std::vector<std::string> names =
          theorem == "all" ? suite_names() : std::vector<std::string>{theorem};
      for (const auto& name : names) {
        const auto result = run_suite(name, vopt);
        std::cout << format_report(result);
        passed = passed && result.passed();
      }
    } else if (*bijection) {
      const auto shape = parse_shape(report.read(shape_path));
      const std::string input = report.read(input_path);
      if (map_name == "psi") {
        const auto f = parse_filling(input, shape);
        emit(format_compositions(f.row_sums(), to_compositions(f)), output_path);
      } else if (map_name == "psi-inv") {
        const auto file = parse_compositions(input);
        const auto s = column_sums_of(file.compositions);
        emit(format_filling(from_compositions(shape, file.e, s, file.compositions)), output_path);
      } else {
        const auto f = parse_filling(input, shape);
        const auto subset = parse_int_list(subset_text);
        Filling image = f;
        if (map_name == "phi-alpha") {
          image = inverse ? first_row_transport_inverse(f) : first_row_transport(f);
        } else if (map_name == "theta") {
          image = inverse ? row_suffix_transport_inverse(f, row) : row_suffix_transport(f, row);
        } else if (map_name == "Theta") {
          const RowSubset rs(subset, shape.rows());
          image = inverse ? top_mixed_transport_inverse(f, rs) : top_mixed_transport(f, rs);
        } else if (map_name == "beta") {
          const RowSubset rs(subset, shape.rows());
          image = inverse ? bottom_mixed_transport_inverse(f, rs) : bottom_mixed_transport(f, rs);
        } else if (map_name == "rho") {
          image = rectangle_reversal(f);
        } else if (map_name == "phi-gamma") {
          image = inverse ? first_column_transport_inverse(f) : first_column_transport(f);
        } else if (map_name == "xi") {
          image = inverse ? column_suffix_transport_inverse(f, col) : column_suffix_transport(f, col);
        } else if (map_name == "Sigma") {
          const ColSubset cs(subset, shape.cols());
          image = inverse ? left_mixed_transport_inverse(f, cs) : left_mixed_transport(f, cs);
        } else if (map_name == "delta") {
          const ColSubset cs(subset, shape.cols());
          image = inverse ? right_mixed_transport_inverse(f, cs) : right_mixed_transport(f, cs);
        } else if (map_name == "h") {
          if (inverse) {
            if (target_path.empty())
              throw Error(ErrorKind::ParseError, "--inverse h needs --target (the source shape)");
            const auto source = parse_shape(report.read(target_path));
            image = top_align_transport_inverse(f, source);
          } else {
            image = top_align_transport(f);
          }
        } else if (map_name == "lambda") {
          if (target_path.empty()) throw Error(ErrorKind::ParseError, "lambda needs --target");
          const auto target = parse_shape(report.read(target_path));
          image = row_permutation_transport(f, RowSubset(subset, shape.rows()), target);
        }
        if (!shape_out.empty()) emit(format_shape(image.shape()), shape_out);
        emit(format_filling(image), output_path);
      }
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    report.finish(false, quiet);
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    report.finish(false, quiet);
    return 2;
  }
  report.finish(passed, quiet);
  return passed ? 0 : 1;
}

#include "tshelf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tshelf/asymptotics.hpp"
#include "tshelf/bijections.hpp"
#include "tshelf/egf.hpp"
#include "tshelf/verify.hpp"

namespace tshelf {

namespace {

using nlohmann::json;

// Input errors found after argument parsing; reported with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kClassNames = {"all", "l-then-r", "ll", "siblings-inc",
                                              "rr", "r-then-l", "siblings-dec"};

json string_array(const std::vector<BigInt>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

void write_values(std::ostream& out, const std::string& cls, const std::vector<BigInt>& values,
                  const std::string& format) {
  if (format == "json") {
    out << json{{"class", cls}, {"values", string_array(values)}}.dump() << '\n';
  } else if (format == "bfile") {
    out << to_bfile(values, 0);
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i].get_str();
    out << '\n';
  }
}

ShelfClass to_class(const std::string& name) {
  const auto c = parse_shelf_class(name);
  if (!c) throw UsageError("unknown class " + name);
  return *c;
}

Method to_method(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) throw UsageError("unknown method " + name);
  return *m;
}

// Non-blank lines of the named file, or of `in` for "-".
std::vector<std::string> read_lines(const std::string& path, std::istream& in) {
  std::unique_ptr<std::ifstream> file;
  std::istream* src = &in;
  if (path != "-") {
    file = std::make_unique<std::ifstream>(path);
    if (!*file) throw UsageError("cannot open " + path);
    src = file.get();
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(*src, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

std::string convert_object(const std::string& which, bool forward, const std::string& text) {
  if (which == "partition") {
    return forward ? render(partition_to_shelf(parse_partition(text)))
                   : render(shelf_to_partition(parse_shelf(text)));
  }
  if (which == "jtree") {
    return forward ? render(jtree_to_shelf(parse_jtree(text))) : render(shelf_to_jtree(parse_shelf(text)));
  }
  return forward ? render(unordered_to_ll_avoider(parse_unordered(text)))
                 : render(ll_avoider_to_unordered(parse_shelf(text)));
}

SeriesClass to_series_class(const std::string& name) {
  if (name == "l-then-r") return SeriesClass::LthenR;
  if (name == "ll") return SeriesClass::LL;
  if (name == "siblings-inc") return SeriesClass::SiblingsIncreasing;
  throw UsageError("no asymptotic formula for class " + name);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Treeshelf enumeration, pattern statistics and bijections", "tshelf"};
  app.require_subcommand(1);

  std::string cls;
  std::string method = "series";
  std::string format = "text";
  int n_max = 0;

  auto* count = app.add_subcommand("count", "Class sizes for n = 0..n-max");
  count->add_option("--class", cls, "Shelf class")->required()->check(CLI::IsMember(kClassNames));
  count->add_option("--n-max", n_max, "Largest size")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--method", method, "Counting route")
      ->check(CLI::IsMember({"enum", "series", "grammar"}));
  count->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "bfile"}));

  int n = 0;
  std::string avoid;
  auto* enumerate = app.add_subcommand("enumerate", "List shelves of size n in lexicographic order");
  enumerate->add_option("--n", n, "Size")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--avoid", avoid, "Pattern to avoid");
  enumerate->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* distribution = app.add_subcommand("distribution", "Left-child distribution polynomials");
  distribution->add_option("--class", cls, "Shelf class")->required()->check(CLI::IsMember(kClassNames));
  distribution->add_option("--n-max", n_max, "Largest size")->required()->check(CLI::NonNegativeNumber);
  distribution->add_option("--method", method, "Route")->check(CLI::IsMember({"enum", "series"}));
  distribution->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* popular = app.add_subcommand("popularity", "Total number of left children over a class");
  popular->add_option("--class", cls, "Shelf class")->required()->check(CLI::IsMember(kClassNames));
  popular->add_option("--n-max", n_max, "Largest size")->required()->check(CLI::NonNegativeNumber);
  popular->add_option("--method", method, "Route")->check(CLI::IsMember({"enum", "series", "recurrence"}));
  popular->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "bfile"}));

  std::string which;
  std::string direction;
  std::string input = "-";
  auto* bijection = app.add_subcommand("bijection", "Apply a bijection to one object per input line");
  bijection->add_option("--which", which, "Bijection")
      ->required()
      ->check(CLI::IsMember({"partition", "jtree", "unordered"}));
  bijection->add_option("--direction", direction, "fwd maps objects to shelves")
      ->required()
      ->check(CLI::IsMember({"fwd", "inv"}));
  bijection->add_option("--input", input, "Input file or - for standard input");

  std::string suite = "all";
  int verify_n_max = 8;
  auto* verify = app.add_subcommand("verify", "Run the cross-check matrix");
  verify->add_option("--suite", suite, "Suite")
      ->check(CLI::IsMember({"all", "counts", "distributions", "bijections", "asymptotics"}));
  verify->add_option("--n-max", verify_n_max, "Largest exhaustive size")->check(CLI::NonNegativeNumber);

  std::vector<int> ns;
  auto* asympt = app.add_subcommand("asympt", "Compare exact popularity with its asymptotic estimate");
  asympt->add_option("--class", cls, "l-then-r, ll or siblings-inc")
      ->required()
      ->check(CLI::IsMember({"l-then-r", "ll", "siblings-inc"}));
  asympt->add_option("--n", ns, "Comma-separated sizes, each at least 2")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(2, 100000));

  auto* perm = app.add_subcommand("perm", "Convert between shelves and permutations");
  perm->add_option("--direction", direction, "to: shelf to permutation, from: permutation to shelf")
      ->required()
      ->check(CLI::IsMember({"to", "from"}));
  perm->add_option("--input", input, "Input file or - for standard input");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) {
      write_values(out, cls, class_counts(to_class(cls), n_max, to_method(method)), format);
    } else if (enumerate->parsed()) {
      std::vector<std::string> shelves;
      const auto collect = [&](const Treeshelf& t) { shelves.push_back(render(t)); };
      if (avoid.empty()) {
        enumerate_shelves(n, collect);
      } else {
        const auto p = parse_pattern(avoid);
        if (!p) throw UsageError("unknown pattern " + avoid);
        filter_avoiders(n, *p, collect);
      }
      if (format == "json") {
        out << json{{"n", n}, {"shelves", shelves}}.dump() << '\n';
      } else {
        for (const auto& s : shelves) out << s << '\n';
      }
    } else if (distribution->parsed()) {
      const auto polys = class_distribution(to_class(cls), n_max, to_method(method));
      json rows = json::array();
      for (const auto& p : polys) rows.push_back(string_array(p.integer_coeffs()));
      if (format == "json") {
        out << json{{"class", cls}, {"rows", rows}}.dump() << '\n';
      } else {
        for (const auto& row : rows) {
          for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].get<std::string>();
          out << '\n';
        }
      }
    } else if (popular->parsed()) {
      write_values(out, cls, class_popularity(to_class(cls), n_max, to_method(method)), format);
    } else if (bijection->parsed()) {
      for (const auto& line : read_lines(input, in)) out << convert_object(which, direction == "fwd", line) << '\n';
    } else if (verify->parsed()) {
      const auto results = run_suite(*parse_suite(suite), verify_n_max);
      std::size_t failed = 0;
      for (const auto& r : results) {
        if (r.passed) {
          out << "PASS " << r.name << '\n';
        } else {
          ++failed;
          out << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
        }
      }
      out << results.size() - failed << '/' << results.size() << " checks passed\n";
      return failed == 0 ? kExitOk : kExitMismatch;
    } else if (asympt->parsed()) {
      out << ratio_report(to_series_class(cls), ns).to_csv();
    } else if (perm->parsed()) {
      for (const auto& line : read_lines(input, in)) {
        if (direction == "to") {
          out << render(shelf_to_permutation(parse_shelf(line))) << '\n';
        } else {
          out << render(permutation_to_shelf(parse_permutation(line))) << '\n';
        }
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal mismatch: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace tshelf

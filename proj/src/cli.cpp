#include "deutsch/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "deutsch/closed_forms.hpp"
#include "deutsch/path.hpp"
#include "deutsch/series.hpp"
#include "deutsch/tree.hpp"
#include "deutsch/verify.hpp"

namespace deutsch::cli {

namespace {

constexpr std::size_t kDefaultBruteCap = 14;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt brute_count(std::size_t n) {
  std::size_t c = 0;
  for_each_nondecreasing_filter(n, [&](const ValidatedPath&) { ++c; });
  return c;
}

BigInt count_by(std::size_t n, const std::string& method) {
  if (method == "closed") return count_nondecreasing_closed(n);
  if (method == "series") {
    return boost::multiprecision::numerator(gf_coefficients(GfForm::WithEmpty, n)[n]);
  }
  if (method == "brute") return brute_count(n);
  return enumerate_nondecreasing_direct(n).size();
}

ValidatedPath nondecreasing_from_text(const std::string& text) {
  DeutschPath raw;
  try {
    raw = parse_path(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto v = validate(raw);
  if (const auto* e = std::get_if<PathError>(&v)) throw UsageError(e->message());
  auto p = std::get<ValidatedPath>(std::move(v));
  if (!is_nondecreasing(p)) throw UsageError("path is not non-decreasing");
  return p;
}

void print_table(std::ostream& out, std::size_t max, std::size_t brute_cap, bool json) {
  const auto series = gf_coefficients(GfForm::WithEmpty, max);
  if (!json) out << "n\tclosed\tseries\tbrute\tagree\n";
  for (std::size_t n = 0; n <= max; ++n) {
    const BigInt closed = count_nondecreasing_closed(n);
    const std::string series_str = to_string(series[n]);
    bool agree = series[n] == Rational(closed);
    std::optional<BigInt> brute;
    if (n <= brute_cap) {
      brute = brute_count(n);
      agree = agree && *brute == closed;
    }
    if (json) {
      nlohmann::ordered_json row;
      row["n"] = n;
      row["closed"] = closed.str();
      row["series"] = series_str;
      if (brute) row["brute"] = brute->str();
      row["agree"] = agree;
      out << row.dump() << '\n';
    } else {
      out << n << '\t' << closed.str() << '\t' << series_str << '\t'
          << (brute ? brute->str() : std::string("-")) << '\t' << (agree ? "yes" : "NO")
          << '\n';
    }
  }
}

void print_stats(std::ostream& out, std::size_t n, bool json) {
  const auto rep = statistics(n);
  if (json) {
    for (std::size_t i = 0; i < rep.paths.size(); ++i) {
      const auto& s = rep.records[i];
      nlohmann::ordered_json row;
      row["path"] = render_path(rep.paths[i]);
      row["length"] = s.length;
      row["ups"] = s.up_count;
      row["downsteps"] = s.downstep_count;
      row["height"] = s.height;
      row["valleys"] = s.valley_levels;
      out << row.dump() << '\n';
    }
    return;
  }
  out << "paths: " << rep.paths.size() << '\n';
  const auto hist = [&](const char* label, const auto& h) {
    out << label << ':';
    for (const auto& [k, v] : h) out << ' ' << k << '=' << v;
    out << '\n';
  };
  hist("down-steps", rep.downstep_histogram);
  hist("height", rep.height_histogram);
  hist("valleys", rep.valley_count_histogram);
}

std::vector<BigInt> named_sequence(const std::string& name, std::size_t max) {
  std::vector<BigInt> v;
  for (std::size_t n = 0; n <= max; ++n) {
    if (name == "fibonacci") {
      v.push_back(fibonacci(static_cast<long long>(n)));
    } else if (name == "pell") {
      v.push_back(pell(n));
    } else if (name == "half-companion-pell") {
      v.push_back(half_companion_pell(n));
    } else if (name == "nondecreasing") {
      v.push_back(count_nondecreasing_closed(n));
    } else {
      v.push_back(count_mountains(static_cast<long long>(n)));
    }
  }
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-decreasing Deutsch paths: counts, listings, trees and generating functions",
               "deutsch"};
  app.require_subcommand(1);

  std::size_t length = 0;
  std::size_t max = 0;
  std::size_t brute_cap = kDefaultBruteCap;
  bool json = false;

  auto* count = app.add_subcommand("count", "Number of non-decreasing paths of a length");
  std::string method = "closed";
  count->add_option("--length", length, "Path length")->required();
  count->add_option("--method", method, "closed, series, brute or direct")
      ->check(CLI::IsMember({"closed", "series", "brute", "direct"}));

  auto* table = app.add_subcommand("table", "Counts by every method for n = 0..max");
  table->add_option("--max", max, "Largest length")->required();
  table->add_option("--brute-cap", brute_cap, "Skip brute force above this length");
  table->add_flag("--json", json, "One JSON object per row");

  auto* list = app.add_subcommand("list", "List paths in canonical order");
  list->add_option("--length", length, "Path length")->required();
  list->add_flag("--json", json, "One JSON object per path");

  auto* tree = app.add_subcommand("tree", "Marked tree of a path");
  std::string path_text;
  tree->add_option("--path", path_text, "Path tokens, e.g. \"U U D2 U D1\"")->required();
  tree->add_flag("--json", json, "Print JSON instead of an outline");

  auto* path = app.add_subcommand("path", "Path of a marked tree");
  std::string tree_text;
  path->add_option("--tree", tree_text, "Tree JSON")->required();

  auto* gf = app.add_subcommand("gf", "Expand a named generating function");
  std::string form;
  std::size_t terms = 0;
  gf->add_option("--form", form, "Form name")->required();
  gf->add_option("--terms", terms, "Highest order")->required();
  gf->add_flag("--json", json, "Print JSON");

  auto* mountains = app.add_subcommand("mountains", "Number of mountains with K steps");
  long long steps = 0;
  mountains->add_option("--steps", steps, "Total steps K")->required();

  auto* tilings = app.add_subcommand("tilings", "Square/domino tilings of a 1 x n strip");
  bool first_square = false;
  bool list_tilings = false;
  tilings->add_option("--length", length, "Strip length")->required();
  tilings->add_flag("--first-square", first_square, "Only tilings starting with a square");
  tilings->add_flag("--list", list_tilings, "List tilings instead of counting");

  auto* stats = app.add_subcommand("stats", "Statistics over all paths of a length");
  stats->add_option("--length", length, "Path length")->required();
  stats->add_flag("--json", json, "One JSON object per path");

  auto* sequence = app.add_subcommand("sequence", "Print an integer sequence");
  std::string seq_name;
  bool bfile = false;
  sequence->add_option("--name", seq_name, "Sequence name")
      ->required()
      ->check(CLI::IsMember(
          {"fibonacci", "pell", "half-companion-pell", "nondecreasing", "mountains"}));
  sequence->add_option("--max", max, "Largest index")->required();
  sequence->add_flag("--bfile", bfile, "OEIS b-file format");

  auto* verify = app.add_subcommand("verify", "Run every cross-check");
  VerifyOptions vopts;
  verify->add_option("--max", vopts.max_n, "Largest length")->required();
  verify->add_option("--brute-cap", vopts.brute_cap, "Skip brute force above this length");
  verify->add_option("--order", vopts.series_order, "Series order for series-only checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) {
      out << count_by(length, method).str() << '\n';
    } else if (*table) {
      print_table(out, max, brute_cap, json);
    } else if (*list) {
      for_each_nondecreasing_filter(length, [&](const ValidatedPath& p) {
        out << (json ? path_to_json(p.path()) : render_path(p)) << '\n';
      });
    } else if (*tree) {
      const auto t = path_to_tree(nondecreasing_from_text(path_text));
      out << (json ? tree_to_json(t) + "\n" : render_outline(t));
    } else if (*path) {
      MarkedTree t;
      try {
        t = tree_from_json(tree_text);
        out << render_path(tree_to_path(t)) << '\n';
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else if (*gf) {
      std::vector<Rational> coeffs;
      try {
        coeffs = gf_coefficients(form, terms);
      } catch (const UnknownForm& e) {
        throw UsageError(e.what());
      }
      out << (json ? coefficients_json(form, coeffs) : format_coefficients(coeffs)) << '\n';
    } else if (*mountains) {
      out << count_mountains(steps).str() << '\n';
    } else if (*tilings) {
      if (list_tilings) {
        for_each_tiling(length, [&](const Tiling& t) {
          if (first_square && length > 0 && t.front() != Tile::Square) return;
          out << render_tiling(t) << '\n';
        });
      } else {
        out << (first_square ? count_square_first_tilings(length) : count_tilings(length)).str()
            << '\n';
      }
    } else if (*stats) {
      print_stats(out, length, json);
    } else if (*sequence) {
      const auto values = named_sequence(seq_name, max);
      out << (bfile ? format_bfile(values) : format_sequence(values) + "\n");
    } else if (*verify) {
      const auto results = run_verification(vopts);
      std::size_t failed = 0;
      for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.passed) {
          ++failed;
          out << ": " << r.detail;
        }
        out << '\n';
      }
      out << (results.size() - failed) << '/' << results.size() << " checks passed\n";
      return failed == 0 ? kExitOk : kExitVerifyFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace deutsch::cli

#include "polypart/cli.hpp"

#include "polypart/bijection.hpp"
#include "polypart/cones.hpp"
#include "polypart/partition.hpp"
#include "polypart/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>

namespace polypart::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::int64_t t = -1;
  std::int64_t n = 0;
  std::int64_t max_n = 0;
  std::int64_t max_height = 0;
  std::int64_t max_m = 0;
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
  bool fixed = false;
  std::string form;
  std::string format = "csv";
  std::string pair;
  std::string partition;
};

int emit_report(const VerificationReport &report, std::ostream &out) {
  out << report.to_json().dump() << '\n';
  return report.passed ? Success : VerificationFailure;
}

int run_count(const Options &o, std::ostream &out) {
  if (o.t < 0)
    throw InvalidArgument("--t must be non-negative");
  out << (o.fixed ? count_fixed(o.n, o.t) : count_bounded(o.n, o.t)) << '\n';
  return Success;
}

int run_table(const Options &o, std::ostream &out) {
  if (o.t < 1)
    throw InvalidArgument("table needs --t >= 1");
  const auto sum = bounded_sum_form(o.t, o.max_n);
  const auto rational = bounded_rational_form(o.t, o.max_n);
  const bool with_quasi = o.t == 2;
  bool all_match = true;
  json rows = json::array();
  if (o.format == "csv")
    out << "n,brute,sum_form,rational_form" << (with_quasi ? ",quasipoly" : "") << ",match\n";
  for (std::int64_t n = 1; n <= o.max_n; ++n) {
    const Integer brute = count_bounded(n, o.t);
    std::optional<Integer> quasi;
    if (with_quasi)
      quasi = quasipoly_p2(n);
    const bool match = sum[n] == brute && rational[n] == brute && (!quasi || *quasi == brute);
    all_match = all_match && match;
    if (o.format == "csv") {
      out << n << ',' << brute << ',' << sum[n] << ',' << rational[n];
      if (quasi)
        out << ',' << *quasi;
      out << ',' << (match ? "true" : "false") << '\n';
    } else {
      json row{{"n", n},
               {"brute", brute.str()},
               {"sum_form", sum[n].str()},
               {"rational_form", rational[n].str()}};
      if (quasi)
        row["quasipoly"] = quasi->str();
      row["match"] = match;
      rows.push_back(std::move(row));
    }
  }
  if (o.format == "json")
    out << json{{"t", o.t}, {"max_n", o.max_n}, {"rows", rows}}.dump() << '\n';
  return all_match ? Success : VerificationFailure;
}

int run_series(const Options &o, std::ostream &out) {
  const auto form = parse_series_form(o.form);
  std::int64_t t = o.t;
  if (form == SeriesForm::Divisor)
    t = 0;
  else if (t < 1)
    throw InvalidArgument("--form " + o.form + " needs --t >= 1");
  const auto series = make_series(form, t, o.max_n);
  if (o.format == "json") {
    out << series_to_json(series, t, form) << '\n';
  } else {
    out << "n,coeff\n";
    for (std::int64_t n = 0; n <= series.degree(); ++n)
      out << n << ',' << series[n] << '\n';
  }
  return Success;
}

json point_json(const LatticePoint &x) { return to_json(x); }

int run_map(const Options &o, std::ostream &out) {
  const auto pair = BijectionPair::parse(o.pair, o.t);
  const auto lambda = pair_to_partition(pair);
  if (o.format == "json") {
    auto doc = pair.to_json();
    doc["partition"] = lambda.str();
    doc["m"] = decompose_m(pair).m;
    doc["point"] = point_json(pair_to_point(pair));
    out << doc.dump() << '\n';
  } else {
    out << lambda.str() << '\n';
  }
  return Success;
}

int run_unmap(const Options &o, std::ostream &out) {
  const auto lambda = Partition::parse(o.partition);
  const auto pair = partition_to_pair(o.t, lambda);
  if (o.format == "json") {
    auto doc = pair.to_json();
    doc["partition"] = lambda.str();
    doc["m"] = lambda.smallest();
    doc["point"] = point_json(pair_to_point(pair));
    out << doc.dump() << '\n';
  } else {
    out << pair.str() << '\n';
  }
  return Success;
}

void add_format(CLI::App *cmd, Options &o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Bounded-difference partitions: counts, series, cones and bijection", "polypart"};
  app.require_subcommand(1);
  Options o;

  auto *count = app.add_subcommand("count", "Count partitions of n with bounded (or fixed) difference t");
  count->add_option("--t", o.t, "Difference bound")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--n", o.n, "Weight")->required()->check(CLI::PositiveNumber);
  count->add_flag("--fixed", o.fixed, "Count largest - smallest == t exactly");

  auto *table = app.add_subcommand("table", "Compare brute force with both generating functions");
  table->add_option("--t", o.t, "Difference bound")->required()->check(CLI::PositiveNumber);
  table->add_option("--max-n", o.max_n, "Largest weight")->required()->check(CLI::PositiveNumber);
  add_format(table, o);

  auto *series = app.add_subcommand("series", "Print truncated generating-function coefficients");
  series->add_option("--t", o.t, "Difference bound (ignored for --form divisor)");
  series->add_option("--max-n", o.max_n, "Truncation degree")->required()->check(CLI::NonNegativeNumber);
  series->add_option("--form", o.form, "sum|rational|abr-sum|abr-closed|fixed|divisor")
      ->required()
      ->check(CLI::IsMember({"sum", "rational", "abr-sum", "abr-closed", "fixed", "divisor"}));
  add_format(series, o);

  auto *verify = app.add_subcommand("verify", "Run an exact verification and print a JSON report");
  verify->require_subcommand(1);
  auto *tiling = verify->add_subcommand("tiling", "Every lattice point of X_t lies in exactly one cone");
  tiling->add_option("--t", o.t, "Difference bound")->required()->check(CLI::PositiveNumber);
  tiling->add_option("--max-height", o.max_height, "Largest height")->required()->check(CLI::PositiveNumber);
  auto *bijection = verify->add_subcommand("bijection", "Exhaustive bijection round trips");
  bijection->add_option("--t", o.t, "Difference bound")->required()->check(CLI::PositiveNumber);
  bijection->add_option("--max-height", o.max_height, "Largest height")->required()->check(CLI::PositiveNumber);
  auto *cones = verify->add_subcommand("cones", "Generator vs inequality description on random points");
  cones->add_option("--t", o.t, "Difference bound")->required()->check(CLI::PositiveNumber);
  cones->add_option("--max-m", o.max_m, "Largest cone index")->required()->check(CLI::PositiveNumber);
  cones->add_option("--samples", o.samples, "Points per cone")->capture_default_str()->check(CLI::PositiveNumber);
  cones->add_option("--seed", o.seed, "Random seed")->required();

  auto *map = app.add_subcommand("map", "Map a pair (mu_bar, ell) to a partition");
  map->add_option("--t", o.t, "Difference bound")->required()->check(CLI::PositiveNumber);
  map->add_option("--pair", o.pair, "\"PARTITION,ELL\"")->required();
  add_format(map, o);

  auto *unmap = app.add_subcommand("unmap", "Map a partition back to its pair");
  unmap->add_option("--t", o.t, "Difference bound")->required()->check(CLI::PositiveNumber);
  unmap->add_option("--partition", o.partition, "Partition, e.g. 17^5+16^6+15")->required();
  add_format(unmap, o);

  std::vector<const char *> argv{"polypart"};
  for (const auto &a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return Success;
  } catch (const CLI::ParseError &e) {
    // nested subcommands report help requests through the same path
    if (e.get_exit_code() == 0) {
      out << app.help();
      return Success;
    }
    err << "error: " << e.what() << '\n';
    return UsageError;
  }

  try {
    if (count->parsed())
      return run_count(o, out);
    if (table->parsed())
      return run_table(o, out);
    if (series->parsed())
      return run_series(o, out);
    if (tiling->parsed())
      return emit_report(verify_tiling(o.t, o.max_height), out);
    if (bijection->parsed())
      return emit_report(verify_bijection(o.t, o.max_height), out);
    if (cones->parsed())
      return emit_report(verify_cone_descriptions(o.t, o.max_m, o.samples, o.seed), out);
    if (map->parsed())
      return run_map(o, out);
    if (unmap->parsed())
      return run_unmap(o, out);
  } catch (const VerificationFailed &e) {
    err << e.what() << '\n';
    return VerificationFailure;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return UsageError;
  }
  err << "error: no command given\n";
  return UsageError;
}

} // namespace polypart::cli

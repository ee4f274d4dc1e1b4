#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "clusterexp/cluster.hpp"
#include "clusterexp/error.hpp"
#include "clusterexp/io.hpp"
#include "clusterexp/verify.hpp"

namespace {

using namespace clusterexp;

struct SourceFlags {
  std::string orientation;
  bool orientation_given = false;
  int n = 0;
  bool n_given = false;
  std::string input;
};

void add_source_flags(CLI::App* cmd, SourceFlags& flags) {
  cmd->add_option("--orientation", flags.orientation,
                  "triangulation as an orientation word over F/B")
      ->each([&flags](const std::string&) { flags.orientation_given = true; });
  cmd->add_option("--n", flags.n, "number of diagonals (1 needs no orientation)")
      ->each([&flags](const std::string&) { flags.n_given = true; });
  cmd->add_option("--input", flags.input,
                  "triangulation JSON file (\"-\" for standard input)");
}

Triangulation source_triangulation(const SourceFlags& flags, std::string* name) {
  if (!flags.input.empty()) {
    require(!flags.orientation_given && !flags.n_given, ErrorCode::BAD_INPUT,
            "--input excludes --orientation and --n");
    *name = flags.input;
    return triangulation_from_json(read_json_file(flags.input));
  }
  require(flags.orientation_given || flags.n_given, ErrorCode::BAD_INPUT,
          "no triangulation: give --orientation, --n 1, or --input");
  if (!flags.orientation_given)
    require(flags.n == 1, ErrorCode::BAD_INPUT,
            "--n above 1 needs an orientation word");
  const std::vector<PathStep> orientation =
      orientation_from_string(flags.orientation);
  const int n = static_cast<int>(orientation.size()) + 1;
  if (flags.n_given)
    require(flags.n == n, ErrorCode::BAD_INPUT,
            "--n does not match the orientation length");
  *name = flags.orientation_given ? flags.orientation : std::string("");
  return triangulation_from_orientation(n, orientation);
}

std::pair<int, int> parse_interval(const std::string& text) {
  const size_t comma = text.find(',');
  require(comma != std::string::npos, ErrorCode::BAD_INPUT,
          "--interval expects i,j");
  try {
    size_t pos_i = 0, pos_j = 0;
    const std::string left = text.substr(0, comma);
    const std::string right = text.substr(comma + 1);
    const int i = std::stoi(left, &pos_i);
    const int j = std::stoi(right, &pos_j);
    require(pos_i == left.size() && pos_j == right.size(),
            ErrorCode::BAD_INPUT, "--interval expects i,j");
    return {i, j};
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::BAD_INPUT, "--interval expects i,j");
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  require(out.good(), ErrorCode::BAD_INPUT, "cannot write " + path);
  out << text;
}

int run_expand(const SourceFlags& source, long long seed_limit,
               const std::string& output) {
  std::string name;
  const Triangulation T = source_triangulation(source, &name);
  const IceQuiver ice = quiver_of_triangulation(T, QuiverMode::ICE);
  const ClusterVariableTable table = numerator_table(ice, seed_limit);

  Json j;
  j["n"] = T.n;
  Json variables = Json::array();
  for (const auto& [interval, f] : table.numerators)
    variables.push_back({{"interval", {interval.first, interval.second}},
                         {"text", render(f)},
                         {"numerator", polynomial_to_json(f)}});
  j["variables"] = variables;
  write_output(output, j.dump(2) + "\n");
  return 0;
}

int run_verify(const SourceFlags& source, bool all, int max_n,
               long long seed_limit) {
  RunReport run;
  if (all) {
    require(!source.orientation_given && !source.n_given &&
                source.input.empty(),
            ErrorCode::BAD_INPUT, "--all excludes the single-input flags");
    run = verify_all(max_n, seed_limit);
  } else {
    std::string name;
    const Triangulation T = source_triangulation(source, &name);
    run.reports.push_back(verify_triangulation(T, name, seed_limit));
  }

  for (const TriangulationReport& report : run.reports) {
    if (report.ok()) {
      std::cout << "ok   " << (report.name.empty() ? "(n=1)" : report.name)
                << " (" << report.intervals << " intervals)\n";
      continue;
    }
    std::cout << "FAIL " << (report.name.empty() ? "(n=1)" : report.name)
              << "\n";
    for (const std::string& failure : report.failures)
      std::cout << "     " << failure << "\n";
  }
  std::cout << (run.ok() ? "verified " : "FAILED with ")
            << run.total_intervals() << " intervals across "
            << run.reports.size() << " triangulation"
            << (run.reports.size() == 1 ? "" : "s") << "\n";
  return run.ok() ? 0 : 1;
}

int run_export(const SourceFlags& source, const std::string& what,
               const std::string& format, const std::string& interval_text,
               const std::string& output) {
  std::string name;
  const Triangulation T = source_triangulation(source, &name);
  require(format == "json" || format == "dot", ErrorCode::BAD_INPUT,
          "--format must be json or dot");

  int i = 1, j = T.n;
  if (!interval_text.empty()) std::tie(i, j) = parse_interval(interval_text);

  if (what == "triangulation") {
    require(format == "json", ErrorCode::BAD_INPUT,
            "triangulations export as JSON only");
    write_output(output, triangulation_to_json(T).dump(2) + "\n");
    return 0;
  }
  if (what == "ice") {
    const IceQuiver Q = quiver_of_triangulation(T, QuiverMode::ICE);
    write_output(output, format == "json" ? quiver_to_json(Q).dump(2) + "\n"
                                          : quiver_to_dot(Q));
    return 0;
  }
  if (what == "snake") {
    const SnakeGraph G = build_snake_graph(T, i, j);
    write_output(output, format == "json" ? snake_to_json(G).dump(2) + "\n"
                                          : snake_to_dot(G));
    return 0;
  }
  if (what == "qp") {
    const QP qp = build_qp(subpolygon(T, i, j));
    write_output(output, format == "json" ? qp_to_json(qp).dump(2) + "\n"
                                          : qp_to_dot(qp));
    return 0;
  }
  fail(ErrorCode::BAD_INPUT,
       "--what must be triangulation, ice, snake, or qp");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact numerators of the cluster variables of a triangulated "
               "polygon, four ways"};
  app.require_subcommand(1);

  SourceFlags expand_source;
  long long expand_seed_limit = 0;
  std::string expand_output;
  CLI::App* expand_cmd =
      app.add_subcommand("expand", "tabulate every numerator f^[i,j]");
  add_source_flags(expand_cmd, expand_source);
  expand_cmd->add_option("--seed-limit", expand_seed_limit,
                         "abort the exchange graph beyond this many seeds");
  expand_cmd->add_option("--output", expand_output, "write here, not stdout");

  SourceFlags verify_source;
  bool verify_all_flag = false;
  int verify_max_n = 5;
  long long verify_seed_limit = 0;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "cross-check all formulas against the mutation oracle");
  add_source_flags(verify_cmd, verify_source);
  verify_cmd->add_flag("--all", verify_all_flag,
                       "every orientation up to --max-n");
  verify_cmd->add_option("--max-n", verify_max_n, "largest size for --all");
  verify_cmd->add_option("--seed-limit", verify_seed_limit,
                         "abort the exchange graph beyond this many seeds");

  SourceFlags export_source;
  std::string export_what = "triangulation";
  std::string export_format = "json";
  std::string export_interval;
  std::string export_output;
  CLI::App* export_cmd =
      app.add_subcommand("export", "emit a construction as JSON or DOT");
  add_source_flags(export_cmd, export_source);
  export_cmd->add_option("--what", export_what,
                         "triangulation, ice, snake, or qp");
  export_cmd->add_option("--format", export_format, "json or dot");
  export_cmd->add_option("--interval", export_interval,
                         "i,j for snake and qp (default: the whole chain)");
  export_cmd->add_option("--output", export_output, "write here, not stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (expand_cmd->parsed())
      return run_expand(expand_source, expand_seed_limit, expand_output);
    if (verify_cmd->parsed())
      return run_verify(verify_source, verify_all_flag, verify_max_n,
                        verify_seed_limit);
    return run_export(export_source, export_what, export_format,
                      export_interval, export_output);
  } catch (const clusterexp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return clusterexp::is_internal_error(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

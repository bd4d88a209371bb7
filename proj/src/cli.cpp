#include "bicanon/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "bicanon/canonical.hpp"
#include "bicanon/enumerate.hpp"
#include "bicanon/errors.hpp"
#include "bicanon/graph.hpp"
#include "bicanon/oracle.hpp"
#include "bicanon/selftest.hpp"
#include "bicanon/text_format.hpp"

namespace bicanon::cli {

namespace {

unsigned default_jobs() {
  if (const char* env = std::getenv("BICANON_JOBS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 0) return static_cast<unsigned>(value);
  }
  return 0;
}

struct Options {
  std::string file;
  std::string file2;
  bool report = false;
  bool semi = false;
  bool use_oracle = false;
  bool either = false;
  int n = 0;
  int m = 0;
  unsigned jobs = default_jobs();
  std::string format = "csv";
  int max_cells = 16;
};

int cmd_check(const Options& o, std::ostream& out) {
  const auto a = read_matrix_file(o.file);
  if (o.semi) {
    const bool ok = is_semi_canonical(a);
    out << (ok ? "semi-canonical" : "not semi-canonical") << '\n';
    return ok ? kOk : kFalseVerdict;
  }
  const auto report = is_canonical(a);
  out << (report.is_canonical ? "canonical" : "not canonical") << '\n';
  if (o.report && !report.is_canonical) {
    out << "failed condition: " << *report.failed_condition << '\n';
    out << "depth: " << report.depth << '\n';
    out << "witness: " << report.witness << '\n';
  }
  return report.is_canonical ? kOk : kFalseVerdict;
}

int cmd_canonize(const Options& o, std::ostream& out) {
  const auto a = read_matrix_file(o.file);
  write_matrix(out, o.use_oracle ? oracle::brute_force_canonical(a) : canonicalize(a));
  return kOk;
}

int cmd_enum(const Options& o, std::ostream& out) {
  const auto family = o.semi ? Family::semi_canonical : Family::canonical;
  bool first = true;
  for_each_matrix(
      family, o.n, o.m,
      [&](const BinaryMatrix& a) {
        if (!first) out << '\n';
        first = false;
        write_matrix(out, a);
      },
      o.jobs);
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const auto table = count_family(o.semi ? Family::semi_canonical : Family::canonical, o.n, o.m, o.jobs);
  if (o.format == "json") {
    out << table.to_json() << '\n';
  } else {
    out << table.to_csv();
  }
  return kOk;
}

int cmd_iso(const Options& o, std::ostream& out) {
  const auto g = read_graph_file(o.file);
  const auto h = read_graph_file(o.file2);
  if (o.either) {
    switch (match_orientation(g, h)) {
      case Orientation::direct:
        out << "isomorphic (direct)\n";
        return kOk;
      case Orientation::transposed:
        out << "isomorphic (transposed)\n";
        return kOk;
      case Orientation::none:
        break;
    }
    out << "not isomorphic\n";
    return kFalseVerdict;
  }
  const bool iso = isomorphic(g, h);
  out << (iso ? "isomorphic" : "not isomorphic") << '\n';
  return iso ? kOk : kFalseVerdict;
}

int cmd_key(const Options& o, std::ostream& out) {
  const auto key = canonical_key(read_graph_file(o.file));
  for (std::size_t i = 0; i < key.values.size(); ++i) out << (i ? "," : "") << key.values[i];
  out << '\n';
  return kOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  bool all = true;
  for (const auto& [n, m] : sweep_shapes(o.max_cells)) {
    const auto r = sweep_shape(n, m, o.jobs);
    all = all && r.passed();
    out << n << 'x' << m << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.matrices
        << " matrices, " << r.canonical << " canonical";
    if (!r.passed()) out << ", " << r.mismatches << " mismatches";
    out << ")\n";
  }
  return all ? kOk : kFalseVerdict;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical forms of binary matrices and bipartite graph isomorphism", "bicanon"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Decide whether a matrix is canonical");
  check->add_option("file", o.file, "Matrix file")->required();
  check->add_flag("--report", o.report, "Print the failed condition and a witness");
  check->add_flag("--semi", o.semi, "Decide semi-canonicity instead");

  auto* canonize = app.add_subcommand("canonize", "Print the canonical form of a matrix");
  canonize->add_option("file", o.file, "Matrix file")->required();
  canonize->add_flag("--oracle", o.use_oracle, "Use the brute-force orbit search");

  auto* enumerate = app.add_subcommand("enum", "Stream all canonical (or semi-canonical) matrices");
  auto* count = app.add_subcommand("count", "Count canonical (or semi-canonical) matrices by ones");
  for (auto* sub : {enumerate, count}) {
    sub->add_option("N", o.n, "Rows")->required()->check(CLI::Range(0, kMaxEnumerationSide));
    sub->add_option("M", o.m, "Columns")->required()->check(CLI::Range(0, kMaxEnumerationSide));
    sub->add_flag("--semi", o.semi, "Semi-canonical matrices instead of canonical ones");
    sub->add_option("--jobs,-j", o.jobs, "Worker threads (0 = all cores)");
  }
  count->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* iso = app.add_subcommand("iso", "Decide whether two bipartite graphs are isomorphic");
  iso->add_option("file1", o.file, "Graph file")->required();
  iso->add_option("file2", o.file2, "Graph file")->required();
  iso->add_flag("--either-orientation", o.either, "Also try exchanging the two parts");

  auto* key = app.add_subcommand("key", "Print the canonical key of a bipartite graph");
  key->add_option("file", o.file, "Graph file")->required();

  auto* selftest = app.add_subcommand("selftest", "Compare the canonicity test with brute force");
  selftest->add_option("--max-cells", o.max_cells, "Largest n*m to sweep")->check(CLI::Range(1, 30));
  selftest->add_option("--jobs,-j", o.jobs, "Worker threads (0 = all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    // Buffer so that errors never leave partial output behind.
    std::ostringstream buffer;
    int code = kOk;
    if (*check) code = cmd_check(o, buffer);
    else if (*canonize) code = cmd_canonize(o, buffer);
    else if (*enumerate) return cmd_enum(o, out);
    else if (*count) code = cmd_count(o, buffer);
    else if (*iso) code = cmd_iso(o, buffer);
    else if (*key) code = cmd_key(o, buffer);
    else if (*selftest) return cmd_selftest(o, out);
    out << buffer.str();
    return code;
  } catch (const ResourceError& e) {
    err << "bicanon: " << e.what() << '\n';
    return kResourceError;
  } catch (const DomainError& e) {
    err << "bicanon: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace bicanon::cli

// ntpgraph: build, export and check the non-two-primes graph of a permutation group.
//
//   ntpgraph info     --catalog dihedral --n 30
//   ntpgraph graph    --catalog sl23_example --format dot --out g.dot
//   ntpgraph distance --catalog dihedral --n 30 "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15)" "()"
//   ntpgraph verify   --catalog-all --cap 5000 --stable
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ntp/export.hpp"
#include "ntp/group_file.hpp"
#include "ntp/ntp.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupOptions {
  std::string catalog;
  std::optional<std::uint64_t> n;
  std::string file;
  std::uint64_t cap = 20000;
};

void add_group_options(CLI::App* cmd, GroupOptions& o) {
  cmd->add_option("--catalog", o.catalog, "catalog name or expression, e.g. direct_product(alternating(5),cyclic(2))");
  cmd->add_option("--n", o.n, "parameter for the catalog name: NAME(n)");
  cmd->add_option("--file", o.file, "group file with \"degree:\" and \"gen:\" lines");
  cmd->add_option("--cap", o.cap, "refuse groups with more elements than this")->capture_default_str();
}

struct Resolved {
  std::string name;
  ntp::PermutationGroup group;
};

Resolved resolve(const GroupOptions& o) {
  if (o.catalog.empty() == o.file.empty()) throw InputError("give exactly one of --catalog or --file");
  if (!o.file.empty()) {
    if (o.n) throw InputError("--n only applies to --catalog");
    try {
      return {o.file, ntp::read_group_file(o.file)};
    } catch (const ntp::GroupFileError& e) {
      throw InputError(o.file + ": " + e.what());
    }
  }
  std::string expr = o.n ? o.catalog + "(" + std::to_string(*o.n) + ")" : o.catalog;
  return {expr, ntp::catalog::make(expr)};
}

void check_cap(const ntp::PermutationGroup& g, std::uint64_t cap) {
  if (g.order() > cap) throw ntp::CapExceeded(g.order(), cap);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string join_primes(const std::vector<std::uint64_t>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + std::to_string(ps[i]);
  return s + "}";
}

// ---- info ----

int cmd_info(const GroupOptions& go, const std::string& out_path) {
  auto [name, g] = resolve(go);
  check_cap(g, go.cap);
  const auto t = ntp::enumerate_elements(g, go.cap);
  std::map<std::uint64_t, std::size_t> histogram;
  for (auto o : t.order_of) ++histogram[o];

  nlohmann::ordered_json j;
  j["group"] = name;
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["primes"] = t.group_primes;
  j["solvable"] = ntp::is_solvable(g);
  j["class_count"] = t.class_count();
  auto& h = j["element_orders"] = nlohmann::ordered_json::object();
  for (auto [o, c] : histogram) h[std::to_string(o)] = c;

  std::cout << "group: " << name << '\n'
            << "degree: " << g.degree() << '\n'
            << "order: " << g.order() << '\n'
            << "primes: " << join_primes(t.group_primes) << '\n'
            << "solvable: " << (j["solvable"].get<bool>() ? "true" : "false") << '\n'
            << "classes: " << t.class_count() << '\n'
            << "element orders:";
  for (auto [o, c] : histogram) std::cout << ' ' << o << ':' << c;
  std::cout << '\n';
  if (!out_path.empty()) write_output(out_path, j.dump(2) + "\n");
  return exit_ok;
}

// ---- graph ----

int cmd_graph(const GroupOptions& go, unsigned k, const std::string& format, std::size_t jobs,
              const std::string& out_path) {
  const auto fmt = ntp::parse_export_format(format);
  auto [name, g] = resolve(go);
  check_cap(g, go.cap);
  const auto t = ntp::enumerate_elements(g, go.cap);
  const auto graph = ntp::build_graph(t, k, ntp::BuildMode::symmetry_reduced, jobs);
  write_output(out_path, ntp::export_graph(graph, fmt));

  const std::string summary = ntp::graph_summary(graph, name).dump();
  if (out_path.empty()) {
    std::cerr << summary << '\n';
  } else {
    write_output(out_path + ".summary.json", summary + "\n");
  }
  return exit_ok;
}

// ---- distance ----

int cmd_distance(const GroupOptions& go, unsigned k, const std::string& xs, const std::string& ys,
                 std::size_t jobs) {
  auto [name, g] = resolve(go);
  check_cap(g, go.cap);
  const auto t = ntp::enumerate_elements(g, go.cap);
  auto element = [&](const std::string& s) {
    try {
      return t.at(ntp::parse_cycles(s, g.degree()));
    } catch (const ntp::CycleParseError& e) {
      throw InputError("cannot parse \"" + s + "\": " + e.what());
    } catch (const ntp::NotInGroup&) {
      throw InputError(s + " is not an element of " + name);
    }
  };
  const auto x = element(xs);
  const auto y = element(ys);
  const auto graph = ntp::build_graph(t, k, ntp::BuildMode::symmetry_reduced, jobs);
  if (graph.is_isolated(x) || graph.is_isolated(y)) {
    std::cout << "isolated\n";
    return exit_ok;
  }
  if (auto d = ntp::distance(graph, x, y)) {
    std::cout << *d << '\n';
  } else {
    std::cout << "unreachable\n";
  }
  return exit_ok;
}

// ---- verify ----

struct VerifySpecs {
  std::vector<std::string> catalogs;
  std::vector<std::string> files;
  std::optional<std::uint64_t> n;
  std::uint64_t cap = 20000;
  bool all = false;
};

// Every spec is resolved before any work starts, so a typo is a usage error.
// Once running, a group that cannot be verified (for instance because it
// exceeds the cap) is reported and counted as a failure; the run continues.
// Under --catalog-all the cap instead selects which sweep groups take part.
int cmd_verify(const VerifySpecs& vs, std::size_t jobs, bool stable, const std::string& out_path) {
  std::vector<Resolved> groups;
  if (vs.all) {
    if (!vs.catalogs.empty() || !vs.files.empty() || vs.n) {
      throw InputError("--catalog-all excludes --catalog, --file and --n");
    }
    for (const auto& name : ntp::catalog::standard_sweep()) groups.push_back({name, ntp::catalog::make(name)});
  } else {
    if (vs.catalogs.empty() && vs.files.empty()) throw InputError("give --catalog, --file or --catalog-all");
    if (vs.n && vs.catalogs.size() != 1) throw InputError("--n needs exactly one --catalog");
    for (const auto& c : vs.catalogs) {
      GroupOptions o;
      o.catalog = c;
      o.n = vs.n;
      groups.push_back(resolve(o));
    }
    for (const auto& f : vs.files) {
      GroupOptions o;
      o.file = f;
      groups.push_back(resolve(o));
    }
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw InputError("cannot write " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  std::mutex writer;
  std::vector<std::optional<std::string>> lines(groups.size());
  std::size_t failures = 0, skipped = 0;

  ntp::parallel_for(groups.size(), jobs, [&](std::size_t i) {
    const auto& [name, g] = groups[i];
    if (vs.all && g.order() > vs.cap) {
      std::lock_guard lock(writer);
      ++skipped;
      std::cerr << "skipping " << name << ": order " << g.order() << " exceeds cap " << vs.cap << '\n';
      return;
    }
    std::optional<ntp::VerificationReport> rep;
    std::string error;
    try {
      rep = ntp::verify_theorem(g, name, {.cap = vs.cap, .jobs = 1});
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::lock_guard lock(writer);
    if (!rep) {
      ++failures;
      std::cerr << "error: " << name << ": " << error << '\n';
      return;
    }
    std::string line = ntp::report_json(*rep).dump();
    if (!rep->passed()) ++failures;
    if (stable) {
      lines[i] = std::move(line);
    } else {
      out << line << '\n' << std::flush;
    }
  });
  if (stable) {
    for (const auto& l : lines) {
      if (l) out << *l << '\n';
    }
  }
  out.flush();
  std::cerr << groups.size() - skipped << " checked, " << skipped << " skipped, " << failures << " failed\n";
  return failures ? exit_failed : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-two-primes graphs of permutation groups"};
  app.require_subcommand(1);

  GroupOptions go;
  unsigned k = ntp::default_prime_threshold;
  std::string format = "dot";
  std::size_t jobs = 1;
  std::string out_path;
  bool stable = false;
  VerifySpecs vs;
  std::string xs, ys;

  auto* info = app.add_subcommand("info", "order, primes, solvability, classes and element orders");
  add_group_options(info, go);
  info->add_option("--out", out_path, "also write the summary as JSON");

  auto* graph = app.add_subcommand("graph", "export the graph");
  add_group_options(graph, go);
  graph->add_option("--k", k, "prime threshold")->capture_default_str()->check(CLI::Range(1u, 64u));
  graph->add_option("--format", format, "dot, graphml, csv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"dot", "graphml", "csv", "json"}));
  graph->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  graph->add_option("--out", out_path, "output file; the summary goes to OUT.summary.json");

  auto* dist = app.add_subcommand("distance", "distance between two elements");
  add_group_options(dist, go);
  dist->add_option("x", xs, "first element in cycle notation")->required();
  dist->add_option("y", ys, "second element in cycle notation")->required();
  dist->add_option("--k", k, "prime threshold")->capture_default_str()->check(CLI::Range(1u, 64u));
  dist->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{256}));

  auto* verify = app.add_subcommand("verify", "check the diameter bound and supporting claims");
  verify->add_option("--catalog", vs.catalogs, "catalog name or expression (repeatable)");
  verify->add_option("--n", vs.n, "parameter for a single --catalog name");
  verify->add_option("--file", vs.files, "group file (repeatable)");
  verify->add_option("--cap", vs.cap, "largest group order to verify")->capture_default_str();
  verify->add_flag("--catalog-all", vs.all, "verify the standard sweep of catalog groups");
  verify->add_option("--jobs", jobs, "groups processed concurrently")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  verify->add_flag("--stable", stable, "print reports in catalog order");
  verify->add_option("--out", out_path, "write reports here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*info) return cmd_info(go, out_path);
    if (*graph) return cmd_graph(go, k, format, jobs, out_path);
    if (*dist) return cmd_distance(go, k, xs, ys, jobs);
    if (*verify) return cmd_verify(vs, jobs, stable, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

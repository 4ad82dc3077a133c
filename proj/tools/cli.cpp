#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "cliquechroma/bounds.hpp"
#include "cliquechroma/clique.hpp"
#include "cliquechroma/coloring.hpp"
#include "cliquechroma/errors.hpp"
#include "cliquechroma/graph.hpp"
#include "cliquechroma/parallel.hpp"
#include "cliquechroma/prob_checks.hpp"

namespace cliquechroma::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultBudgetCliques = 5'000'000;
constexpr std::uint64_t kDefaultBudgetNodes = 50'000'000;
constexpr std::size_t kExactMaxOrder = 64;

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fnv1a64_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

/// Parameters, inputs and outputs of one invocation.
class Manifest {
public:
  explicit Manifest(std::string subcommand) {
    doc_["schema"] = "cliquechroma.manifest/1";
    doc_["subcommand"] = std::move(subcommand);
    doc_["tool_version"] = kToolVersion;
    doc_["parameters"] = ordered_json::object();
    doc_["inputs"] = ordered_json::array();
    doc_["outputs"] = ordered_json::array();
    doc_["started_at"] = utc_now();
  }

  template <class T> void param(const std::string &key, const T &value) { doc_["parameters"][key] = value; }
  void seed(std::uint64_t s) { doc_["seed"] = s; }
  void input(const std::string &path) { doc_["inputs"].push_back({{"path", path}, {"fnv1a64", fnv1a64_file(path)}}); }
  void output(const std::string &path) { doc_["outputs"].push_back(path); }

  ordered_json finish() {
    doc_["finished_at"] = utc_now();
    return doc_;
  }

private:
  ordered_json doc_;
};

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw InputError("cannot write '" + path + "'");
  f << text;
}

/// Budget flags fall back to CLIQUECHROMA_BUDGET, then to the defaults.
/// The variable is either one integer for every budget or a list such as
/// "cliques=1000000,nodes=20000000".
CliqueBudget resolve_budget(std::optional<std::uint64_t> cliques, std::optional<std::uint64_t> nodes) {
  CliqueBudget b{kDefaultBudgetNodes, kDefaultBudgetCliques};
  if (const char *env = std::getenv("CLIQUECHROMA_BUDGET"); env && *env) {
    const std::string spec(env);
    auto parse_num = [&](const std::string &s) {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(s, &pos);
      if (pos != s.size())
        throw InputError("bad CLIQUECHROMA_BUDGET value '" + spec + "'");
      return static_cast<std::uint64_t>(v);
    };
    try {
      if (spec.find('=') == std::string::npos) {
        b.max_cliques = b.max_nodes = parse_num(spec);
      } else {
        std::istringstream items(spec);
        std::string item;
        while (std::getline(items, item, ',')) {
          const auto eq = item.find('=');
          if (eq == std::string::npos)
            throw InputError("bad CLIQUECHROMA_BUDGET entry '" + item + "'");
          const std::string key = item.substr(0, eq);
          const std::uint64_t value = parse_num(item.substr(eq + 1));
          if (key == "cliques")
            b.max_cliques = value;
          else if (key == "nodes")
            b.max_nodes = value;
          else
            throw InputError("unknown CLIQUECHROMA_BUDGET key '" + key + "'");
        }
      }
    } catch (const std::logic_error &) {
      throw InputError("bad CLIQUECHROMA_BUDGET value '" + spec + "'");
    }
  }
  if (cliques)
    b.max_cliques = *cliques;
  if (nodes)
    b.max_nodes = *nodes;
  return b;
}

ordered_json one_based(const VertexSet &s) {
  ordered_json a = ordered_json::array();
  s.for_each([&](Vertex v) { a.push_back(v + 1); });
  return a;
}

ordered_json budget_json(const CliqueBudget &b) {
  return {{"max_cliques", b.max_cliques}, {"max_nodes", b.max_nodes}};
}

struct Common {
  std::size_t min_clique_size = kDefaultMinCliqueSize;
  std::optional<std::uint64_t> budget_cliques;
  std::optional<std::uint64_t> budget_nodes;
  std::string format = "json";
  std::string out;
  std::string manifest;
};

void add_common(CLI::App *cmd, Common &c, bool with_out = true) {
  cmd->add_option("--min-clique-size", c.min_clique_size, "Smallest clique treated as a clique")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  cmd->add_option("--budget-cliques", c.budget_cliques, "Maximal cliques an enumeration may visit");
  cmd->add_option("--budget-nodes", c.budget_nodes, "Search nodes a single search may visit");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  if (with_out)
    cmd->add_option("--out", c.out, "Output path");
  cmd->add_option("--manifest", c.manifest, "Run manifest path");
}

/// Prints the JSON result. The manifest goes next to --out (or to
/// --manifest); without either it is embedded in the printed document.
void emit(std::ostream &out, ordered_json result, Manifest &manifest, const Common &c,
          const std::string &default_manifest_path = {}) {
  std::string path = c.manifest;
  if (path.empty())
    path = default_manifest_path;
  if (path.empty() && !c.out.empty())
    path = c.out + ".manifest.json";
  if (path.empty()) {
    result["manifest"] = manifest.finish();
  } else {
    write_text_file(path, manifest.finish().dump(2) + "\n");
  }
  out << result.dump(2) << '\n';
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  GenParams params{};
  Common common;
};

int cmd_gen(const GenArgs &a, std::ostream &out) {
  a.params.validate();
  Manifest m("gen");
  m.param("n", a.params.n);
  m.param("p", a.params.p);
  m.seed(a.params.seed);
  const Graph g = gen_random_graph(a.params);
  const std::string text = write_graph(g);
  if (a.common.out.empty()) {
    out << text;
    if (!a.common.manifest.empty())
      write_text_file(a.common.manifest, m.finish().dump(2) + "\n");
    return kOk;
  }
  write_text_file(a.common.out, text);
  m.output(a.common.out);
  ordered_json r;
  r["schema"] = "cliquechroma.gen/1";
  r["n"] = g.order();
  r["p"] = a.params.p;
  r["seed"] = a.params.seed;
  r["edges"] = g.edge_count();
  r["out"] = a.common.out;
  emit(out, r, m, a.common);
  return kOk;
}

// ------------------------------------------------------------- greedy

struct GraphArgs {
  std::string graph;
  std::string coloring;
  Common common;
  std::size_t max_colors = 16;
  std::optional<double> class_floor;
  double eps = 0.1;
};

int cmd_greedy(const GraphArgs &a, std::ostream &out) {
  Manifest m("greedy");
  m.input(a.graph);
  m.param("min_clique_size", a.common.min_clique_size);
  const CliqueBudget budget = resolve_budget(a.common.budget_cliques, a.common.budget_nodes);
  m.param("budget", budget_json(budget));

  const Graph g = read_graph_file(a.graph);
  const GreedyResult res = greedy_clique_coloring(g, std::nullopt, a.common.min_clique_size, budget);
  const Verdict verdict = verify_clique_coloring(g, res.coloring, a.common.min_clique_size, budget);
  if (!a.common.out.empty()) {
    write_text_file(a.common.out, write_coloring(res.coloring));
    m.output(a.common.out);
  }
  ordered_json r;
  r["schema"] = "cliquechroma.greedy/1";
  r["n"] = g.order();
  r["palette"] = res.coloring.palette();
  r["pivot_steps"] = res.stats.pivot_steps;
  r["remainder_size"] = res.stats.remainder_size;
  r["merged_tail"] = res.stats.merged_tail;
  r["valid"] = is_valid(verdict);
  r["colors"] = res.coloring.colors();
  emit(out, r, m, a.common);
  return is_valid(verdict) ? kOk : kViolation;
}

int cmd_exact(const GraphArgs &a, std::ostream &out) {
  Manifest m("exact");
  m.input(a.graph);
  m.param("min_clique_size", a.common.min_clique_size);
  m.param("max_colors", a.max_colors);
  const CliqueBudget budget = resolve_budget(a.common.budget_cliques, a.common.budget_nodes);
  m.param("budget", budget_json(budget));

  const Graph g = read_graph_file(a.graph);
  ExactOptions opts;
  opts.max_colors = a.max_colors;
  opts.min_size = a.common.min_clique_size;
  opts.clique_budget = {0, budget.max_cliques};
  opts.max_nodes = budget.max_nodes;
  const ExactResult res = exact_chi_c(g, opts);
  if (!a.common.out.empty()) {
    write_text_file(a.common.out, write_coloring(res.witness));
    m.output(a.common.out);
  }
  ordered_json r;
  r["schema"] = "cliquechroma.exact/1";
  r["n"] = g.order();
  r["chi_c"] = res.chi_c;
  r["witness"] = res.witness.colors();
  emit(out, r, m, a.common);
  return kOk;
}

int cmd_verify(const GraphArgs &a, std::ostream &out) {
  Manifest m("verify");
  m.input(a.graph);
  m.input(a.coloring);
  m.param("min_clique_size", a.common.min_clique_size);
  const CliqueBudget budget = resolve_budget(a.common.budget_cliques, a.common.budget_nodes);
  m.param("budget", budget_json(budget));

  const Graph g = read_graph_file(a.graph);
  const Coloring c = read_coloring_file(a.coloring);
  const Verdict v = verify_clique_coloring(g, c, a.common.min_clique_size, budget);
  ordered_json r;
  r["schema"] = "cliquechroma.verify/1";
  r["n"] = g.order();
  r["palette"] = c.palette();
  r["valid"] = is_valid(v);
  if (const auto *viol = std::get_if<Violation>(&v))
    r["certificate"] = one_based(viol->clique);
  emit(out, r, m, a.common);
  return is_valid(v) ? kOk : kViolation;
}

int cmd_audit(const GraphArgs &a, std::ostream &out) {
  Manifest m("audit");
  m.input(a.graph);
  m.input(a.coloring);
  m.param("min_clique_size", a.common.min_clique_size);
  m.param("eps", a.eps);
  if (a.class_floor)
    m.param("class_floor", *a.class_floor);
  const CliqueBudget budget = resolve_budget(a.common.budget_cliques, a.common.budget_nodes);
  m.param("budget", budget_json(budget));

  const Graph g = read_graph_file(a.graph);
  const Coloring c = read_coloring_file(a.coloring);
  const AuditTrace trace = audit_coloring(g, c, a.class_floor, a.common.min_clique_size, budget);

  ordered_json r;
  r["schema"] = "cliquechroma.audit/1";
  r["n"] = g.order();
  r["palette"] = c.palette();
  ordered_json steps = ordered_json::array();
  for (const AuditStep &s : trace.steps) {
    ordered_json js;
    js["color"] = s.color;
    js["x_size"] = s.x_size;
    js["class_size_in_x"] = s.class_size_in_x;
    js["meets_class_floor"] = s.meets_class_floor;
    js["vertex"] = s.vertex ? ordered_json(*s.vertex + 1) : ordered_json(nullptr);
    js["non_neighbors"] = s.non_neighbors;
    steps.push_back(js);
  }
  r["steps"] = steps;
  if (const auto *viol = std::get_if<Violation>(&trace.outcome)) {
    r["outcome"] = "violation";
    r["certificate"] = one_based(viol->clique);
  } else {
    const auto &ex = std::get<AuditExhausted>(trace.outcome);
    r["outcome"] = "exhausted";
    r["remaining_size"] = ex.remaining.size();
    r["class_sizes_in_x"] = ex.class_sizes_in_x;
  }
  // Asymptotic reference thresholds, reported only.
  if (g.order() >= 3) {
    const auto n = static_cast<double>(g.order());
    r["reference"] = {{"class_size_n_over_log_n", n / std::log2(n)},
                      {"nonneighbor_threshold", bounds::lemma1_params(n, a.eps).nonneighbor_threshold},
                      {"adversary_palette_size", bounds::adversary_palette_size(n, a.eps)}};
  }
  emit(out, r, m, a.common);
  return trace.violated() ? kViolation : kOk;
}

// ------------------------------------------------------------- bounds

struct BoundsArgs {
  std::optional<double> n;
  std::optional<double> log2_n;
  double eps = 0.1;
  Common common;
};

int cmd_bounds(const BoundsArgs &a, std::ostream &out) {
  if (a.n.has_value() == a.log2_n.has_value())
    throw InputError("give exactly one of --n and --log2-n");
  const double n = a.n ? *a.n : std::exp2(*a.log2_n);
  Manifest m("bounds");
  m.param("n", n);
  m.param("eps", a.eps);
  const bounds::BoundReport rep = bounds::bound_report(n, a.eps);
  ordered_json r;
  r["schema"] = "cliquechroma.bounds/1";
  r["n"] = rep.n;
  r["eps"] = rep.eps;
  ordered_json values = ordered_json::object();
  for (const auto &v : rep.values)
    values[v.name] = {{"value", v.value}, {"vacuous", v.vacuous}};
  r["values"] = values;
  r["notes"] = rep.notes;
  emit(out, r, m, a.common);
  return kOk;
}

// ----------------------------------------------------------------- mc

struct McArgs {
  std::vector<std::size_t> ns;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double p = 0.5;
  std::string method = "greedy";
  std::size_t workers = 0;
  bool verify = true;
  Common common;
};

struct McRow {
  std::size_t n = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t palette = 0;
  std::size_t pivot_steps = 0;
  std::size_t remainder = 0;
  bool valid = false;
  bool censored = false;
};

std::string mc_csv(const std::vector<McRow> &rows, const std::string &method) {
  std::ostringstream s;
  s << "# schema: cliquechroma.mc_trials/1\n";
  s << "n,trial,seed,method,palette,pivot_steps,remainder_size,valid,censored\n";
  for (const McRow &r : rows) {
    s << r.n << ',' << r.trial << ',' << r.seed << ',' << method << ',';
    if (r.censored)
      s << ",,,,1\n";
    else
      s << r.palette << ',' << r.pivot_steps << ',' << r.remainder << ',' << (r.valid ? 1 : 0) << ",0\n";
  }
  return s.str();
}

int cmd_mc(const McArgs &a, std::ostream &out) {
  if (a.trials < 1)
    throw InputError("--trials must be at least 1");
  if (a.ns.empty())
    throw InputError("--n needs at least one value");
  if (a.method == "exact")
    for (std::size_t n : a.ns)
      if (n > kExactMaxOrder)
        throw InputError("method exact is limited to n <= " + std::to_string(kExactMaxOrder));
  const CliqueBudget budget = resolve_budget(a.common.budget_cliques, a.common.budget_nodes);

  Manifest m("mc");
  m.param("n", a.ns);
  m.param("trials", a.trials);
  m.param("p", a.p);
  m.param("method", a.method);
  m.param("min_clique_size", a.common.min_clique_size);
  m.param("verify", a.verify);
  m.param("budget", budget_json(budget));
  m.seed(a.seed);

  std::vector<McRow> rows(a.ns.size() * a.trials);
  parallel_for(rows.size(), a.workers, [&](std::size_t idx) {
    McRow &row = rows[idx];
    row.n = a.ns[idx / a.trials];
    row.trial = idx % a.trials;
    row.seed = a.seed + row.trial;
    const Graph g = gen_random_graph({row.n, a.p, row.seed});
    try {
      if (a.method == "greedy") {
        const GreedyResult res = greedy_clique_coloring(g, std::nullopt, a.common.min_clique_size, budget);
        row.palette = res.coloring.palette();
        row.pivot_steps = res.stats.pivot_steps;
        row.remainder = res.stats.remainder_size;
        row.valid = !a.verify || is_valid(verify_clique_coloring(g, res.coloring, a.common.min_clique_size, budget));
      } else {
        ExactOptions opts;
        opts.min_size = a.common.min_clique_size;
        opts.clique_budget = {0, budget.max_cliques};
        opts.max_nodes = budget.max_nodes;
        opts.max_colors = row.n;
        const ExactResult res = exact_chi_c(g, opts);
        row.palette = res.chi_c;
        row.valid = true;
      }
    } catch (const ResourceError &) {
      row.censored = true;
    }
  });

  ordered_json summary;
  summary["schema"] = "cliquechroma.mc_summary/1";
  summary["method"] = a.method;
  summary["p"] = a.p;
  summary["seed"] = a.seed;
  summary["trials"] = a.trials;
  ordered_json per_n = ordered_json::array();
  bool all_valid = true;
  for (std::size_t i = 0; i < a.ns.size(); ++i) {
    std::size_t done = 0, censored = 0, invalid = 0, lo = 0, hi = 0;
    double sum = 0;
    for (std::uint64_t t = 0; t < a.trials; ++t) {
      const McRow &r = rows[i * a.trials + t];
      if (r.censored) {
        ++censored;
        continue;
      }
      if (!r.valid)
        ++invalid;
      lo = done ? std::min(lo, r.palette) : r.palette;
      hi = std::max(hi, r.palette);
      sum += static_cast<double>(r.palette);
      ++done;
    }
    all_valid = all_valid && invalid == 0;
    ordered_json e;
    e["n"] = a.ns[i];
    e["completed"] = done;
    e["censored"] = censored;
    e["invalid"] = invalid;
    e["mean_palette"] = done ? ordered_json(sum / static_cast<double>(done)) : ordered_json(nullptr);
    e["min_palette"] = done ? ordered_json(lo) : ordered_json(nullptr);
    e["max_palette"] = done ? ordered_json(hi) : ordered_json(nullptr);
    if (a.ns[i] >= 3)
      e["mmp_upper_bound"] = bounds::mmp_upper_bound(static_cast<double>(a.ns[i]));
    per_n.push_back(e);
  }
  summary["per_n"] = per_n;

  const std::string csv = mc_csv(rows, a.method);
  std::string manifest_path = a.common.manifest;
  if (!a.common.out.empty()) {
    fs::create_directories(a.common.out);
    const std::string csv_path = (fs::path(a.common.out) / "trials.csv").string();
    const std::string summary_path = (fs::path(a.common.out) / "summary.json").string();
    write_text_file(csv_path, csv);
    write_text_file(summary_path, summary.dump(2) + "\n");
    m.output(csv_path);
    m.output(summary_path);
    if (manifest_path.empty())
      manifest_path = (fs::path(a.common.out) / "manifest.json").string();
  }
  if (a.common.format == "csv") {
    out << csv;
    if (!manifest_path.empty())
      write_text_file(manifest_path, m.finish().dump(2) + "\n");
  } else {
    Common c = a.common;
    c.out.clear();
    c.manifest = manifest_path;
    emit(out, summary, m, c);
  }
  return all_valid ? kOk : kViolation;
}

// ------------------------------------------------------ lemma1, propc

struct Lemma1Args {
  std::size_t n = 0;
  std::size_t y = 0;
  std::optional<std::size_t> k;
  std::optional<double> threshold;
  double eps = 0.1;
  double p = 0.5;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t workers = 0;
  Common common;
};

int cmd_lemma1(const Lemma1Args &a, std::ostream &out) {
  Lemma1EstimateParams params;
  params.n = a.n;
  params.y = a.y;
  params.p = a.p;
  params.trials = a.trials;
  params.seed = a.seed;
  params.workers = a.workers;
  params.budget = resolve_budget(a.common.budget_cliques, a.common.budget_nodes);
  std::optional<bounds::Lemma1Params> defaults;
  if ((!a.k || !a.threshold) && a.n >= 3)
    defaults = bounds::lemma1_params(static_cast<double>(a.n), a.eps);
  if (!a.k && !defaults)
    throw InputError("--k is required for n < 3");
  if (!a.threshold && !defaults)
    throw InputError("--threshold is required for n < 3");
  params.k = a.k ? *a.k : static_cast<std::size_t>(defaults->k);
  params.threshold = a.threshold ? *a.threshold : defaults->nonneighbor_threshold;

  Manifest m("lemma1");
  m.param("n", params.n);
  m.param("y", params.y);
  m.param("k", params.k);
  m.param("threshold", params.threshold);
  m.param("p", params.p);
  m.param("trials", params.trials);
  m.param("eps", a.eps);
  m.param("budget", budget_json(params.budget));
  m.seed(params.seed);

  const Lemma1Estimate est = estimate_lemma1_probability(params);
  ordered_json r;
  r["schema"] = "cliquechroma.lemma1/1";
  r["n"] = params.n;
  r["y"] = params.y;
  r["k"] = params.k;
  r["threshold"] = params.threshold;
  r["trials"] = params.trials;
  r["completed"] = est.bad_event.trials;
  r["censored"] = est.censored;
  r["bad_events"] = est.bad_event.successes;
  r["fraction"] = est.bad_event.fraction;
  r["standard_error"] = est.bad_event.standard_error;
  r["ci95"] = {est.bad_event.ci_low, est.bad_event.ci_high};
  if (!a.common.out.empty()) {
    write_text_file(a.common.out, r.dump(2) + "\n");
    m.output(a.common.out);
  }
  emit(out, r, m, a.common);
  return kOk;
}

struct PropcArgs {
  std::string graph;
  std::optional<std::size_t> n;
  double p = 0.5;
  std::uint64_t seed = 0;
  double eps = 0.1;
  std::size_t j_max = 1;
  std::uint64_t samples = 1;
  std::optional<double> threshold;
  bool override_guard = false;
  bool details = false;
  Common common;
};

int cmd_propc(const PropcArgs &a, std::ostream &out) {
  if (a.graph.empty() == !a.n.has_value())
    throw InputError("give either a graph file or --n");
  Manifest m("propc");
  Graph g;
  if (!a.graph.empty()) {
    m.input(a.graph);
    g = read_graph_file(a.graph);
  } else {
    m.param("n", *a.n);
    m.param("p", a.p);
    g = gen_random_graph({*a.n, a.p, a.seed});
  }
  PropertyCOptions opts;
  opts.eps = a.eps;
  opts.j_max = a.j_max;
  opts.samples = a.samples;
  opts.seed = a.seed;
  opts.threshold = a.threshold;
  opts.override_guard = a.override_guard;
  opts.min_size = a.common.min_clique_size;
  opts.budget = resolve_budget(a.common.budget_cliques, a.common.budget_nodes);
  m.param("eps", a.eps);
  m.param("j_max", a.j_max);
  m.param("samples", a.samples);
  m.param("override_guard", a.override_guard);
  if (a.threshold)
    m.param("threshold", *a.threshold);
  m.param("budget", budget_json(opts.budget));
  m.seed(a.seed);

  const PropertyCReport rep = property_c_spot_check(g, opts);
  ordered_json r;
  r["schema"] = "cliquechroma.propc/1";
  r["n"] = g.order();
  r["samples"] = rep.samples;
  r["threshold"] = rep.threshold;
  r["condition1_failures"] = rep.condition1_failures;
  r["condition2_failures"] = rep.condition2_failures;
  r["skipped_empty"] = rep.skipped_empty;
  r["y_not_qualifying"] = rep.y_not_qualifying;
  r["condition2_checked"] = rep.condition2_checked;
  if (a.details) {
    ordered_json d = ordered_json::array();
    for (const PropertyCSample &s : rep.details) {
      ordered_json js;
      ordered_json vs = ordered_json::array();
      for (Vertex v : s.vertices)
        vs.push_back(v + 1);
      js["vertices"] = vs;
      js["common_non_neighbors"] = s.common_non_neighbors;
      js["size_floor"] = s.size_floor;
      js["condition1"] = s.condition1;
      js["y_size"] = s.y_size;
      js["y_qualifies"] = s.y_qualifies;
      js["has_maximal_clique"] = s.has_maximal_clique ? ordered_json(*s.has_maximal_clique) : ordered_json(nullptr);
      d.push_back(js);
    }
    r["details"] = d;
  }
  if (!a.common.out.empty()) {
    write_text_file(a.common.out, r.dump(2) + "\n");
    m.output(a.common.out);
  }
  emit(out, r, m, a.common);
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Clique colorings of graphs: greedy, exact, audit, bounds and Monte Carlo checks", "cliquechroma"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  GenArgs gen;
  auto *gen_cmd = app.add_subcommand("gen", "Sample G(n,p) and write it in graph format");
  gen_cmd->add_option("--n", gen.params.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--p", gen.params.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.params.seed, "SplitMix64 seed");
  add_common(gen_cmd, gen.common);

  GraphArgs greedy, exact, verify, audit;
  auto *greedy_cmd = app.add_subcommand("greedy", "Greedy pivot clique coloring");
  greedy_cmd->add_option("graph", greedy.graph, "Graph file")->required();
  add_common(greedy_cmd, greedy.common);

  auto *exact_cmd = app.add_subcommand("exact", "Exact clique chromatic number");
  exact_cmd->add_option("graph", exact.graph, "Graph file")->required();
  exact_cmd->add_option("--max-colors", exact.max_colors, "Give up above this many colors");
  add_common(exact_cmd, exact.common);

  auto *verify_cmd = app.add_subcommand("verify", "Check that a coloring is a clique coloring");
  verify_cmd->add_option("graph", verify.graph, "Graph file")->required();
  verify_cmd->add_option("coloring", verify.coloring, "Coloring file")->required();
  add_common(verify_cmd, verify.common);

  auto *audit_cmd = app.add_subcommand("audit", "Run the color-class adversary against a coloring");
  audit_cmd->add_option("graph", audit.graph, "Graph file")->required();
  audit_cmd->add_option("coloring", audit.coloring, "Coloring file")->required();
  audit_cmd->add_option("--class-floor", audit.class_floor, "Recorded class-size fraction (default 1/log2 n)");
  audit_cmd->add_option("--eps", audit.eps, "eps for the reference thresholds");
  add_common(audit_cmd, audit.common);

  BoundsArgs bnd;
  auto *bounds_cmd = app.add_subcommand("bounds", "Evaluate the closed-form bounds");
  bounds_cmd->add_option("--n", bnd.n, "Vertex count (real)");
  bounds_cmd->add_option("--log2-n", bnd.log2_n, "log2 of the vertex count, for huge n");
  bounds_cmd->add_option("--eps", bnd.eps, "eps");
  add_common(bounds_cmd, bnd.common);

  McArgs mc;
  auto *mc_cmd = app.add_subcommand("mc", "Monte Carlo palette sizes over G(n,p)");
  mc_cmd->add_option("--n", mc.ns, "Vertex counts, comma separated")->required()->delimiter(',');
  mc_cmd->add_option("--trials", mc.trials, "Trials per n")->required();
  mc_cmd->add_option("--seed", mc.seed, "Base seed; trial i uses seed+i");
  mc_cmd->add_option("--p", mc.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  mc_cmd->add_option("--method", mc.method, "greedy or exact")->check(CLI::IsMember({"greedy", "exact"}));
  mc_cmd->add_option("--workers", mc.workers, "Worker threads (0 = all cores)");
  mc_cmd->add_flag("!--no-verify", mc.verify, "Skip verifying greedy colorings");
  add_common(mc_cmd, mc.common);

  Lemma1Args l1;
  auto *l1_cmd = app.add_subcommand("lemma1", "Estimate the dominating-clique bad-event probability");
  l1_cmd->add_option("--n", l1.n, "Vertex count")->required();
  l1_cmd->add_option("--y", l1.y, "Size of Y = {1..y}")->required();
  l1_cmd->add_option("--k", l1.k, "Clique size (default from eps)");
  l1_cmd->add_option("--threshold", l1.threshold, "Per-vertex non-neighbor threshold (default from eps)");
  l1_cmd->add_option("--eps", l1.eps, "eps for defaults");
  l1_cmd->add_option("--p", l1.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  l1_cmd->add_option("--trials", l1.trials, "Trials")->required();
  l1_cmd->add_option("--seed", l1.seed, "Base seed; trial i uses seed+i");
  l1_cmd->add_option("--workers", l1.workers, "Worker threads (0 = all cores)");
  add_common(l1_cmd, l1.common);

  PropcArgs pc;
  auto *pc_cmd = app.add_subcommand("propc", "Sampled check of the threatened-set property");
  pc_cmd->add_option("graph", pc.graph, "Graph file (or use --n)");
  pc_cmd->add_option("--n", pc.n, "Sample G(n,p) instead of reading a file");
  pc_cmd->add_option("--p", pc.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  pc_cmd->add_option("--seed", pc.seed, "Seed for sampling (and for the graph with --n)");
  pc_cmd->add_option("--eps", pc.eps, "eps");
  pc_cmd->add_option("--j-max", pc.j_max, "Largest tuple size")->required();
  pc_cmd->add_option("--samples", pc.samples, "Samples")->required();
  pc_cmd->add_option("--threshold", pc.threshold, "Per-vertex non-neighbor threshold for Y");
  pc_cmd->add_flag("--override", pc.override_guard, "Allow j-max above the adversary palette size");
  pc_cmd->add_flag("--details", pc.details, "Include per-sample records");
  add_common(pc_cmd, pc.common);

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion &) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen_cmd->parsed())
      return cmd_gen(gen, out);
    if (greedy_cmd->parsed())
      return cmd_greedy(greedy, out);
    if (exact_cmd->parsed())
      return cmd_exact(exact, out);
    if (verify_cmd->parsed())
      return cmd_verify(verify, out);
    if (audit_cmd->parsed())
      return cmd_audit(audit, out);
    if (bounds_cmd->parsed())
      return cmd_bounds(bnd, out);
    if (mc_cmd->parsed())
      return cmd_mc(mc, out);
    if (l1_cmd->parsed())
      return cmd_lemma1(l1, out);
    if (pc_cmd->parsed())
      return cmd_propc(pc, out);
  } catch (const ResourceError &e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace cliquechroma::cli

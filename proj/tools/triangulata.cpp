#include <openssl/evp.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "triangulata/bwcolor.hpp"
#include "triangulata/catalog_io.hpp"
#include "triangulata/coloring.hpp"
#include "triangulata/generator.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace triangulata;

namespace {

constexpr int kOk = 0, kViolation = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs f(i) for i in [0, count) on `jobs` threads; callers write to slot i only.
void parallel_for(int count, int jobs, const std::function<void(int)>& f) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next++) < count;) f(i);
    });
  for (auto& th : pool) th.join();
}

fs::path catalog_root(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("TRIANGULATA_CATALOG")) return env;
  return "catalog";
}

std::vector<Vertex> parse_cycle(const std::string& text, int n) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 0 || v >= n) throw UsageError("bad cycle vertex '" + item + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("bad cycle vertex '" + item + "'");
    }
  }
  return out;
}

PlaneTriangulation read_graph(const std::string& flag) {
  std::string text = flag;
  if (text.empty() && !std::getline(std::cin, text)) throw UsageError("no graph6 input on stdin");
  while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.pop_back();
  try {
    return graph6_decode(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string("bad graph6 input: ") + e.what());
  }
}

std::vector<int> orders_for(const fs::path& dir, int n) {
  if (n > 0) return {n};
  return catalog_orders(dir);
}

// Catalogs below n are loaded from dir when present, else generated.
int cmd_generate(int n, const fs::path& dir, int jobs) {
  if (n < 6 || n > kMaxOrder) throw UsageError("--n must lie in 6.." + std::to_string(kMaxOrder));
  const auto t0 = std::chrono::steady_clock::now();
  CatalogStore store(jobs);
  for (int k : catalog_orders(dir))
    if (k < n) store.put(read_catalog(dir, k));
  std::map<int, std::size_t> counts;
  for (int k = 6; k <= n; ++k) {
    const Catalog& c = store.get(k);
    write_catalog(dir, c);
    counts[k] = c.size();
  }
  json files = json::array();
  for (auto [k, count] : counts) {
    const std::string name = catalog_filename(k);
    files.push_back({{"file", name}, {"n", k}, {"count", count}, {"sha256", sha256(read_file(dir / name))}});
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json manifest{{"command", "generate"}, {"parameters", {{"n", n}, {"jobs", jobs}}}, {"output_dir", dir.string()},
                {"catalogs", files}, {"wall_time_s", wall}};
  std::ofstream(dir / "manifest.json") << manifest.dump(2) << "\n";
  const std::size_t count = counts[n];
  std::cout << "n=" << n << ": " << count << (count == 1 ? " graph" : " graphs") << "\n";
  return kOk;
}

json census_row(const CatalogEntry& e, int index) {
  const GraphCensus c = classify_graph(e.graph);
  return json{{"n", e.graph.order()},
              {"index", index},
              {"code", e.code.hex()},
              {"graph6", graph6_encode(e.graph)},
              {"degree_sequence", e.degree_sequence},
              {"partitions", c.partitions},
              {"cycle_colorings", c.cycle_count},
              {"tree_colorings", c.tree_count},
              {"class", to_string(c.cls)},
              {"three_chromatic", c.three_chromatic},
              {"divisible", c.divisible},
              {"starred", c.three_chromatic || c.divisible}};
}

int cmd_census(const fs::path& dir, int n, int jobs, const std::string& format) {
  if (format != "jsonl" && format != "table") throw UsageError("--format must be jsonl or table for census");
  for (int k : orders_for(dir, n)) {
    const Catalog c = read_catalog(dir, k);
    std::vector<json> rows(c.size());
    parallel_for(static_cast<int>(c.size()), jobs, [&](int i) { rows[i] = census_row(c.entries[i], i + 1); });
    if (format == "jsonl") {
      for (const auto& r : rows) std::cout << r.dump() << "\n";
      continue;
    }
    // Rows ordered by degree sequence, then code.
    std::stable_sort(rows.begin(), rows.end(), [](const json& a, const json& b) {
      return a["degree_sequence"].get<std::string>() < b["degree_sequence"].get<std::string>();
    });
    std::cout << "GL\tdegrees\tCN\tTN\tclass\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      const bool star = r["starred"].get<bool>();
      std::cout << k << "_" << i + 1 << "\t" << r["degree_sequence"].get<std::string>() << "\t"
                << (star ? std::string("*") : std::to_string(r["cycle_colorings"].get<int>())) << "\t"
                << (star ? std::string("*") : std::to_string(r["tree_colorings"].get<int>())) << "\t" << r["class"].get<std::string>() << "\n";
    }
  }
  return kOk;
}

json bw_side(const SemiMPG& s, const BwState& st) {
  json side = json::parse(to_json(st));
  side["interior"] = json::array();
  for (Vertex v = 0; v < s.host_order; ++v)
    if (s.interior & bit(v)) side["interior"].push_back(v);
  if (st.A) {
    const PetalDiagnostics d = petal_diagnostics(s, bw_operation(s));
    side["petal"] = {{"pairs", d.petal_pairs.size()},
                     {"max_petal_set", d.max_petal_set},
                     {"petal_graph_odd_cycle", d.petal_graph_has_odd_cycle},
                     {"petal_syndrome", d.petal_syndrome}};
  }
  return side;
}

json bw_row(const PlaneTriangulation& g, const CanonicalCode& code, const std::vector<Vertex>& cycle, const PartitionSet& parts, bool traces) {
  const TwoColorability r = is_2colorable_cycle(g, cycle);
  VertexMask m = 0;
  for (Vertex v : cycle) m |= bit(v);
  const bool oracle = oracle_2colorable(parts, m);
  json row{{"code", code.hex()},
           {"cycle", cycle},
           {"decision", r.colorable ? "2-colorable" : "not 2-colorable"},
           {"oracle", oracle ? "2-colorable" : "not 2-colorable"},
           {"agree", r.colorable == oracle}};
  if (traces) {
    row["side1"] = bw_side(r.side1, r.state1);
    row["side2"] = bw_side(r.side2, r.state2);
    if (!r.coloring.empty()) row["coloring"] = r.coloring;
  }
  return row;
}

int cmd_bwcheck(const std::string& graph, const std::string& cycle_text) {
  const PlaneTriangulation g = read_graph(graph);
  const auto cycle = parse_cycle(cycle_text, g.order());
  if (cycle.size() % 2) throw UsageError("cycle must have even length");
  try {
    split_on_cycle(g, cycle);
  } catch (const DomainError& e) {
    throw UsageError(std::string("malformed cycle: ") + e.what());
  }
  const json row = bw_row(g, canonical_code(g), cycle, enumerate_all_partitions(g), true);
  std::cout << row.dump() << "\n";
  return row["agree"].get<bool>() ? kOk : kViolation;
}

int cmd_bwcensus(const fs::path& dir, int n, int max_len, int jobs) {
  int disagreements = 0;
  long total = 0;
  for (int k : orders_for(dir, n)) {
    const Catalog c = read_catalog(dir, k);
    std::vector<std::vector<json>> rows(c.size());
    parallel_for(static_cast<int>(c.size()), jobs, [&](int i) {
      const auto& e = c.entries[i];
      const PartitionSet parts = enumerate_all_partitions(e.graph);
      const int cap = max_len > 0 ? max_len : (k <= 10 ? 0 : 12);
      for (const auto& cyc : enumerate_cycles(e.graph, 4, cap))
        if (cyc.size() % 2 == 0) rows[i].push_back(bw_row(e.graph, e.code, cyc, parts, false));
    });
    for (const auto& per_graph : rows)
      for (const auto& r : per_graph) {
        ++total;
        if (!r["agree"].get<bool>()) ++disagreements;
        std::cout << r.dump() << "\n";
      }
  }
  std::cerr << total << " even cycles, " << disagreements << " disagreements\n";
  return disagreements ? kViolation : kOk;
}

int cmd_export(const std::string& graph, const std::string& format, const std::string& coloring, const std::string& cycle_text) {
  const PlaneTriangulation g = read_graph(graph);
  if (format == "g6") {
    std::cout << graph6_encode(canonical_relabel(g)) << "\n";
    return kOk;
  }
  if (format != "dot") throw UsageError("unknown format '" + format + "'");
  if (!coloring.empty() && !cycle_text.empty()) throw UsageError("--coloring and --cycle are exclusive");
  if (!coloring.empty()) {
    const auto raw = parse_cycle(coloring, 4);
    if (static_cast<int>(raw.size()) != g.order() || !is_proper_coloring(g, raw)) throw UsageError("--coloring is not a proper coloring");
    std::cout << to_dot(g, ColorPartition::from_colors(raw));
    return kOk;
  }
  if (!cycle_text.empty()) {
    const auto cycle = parse_cycle(cycle_text, g.order());
    if (cycle.size() % 2) throw UsageError("cycle must have even length");
    TwoColorability r;
    try {
      r = is_2colorable_cycle(g, cycle);
    } catch (const DomainError& e) {
      throw UsageError(std::string("malformed cycle: ") + e.what());
    }
    std::vector<std::string> attrs(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      const bool black = (r.state1.B | r.state2.B) & bit(v);
      const bool white = (r.state1.W | r.state2.W) & bit(v);
      attrs[v] = black ? "style=filled, fillcolor=black, fontcolor=white" : white ? "style=filled, fillcolor=white" : "style=filled, fillcolor=grey";
    }
    std::cout << to_dot(g, attrs);
    return kOk;
  }
  std::cout << to_dot(g);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Min-degree-4 plane triangulations: generation, coloring census, black-white cycle checks"};
  app.require_subcommand(1);
  int n = 0, jobs = 1, max_len = 0;
  std::string catalog, census_format, export_format, graph, cycle, coloring;
  bool seedless = false;
  app.add_flag("--seedless", seedless, "Accepted for reproducibility scripts; nothing here is random");

  auto* gen = app.add_subcommand("generate", "Write catalogs n=6..N and manifest.json");
  gen->add_option("--n", n, "Largest order")->required();
  gen->add_option("--catalog", catalog, "Catalog directory (default $TRIANGULATA_CATALOG or ./catalog)");
  gen->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* census = app.add_subcommand("census", "Coloring census of catalog graphs");
  census->add_option("--catalog", catalog, "Catalog directory");
  census->add_option("--n", n, "Only this order (default: every catalog file)");
  census->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  census->add_option("--format", census_format, "jsonl or table")->default_val("jsonl");

  auto* bwcheck = app.add_subcommand("bwcheck", "Decide whether an even cycle is 2-colorable (graph6 on stdin)");
  bwcheck->add_option("--graph", graph, "graph6 text instead of stdin");
  bwcheck->add_option("--cycle", cycle, "Comma-separated cycle vertices")->required();

  auto* bwcensus = app.add_subcommand("bwcensus", "Decide every even cycle of catalog graphs against the oracle");
  bwcensus->add_option("--catalog", catalog, "Catalog directory");
  bwcensus->add_option("--n", n, "Only this order");
  bwcensus->add_option("--max-cycle-len", max_len, "Longest cycle (default: unbounded up to order 10, else 12)");
  bwcensus->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* exp = app.add_subcommand("export", "Export a graph (graph6 on stdin) as DOT or canonical graph6");
  exp->add_option("--graph", graph, "graph6 text instead of stdin");
  exp->add_option("--format", export_format, "dot or g6")->default_val("dot");
  exp->add_option("--coloring", coloring, "Comma-separated colors 0..3 per vertex");
  exp->add_option("--cycle", cycle, "Even cycle: paint the black-white coloring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_generate(n, catalog_root(catalog), jobs);
    if (*census) return cmd_census(catalog_root(catalog), n, jobs, census_format);
    if (*bwcheck) return cmd_bwcheck(graph, cycle);
    if (*bwcensus) return cmd_bwcensus(catalog_root(catalog), n, max_len, jobs);
    if (*exp) return cmd_export(graph, export_format, coloring, cycle);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

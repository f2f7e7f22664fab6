// Command-line driver: compute modular data / fusion rules of Drinfeld
// doubles, verify against the bundled fixture tables, export fusion graphs.
#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "dd/report.hpp"

#ifndef DD_DEFAULT_FIXTURES
#define DD_DEFAULT_FIXTURES "fixtures"
#endif

namespace fs = std::filesystem;

namespace {

int default_jobs() {
  if (const char* env = std::getenv("MD_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

std::string fusion_triples(const dd::FusionData& fd) {
  std::ostringstream os;
  os << "# m n p N_mn^p (1-based)\n";
  for (const auto& mat : fd.tensor)
    for (const auto& e : mat.entries)
      os << (mat.irrep + 1) << " " << (e[0] + 1) << " " << (e[1] + 1) << " " << e[2] << "\n";
  return os.str();
}

dd::GroupComputation compute_named(const std::string& group, const std::string& generators_file,
                                   std::uint64_t seed, bool aggregates_only, int jobs) {
  if (!generators_file.empty()) {
    std::ifstream in(generators_file);
    if (!in) throw std::runtime_error("cannot open " + generators_file);
    std::stringstream ss;
    ss << in.rdbuf();
    dd::GroupData g = dd::group_from_cycles_text(ss.str());
    g.set_name(group.empty() ? fs::path(generators_file).stem().string() : group);
    return dd::compute_group(std::move(g), dd::SuFamily::None, seed, !aggregates_only, jobs);
  }
  return dd::compute_group(group, seed, !aggregates_only, jobs);
}

int cmd_compute(const std::string& group, const std::string& generators_file,
                const std::string& out_dir, const std::string& format, std::uint64_t seed,
                bool aggregates_only, int jobs) {
  auto gc = compute_named(group, generators_file, seed, aggregates_only, jobs);
  fs::create_directories(out_dir);
  fs::path base = fs::path(out_dir) / gc.report.name;
  write_file(base.string() + "_modular.json", dd::modular_data_json(gc.md));
  write_file(base.string() + "_characters.csv", dd::character_table_csv(gc.table));
  if (!aggregates_only) write_file(base.string() + "_fusion.txt", fusion_triples(gc.fd));
  if (format == "csv")
    write_file(base.string() + "_report.csv", dd::report_csv(gc.report));
  else
    write_file(base.string() + "_report.json", dd::report_json(gc.report));
  auto verification = dd::verify_modular(gc.md);
  std::cout << gc.report.name << ": |G|=" << gc.report.order << " l=" << gc.report.ell
            << " r=" << gc.report.rank << " dB=" << gc.report.d_B_factored
            << " units=" << gc.report.units << " eq7=" << (gc.report.eq7_double ? "yes" : "no")
            << " modular=" << (verification.ok() ? "ok" : "FAIL") << "\n";
  return verification.ok() ? 0 : 1;
}

int cmd_verify(std::vector<std::string> groups, bool all, const std::string& fixtures,
               std::uint64_t seed, int jobs) {
  if (all) groups = dd::fixture_group_names(fixtures);
  if (groups.empty()) {
    std::cerr << "verify: no groups selected (use --all or name groups)\n";
    return 2;
  }
  std::vector<dd::FixtureResult> results(groups.size());
  std::vector<std::string> errors(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= groups.size()) return;
      try {
        auto gc = dd::compute_group(groups[i], seed, /*full_tensor=*/true, 1);
        results[i] = dd::verify_against_fixture(gc, fixtures);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  int nt = std::clamp(jobs, 1, static_cast<int>(groups.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool all_ok = true;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (!errors[i].empty()) {
      std::cout << "FAIL " << groups[i] << ": " << errors[i] << "\n";
      all_ok = false;
      continue;
    }
    const auto& res = results[i];
    if (!res.found) {
      std::cout << "SKIP " << groups[i] << ": no fixture\n";
      continue;
    }
    if (res.passed) {
      std::cout << "PASS " << groups[i];
      if (res.exact_s_residual)
        std::cout << " (exact S residual " << *res.exact_s_residual << ")";
      std::cout << "\n";
    } else {
      all_ok = false;
      std::cout << "FAIL " << groups[i] << "\n";
      for (const auto& m : res.mismatches)
        std::cout << "     " << m.field << ": expected " << m.expected << ", got " << m.actual
                  << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_graph(const std::string& group, int irrep, bool embedding, const std::string& out_dir,
              std::uint64_t seed, int jobs) {
  auto gc = dd::compute_group(group, seed, /*full_tensor=*/true, jobs);
  fs::create_directories(out_dir);
  dd::FusionGraph graph;
  std::string tag;
  if (embedding) {
    if (gc.embedding.candidates.empty()) {
      std::cerr << "no embedding irrep\n";
      return 1;
    }
    graph = dd::embedding_graph(gc.md, gc.fd, gc.embedding);
    tag = "N" + std::to_string(graph.irrep_index + 1);
    if (gc.embedding.composite &&
        gc.embedding.composite_pair.second != gc.embedding.composite_pair.first)
      tag += "+N" + std::to_string(gc.embedding.composite_pair.second + 1);
  } else {
    if (irrep < 1 || irrep > gc.md.rank()) {
      std::cerr << "irrep index out of range (1.." << gc.md.rank() << ")\n";
      return 2;
    }
    graph = dd::fusion_graph(gc.md, gc.fd, irrep - 1);
    tag = "N" + std::to_string(irrep);
  }
  fs::path path = fs::path(out_dir) / (gc.report.name + "_" + tag + ".dot");
  write_file(path, dd::dot_export(graph, gc.md));
  std::cout << gc.report.name << " " << tag << ": " << graph.weak_components.size()
            << " components -> " << path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular data and fusion rules of Drinfeld doubles of finite subgroups of SU(2) and SU(3)"};
  app.require_subcommand(1);

  std::string group, generators_file, out_dir = "out", format = "json";
  std::string fixtures = DD_DEFAULT_FIXTURES;
  std::uint64_t seed = dd::kDefaultSeed;
  bool aggregates_only = false, all = false, embedding = false;
  int jobs = default_jobs(), irrep = 0;
  std::vector<std::string> groups;

  auto* compute = app.add_subcommand("compute", "compute modular data, fusion rules and report");
  compute->add_option("group", group, "catalog name");
  compute->add_option("--generators", generators_file,
                      "file of permutation generators in cycle notation");
  compute->add_option("--out", out_dir, "output directory");
  compute->add_option("--format", format, "report format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  compute->add_option("--seed", seed, "RNG seed for character tables");
  compute->add_flag("--aggregates-only", aggregates_only, "skip the full fusion tensor");
  compute->add_option("--jobs", jobs, "worker threads (or MD_JOBS)");

  auto* verify = app.add_subcommand("verify", "check computed data against fixtures");
  verify->add_option("groups", groups, "catalog names");
  verify->add_flag("--all", all, "verify every group with a fixture");
  verify->add_option("--fixtures", fixtures, "fixtures directory");
  verify->add_option("--seed", seed, "RNG seed for character tables");
  verify->add_option("--jobs", jobs, "worker threads (or MD_JOBS)");

  auto* graph = app.add_subcommand("graph", "export a fusion graph as DOT");
  graph->add_option("group", group, "catalog name")->required();
  graph->add_option("--irrep", irrep, "irrep index (1-based)");
  graph->add_flag("--embedding", embedding, "use the embedding irrep");
  graph->add_option("--out", out_dir, "output directory");
  graph->add_option("--seed", seed, "RNG seed for character tables");
  graph->add_option("--jobs", jobs, "worker threads (or MD_JOBS)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      if (group.empty() && generators_file.empty()) {
        std::cerr << "compute: need a group name or --generators file\n";
        return 2;
      }
      return cmd_compute(group, generators_file, out_dir, format, seed, aggregates_only, jobs);
    }
    if (verify->parsed()) return cmd_verify(groups, all, fixtures, seed, jobs);
    if (graph->parsed()) return cmd_graph(group, irrep, embedding, out_dir, seed, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

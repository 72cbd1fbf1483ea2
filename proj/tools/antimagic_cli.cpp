#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "antimagic/assembler.hpp"
#include "antimagic/errors.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/report.hpp"
#include "antimagic/verifier.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitAntimagic = 0;
constexpr int kExitNegative = 1;
constexpr int kExitContract = 2;

antimagic::BipartiteGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw antimagic::diagnostic_error("cannot open " + path);
  return antimagic::BipartiteGraph::read_edge_list(in);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ANTIMAGIC_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

json verdict_json(const antimagic::BipartiteGraph& g, const antimagic::Verdict& v) {
  json out;
  out["is_bijection"] = v.is_bijection;
  out["sums_distinct"] = v.sums_distinct;
  out["antimagic"] = v.antimagic;
  json cols = json::array();
  for (auto [a, b, s] : v.collisions) cols.push_back({{"u", a}, {"v", b}, {"sum", s}});
  out["collisions"] = cols;
  out["residues"] = v.residue_of_sum;
  (void)g;
  return out;
}

json labeling_json(const antimagic::BipartiteGraph& g, const antimagic::Labeling& lab) {
  json out;
  json edges = json::array();
  for (antimagic::EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    edges.push_back({{"u", u}, {"v", v}, {"label", lab.label_of_edge[e]}});
  }
  out["edges"] = edges;
  out["vertex_sums"] = lab.vertex_sums(g);
  antimagic::Verdict v = antimagic::verify(g, lab);
  out["verdict"] = verdict_json(g, v);
  return out;
}

int label_one(const fs::path& path, std::uint64_t seed, int retries, const std::string& out_file,
              const std::string& plan_file, bool as_json, std::ostream& os) {
  antimagic::BipartiteGraph g = load_graph(path.string());
  antimagic::LabelOptions opts;
  opts.seed = seed;
  opts.max_retries = retries;
  antimagic::LabelResult res = antimagic::label_graph(g, opts);
  antimagic::Verdict v = antimagic::verify(g, res.labeling);
  antimagic::StructuralReport rep = antimagic::structural_report(g, res.labeling, res.plan,
                                                                 res.partition);
  os << path.string() << ": antimagic: " << (v.antimagic ? "true" : "false")
     << " (attempts " << res.attempts << ", x_zero_residue " << rep.x_zero_residue
     << ", y_nonzero_residue " << rep.y_nonzero_residue << ")\n";
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (as_json)
      out << labeling_json(g, res.labeling).dump(2) << '\n';
    else
      res.labeling.write_text(g, out);
  }
  if (!plan_file.empty()) {
    std::ofstream out(plan_file);
    out << antimagic::plan_to_json(res.plan);
  }
  return v.antimagic ? kExitAntimagic : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"antimagic labelings of bipartite graphs with minimum degree 15"};
  app.require_subcommand(1);

  std::string in_path, labels_path, out_file, plan_file;
  std::uint64_t seed = default_seed();
  int retries = 8;
  int jobs = 1;
  bool as_json = false;

  auto* label = app.add_subcommand("label", "construct and verify a labeling");
  label->add_option("input", in_path, "edge-list file or directory of .bip files")->required();
  label->add_option("--seed", seed, "deterministic seed");
  label->add_option("--max-retries", retries, "internal retry budget");
  label->add_option("--out", out_file, "write the labeling here");
  label->add_option("--dump-plan", plan_file, "write the decomposition plan as JSON");
  label->add_option("--jobs", jobs, "parallel workers for directory inputs");
  label->add_flag("--json", as_json, "write the labeling as JSON");

  auto* verify_cmd = app.add_subcommand("verify", "check a labeling file exactly");
  verify_cmd->add_option("graph", in_path, "edge-list file")->required();
  verify_cmd->add_option("labeling", labels_path, "labeling file (`u v label` lines)")->required();

  auto* gen = app.add_subcommand("gen", "emit a test graph in edge-list format");
  std::string kind;
  int ga = 15, gb = 15, gdelta = 15, gmax = 4;
  double gextra = 0.0;
  gen->add_option("kind", kind, "complete | random | tiny")->required();
  gen->add_option("--a", ga, "side A size");
  gen->add_option("--b", gb, "side B size");
  gen->add_option("--delta", gdelta, "minimum-degree floor (random)");
  gen->add_option("--extra", gextra, "extra edge probability (random)");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--max-edges", gmax, "edge cap (tiny)");
  gen->add_option("--out", out_file, "output file (default stdout)");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force antimagicness of a tiny graph");
  oracle_cmd->add_option("input", in_path, "edge-list file")->required();
  int cap = 9;
  oracle_cmd->add_option("--cap", cap, "edge cap");

  auto* demo = app.add_subcommand("demo", "run the complete-graph showcase end to end");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*label) {
      fs::path p(in_path);
      if (fs::is_directory(p)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(p))
          if (entry.path().extension() == ".bip") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        std::atomic<size_t> next{0};
        std::atomic<int> worst{kExitAntimagic};
        std::mutex io;
        auto worker = [&]() {
          for (size_t i = next++; i < files.size(); i = next++) {
            std::ostringstream line;
            int rc;
            try {
              rc = label_one(files[i], seed, retries, "", "", as_json, line);
            } catch (const std::exception& e) {
              line << files[i].string() << ": error: " << e.what() << '\n';
              rc = kExitContract;
            }
            std::lock_guard<std::mutex> lock(io);
            std::cout << line.str();
            int cur = worst.load();
            while (rc > cur && !worst.compare_exchange_weak(cur, rc)) {
            }
          }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        return worst.load();
      }
      return label_one(p, seed, retries, out_file, plan_file, as_json, std::cout);
    }

    if (*verify_cmd) {
      antimagic::BipartiteGraph g = load_graph(in_path);
      std::ifstream in(labels_path);
      if (!in) throw antimagic::diagnostic_error("cannot open " + labels_path);
      antimagic::Labeling lab = antimagic::Labeling::read_text(g, in);
      antimagic::Verdict v = antimagic::verify(g, lab);
      std::cout << verdict_json(g, v).dump(2) << '\n';
      if (!v.is_bijection) {
        std::cerr << "not a bijection\n";
        return kExitContract;
      }
      return v.antimagic ? kExitAntimagic : kExitNegative;
    }

    if (*gen) {
      std::ostringstream buf;
      if (kind == "complete") {
        antimagic::complete_bipartite(ga, gb).write_edge_list(buf);
      } else if (kind == "random") {
        antimagic::random_min_degree(ga, gb, gdelta, gextra, seed).write_edge_list(buf);
      } else if (kind == "tiny") {
        for (const auto& g : antimagic::tiny_enumerate(gmax)) g.write_edge_list(buf);
      } else {
        std::cerr << "unknown generator kind: " << kind << '\n';
        return kExitContract;
      }
      if (out_file.empty()) {
        std::cout << buf.str();
      } else {
        std::ofstream out(out_file);
        out << buf.str();
      }
      return kExitAntimagic;
    }

    if (*oracle_cmd) {
      antimagic::BipartiteGraph g = load_graph(in_path);
      bool ok = antimagic::brute_force_is_antimagic(g, cap);
      std::cout << (ok ? "antimagic: true" : "antimagic: false") << '\n';
      return ok ? kExitAntimagic : kExitNegative;
    }

    if (*demo) {
      antimagic::BipartiteGraph g = antimagic::complete_bipartite(15, 15);
      antimagic::LabelOptions opts;
      opts.seed = seed;
      antimagic::LabelResult res = antimagic::label_graph(g, opts);
      antimagic::Verdict v = antimagic::verify(g, res.labeling);
      antimagic::StructuralReport rep =
          antimagic::structural_report(g, res.labeling, res.plan, res.partition);
      std::cout << "K_{15,15}: antimagic: " << (v.antimagic ? "true" : "false") << '\n';
      std::cout << "residue report: x_zero_residue " << rep.x_zero_residue
                << ", y_nonzero_residue " << rep.y_nonzero_residue << ", pools_exact "
                << (rep.pools_exact ? "true" : "false") << '\n';
      int shown = 0;
      for (antimagic::VertexId vtx = 0; vtx < g.vertex_count() && shown < 6; ++vtx, ++shown)
        std::cout << "  sigma(" << vtx << ") = " << res.labeling.vertex_sums(g)[vtx]
                  << " (mod 3 = " << v.residue_of_sum[vtx] << ")\n";
      return v.antimagic ? kExitAntimagic : kExitNegative;
    }
  } catch (const antimagic::contract_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitContract;
  } catch (const antimagic::diagnostic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitContract;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitContract;
  }
  return kExitContract;
}

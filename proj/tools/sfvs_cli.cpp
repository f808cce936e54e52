#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfvs/generators.hpp"
#include "sfvs/instance_io.hpp"
#include "sfvs/solve.hpp"

namespace {

using namespace sfvs;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;

std::string ids_line(const VertexSet& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i] + 1;
  return os.str();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

struct SolveArgs {
  std::string file;
  std::string algo = "auto";
  std::string mode = "decide";
  bool stats = false;
  std::string solution_out;
};

int cmd_solve(const SolveArgs& a) {
  Instance inst;
  Algorithm algo;
  try {
    inst = read_instance_file(a.file);
    algo = parse_algorithm(a.algo);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  try {
    bool yes = false;
    VertexSet sol;
    nlohmann::json extra;
    SolveStats stats;
    if (a.mode == "minimize") {
      Minimum m = minimize_with(inst, algo);
      yes = m.size <= inst.budget();
      sol = m.outcome.solution;
      stats = m.outcome.stats;
      extra["min_size"] = m.size;
    } else {
      SolveOutcome o = solve_with(inst, algo);
      yes = o.yes;
      sol = o.solution;
      stats = o.stats;
    }
    std::cout << (yes ? "YES" : "NO") << '\n';
    if (yes || a.mode == "minimize") std::cout << ids_line(sol) << '\n';
    if (a.stats) {
      nlohmann::json j = nlohmann::json::parse(stats.to_json());
      j["algo"] = to_string(algo);
      j["violations"] = stats.violations();
      for (auto& [k, v] : extra.items()) j[k] = v;
      std::cout << "STATS: " << j.dump() << '\n';
    }
    if (!a.solution_out.empty() &&
        !write_file(a.solution_out, serialize_solution(yes ? std::optional<VertexSet>(sol) : std::nullopt))) {
      std::cerr << "error: cannot write " << a.solution_out << '\n';
      return kParse;
    }
    return yes ? kYes : kNo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  }
}

struct VerifyArgs {
  std::string instance;
  std::string solution;
  std::string mode = "triangle";
};

int cmd_verify(const VerifyArgs& a) {
  Instance inst;
  std::optional<VertexSet> sol;
  try {
    inst = read_instance_file(a.instance);
    sol = read_solution_file(a.solution);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  const VerifyMode mode = a.mode == "cycle" ? VerifyMode::cycle : VerifyMode::triangle;
  if (!sol) {
    Minimum m;
    try {
      m = minimize_with(inst, Algorithm::oracle);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: cannot check a NO claim: " << e.what() << '\n';
      return kPrecondition;
    }
    if (m.size <= inst.budget()) {
      std::cout << "rejected: claimed NO but a solution of size " << m.size << " <= k = " << inst.budget()
                << " exists\n";
      return kNo;
    }
    std::cout << "accepted: no solution of size <= " << inst.budget() << '\n';
    return kYes;
  }
  try {
    if (auto why = first_violation(inst, *sol, mode)) {
      std::cout << "rejected: " << *why << '\n';
      return kNo;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  if (static_cast<int>(sol->size()) > inst.budget()) {
    std::cout << "rejected: solution has " << sol->size() << " vertices but k = " << inst.budget() << '\n';
    return kNo;
  }
  std::cout << "accepted\n";
  return kYes;
}

struct GenArgs {
  std::string kind;
  int n = 12;
  double density = 0.5;
  int n_clique = 6;
  int n_indep = 6;
  double edge_prob = 0.5;
  double terminal_prob = 0.3;
  double mark_prob = 0.1;
  int k = 3;
  int extra = 6;
  int attempts = 5000;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  Instance inst;
  try {
    if (a.kind == "chordal") {
      inst = gen_chordal(a.n, a.density, a.terminal_prob, a.mark_prob, a.k, a.seed);
    } else if (a.kind == "split") {
      inst = gen_split(a.n_clique, a.n_indep, a.edge_prob, a.terminal_prob, a.mark_prob, a.k, a.seed);
    } else {
      StructuredParams p;
      p.extra = a.extra;
      p.density = a.density;
      p.terminal_prob = a.terminal_prob;
      p.mark_prob = a.mark_prob;
      p.k = a.k;
      p.attempts = a.attempts;
      inst = gen_structured(parse_structured_kind(a.kind), p, a.seed);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  const std::string text = serialize(inst);
  if (a.out.empty()) {
    std::cout << text;
  } else if (!write_file(a.out, text)) {
    std::cerr << "error: cannot write " << a.out << '\n';
    return kParse;
  }
  return 0;
}

struct BenchArgs {
  std::string dir;
  std::vector<std::string> algos{"auto", "oracle"};
  std::string mode = "decide";
  int jobs = 1;
};

struct Cell {
  std::string answer;
  int min_size = -1;
  std::uint64_t nodes = 0;
  double ms = 0;
  bool over_bound = false;
};

// Stand-in that always answers NO; used to check that the bench notices.
constexpr const char* kStub = "always-no";

Cell bench_one(const Instance& inst, const std::string& algo_name, bool minimize) {
  Cell c;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (algo_name == kStub) {
      c.answer = "NO";
    } else {
      const Algorithm algo = parse_algorithm(algo_name);
      if (minimize) {
        Minimum m = minimize_with(inst, algo);
        c.min_size = m.size;
        c.answer = m.size <= inst.budget() ? "YES" : "NO";
        c.nodes = m.outcome.stats.nodes;
      } else {
        SolveOutcome o = solve_with(inst, algo);
        c.answer = o.yes ? "YES" : "NO";
        c.nodes = o.stats.nodes;
      }
      const double n = std::max(1, inst.graph().num_vertices());
      const double bound = 10.0 * n * n * n * std::pow(1.820, inst.budget());
      c.over_bound = algo != Algorithm::oracle && !minimize && static_cast<double>(c.nodes) > bound;
    }
  } catch (const std::invalid_argument&) {
    c.answer = "n/a";
  }
  c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c;
}

int cmd_bench(const BenchArgs& a) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(a.dir, ec)) {
    std::cerr << "error: not a directory: " << a.dir << '\n';
    return kParse;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  const bool minimize = a.mode == "minimize";
  std::vector<std::vector<Cell>> table(files.size());
  std::vector<std::string> errors(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        const Instance inst = read_instance_file(files[i].string());
        for (const auto& algo : a.algos) table[i].push_back(bench_one(inst, algo, minimize));
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < std::max(1, a.jobs); ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int mismatches = 0;
  std::cout << std::left << std::setw(32) << "instance" << std::setw(12) << "algo" << std::setw(8) << "answer"
            << std::setw(6) << "min" << std::setw(12) << "nodes" << "ms\n";
  for (std::size_t i = 0; i < files.size(); ++i) {
    const std::string name = files[i].filename().string();
    if (!errors[i].empty()) {
      std::cout << name << "  error: " << errors[i] << '\n';
      ++mismatches;
      continue;
    }
    std::string answer, min_size;
    bool mismatch = false;
    for (std::size_t j = 0; j < a.algos.size(); ++j) {
      const Cell& c = table[i][j];
      std::cout << std::setw(32) << name << std::setw(12) << a.algos[j] << std::setw(8) << c.answer << std::setw(6)
                << (c.min_size >= 0 ? std::to_string(c.min_size) : "-") << std::setw(12) << c.nodes << std::fixed
                << std::setprecision(2) << c.ms << '\n';
      if (c.over_bound) std::cerr << "warning: " << name << " " << a.algos[j] << " exceeds the node bound\n";
      if (c.answer == "n/a") continue;
      if (answer.empty()) answer = c.answer;
      mismatch = mismatch || answer != c.answer;
      const std::string m = std::to_string(c.min_size);
      if (minimize && min_size.empty()) min_size = m;
      mismatch = mismatch || (minimize && min_size != m);
    }
    if (mismatch) {
      std::cout << "MISMATCH " << name << '\n';
      ++mismatches;
    }
  }
  std::cout << files.size() << " instances, " << mismatches << " mismatches\n";
  return mismatches ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subset feedback vertex set solver for chordal and split graphs"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Decide or minimise an instance");
  s->add_option("file", solve.file, "Instance file")->required();
  s->add_option("--algo", solve.algo, "auto|whole|split|exact-split|oracle");
  s->add_option("--mode", solve.mode, "decide|minimize")->check(CLI::IsMember({"decide", "minimize"}));
  s->add_flag("--stats", solve.stats, "Print a STATS: line with search counters");
  s->add_option("--solution-out", solve.solution_out, "Write the solution file here");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a solution file against an instance");
  v->add_option("instance", verify.instance)->required();
  v->add_option("solution", verify.solution)->required();
  v->add_option("--mode", verify.mode, "triangle|cycle")->check(CLI::IsMember({"triangle", "cycle"}));

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("kind", gen.kind, "chordal|split|fish|separator1|separator2|inner_terminal")->required();
  g->add_option("--n", gen.n, "Vertices (chordal)");
  g->add_option("--density", gen.density, "Extra edge density (chordal, structured)");
  g->add_option("--n-clique", gen.n_clique, "Clique side (split)");
  g->add_option("--n-indep", gen.n_indep, "Independent side (split)");
  g->add_option("--edge-prob", gen.edge_prob, "Cross edge probability (split)");
  g->add_option("--terminal-prob", gen.terminal_prob);
  g->add_option("--mark-prob", gen.mark_prob);
  g->add_option("--k", gen.k, "Budget");
  g->add_option("--extra", gen.extra, "Vertices grown around the planted core (structured)");
  g->add_option("--attempts", gen.attempts, "Candidates tried (structured)");
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out, "Output file (stdout if omitted)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run algorithms over a directory and compare answers");
  b->add_option("dir", bench.dir)->required();
  b->add_option("--algos", bench.algos, "Algorithms to compare (always-no is a deliberately wrong stub)")
      ->delimiter(',');
  b->add_option("--mode", bench.mode, "decide|minimize")->check(CLI::IsMember({"decide", "minimize"}));
  b->add_option("--jobs", bench.jobs, "Instances solved in parallel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }

  if (s->parsed()) return cmd_solve(solve);
  if (v->parsed()) return cmd_verify(verify);
  if (g->parsed()) return cmd_gen(gen);
  return cmd_bench(bench);
}

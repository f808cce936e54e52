#include "sfvs/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace sfvs {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

long long read_int(std::istringstream& ss, int line, const char* what) {
  long long x;
  if (!(ss >> x)) throw ParseError(line, std::string("expected integer ") + what);
  return x;
}

void expect_end(std::istringstream& ss, int line) {
  std::string extra;
  if (ss >> extra) throw ParseError(line, "unexpected token '" + extra + "'");
}

} // namespace

Instance parse_instance(std::istream& in) {
  std::string raw;
  int lineno = 0;
  bool have_header = false, have_k = false;
  long long n = 0, m = 0, k = 0;
  std::vector<std::pair<Edge, int>> edges, marks;
  std::vector<std::pair<Vertex, int>> terms;

  auto vertex = [&](std::istringstream& ss) {
    long long v = read_int(ss, lineno, "vertex id");
    if (v < 1 || v > n) throw ParseError(lineno, "vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    return static_cast<Vertex>(v - 1);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ss(strip_comment(raw));
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      std::string kind;
      if (!(ss >> kind) || kind != "sfvs") throw ParseError(lineno, "header must read 'p sfvs <n> <m>'");
      n = read_int(ss, lineno, "n");
      m = read_int(ss, lineno, "m");
      if (n < 0 || m < 0) throw ParseError(lineno, "negative size in header");
      expect_end(ss, lineno);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "'" + tag + "' line before 'p sfvs' header");
    if (tag == "k") {
      if (have_k) throw ParseError(lineno, "duplicate k line");
      k = read_int(ss, lineno, "budget");
      have_k = true;
    } else if (tag == "e" || tag == "m") {
      Vertex a = vertex(ss), b = vertex(ss);
      if (a == b) throw ParseError(lineno, "self-loop");
      (tag == "e" ? edges : marks).emplace_back(make_edge(a, b), lineno);
    } else if (tag == "t") {
      terms.emplace_back(vertex(ss), lineno);
    } else {
      throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
    expect_end(ss, lineno);
  }
  if (!have_header) throw ParseError(lineno, "missing 'p sfvs' header");
  if (!have_k) throw ParseError(lineno, "missing 'k' line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

  Instance inst(static_cast<int>(n), static_cast<int>(k));
  std::set<Edge> seen;
  for (auto& [e, line] : edges) {
    if (!seen.insert(e).second) throw ParseError(line, "duplicate edge");
    inst.add_edge(e.first, e.second);
  }
  for (auto& [e, line] : marks) {
    if (!seen.count(e)) throw ParseError(line, "marked pair is not an edge");
    inst.mark(e.first, e.second);
  }
  for (auto& [v, line] : terms) inst.set_terminal(v, true);
  inst.clear_history();
  return inst;
}

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_instance(in);
}

std::string serialize(const Instance& inst) {
  const Graph& g = inst.graph();
  VertexSet vs = g.vertices();
  std::vector<int> id(g.capacity(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) id[vs[i]] = static_cast<int>(i) + 1;
  std::ostringstream os;
  os << "p sfvs " << vs.size() << ' ' << g.num_edges() << '\n';
  os << "k " << inst.budget() << '\n';
  for (auto [a, b] : g.edges()) os << "e " << id[a] << ' ' << id[b] << '\n';
  for (Vertex t : inst.terminals()) os << "t " << id[t] << '\n';
  for (auto [a, b] : g.marked_edges()) os << "m " << id[a] << ' ' << id[b] << '\n';
  return os.str();
}

std::optional<VertexSet> parse_solution(std::istream& in) {
  std::string raw;
  int lineno = 0;
  std::vector<Vertex> vs;
  bool no = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ss(strip_comment(raw));
    std::string tok;
    while (ss >> tok) {
      if (tok == "NO") {
        no = true;
        continue;
      }
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
        vs.push_back(static_cast<Vertex>(v - 1));
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad solution token '" + tok + "'");
      }
    }
  }
  if (no) {
    if (!vs.empty()) throw ParseError(lineno, "solution mixes NO with vertex ids");
    return std::nullopt;
  }
  VertexSet s = make_set(vs);
  if (s.size() != vs.size()) throw ParseError(lineno, "duplicate vertex in solution");
  return s;
}

std::optional<VertexSet> read_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_solution(in);
}

std::string serialize_solution(const std::optional<VertexSet>& s) {
  if (!s) return "NO\n";
  std::ostringstream os;
  for (Vertex v : *s) os << v + 1 << '\n';
  return os.str();
}

} // namespace sfvs

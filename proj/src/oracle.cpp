#include "sfvs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sfvs {

namespace {

using Mask = std::uint64_t;

struct Packed {
  VertexSet ids;
  // Marked edges first, then T-triangles.
  std::vector<Mask> constraints;
};

Packed pack(const Instance& inst) {
  Packed p;
  p.ids = inst.graph().vertices();
  if (p.ids.size() > 64) throw std::invalid_argument("oracle: more than 64 live vertices");
  auto bit = [&](Vertex v) {
    return Mask{1} << (std::lower_bound(p.ids.begin(), p.ids.end(), v) - p.ids.begin());
  };
  for (auto [a, b] : inst.graph().marked_edges()) p.constraints.push_back(bit(a) | bit(b));
  for (const Triangle& t : enumerate_t_triangles(inst)) p.constraints.push_back(bit(t[0]) | bit(t[1]) | bit(t[2]));
  return p;
}

VertexSet unpack(const Packed& p, Mask m) {
  VertexSet out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(p.ids[i]);
    m &= m - 1;
  }
  return out;
}

struct Search {
  const std::vector<Mask>& cons;
  int best;
  Mask best_mask = 0;
  bool found = false;

  void go(Mask chosen, int used) {
    if (used >= best + (found ? 0 : 1)) return;
    for (Mask c : cons) {
      if (c & chosen) continue;
      for (Mask rest = c; rest; rest &= rest - 1) go(chosen | (rest & -rest), used + 1);
      return;
    }
    best = used;
    best_mask = chosen;
    found = true;
  }
};

} // namespace

OracleResult oracle_solve(const Instance& inst, int cap) {
  OracleResult res;
  if (cap < 0) return res;
  Packed p = pack(inst);
  Search s{p.constraints, cap};
  s.go(0, 0);
  if (s.found) {
    res.size = s.best;
    res.witness = unpack(p, s.best_mask);
  }
  return res;
}

OracleResult cycle_oracle_solve(const Instance& inst, int cap) {
  OracleResult res;
  VertexSet ids = inst.graph().vertices();
  const int n = static_cast<int>(ids.size());
  if (n > 20) throw std::invalid_argument("cycle oracle: too many vertices");
  for (int size = 0; size <= std::min(cap, n); ++size) {
    // Gosper's hack over all masks with `size` bits.
    std::uint32_t m = size == 0 ? 0u : (1u << size) - 1;
    const std::uint32_t limit = 1u << n;
    while (m < limit) {
      VertexSet s;
      for (int i = 0; i < n; ++i)
        if ((m >> i) & 1u) s.push_back(ids[i]);
      if (verify_solution(inst, s, VerifyMode::cycle)) {
        res.size = size;
        res.witness = s;
        return res;
      }
      if (m == 0) break;
      std::uint32_t c = m & -m, r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return res;
}

} // namespace sfvs

#include "dihg/finite.hpp"

#include <algorithm>
#include <stdexcept>

namespace dihg {

int FiniteHypergraph::rank() const {
  std::size_t r = 0;
  for (const auto& e : edges) r = std::max(r, e.size());
  return static_cast<int>(r);
}

int FiniteHypergraph::max_degree() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
  for (const auto& e : edges)
    for (int v : e) ++deg[static_cast<std::size_t>(v)];
  int m = 0;
  for (int d : deg) m = std::max(m, d);
  return m;
}

BitSet FiniteHypergraph::edge_bits(int e) const {
  BitSet b(vertex_count);
  for (int v : edges[static_cast<std::size_t>(e)]) b.set(v);
  return b;
}

BitSet FiniteHypergraph::covered_vertices() const {
  BitSet b(vertex_count);
  for (const auto& e : edges)
    for (int v : e) b.set(v);
  return b;
}

bool FiniteHypergraph::is_d_partite(int d) const {
  if (static_cast<int>(part_of.size()) != vertex_count) return false;
  for (const auto& e : edges) {
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int v : e) {
      int p = part_of[static_cast<std::size_t>(v)];
      if (p < 1 || p > d || seen[static_cast<std::size_t>(p - 1)]) return false;
      seen[static_cast<std::size_t>(p - 1)] = true;
    }
    for (bool s : seen)
      if (!s) return false;
  }
  return true;
}

void FiniteHypergraph::validate() const {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (const auto& e : edges) {
    if (!std::is_sorted(e.begin(), e.end()))
      throw std::invalid_argument("edge vertex lists must be sorted");
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("edge with repeated vertex");
    for (int v : e)
      if (v < 0 || v >= vertex_count) throw std::invalid_argument("vertex id out of range");
  }
  if (!part_of.empty() && static_cast<int>(part_of.size()) != vertex_count)
    throw std::invalid_argument("part_of must assign every vertex");
  if (!weights.empty() && weights.size() != edges.size())
    throw std::invalid_argument("weights must assign every edge");
}

bool Atomization::covered() const {
  BitSet cov = hyper.covered_vertices();
  return cov.count() == hyper.vertex_count;
}

Atomization atomize(const DIntervalHypergraph& h) {
  Atomization out;
  out.hyper.edges.assign(static_cast<std::size_t>(h.edge_count()), {});

  for (int copy = 1; copy <= h.d(); ++copy) {
    std::vector<Rat> values = critical_values(h, copy);
    // Fine atoms alternate point/gap: {v0}, (v0,v1), {v1}, ...
    struct Fine {
      Atom atom;
      std::vector<int> members;
    };
    std::vector<Fine> fine;
    auto membership = [&](const Rat& lo, const Rat& hi) {
      std::vector<int> m;
      for (const DEdge& e : h.edges()) {
        const Interval& iv = e.part(copy);
        if (iv.lo <= lo && hi <= iv.hi) m.push_back(e.id);
      }
      return m;
    };
    for (std::size_t t = 0; t < values.size(); ++t) {
      Fine f;
      f.atom = Atom{copy, values[t], values[t], true, true, true, values[t]};
      f.members = membership(values[t], values[t]);
      fine.push_back(std::move(f));
      if (t + 1 < values.size()) {
        Fine g;
        g.atom = Atom{copy, values[t], values[t + 1], false, false, false,
                      (values[t] + values[t + 1]) / 2};
        g.members = membership(values[t], values[t + 1]);
        fine.push_back(std::move(g));
      }
    }
    // Merge consecutive runs with identical membership into maximal atoms.
    std::size_t t = 0;
    while (t < fine.size()) {
      std::size_t u = t;
      while (u + 1 < fine.size() && fine[u + 1].members == fine[t].members) ++u;
      Atom merged = fine[t].atom;
      if (u > t) {
        merged.hi = fine[u].atom.hi;
        merged.closed_left = fine[t].atom.point;  // run starts at a value point
        merged.closed_right = fine[u].atom.point;
        merged.point = false;
        merged.representative = (merged.lo + merged.hi) / 2;
      }
      int vid = static_cast<int>(out.atoms.size());
      out.atoms.push_back(merged);
      for (int e : fine[t].members) out.hyper.edges[static_cast<std::size_t>(e)].push_back(vid);
      out.hyper.part_of.push_back(copy);
      t = u + 1;
    }
  }
  out.hyper.vertex_count = static_cast<int>(out.atoms.size());
  for (auto& e : out.hyper.edges) std::sort(e.begin(), e.end());
  out.hyper.validate();
  return out;
}

}  // namespace dihg

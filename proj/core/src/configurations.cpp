#include "dihg/configurations.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "dihg/predicates.hpp"

namespace dihg {

namespace {

// Number of configurations of `cuts` weakly increasing cut marks over
// `npos` symbolic positions (odd positions admit 2 equality choices per
// repeat), clamped at `cap`.
long count_configurations(int npos, int cuts, long cap) {
  if (cuts == 0) return 1;
  std::vector<long> f(static_cast<std::size_t>(npos), 1);  // one cut
  for (int t = 2; t <= cuts; ++t) {
    std::vector<long> g(static_cast<std::size_t>(npos), 0);
    long below = 0;
    for (int p = 0; p < npos; ++p) {
      long same = f[static_cast<std::size_t>(p)] * (p % 2 == 1 ? 2 : 1);
      g[static_cast<std::size_t>(p)] = std::min(cap + 1, below + same);
      below = std::min(cap + 1, below + f[static_cast<std::size_t>(p)]);
    }
    f = std::move(g);
  }
  long total = 0;
  for (long v : f) total = std::min(cap + 1, total + v);
  return total;
}

std::vector<Rat> representative_cuts(const std::vector<Rat>& values, const std::vector<int>& position,
                                     const std::vector<bool>& equal_prev) {
  std::vector<Rat> cuts(position.size());
  std::size_t t = 0;
  while (t < position.size()) {
    std::size_t end = t + 1;
    while (end < position.size() && position[end] == position[t]) ++end;
    int p = position[t];
    if (p % 2 == 0) {
      for (std::size_t s = t; s < end; ++s) cuts[s] = values[static_cast<std::size_t>(p / 2)];
    } else {
      int groups = 1;
      for (std::size_t s = t + 1; s < end; ++s)
        if (!equal_prev[s]) ++groups;
      const Rat& u = values[static_cast<std::size_t>((p - 1) / 2)];
      const Rat& v = values[static_cast<std::size_t>((p + 1) / 2)];
      int g = 1;
      for (std::size_t s = t; s < end; ++s) {
        if (s > t && !equal_prev[s]) ++g;
        cuts[s] = u + (v - u) * Rat(g) / Rat(groups + 1);
      }
    }
    t = end;
  }
  return cuts;
}

CellBounds cell_from_cuts(const std::vector<Rat>& cuts, int n, int j) {
  CellBounds b;
  b.lo = (j == 1) ? Rat(0) : cuts[static_cast<std::size_t>(j - 2)];
  b.hi = (j == n) ? Rat(1) : cuts[static_cast<std::size_t>(j - 1)];
  b.closed_left = (j == 1);
  b.closed_right = (j == n);
  return b;
}

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("partition arity n must be at least 1");
}

}  // namespace

std::vector<CopyConfiguration> enumerate_configurations(const DIntervalHypergraph& h, int n,
                                                        int copy, const SearchLimits& limits) {
  require_n(n);
  std::vector<Rat> values = critical_values(h, copy);
  const int npos = 2 * static_cast<int>(values.size()) - 1;
  const int cuts = n - 1;
  if (count_configurations(npos, cuts, limits.combo_budget) > limits.combo_budget)
    throw ScaleGuardError("single-copy configuration space exceeds the combination budget");

  std::vector<CopyConfiguration> out;
  std::vector<int> pos(static_cast<std::size_t>(cuts));
  std::vector<bool> eq(static_cast<std::size_t>(cuts), false);
  auto emit = [&] {
    CopyConfiguration c;
    c.copy = copy;
    c.position = pos;
    c.equal_prev = eq;
    c.cuts = representative_cuts(values, pos, eq);
    out.push_back(std::move(c));
  };
  auto rec = [&](auto&& self, int t, int minpos) -> void {
    if (t == cuts) {
      emit();
      return;
    }
    for (int p = minpos; p < npos; ++p) {
      pos[static_cast<std::size_t>(t)] = p;
      bool repeat = t > 0 && pos[static_cast<std::size_t>(t - 1)] == p;
      if (repeat && p % 2 == 1) {
        eq[static_cast<std::size_t>(t)] = false;
        self(self, t + 1, p);
        eq[static_cast<std::size_t>(t)] = true;
        self(self, t + 1, p);
      } else {
        eq[static_cast<std::size_t>(t)] = repeat;  // same critical value forces equality
        self(self, t + 1, p);
      }
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<BitSet> configuration_table(const DIntervalHypergraph& h, const CopyConfiguration& conf,
                                        int n, PredicateMode mode) {
  require_n(n);
  std::vector<BitSet> rows(static_cast<std::size_t>(n), BitSet(h.edge_count()));
  for (int j = 1; j <= n; ++j) {
    CellBounds b = cell_from_cuts(conf.cuts, n, j);
    for (const DEdge& e : h.edges()) {
      const Interval& iv = e.part(conf.copy);
      bool ok = mode == PredicateMode::Contains ? interval_in_cell(iv, b) : cell_in_interval(b, iv);
      if (ok) rows[static_cast<std::size_t>(j - 1)].set(e.id);
    }
  }
  return rows;
}

PremiseResult premise_check(const DIntervalHypergraph& h, int n, PredicateMode mode,
                            const SearchLimits& limits) {
  require_n(n);
  const int d = h.d();
  struct Entry {
    BitSet any_cell;  // edges satisfying the predicate in some cell
    std::vector<Rat> cuts;
  };
  std::vector<std::vector<Entry>> per_copy(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    std::map<BitSet, bool> seen;
    for (CopyConfiguration& conf : enumerate_configurations(h, n, i, limits)) {
      BitSet u(h.edge_count());
      for (const BitSet& row : configuration_table(h, conf, n, mode)) u |= row;
      if (seen.emplace(u, true).second)
        per_copy[static_cast<std::size_t>(i - 1)].push_back({std::move(u), std::move(conf.cuts)});
    }
  }
  long combos = 1;
  for (const auto& v : per_copy) {
    combos *= static_cast<long>(v.size());
    if (combos > limits.combo_budget)
      throw ScaleGuardError("configuration combinations exceed the combination budget");
  }

  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(d));
  BitSet full(h.edge_count());
  full.fill();
  // True when every downstream combination keeps a common edge; on failure
  // `rows` holds the representative cuts of a failing combination.
  auto rec = [&](auto&& self, int i, const BitSet& running) -> bool {
    if (running.none()) {
      for (int k = i; k < d; ++k)
        rows[static_cast<std::size_t>(k)] = per_copy[static_cast<std::size_t>(k)].front().cuts;
      return false;
    }
    if (i == d) return true;
    for (const Entry& ent : per_copy[static_cast<std::size_t>(i)]) {
      BitSet inter = running;
      inter &= ent.any_cell;
      rows[static_cast<std::size_t>(i)] = ent.cuts;
      if (!self(self, i + 1, inter)) return false;
    }
    return true;
  };
  PremiseResult res;
  if (rec(rec, 0, full)) {
    res.holds = true;
  } else {
    res.counterexample = CutSystem::create(d, n, rows);
  }
  return res;
}

namespace {

// ---- ContainedIn oracle ----------------------------------------------------

struct PatternEntry {
  std::vector<std::uint64_t> pattern;  // per edge: bit j-1 = predicate holds in cell j
  std::vector<Rat> cuts;
};

long checked_combo_count(const std::vector<std::vector<PatternEntry>>& per_copy, long cap) {
  long combos = 1;
  for (const auto& v : per_copy) {
    combos *= static_cast<long>(v.size());
    if (combos > cap)
      throw ScaleGuardError("configuration combinations exceed the combination budget");
  }
  return combos;
}

std::optional<PartitionCertificate> search_contained_in(const DIntervalHypergraph& h, int n,
                                                        bool minimize_h0,
                                                        const SearchLimits& limits) {
  const int d = h.d();
  const int m = h.edge_count();
  if (n > 63) throw ScaleGuardError("exhaustive search supports at most 63 cells per copy");
  std::vector<std::vector<PatternEntry>> per_copy(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    std::map<std::vector<std::uint64_t>, bool> seen;
    for (CopyConfiguration& conf : enumerate_configurations(h, n, i, limits)) {
      auto rows = configuration_table(h, conf, n, PredicateMode::ContainedIn);
      bool all_witnessed = true;
      for (const BitSet& row : rows) all_witnessed = all_witnessed && row.any();
      if (!all_witnessed) continue;
      std::vector<std::uint64_t> pat(static_cast<std::size_t>(m), 0);
      for (int j = 0; j < n; ++j)
        for (int e = rows[static_cast<std::size_t>(j)].first(); e >= 0;
             e = rows[static_cast<std::size_t>(j)].next(e + 1))
          pat[static_cast<std::size_t>(e)] |= std::uint64_t{1} << j;
      if (seen.emplace(pat, true).second)
        per_copy[static_cast<std::size_t>(i - 1)].push_back({std::move(pat), std::move(conf.cuts)});
    }
    if (per_copy[static_cast<std::size_t>(i - 1)].empty()) return std::nullopt;
  }
  checked_combo_count(per_copy, limits.combo_budget);

  std::vector<std::size_t> best_idx(static_cast<std::size_t>(d), 0);
  int best = std::numeric_limits<int>::max();

  if (!minimize_h0) {
    best = 0;  // any surviving combination works; take the first
  } else {
    const int bits = d * n;
    if (bits > 20)
      throw ScaleGuardError("exact witness-set minimization supports at most 20 cells total");
    const std::uint32_t space = std::uint32_t{1} << bits;
    std::vector<std::uint32_t> stamp(space, 0);
    std::vector<int> f(space);
    std::vector<std::uint32_t> masks;
    std::vector<std::vector<std::uint32_t>> by_bit(static_cast<std::size_t>(bits));
    std::uint32_t tick = 0;

    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    while (true) {
      // Distinct nonzero coverage masks of this combination.
      ++tick;
      masks.clear();
      for (auto& v : by_bit) v.clear();
      for (int e = 0; e < m; ++e) {
        std::uint32_t mask = 0;
        for (int i = 0; i < d; ++i)
          mask |= static_cast<std::uint32_t>(
                      per_copy[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]
                          .pattern[static_cast<std::size_t>(e)])
                  << (i * n);
        if (mask == 0 || stamp[mask] == tick) continue;
        stamp[mask] = tick;
        masks.push_back(mask);
      }
      for (std::uint32_t mk : masks)
        for (int b = 0; b < bits; ++b)
          if (mk >> b & 1) by_bit[static_cast<std::size_t>(b)].push_back(mk);
      // Fewest masks covering all cells.
      f[0] = 0;
      for (std::uint32_t s = 1; s < space; ++s) {
        int b = std::countr_zero(s);
        int v = std::numeric_limits<int>::max() - 1;
        for (std::uint32_t mk : by_bit[static_cast<std::size_t>(b)]) v = std::min(v, f[s & ~mk] + 1);
        f[s] = v;
      }
      if (f[space - 1] < best) {
        best = f[space - 1];
        best_idx = idx;
        if (best == 1) break;
      }
      // Odometer, last copy fastest.
      int i = d - 1;
      while (i >= 0 && ++idx[static_cast<std::size_t>(i)] ==
                           per_copy[static_cast<std::size_t>(i)].size()) {
        idx[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }

  // Rebuild the winning combination into a certificate.
  PartitionCertificate cert;
  cert.mode = PredicateMode::ContainedIn;
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    rows[static_cast<std::size_t>(i)] =
        per_copy[static_cast<std::size_t>(i)][best_idx[static_cast<std::size_t>(i)]].cuts;
  cert.cuts = CutSystem::create(d, n, rows);
  cert.cell_edges.assign(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(n), -1));

  if (minimize_h0) {
    // Re-run the subset cover on the winning combination, tracking choices.
    const int bits = d * n;
    const std::uint32_t space = std::uint32_t{1} << bits;
    std::vector<std::uint32_t> mask_of(static_cast<std::size_t>(m), 0);
    std::map<std::uint32_t, int> edge_of;  // mask -> lowest edge id
    for (int e = 0; e < m; ++e) {
      std::uint32_t mask = 0;
      for (int i = 0; i < d; ++i)
        mask |= static_cast<std::uint32_t>(
                    per_copy[static_cast<std::size_t>(i)][best_idx[static_cast<std::size_t>(i)]]
                        .pattern[static_cast<std::size_t>(e)])
                << (i * n);
      mask_of[static_cast<std::size_t>(e)] = mask;
      if (mask != 0) edge_of.emplace(mask, e);
    }
    std::vector<int> f(space, std::numeric_limits<int>::max() - 1);
    std::vector<std::uint32_t> choice(space, 0);
    f[0] = 0;
    for (std::uint32_t s = 1; s < space; ++s)
      for (const auto& [mk, e] : edge_of) {
        if (!(mk & s)) continue;
        if (f[s & ~mk] + 1 < f[static_cast<std::size_t>(s)]) {
          f[static_cast<std::size_t>(s)] = f[s & ~mk] + 1;
          choice[static_cast<std::size_t>(s)] = mk;
        }
      }
    for (std::uint32_t s = space - 1; s != 0;) {
      std::uint32_t mk = choice[s];
      cert.used_edges.push_back(edge_of.at(mk));
      s &= ~mk;
    }
    std::sort(cert.used_edges.begin(), cert.used_edges.end());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j)
        for (int e : cert.used_edges)
          if (mask_of[static_cast<std::size_t>(e)] >> (i * n + j) & 1) {
            cert.cell_edges[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
            break;
          }
  } else {
    for (int i = 0; i < d; ++i) {
      const auto& pat =
          per_copy[static_cast<std::size_t>(i)][best_idx[static_cast<std::size_t>(i)]].pattern;
      for (int j = 0; j < n; ++j)
        for (int e = 0; e < m; ++e)
          if (pat[static_cast<std::size_t>(e)] >> j & 1) {
            cert.cell_edges[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
            break;
          }
    }
    for (const auto& row : cert.cell_edges)
      for (int e : row) cert.used_edges.push_back(e);
    std::sort(cert.used_edges.begin(), cert.used_edges.end());
    cert.used_edges.erase(std::unique(cert.used_edges.begin(), cert.used_edges.end()),
                          cert.used_edges.end());
  }
  return cert;
}

// ---- Contains oracle --------------------------------------------------------

struct RowsEntry {
  std::vector<BitSet> rows;  // per cell: edges strictly inside it
  std::vector<Rat> cuts;
};

struct MatchSearch {
  int d = 1, n = 1;
  long block = 1;  // n^(d-1)
  std::uint64_t witnessed = 0;
  const std::vector<DCellIndex>* coords = nullptr;
  int best = 0;
  std::vector<long> current, best_cells;
  std::vector<std::uint32_t> used;  // per copy, cell bitmask

  void run() {
    best = 0;
    current.clear();
    best_cells.clear();
    used.assign(static_cast<std::size_t>(d), 0);
    rec(1);
  }

  void rec(int j1) {
    if (static_cast<int>(current.size()) > best) {
      best = static_cast<int>(current.size());
      best_cells = current;
    }
    if (best == n || j1 > n) return;
    if (static_cast<int>(current.size()) + (n - j1 + 1) <= best) return;
    // Use cell j1 of copy 1 in some witnessed d-cell.
    for (long flat = (j1 - 1) * block; flat < j1 * block; ++flat) {
      if (!(witnessed >> flat & 1)) continue;
      const DCellIndex& jv = (*coords)[static_cast<std::size_t>(flat)];
      bool free = true;
      for (int i = 1; i < d && free; ++i)
        free = !(used[static_cast<std::size_t>(i)] >> (jv.j[static_cast<std::size_t>(i)] - 1) & 1);
      if (!free) continue;
      for (int i = 1; i < d; ++i)
        used[static_cast<std::size_t>(i)] |= std::uint32_t{1} << (jv.j[static_cast<std::size_t>(i)] - 1);
      current.push_back(flat);
      rec(j1 + 1);
      current.pop_back();
      for (int i = 1; i < d; ++i)
        used[static_cast<std::size_t>(i)] &=
            ~(std::uint32_t{1} << (jv.j[static_cast<std::size_t>(i)] - 1));
      if (best == n) return;
    }
    rec(j1 + 1);  // leave copy-1 cell j1 unused
  }
};

std::optional<PartitionCertificate> search_contains(const DIntervalHypergraph& h, int n,
                                                    const SearchLimits& limits) {
  const int d = h.d();
  const long cells = dcell_count(d, n);
  if (cells > 64) throw ScaleGuardError("exhaustive search supports at most 64 d-cells");

  std::vector<std::vector<RowsEntry>> per_copy(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    std::map<std::vector<BitSet>, bool> seen;
    for (CopyConfiguration& conf : enumerate_configurations(h, n, i, limits)) {
      auto rows = configuration_table(h, conf, n, PredicateMode::Contains);
      if (seen.emplace(rows, true).second)
        per_copy[static_cast<std::size_t>(i - 1)].push_back({std::move(rows), std::move(conf.cuts)});
    }
  }
  {
    long combos = 1;
    for (const auto& v : per_copy) {
      combos *= static_cast<long>(v.size());
      if (combos > limits.combo_budget)
        throw ScaleGuardError("configuration combinations exceed the combination budget");
    }
  }

  std::vector<DCellIndex> coords(static_cast<std::size_t>(cells));
  for (long f = 0; f < cells; ++f) coords[static_cast<std::size_t>(f)] = dcell_from_flat(f, d, n);

  MatchSearch match;
  match.d = d;
  match.n = n;
  match.block = cells / n;
  match.coords = &coords;

  // Prefix intersections, one buffer per level; buffers[i] holds n^i sets.
  std::vector<std::vector<BitSet>> buffers(static_cast<std::size_t>(d) + 1);
  long width = 1;
  for (int i = 0; i <= d; ++i) {
    buffers[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(width), BitSet(h.edge_count()));
    if (i < d) width *= n;
  }
  buffers[0][0].fill();

  int best = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0), best_idx;
  auto witnessed_mask = [&](const std::vector<BitSet>& prefix, const RowsEntry& last) {
    std::uint64_t w = 0;
    for (long p = 0; p < match.block; ++p) {
      const BitSet& pre = prefix[static_cast<std::size_t>(p)];
      if (pre.none()) continue;
      for (int j = 0; j < n; ++j)
        if (pre.intersects(last.rows[static_cast<std::size_t>(j)])) w |= std::uint64_t{1} << (p * n + j);
    }
    return w;
  };
  auto rec = [&](auto&& self, int i) -> bool {  // true = stop (optimum n reached)
    if (i == d - 1) {
      const auto& prefix = buffers[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < per_copy[static_cast<std::size_t>(i)].size(); ++k) {
        idx[static_cast<std::size_t>(i)] = k;
        match.witnessed = witnessed_mask(prefix, per_copy[static_cast<std::size_t>(i)][k]);
        if (match.witnessed == 0) continue;
        match.run();
        if (match.best > best) {
          best = match.best;
          best_idx = idx;
          if (best == n) return true;
        }
      }
      return false;
    }
    for (std::size_t k = 0; k < per_copy[static_cast<std::size_t>(i)].size(); ++k) {
      idx[static_cast<std::size_t>(i)] = k;
      const auto& rows = per_copy[static_cast<std::size_t>(i)][k].rows;
      bool alive = false;
      long prefixes = 1;
      for (int t = 0; t < i; ++t) prefixes *= n;
      for (long p = 0; p < prefixes; ++p)
        for (int j = 0; j < n; ++j) {
          BitSet& target = buffers[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(p * n + j)];
          target = buffers[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
          target &= rows[static_cast<std::size_t>(j)];
          alive = alive || target.any();
        }
      if (!alive) continue;
      if (self(self, i + 1)) return true;
    }
    return false;
  };

  rec(rec, 0);
  if (best == 0) return std::nullopt;

  // Rebuild the winning combination.
  PartitionCertificate cert;
  cert.mode = PredicateMode::Contains;
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    rows[static_cast<std::size_t>(i)] =
        per_copy[static_cast<std::size_t>(i)][best_idx[static_cast<std::size_t>(i)]].cuts;
  cert.cuts = CutSystem::create(d, n, rows);
  for (int i = 0; i < d - 1; ++i) {
    long prefixes = 1;
    for (int t = 0; t < i; ++t) prefixes *= n;
    const auto& rws = per_copy[static_cast<std::size_t>(i)][best_idx[static_cast<std::size_t>(i)]].rows;
    for (long p = 0; p < prefixes; ++p)
      for (int j = 0; j < n; ++j) {
        BitSet& target = buffers[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(p * n + j)];
        target = buffers[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
        target &= rws[static_cast<std::size_t>(j)];
      }
  }
  const auto& last = per_copy[static_cast<std::size_t>(d - 1)][best_idx[static_cast<std::size_t>(d - 1)]];
  match.witnessed = witnessed_mask(buffers[static_cast<std::size_t>(d - 1)], last);
  match.run();
  for (long flat : match.best_cells) {
    BitSet inter = buffers[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(flat / n)];
    inter &= last.rows[static_cast<std::size_t>(flat % n)];
    int e = inter.first();
    cert.dcell_witness.emplace_back(coords[static_cast<std::size_t>(flat)], e);
    cert.used_edges.push_back(e);
  }
  std::sort(cert.used_edges.begin(), cert.used_edges.end());
  cert.used_edges.erase(std::unique(cert.used_edges.begin(), cert.used_edges.end()),
                        cert.used_edges.end());
  return cert;
}

}  // namespace

std::optional<PartitionCertificate> exhaustive_partition_search(const DIntervalHypergraph& h, int n,
                                                                PredicateMode mode, bool minimize_h0,
                                                                const SearchLimits& limits) {
  require_n(n);
  if (mode == PredicateMode::ContainedIn) return search_contained_in(h, n, minimize_h0, limits);
  return search_contains(h, n, limits);
}

}  // namespace dihg

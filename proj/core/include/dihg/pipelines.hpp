#pragma once

#include <utility>
#include <vector>

#include "dihg/balance.hpp"
#include "dihg/configurations.hpp"
#include "dihg/geometry.hpp"
#include "dihg/partition.hpp"

namespace dihg {

enum class CertificateKind { Matching, Cover };

// How the certificate was obtained. Numeric: balanced point + rounding went
// through directly. Exactified: the rounded selection was re-anchored on an
// exactly feasible partition. Oracle: the exhaustive configuration search
// produced it (always exact; used as fallback and cross-check).
enum class PipelinePath { Numeric, Exactified, Oracle };

struct CoverCertificate {
  CertificateKind kind = CertificateKind::Cover;
  PipelinePath path = PipelinePath::Numeric;
  bool pfm_branch = false;  // 3-partite perfect-fractional-matching rounding used
  CutSystem partition;
  // Matching: pairwise disjoint d-cells, each strictly containing its edge.
  // Cover (numeric paths): d-cells contained in their edges, jointly hitting
  // every cell; may be empty on the oracle path.
  std::vector<std::pair<DCellIndex, int>> chosen;
  // Cover only: witness edge per (copy-1, cell-1); every cell is contained
  // in its witness edge.
  std::vector<std::vector<int>> cell_edges;
  std::vector<int> h0;  // sorted distinct witness edge ids
  // Inclusive claimed bound: |chosen| >= bound for matchings,
  // |h0| <= bound for covers.
  Rat bound_claimed;
};

// Balanced point on the containment-slack array, auxiliary hypergraph,
// exact maximum matching, exact re-verification. Yields at least
// ceil(n/(d-1)) pairwise disjoint d-cells containing edges (n for d = 1).
// Falls back to the exhaustive oracle when the numeric stage fails. Throws
// std::invalid_argument when the premise fails.
CoverCertificate matching_pipeline(const DIntervalHypergraph& h, int n,
                                   const SearchParams& params = {});

// Epsilon loop on the containment arrays, auxiliary hypergraph, rounding
// (d=2: exact bipartite edge cover; d=3 with a perfect fractional matching:
// three-step cover; otherwise greedy), exact re-verification. |h0| <= n for
// d <= 2, <= floor((1+ln d) n) otherwise, < 7n/4 on the 3-partite branch.
// Falls back to the exhaustive minimizing oracle. Throws
// std::invalid_argument when the premise fails.
CoverCertificate cover_pipeline(const DIntervalHypergraph& h, int n,
                                const SearchParams& params = {});

// Exact re-verification of every claim a certificate makes (predicates at
// the partition, disjointness or full cell coverage, h0 consistency, claimed
// bound, and for covers that h0's edges cover the whole vertex set).
bool verify_certificate(const DIntervalHypergraph& h, int n, const CoverCertificate& cert);

}  // namespace dihg

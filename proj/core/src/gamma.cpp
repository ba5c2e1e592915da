#include "dihg/gamma.hpp"

#include <stdexcept>

namespace dihg {

GammaResult build_gamma(const ProductPoint& x, const DIntervalHypergraph& h, int n,
                        PredicateMode mode, const Rat& epsilon, const Rat& tol) {
  LayerArray arr = mode_array(x, h, mode, epsilon);
  LayerSums sums = layer_sums(arr);
  if (sums.spread() > tol)
    throw std::invalid_argument("layer sums are not balanced within the given tolerance");
  Rat total = sums.total();
  if (total == 0) throw std::invalid_argument("margin array is identically zero");

  GammaResult out;
  out.common_value = total / n;
  const int d = arr.d;
  out.gamma.vertex_count = d * n;
  out.gamma.part_of.resize(static_cast<std::size_t>(d * n));
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= n; ++j)
      out.gamma.part_of[static_cast<std::size_t>((i - 1) * n + (j - 1))] = i;
  const long cells = static_cast<long>(arr.entries.size());
  for (long f = 0; f < cells; ++f) {
    const Rat& entry = arr.entries[static_cast<std::size_t>(f)];
    if (entry <= 0) continue;
    DCellIndex jv = dcell_from_flat(f, d, n);
    std::vector<int> verts(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i)
      verts[static_cast<std::size_t>(i - 1)] = (i - 1) * n + jv.j[static_cast<std::size_t>(i - 1)] - 1;
    out.gamma.edges.push_back(std::move(verts));
    out.gamma.weights.push_back(entry / out.common_value);
    out.flat_of_edge.push_back(f);
  }
  return out;
}

}  // namespace dihg

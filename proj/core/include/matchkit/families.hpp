#ifndef MATCHKIT_FAMILIES_HPP
#define MATCHKIT_FAMILIES_HPP

#include "matchkit/graph.hpp"

namespace matchkit {

/// The two extremal families showing the equivalence thresholds are sharp.
struct FamilySpec {
  enum class Family { G, H };
  Family family;
  int k;
};

/// (K_{2k−1} ∪ K_1) ∨ (K_{2k−1} ∪ K_1) on 4k vertices.
/// Layout: side-1 clique [0, 2k−2], side-1 singleton 2k−1,
/// side-2 clique [2k, 4k−2], side-2 singleton 4k−1.
Graph family_G(int k);

/// I_{k+2} ∨ (K_{k+3} ∪ K_{2k}) on 4k+5 vertices.
/// Layout: independent part [0, k+1], K_{k+3} part [k+2, 2k+4],
/// K_{2k} part [2k+5, 4k+4].
Graph family_H(int k);

/// The deletion set certifying non-factor-criticality:
/// family G → all 2k vertices of side 1; family H → the whole independent
/// part, the first k−2 vertices of the K_{k+3} part, and the first vertex of
/// the K_{2k} part (|S| = 2k+1).
VertexSet tightness_witness(FamilySpec spec);

}  // namespace matchkit

#endif

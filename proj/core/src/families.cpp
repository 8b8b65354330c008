#include "matchkit/families.hpp"

namespace matchkit {

namespace {

void check_family_param(FamilySpec spec) {
  int k = spec.k;
  bool ok = k >= 2 && (spec.family == FamilySpec::Family::G
                           ? 4 * k <= kMaxVertices
                           : 4 * k + 5 <= kMaxVertices);
  if (!ok)
    throw std::out_of_range("family parameter k=" + std::to_string(k) +
                            " is out of range (k >= 2, within 64 vertices)");
}

}  // namespace

Graph family_G(int k) {
  check_family_param({FamilySpec::Family::G, k});
  Graph side = disjoint_union(Graph::complete(2 * k - 1), Graph::complete(1));
  return join(side, side);
}

Graph family_H(int k) {
  check_family_param({FamilySpec::Family::H, k});
  return join(Graph::edgeless(k + 2),
              disjoint_union(Graph::complete(k + 3), Graph::complete(2 * k)));
}

VertexSet tightness_witness(FamilySpec spec) {
  check_family_param(spec);
  int k = spec.k;
  if (spec.family == FamilySpec::Family::G)
    return VertexSet::range(0, 2 * k);
  VertexSet s = VertexSet::range(0, k + 2);        // independent part
  for (int i = 0; i < k - 2; ++i) s.add(k + 2 + i);  // into K_{k+3}
  s.add(2 * k + 5);                                // one vertex of K_{2k}
  return s;
}

}  // namespace matchkit

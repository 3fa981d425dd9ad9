#pragma once

#include <vector>

#include "coxcone/types.hpp"

// Generalized Cartan matrices over Q: validation, the induced Coxeter matrix,
// connected components, the finite/affine/indefinite trichotomy and the
// derived subset operators.

namespace coxcone {

// Coxeter matrix entry encoding an unbounded order
inline constexpr int cox_m_infinity = 0;

struct GCM {
  Index n = 0;
  QMat a;
  Matrix<int> m;               // m(i,i) = 1; cox_m_infinity for a_ij a_ji >= 4
  std::vector<IndexSet> adj;   // off-diagonal adjacency masks
};

enum class TypeLabel { Fin, Aff, Ind };

// Checks the GCM axioms and derives the Coxeter matrix. Products a_ij a_ji
// in (0,4) that are not 0,1,2,3 have no rational 4cos^2(pi/m) and are
// rejected rather than approximated.
GCM validate(const QMat& a);

std::vector<IndexSet> components(const GCM& g, IndexSet j);

struct Classification {
  std::vector<IndexSet> comps;
  std::vector<TypeLabel> labels;  // parallel to comps
  IndexSet fin = 0;               // union of the finite type components
  IndexSet aff = 0;
  IndexSet ind = 0;
  IndexSet nonfin = 0;            // aff | ind
};

// Vinberg trichotomy per component: Fin iff some u > 0 has A u > 0, Aff iff
// some u > 0 has A u = 0, Ind iff some u > 0 has A u < 0.
TypeLabel classify_connected(const GCM& g, IndexSet j);
Classification classify(const GCM& g, IndexSet j);

// { i : a_ij = 0 for all j in J }
IndexSet perp(const GCM& g, IndexSet j);

bool is_special(const GCM& g, IndexSet j);

// disjoint and mutually non-adjacent
bool separated(const GCM& g, IndexSet j, IndexSet k);

enum class HypClass { hyp0, hyp1, neither };

// For connected indefinite J: hyp0 when every single-vertex deletion leaves
// only Fin/Aff components, hyp1 when every two-vertex deletion does but some
// single deletion does not.
HypClass hyperbolic_class(const GCM& g, IndexSet j);

}  // namespace coxcone

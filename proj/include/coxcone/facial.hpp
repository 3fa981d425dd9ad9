#pragma once

#include <utility>
#include <vector>

#include "coxcone/realization.hpp"

// Facial subsets of the index set of a root base: the J whose chamber face
// { lambda : lambda(h_j) = 0 for j in J, lambda(h_i) >= 0 for i outside }
// meets the set where exactly the J-coordinates vanish. Everything here is
// decided through the relation space L_h alone: decision procedure, the
// sign-vector arrangement, enumeration, closure and the lattice operations.

namespace coxcone {

// Orders subsets as sorted element tuples: smaller size first, then
// lexicographic on the elements, so {1,4} comes before {2,3}.
inline bool subset_less(IndexSet a, IndexSet b) {
  int pa = set_size(a), pb = set_size(b);
  if (pa != pb) return pa < pb;
  IndexSet d = a ^ b;
  if (!d) return false;
  IndexSet low = d & (~d + 1);  // smallest element the two sets disagree on
  return a & low;
}

// Sign pattern of a vector in the relation space of the h_i.
struct SignVector {
  std::vector<int> sign;  // one entry per index, each -1, 0 or 1

  IndexSet plus() const {
    IndexSet s = 0;
    for (size_t i = 0; i < sign.size(); ++i)
      if (sign[i] > 0) s |= IndexSet(1) << i;
    return s;
  }
  IndexSet minus() const {
    IndexSet s = 0;
    for (size_t i = 0; i < sign.size(); ++i)
      if (sign[i] < 0) s |= IndexSet(1) << i;
    return s;
  }
  bool operator==(const SignVector& o) const { return sign == o.sign; }
  bool operator<(const SignVector& o) const { return sign < o.sign; }
};

struct FacialFamily {
  RootBase rb;
  std::vector<IndexSet> all_facial;      // sorted by subset_less
  std::vector<IndexSet> special_facial;  // the members J with J^infty = J

  bool is_member(IndexSet j) const;
  // smallest member containing l; the family is closed under intersection,
  // so intersecting all supersets lands in the family again
  IndexSet closure(IndexSet l) const;
};

// True iff no relation vector is nonnegative outside J with a strictly
// positive entry there. One exact feasibility check per index outside J.
bool is_facial(const RootBase& rb, IndexSet j);

// All sign patterns of nonzero relation vectors: the faces of the
// arrangement the n coordinate hyperplanes cut out of the relation space,
// sorted. Relation spaces of dimension > 4 are rejected.
std::vector<SignVector> sign_vectors(const RootBase& rb);

// Scans the special subsets (those without finite components) and fills in
// the rest from "J facial iff the nonfinite part of J is facial".
FacialFamily enumerate_facial(const RootBase& rb);

// Smallest facial superset of l, computed without the family: grow l by the
// positive support of relation-vector witnesses until none is left.
IndexSet facial_closure(const RootBase& rb, IndexSet l);

// Meet is intersection, join is the closure of the union. Both arguments
// must be facial.
std::pair<IndexSet, IndexSet> facial_meet_join(const RootBase& rb, IndexSet j1, IndexSet j2);

// For special theta: the union of the affine components of theta and of the
// indices with no edge into theta. Facial for every root base of the matrix,
// and contains every finite and affine component of the full index set.
IndexSet aff_perp_face(const RootBase& rb, IndexSet theta);

}  // namespace coxcone

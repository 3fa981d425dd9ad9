#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcone/rational.hpp"

namespace coxcone {

template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <typename T>
using RowVector = Eigen::Matrix<T, 1, Eigen::Dynamic>;

using QMat = Matrix<Rat>;
using QVec = Vector<Rat>;
using QRow = RowVector<Rat>;
using Index = Eigen::Index;

// Subsets of the index set I = {0,...,n-1}, n <= 20 everywhere we enumerate.
using IndexSet = std::uint32_t;

inline bool contains(IndexSet s, int i) { return (s >> i) & 1u; }
inline IndexSet full_set(int n) {
  return n >= 32 ? ~IndexSet(0) : ((IndexSet(1) << n) - 1);
}
inline int set_size(IndexSet s) { return __builtin_popcount(s); }

inline std::vector<int> set_elements(IndexSet s) {
  std::vector<int> out;
  for (IndexSet t = s; t; t &= t - 1) out.push_back(__builtin_ctz(t));
  return out;
}

inline IndexSet set_of(const std::vector<int>& elems) {
  IndexSet s = 0;
  for (int i : elems) s |= IndexSet(1) << i;
  return s;
}

}  // namespace coxcone

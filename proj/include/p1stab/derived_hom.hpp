#pragma once

#include <cstdint>

#include "p1stab/objects.hpp"

namespace p1stab {

/// dim Hom(X, Y[t]) in D(P^1), additive in both arguments over direct
/// sums; shifts are absorbed via Hom(A[p], B[q][t]) = Hom(A, B[t+q-p]).
/// Sheaf-level dimensions (nonzero only for t in {0, 1}):
///   Hom(O(a), O(b))   = max(b-a+1, 0)     Ext1 = max(a-b-1, 0)
///   Hom(O(a), T(x,l)) = l                 Ext1 = 0
///   Hom(T(x,l), O(a)) = 0                 Ext1 = l
///   Hom(T(x,l), T(y,m)) = Ext1 = [x==y] * min(l, m)
std::int64_t hom_dim(const Indecomposable& a, const Indecomposable& b, std::int64_t t);
std::int64_t hom_dim(const DecomposedObject& x, const DecomposedObject& y, std::int64_t t);

}  // namespace p1stab

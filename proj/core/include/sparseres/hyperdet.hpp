#pragma once

#include <string>

#include <gmpxx.h>

#include <sparseres/multidim.hpp>

namespace sparseres
{

// 2*max(k_j) <= Σ k_j with k_j = dims_j - 1.
bool detExists(const Shape &shape);
// Equality in the existence condition (after dropping size-1 dimensions),
// with at least two nontrivial dimensions.
bool isBoundaryShape(const Shape &shape);
// Up to permutation: m×m×2, m×m×3 or 2×2×2×2 (size-1 dimensions ignored).
bool isSchlafliShape(const Shape &shape);

// Degree of the hyperdeterminant, 0 when it does not exist. Coefficient of
// z^k in (1 - Σ_{i>=2} (i-1) e_i(z))^{-2}.
mpz_class detDegree(const Shape &shape);

enum class DetMethod { Auto, Schlafli, Boundary, Discriminant };

DetMethod parseDetMethod(std::string_view name);
std::string detMethodName(DetMethod m);

// Largest entry count accepted by the generic discriminant method.
inline constexpr std::size_t kGenericDiscriminantMaxEntries = 8;

// Hyperdeterminant of M. Symbolic results of three or more dimensions are
// primitive with positive GrevLex leading coefficient; numeric boundary
// results are normalized so the unit tensor of the shape has determinant 1.
// Throws DetDoesNotExist, UnsupportedShape or NotBoundaryShape.
MultiPoly hyperdet(const MultidimMatrix &m, DetMethod method = DetMethod::Auto);

// The individual methods, without the final normalization.
MultiPoly schlafliDet(const MultidimMatrix &m);
MultiPoly boundaryDet(const MultidimMatrix &m);
MultiPoly discriminantDet(const MultidimMatrix &m);

// Square matrix of the boundary construction; its order is
// (k0+1)!/(k1!...kr!). Exposed for inspection and tests.
std::vector<std::vector<MultiPoly>> boundaryMatrix(const MultidimMatrix &m);

} // namespace sparseres

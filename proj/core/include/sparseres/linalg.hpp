#pragma once

#include <cstdint>
#include <vector>

#include <sparseres/poly.hpp>

namespace sparseres
{

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Determinant of a square matrix over a common ring. Numeric matrices over
// GF(p) use Gaussian elimination; everything else uses fraction-free
// Bareiss elimination with exact divisions.
MultiPoly determinant(const PolyMatrix &m);
MultiPoly bareissDeterminant(PolyMatrix m);

// Gaussian elimination over GF(p); entries must already be reduced.
std::uint64_t determinantModP(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

} // namespace sparseres

#pragma once

#include <memory>
#include <string>
#include <vector>

#include <sparseres/groebner.hpp>
#include <sparseres/supports.hpp>

namespace sparseres
{

/// Generic sparse discriminant of a support; coefficientNames[j] is the
/// coefficient of the monomial of column j.
struct DiscriminantOperator {
    SupportSet support;
    std::vector<std::string> coefficientNames;
    RingPtr coefficientRing;
    MultiPoly discriminantPoly;
    GroebnerStats stats;
};

using DiscriminantPtr = std::shared_ptr<const DiscriminantOperator>;

// Requires the columns of A to generate Z^n. Throws DualNotHypersurface when
// the elimination ideal is zero or not principal. Cached per (A, domain).
DiscriminantPtr buildSparseDiscriminant(const SupportSet &a,
                                        const CoefficientDomain &domain = CoefficientDomain::integers());

MultiPoly evaluateDiscriminant(const DiscriminantOperator &op, const MultiPoly &f,
                               const std::vector<std::string> &mainVars);

// Largest support accepted by denseDiscriminant.
inline constexpr std::size_t kDenseDiscriminantMaxSupport = 10;

DiscriminantPtr denseDiscriminant(std::size_t n, int d,
                                  const CoefficientDomain &domain = CoefficientDomain::integers());

// Discriminant of a binary form of degree d >= 2 in x0, x1, normalized as
// (-1)^{d(d-1)/2} Res(g, g') / a_d with g = f(x0, 1) and a_d the coefficient
// of x0^d. The result lives in the ring of the remaining variables.
MultiPoly binaryFormDiscriminant(const MultiPoly &f, std::string_view x0, std::string_view x1);

// The same normalization as a polynomial in a_0..a_d (a_i multiplies
// x0^i x1^{d-i}), over ZZ.
const MultiPoly &genericBinaryDiscriminant(int d);

// Discriminant of the dense ternary cubic in the coefficient names of
// denseDiscriminant(2, 3), normalized like the elimination result (primitive,
// positive leading coefficient) but computed from a closed determinant
// formula instead of elimination.
const MultiPoly &genericTernaryCubicDiscriminant();

} // namespace sparseres

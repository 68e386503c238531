#pragma once

#include <memory>
#include <string>
#include <vector>

#include <sparseres/groebner.hpp>
#include <sparseres/supports.hpp>

namespace sparseres
{

/// Generic sparse resultant for a fixed list of supports. The coefficient
/// of x^ω in the i-th generic polynomial is the indeterminate
/// coefficientNames[i][j], where ω is column j of supports[i].
struct ResultantOperator {
    std::vector<SupportSet> supports;
    std::vector<std::vector<std::string>> coefficientNames;
    RingPtr coefficientRing;
    // Over ZZ: primitive with positive GrevLex leading coefficient.
    // Over GF(p): monic.
    MultiPoly resultantPoly;
    GroebnerStats stats;
};

using ResultantPtr = std::shared_ptr<const ResultantOperator>;

// A single support is taken n+1 times. `domain` is ZZ (exact) or a prime
// field (modular mode). Results are cached per (supports, domain).
ResultantPtr buildSparseResultant(const std::vector<SupportSet> &supports, std::size_t n,
                                  const CoefficientDomain &domain = CoefficientDomain::integers());

// Substitutes the coefficients of polys[i] (polynomials in `mainVars`, with
// coefficients in the remaining variables). The result lives in the ring of
// those remaining variables. Throws SupportViolation for a monomial outside
// the i-th support.
MultiPoly evaluateResultant(const ResultantOperator &op, const std::vector<MultiPoly> &polys,
                            const std::vector<std::string> &mainVars);

// Infers the supports from the polynomials (one each, or their union when
// `unmixed`), builds the operator and evaluates it. Prime-field inputs build
// the operator over that field.
MultiPoly sparseResultantOf(const std::vector<MultiPoly> &polys, const std::vector<std::string> &mainVars,
                            bool unmixed = false);

ResultantPtr denseResultant(const std::vector<int> &degrees, std::size_t n,
                            const CoefficientDomain &domain = CoefficientDomain::integers());

// Determinant of the Sylvester matrix of f and g with respect to `var`.
MultiPoly sylvesterResultant(const MultiPoly &f, const MultiPoly &g, std::string_view var);

// Ideal of the projective toric variety of A in variables z_0..z_k.
Ideal toricIdeal(const SupportSet &a);
// Whether the linear forms (in k+1 variables, matched to z_0..z_k by
// position) have a common zero on the toric variety of A.
bool meetsToricVariety(const SupportSet &a, const std::vector<MultiPoly> &linearForms);

// Drops every cached operator.
void clearOperatorCache();

} // namespace sparseres

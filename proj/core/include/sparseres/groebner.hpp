#pragma once

#include <cstddef>
#include <vector>

#include <sparseres/poly.hpp>

namespace sparseres
{

/// Finite list of polynomial generators over a common ring. Zero generators
/// are dropped on construction; Laurent exponents are rejected.
class Ideal
{
public:
    Ideal(RingPtr ring, std::vector<MultiPoly> generators);

    const RingPtr &ring() const noexcept
    {
        return m_ring;
    }
    const std::vector<MultiPoly> &generators() const noexcept
    {
        return m_gens;
    }
    bool isZero() const noexcept
    {
        return m_gens.empty();
    }

private:
    RingPtr m_ring;
    std::vector<MultiPoly> m_gens;
};

struct GroebnerStats {
    std::size_t pairsConsidered = 0;
    std::size_t pairsSkipped = 0;
    std::size_t zeroReductions = 0;
    std::size_t reductionSteps = 0;
    std::size_t maxBasisSize = 0;
};

/// Reduced Gröbner basis of I under `order`.
///
/// Inputs over ZZ or QQ are processed fraction-free over ZZ; the returned
/// elements are primitive integer polynomials with a positive leading
/// coefficient (under `order`). Over GF(p) the elements are monic. The basis
/// is sorted by increasing leading monomial, and identical input yields an
/// identical basis. The zero ideal yields an empty basis.
std::vector<MultiPoly> groebnerBasis(const Ideal &ideal, TermOrder order, GroebnerStats *stats = nullptr);

// Generators of I ∩ k[vars k..n-1]: the basis elements of a BlockElim(k)
// basis that are free of the first k variables. The result stays in I's ring.
Ideal eliminateVars(const Ideal &ideal, std::size_t k, GroebnerStats *stats = nullptr);

// I : m^∞ via a fresh variable t and the generator t·m - 1.
Ideal saturateByMonomial(const Ideal &ideal, const MultiPoly &m);

// The single generator of a principal ideal, primitive with positive
// GrevLex-leading coefficient (monic over GF(p)). Throws NotPrincipal
// otherwise, including for the zero ideal.
MultiPoly principalGenerator(const Ideal &ideal);

// Remainder of p modulo a Gröbner basis under `order`; over ZZ/QQ it is
// determined up to a nonzero rational factor.
MultiPoly normalForm(const MultiPoly &p, const std::vector<MultiPoly> &basis, TermOrder order);

bool idealContains(const Ideal &ideal, const MultiPoly &p);

// Leading exponent of p under `order`.
ExponentVector leadingExponent(const MultiPoly &p, TermOrder order);

} // namespace sparseres

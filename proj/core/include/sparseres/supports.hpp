#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <sparseres/poly.hpp>

namespace sparseres
{

/// Finite set of exponent vectors in Z^n, stored as distinct columns sorted
/// ascending lexicographically.
class SupportSet
{
public:
    // Sorts and deduplicates the columns; each must have length `arity`.
    SupportSet(std::size_t arity, std::vector<ExponentVector> columns);

    std::size_t arity() const noexcept
    {
        return m_arity;
    }
    std::size_t size() const noexcept
    {
        return m_columns.size();
    }
    const std::vector<ExponentVector> &columns() const noexcept
    {
        return m_columns;
    }
    const ExponentVector &column(std::size_t i) const
    {
        return m_columns.at(i);
    }
    std::optional<std::size_t> indexOf(std::span<const Exponent> e) const;
    bool contains(std::span<const Exponent> e) const
    {
        return indexOf(e).has_value();
    }
    // Coordinate-wise minimum over the columns (the zero vector if empty).
    ExponentVector minCorner() const;

    friend bool operator==(const SupportSet &, const SupportSet &) = default;

private:
    std::size_t m_arity;
    std::vector<ExponentVector> m_columns;
};

// Union of the exponent vectors (restricted to `mainVars`, all ring
// variables when empty) carrying a nonzero coefficient in any input.
SupportSet exponentsMatrix(const std::vector<MultiPoly> &polys, const std::vector<std::string> &mainVars = {});

struct SupportReport {
    // Indices i whose differences ω - ω₀ do not span Q^n.
    std::vector<std::size_t> affineSpanFailures;
    // The union of all columns does not generate Z^n.
    bool latticeFailure = false;
    // Nonzero invariant factors of the matrix of all columns.
    std::vector<mpz_class> invariantFactors;

    bool ok() const noexcept
    {
        return affineSpanFailures.empty() && !latticeFailure;
    }
    std::string describe() const;
};

// Checks both hypotheses of the sparse resultant on a list of n+1 supports
// (a single support stands for n+1 copies). Throws InputError on arity or
// length mismatch.
SupportReport validateSupports(const std::vector<SupportSet> &supports, std::size_t n);
// Throws ValidationError with the report text unless validation passes.
void requireValidSupports(const std::vector<SupportSet> &supports, std::size_t n);

// All nonnegative vectors of coordinate sum at most d. Throws for d < 1.
SupportSet denseSupport(std::size_t n, int d);

// (A₀×{0}) ∪ (A₁×{e₁}) ∪ ... ∪ (Aₙ×{eₙ}) in Z^{2n}.
SupportSet cayleySupport(const std::vector<SupportSet> &supports);

SupportSet translateSupport(const SupportSet &support, std::span<const Exponent> shift);

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Nonzero diagonal entries of the Smith normal form, each dividing the next.
std::vector<mpz_class> smithInvariantFactors(IntMatrix m);
std::size_t rankOverQ(const IntMatrix &m);

} // namespace sparseres

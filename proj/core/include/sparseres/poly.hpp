#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <sparseres/ring.hpp>

namespace sparseres
{

using Exponent = std::int32_t;
using ExponentVector = std::vector<Exponent>;

struct TermOrder {
    enum class Kind { Lex, GrevLex, BlockElim };

    Kind kind = Kind::GrevLex;
    // Number of leading variables forming the eliminated block (BlockElim).
    std::size_t blockSize = 0;

    static TermOrder lex() noexcept
    {
        return {Kind::Lex, 0};
    }
    static TermOrder grevlex() noexcept
    {
        return {Kind::GrevLex, 0};
    }
    static TermOrder blockElim(std::size_t k) noexcept
    {
        return {Kind::BlockElim, k};
    }

    // Three-way comparison of two exponent vectors of equal length:
    // negative if a < b, zero if equal, positive if a > b.
    int compare(std::span<const Exponent> a, std::span<const Exponent> b) const;
};

// Degree of a polynomial in a group of variables. The zero polynomial has
// degree minus infinity, which is a distinct state rather than a number.
class Degree
{
public:
    static Degree minusInfinity() noexcept
    {
        return Degree();
    }
    static Degree of(std::int64_t d) noexcept
    {
        Degree r;
        r.m_finite = true;
        r.m_value = d;
        return r;
    }
    bool isMinusInfinity() const noexcept
    {
        return !m_finite;
    }
    // Throws std::logic_error for minus infinity.
    std::int64_t value() const;

    friend bool operator==(const Degree &, const Degree &) = default;

private:
    Degree() = default;
    bool m_finite = false;
    std::int64_t m_value = 0;
};

struct Term {
    ExponentVector exponents;
    mpq_class coefficient;
};

/// Sparse multivariate Laurent polynomial with exact coefficients.
///
/// Terms are kept sorted in descending GrevLex order (ring variable order)
/// with no zero coefficients and no repeated exponents, so two polynomials
/// over the same ring are equal iff their term lists are identical.
class MultiPoly
{
public:
    explicit MultiPoly(RingPtr ring);

    static MultiPoly constant(RingPtr ring, const mpq_class &c);
    static MultiPoly variable(RingPtr ring, std::string_view name);
    static MultiPoly monomial(RingPtr ring, std::span<const Exponent> exponents, const mpq_class &c);
    // Combines repeated exponents and drops zeros.
    static MultiPoly fromTerms(RingPtr ring, std::vector<Term> terms);

    const RingPtr &ring() const noexcept
    {
        return m_ring;
    }
    std::size_t arity() const noexcept
    {
        return m_ring->arity();
    }
    std::size_t termCount() const noexcept
    {
        return m_coeffs.size();
    }
    bool isZero() const noexcept
    {
        return m_coeffs.empty();
    }
    bool isConstant() const noexcept;
    // Throws InputError unless the polynomial is constant.
    mpq_class constantValue() const;

    std::span<const Exponent> exponents(std::size_t i) const
    {
        return {m_data.data() + i * stride() + 1, arity()};
    }
    std::int64_t totalDegree(std::size_t i) const
    {
        return m_data[i * stride()];
    }
    const mpq_class &coefficient(std::size_t i) const
    {
        return m_coeffs[i];
    }
    mpq_class coefficientOf(std::span<const Exponent> exponents) const;
    // Leading coefficient under GrevLex; throws for zero.
    const mpq_class &leadingCoefficient() const;
    std::vector<Term> terms() const;

    MultiPoly operator-() const;
    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b)
    {
        return a += b;
    }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b)
    {
        return a -= b;
    }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);

    MultiPoly scaled(const mpq_class &c) const;
    // Multiplication by the monomial x^e.
    MultiPoly shifted(std::span<const Exponent> e) const;
    MultiPoly pow(unsigned k) const;

    friend bool operator==(const MultiPoly &a, const MultiPoly &b);

private:
    friend class PolyBuilder;

    std::size_t stride() const noexcept
    {
        return arity() + 1;
    }
    void checkRing(const MultiPoly &o, const char *op) const;
    MultiPoly addScaled(const MultiPoly &o, bool negate) const;

    RingPtr m_ring;
    // stride() slots per term: total degree followed by the exponents.
    std::vector<Exponent> m_data;
    std::vector<mpq_class> m_coeffs;
};

// Accumulates terms in any order and produces a canonical MultiPoly.
class PolyBuilder
{
public:
    explicit PolyBuilder(RingPtr ring);
    void add(std::span<const Exponent> exponents, const mpq_class &c);
    void add(const MultiPoly &p, const mpq_class &scale = 1);
    MultiPoly build();

private:
    struct Hash {
        std::size_t operator()(const ExponentVector &e) const noexcept;
    };
    RingPtr m_ring;
    std::unordered_map<ExponentVector, mpq_class, Hash> m_terms;
};

MultiPoly mulPoly(const MultiPoly &p, const MultiPoly &q);

// Formal partial derivative. Throws LaurentError if `var` occurs with a
// negative exponent.
MultiPoly derivative(const MultiPoly &p, std::string_view var);

// Values of substituted variables, keyed by variable name of p's ring.
using Assignment = std::map<std::string, MultiPoly, std::less<>>;

// Simultaneous substitution. Variables of p without an assignment are mapped
// by name into `target`; if `target` lacks one, an InputError reports the
// unassigned variable. Coefficients are mapped into target's domain.
MultiPoly evaluatePoly(const MultiPoly &p, const Assignment &assignment, const RingPtr &target);
// Scalar evaluation: every variable must be assigned. The result lives in
// `domain`.
mpq_class evaluateScalar(const MultiPoly &p, const std::map<std::string, mpq_class, std::less<>> &values,
                         const CoefficientDomain &domain);

// Rewrites p over `target`, matching variables by name and converting the
// coefficient domain. Throws InputError if a used variable is missing.
MultiPoly changeRing(const MultiPoly &p, const RingPtr &target);

// Integer polynomial with content 1 and positive GrevLex-leading coefficient,
// equal to p up to a nonzero rational factor. The result keeps p's ring.
MultiPoly primitivePart(const MultiPoly &p);
// Leading coefficient 1 (field domains only).
MultiPoly makeMonic(const MultiPoly &p);

Degree degreeInGroup(const MultiPoly &p, const std::vector<std::string> &vars);
Degree totalDegree(const MultiPoly &p);
inline std::size_t termCount(const MultiPoly &p)
{
    return p.termCount();
}

// Quotient of an exact division p / q. Throws InputError if q does not
// divide p.
MultiPoly divideExact(const MultiPoly &p, const MultiPoly &q);

// True if every exponent is nonnegative.
bool isPolynomial(const MultiPoly &p);

// The polynomial grouped by its exponents in `mainVars`: for each main
// monomial, its coefficient as a polynomial over `paramRing` (which must
// contain every other variable of p's ring).
struct SplitTerm {
    ExponentVector exponents;
    MultiPoly coefficient;
};
std::vector<SplitTerm> splitByVariables(const MultiPoly &p, const std::vector<std::string> &mainVars,
                                        const RingPtr &paramRing);

} // namespace sparseres

#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace sparseres
{

enum class DomainKind { Integers, Rationals, PrimeField };

bool isPrime(std::uint64_t n);

/// Coefficient domain of a polynomial ring: ZZ, QQ or GF(p) with p < 2^31.
///
/// Every coefficient stored in a MultiPoly is an mpq_class that has already
/// been passed through normalize(): integral for ZZ, canonical for QQ and a
/// representative in [0, p) for GF(p).
class CoefficientDomain
{
public:
    static CoefficientDomain integers() noexcept
    {
        return CoefficientDomain(DomainKind::Integers, 0);
    }
    static CoefficientDomain rationals() noexcept
    {
        return CoefficientDomain(DomainKind::Rationals, 0);
    }
    // Throws DomainError unless p is a prime below 2^31.
    static CoefficientDomain primeField(std::uint64_t p);

    DomainKind kind() const noexcept
    {
        return m_kind;
    }
    std::uint32_t modulus() const noexcept
    {
        return m_modulus;
    }
    bool isField() const noexcept
    {
        return m_kind != DomainKind::Integers;
    }
    bool isPrimeField() const noexcept
    {
        return m_kind == DomainKind::PrimeField;
    }

    // Maps a rational into the domain. Non-integers are rejected for ZZ and
    // denominators divisible by p for GF(p).
    mpq_class normalize(mpq_class v) const;
    mpq_class inverse(const mpq_class &v) const;

    std::string name() const;

    friend bool operator==(const CoefficientDomain &, const CoefficientDomain &) = default;

private:
    CoefficientDomain(DomainKind k, std::uint32_t m) noexcept : m_kind(k), m_modulus(m) {}

    DomainKind m_kind;
    std::uint32_t m_modulus;
};

// Smallest domain containing both operands (ZZ < QQ; GF(p) only with itself
// or with ZZ/QQ, where the result is GF(p)).
CoefficientDomain commonDomain(const CoefficientDomain &a, const CoefficientDomain &b);

} // namespace sparseres

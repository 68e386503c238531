#include <sparseres/domain.hpp>

#include <sparseres/errors.hpp>

namespace sparseres
{

bool isPrime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

CoefficientDomain CoefficientDomain::primeField(std::uint64_t p)
{
    if (p >= (std::uint64_t(1) << 31) || !isPrime(p)) {
        throw DomainError("modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
    return CoefficientDomain(DomainKind::PrimeField, static_cast<std::uint32_t>(p));
}

mpq_class CoefficientDomain::normalize(mpq_class v) const
{
    switch (m_kind) {
        case DomainKind::Integers:
            if (v.get_den() != 1) {
                throw DomainError("non-integral coefficient " + v.get_str() + " in ZZ");
            }
            return v;
        case DomainKind::Rationals:
            return v;
        case DomainKind::PrimeField: {
            const mpz_class p(m_modulus);
            mpz_class num = v.get_num() % p;
            if (num < 0) {
                num += p;
            }
            if (v.get_den() != 1) {
                mpz_class den = v.get_den() % p;
                mpz_class inv;
                if (den == 0 || mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
                    throw DomainError("denominator of " + v.get_str() + " vanishes in " + name());
                }
                num = (num * inv) % p;
            }
            return mpq_class(num);
        }
    }
    throw InternalError("unknown domain kind");
}

mpq_class CoefficientDomain::inverse(const mpq_class &v) const
{
    if (v == 0) {
        throw DomainError("division by zero");
    }
    switch (m_kind) {
        case DomainKind::Integers:
            if (v != 1 && v != -1) {
                throw DomainError(v.get_str() + " is not a unit in ZZ");
            }
            return v;
        case DomainKind::Rationals:
            return 1 / v;
        case DomainKind::PrimeField:
            return normalize(mpq_class(1) / v);
    }
    throw InternalError("unknown domain kind");
}

std::string CoefficientDomain::name() const
{
    switch (m_kind) {
        case DomainKind::Integers:
            return "ZZ";
        case DomainKind::Rationals:
            return "QQ";
        case DomainKind::PrimeField:
            return "GF(" + std::to_string(m_modulus) + ")";
    }
    return "?";
}

CoefficientDomain commonDomain(const CoefficientDomain &a, const CoefficientDomain &b)
{
    if (a == b) {
        return a;
    }
    if (a.isPrimeField() && b.isPrimeField()) {
        throw DomainError("incompatible prime fields " + a.name() + " and " + b.name());
    }
    if (a.isPrimeField()) {
        return a;
    }
    if (b.isPrimeField()) {
        return b;
    }
    return CoefficientDomain::rationals();
}

} // namespace sparseres

#include <sparseres/linalg.hpp>

#include <sparseres/errors.hpp>

namespace sparseres
{

namespace
{

const RingPtr &checkSquare(const PolyMatrix &m)
{
    if (m.empty()) {
        throw InputError("determinant of an empty matrix");
    }
    for (const auto &row : m) {
        if (row.size() != m.size()) {
            throw InputError("determinant of a non-square matrix");
        }
        for (const auto &e : row) {
            if (!(*e.ring() == *m[0][0].ring())) {
                throw RingMismatch("matrix entries over different rings");
            }
        }
    }
    return m[0][0].ring();
}

std::uint64_t powMod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

} // namespace

std::uint64_t determinantModP(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p)
{
    const std::size_t n = m.size();
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) {
            ++piv;
        }
        if (piv == n) {
            return 0;
        }
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = (p - det) % p;
        }
        det = det * m[c][c] % p;
        const std::uint64_t inv = powMod(m[c][c], p - 2, p);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) {
                continue;
            }
            const std::uint64_t f = m[r][c] * inv % p;
            for (std::size_t k = c; k < n; ++k) {
                m[r][k] = (m[r][k] + (p - f) * m[c][k]) % p;
            }
        }
    }
    return det;
}

MultiPoly bareissDeterminant(PolyMatrix m)
{
    const RingPtr ring = checkSquare(m);
    const std::size_t n = m.size();
    MultiPoly prev = MultiPoly::constant(ring, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Sparsest nonzero pivot keeps intermediate entries small.
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r) {
            if (!m[r][k].isZero() && (piv == n || m[r][k].termCount() < m[piv][k].termCount())) {
                piv = r;
            }
        }
        if (piv == n) {
            return MultiPoly(ring);
        }
        if (piv != k) {
            std::swap(m[piv], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = prev.isConstant() && prev.constantValue() == 1 ? std::move(v) : divideExact(v, prev);
            }
        }
        prev = m[k][k];
    }
    MultiPoly d = m[n - 1][n - 1];
    return negate ? -d : d;
}

MultiPoly determinant(const PolyMatrix &m)
{
    const RingPtr ring = checkSquare(m);
    const auto &dom = ring->domain();
    bool numeric = true;
    for (const auto &row : m) {
        for (const auto &e : row) {
            numeric = numeric && e.isConstant();
        }
    }
    if (numeric && dom.isPrimeField()) {
        const std::uint64_t p = dom.modulus();
        std::vector<std::vector<std::uint64_t>> a(m.size(), std::vector<std::uint64_t>(m.size()));
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m.size(); ++j) {
                a[i][j] = m[i][j].isZero() ? 0 : m[i][j].constantValue().get_num().get_ui();
            }
        }
        return MultiPoly::constant(ring, mpq_class(static_cast<unsigned long>(determinantModP(std::move(a), p))));
    }
    return bareissDeterminant(m);
}

} // namespace sparseres

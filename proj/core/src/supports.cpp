#include <sparseres/supports.hpp>

#include <algorithm>
#include <sstream>

#include <sparseres/errors.hpp>

namespace sparseres
{

SupportSet::SupportSet(std::size_t arity, std::vector<ExponentVector> columns)
    : m_arity(arity), m_columns(std::move(columns))
{
    for (const auto &c : m_columns) {
        if (c.size() != m_arity) {
            throw InputError("support column of length " + std::to_string(c.size()) + " in a support of arity "
                             + std::to_string(m_arity));
        }
    }
    std::sort(m_columns.begin(), m_columns.end());
    m_columns.erase(std::unique(m_columns.begin(), m_columns.end()), m_columns.end());
}

std::optional<std::size_t> SupportSet::indexOf(std::span<const Exponent> e) const
{
    ExponentVector key(e.begin(), e.end());
    auto it = std::lower_bound(m_columns.begin(), m_columns.end(), key);
    if (it == m_columns.end() || *it != key) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - m_columns.begin());
}

ExponentVector SupportSet::minCorner() const
{
    ExponentVector m(m_arity, 0);
    for (std::size_t i = 0; i < m_columns.size(); ++i) {
        for (std::size_t v = 0; v < m_arity; ++v) {
            m[v] = i == 0 ? m_columns[i][v] : std::min(m[v], m_columns[i][v]);
        }
    }
    return m;
}

SupportSet exponentsMatrix(const std::vector<MultiPoly> &polys, const std::vector<std::string> &mainVars)
{
    if (polys.empty()) {
        throw InputError("exponentsMatrix needs at least one polynomial");
    }
    const auto &ring = polys.front().ring();
    std::vector<std::size_t> idx;
    if (mainVars.empty()) {
        idx.resize(ring->arity());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            idx[i] = i;
        }
    } else {
        for (const auto &v : mainVars) {
            idx.push_back(ring->requireIndex(v));
        }
    }
    std::vector<ExponentVector> cols;
    for (const auto &p : polys) {
        if (!(*p.ring() == *ring)) {
            throw RingMismatch("exponentsMatrix over polynomials from different rings");
        }
        for (std::size_t i = 0; i < p.termCount(); ++i) {
            auto e = p.exponents(i);
            ExponentVector c(idx.size());
            for (std::size_t k = 0; k < idx.size(); ++k) {
                c[k] = e[idx[k]];
            }
            cols.push_back(std::move(c));
        }
    }
    return SupportSet(idx.size(), std::move(cols));
}

std::string SupportReport::describe() const
{
    if (ok()) {
        return "ok";
    }
    std::ostringstream os;
    bool first = true;
    for (auto i : affineSpanFailures) {
        os << (first ? "" : "\n") << "condition 1 fails for support " << i
           << ": its points do not affinely span the ambient space";
        first = false;
    }
    if (latticeFailure) {
        os << (first ? "" : "\n") << "condition 2 fails: the union of the supports does not generate the lattice";
        if (!invariantFactors.empty()) {
            os << " (invariant factors";
            for (const auto &f : invariantFactors) {
                os << ' ' << f.get_str();
            }
            os << ')';
        }
    }
    return os.str();
}

SupportReport validateSupports(const std::vector<SupportSet> &supports, std::size_t n)
{
    if (supports.empty()) {
        throw InputError("no supports given");
    }
    for (const auto &s : supports) {
        if (s.arity() != n) {
            throw InputError("support of arity " + std::to_string(s.arity()) + " where arity " + std::to_string(n)
                             + " was expected");
        }
    }
    std::vector<SupportSet> list = supports;
    if (list.size() == 1) {
        list.assign(n + 1, supports.front());
    }
    if (list.size() != n + 1) {
        throw InputError("expected " + std::to_string(n + 1) + " supports, got " + std::to_string(list.size()));
    }
    SupportReport rep;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto &cols = list[i].columns();
        IntMatrix diff(n);
        for (std::size_t c = 1; c < cols.size(); ++c) {
            for (std::size_t v = 0; v < n; ++v) {
                diff[v].push_back(cols[c][v] - cols[0][v]);
            }
        }
        if (cols.empty() || rankOverQ(diff) != n) {
            rep.affineSpanFailures.push_back(i);
        }
    }
    IntMatrix all(n);
    for (const auto &s : list) {
        for (const auto &c : s.columns()) {
            for (std::size_t v = 0; v < n; ++v) {
                all[v].push_back(c[v]);
            }
        }
    }
    rep.invariantFactors = smithInvariantFactors(all);
    rep.latticeFailure = rep.invariantFactors.size() != n
                         || std::any_of(rep.invariantFactors.begin(), rep.invariantFactors.end(),
                                        [](const mpz_class &f) { return f != 1; });
    return rep;
}

void requireValidSupports(const std::vector<SupportSet> &supports, std::size_t n)
{
    auto rep = validateSupports(supports, n);
    if (!rep.ok()) {
        throw ValidationError(rep.describe());
    }
}

SupportSet denseSupport(std::size_t n, int d)
{
    if (d < 1) {
        throw InputError("dense support needs degree at least 1");
    }
    std::vector<ExponentVector> cols;
    ExponentVector e(n, 0);
    // Odometer over [0, d]^n, keeping vectors of sum <= d.
    while (true) {
        int sum = 0;
        for (auto x : e) {
            sum += x;
        }
        if (sum <= d) {
            cols.push_back(e);
        }
        std::size_t v = 0;
        while (v < n && e[v] == d) {
            e[v] = 0;
            ++v;
        }
        if (v == n) {
            break;
        }
        ++e[v];
    }
    return SupportSet(n, std::move(cols));
}

SupportSet cayleySupport(const std::vector<SupportSet> &supports)
{
    if (supports.empty()) {
        throw InputError("no supports given");
    }
    const std::size_t n = supports.front().arity();
    std::vector<SupportSet> list = supports;
    if (list.size() == 1) {
        list.assign(n + 1, supports.front());
    }
    requireValidSupports(list, n);
    std::vector<ExponentVector> cols;
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (const auto &c : list[i].columns()) {
            ExponentVector e(2 * n, 0);
            std::copy(c.begin(), c.end(), e.begin());
            if (i > 0) {
                e[n + i - 1] = 1;
            }
            cols.push_back(std::move(e));
        }
    }
    return SupportSet(2 * n, std::move(cols));
}

SupportSet translateSupport(const SupportSet &support, std::span<const Exponent> shift)
{
    if (shift.size() != support.arity()) {
        throw InputError("translation vector of the wrong length");
    }
    std::vector<ExponentVector> cols = support.columns();
    for (auto &c : cols) {
        for (std::size_t v = 0; v < c.size(); ++v) {
            c[v] += shift[v];
        }
    }
    return SupportSet(support.arity(), std::move(cols));
}

std::vector<mpz_class> smithInvariantFactors(IntMatrix m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    std::vector<mpz_class> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Smallest nonzero entry of the remaining block as pivot.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == rows) {
            break;
        }
        std::swap(m[t], m[pr]);
        for (auto &row : m) {
            std::swap(row[t], row[pc]);
        }
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
            if (q != 0) {
                for (std::size_t j = t; j < cols; ++j) {
                    m[i][j] -= q * m[t][j];
                }
            }
            clean = clean && m[i][t] == 0;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
            if (q != 0) {
                for (std::size_t i = t; i < rows; ++i) {
                    m[i][j] -= q * m[i][t];
                }
            }
            clean = clean && m[t][j] == 0;
        }
        if (!clean) {
            continue;
        }
        // The pivot must divide the rest of the block; otherwise fold an
        // offending row into row t and retry.
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i) {
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
                    for (std::size_t jj = t; jj < cols; ++jj) {
                        m[t][jj] += m[i][jj];
                    }
                    divides = false;
                    break;
                }
            }
        }
        if (!divides) {
            continue;
        }
        diag.push_back(abs(m[t][t]));
        ++t;
    }
    return diag;
}

std::size_t rankOverQ(const IntMatrix &m)
{
    std::vector<std::vector<mpq_class>> a;
    for (const auto &row : m) {
        a.emplace_back(row.begin(), row.end());
    }
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c] == 0) {
                continue;
            }
            mpq_class f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) {
                a[i][j] -= f * a[rank][j];
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace sparseres

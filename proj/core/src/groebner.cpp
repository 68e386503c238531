#include <sparseres/groebner.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <type_traits>
#include <utility>

#include <sparseres/errors.hpp>

namespace sparseres
{

namespace
{

// Monomial layout used by the engine: two block weights followed by the
// exponents. For GrevLex the whole ring is the first block; for Lex the
// weights are unused.
struct Layout {
    TermOrder::Kind kind;
    std::size_t n, k, s;

    Layout(TermOrder order, std::size_t nvars) : kind(order.kind), n(nvars), s(nvars + 2)
    {
        k = kind == TermOrder::Kind::BlockElim ? std::min(order.blockSize, n) : n;
    }

    void fill(std::int32_t *dst, std::span<const Exponent> e) const
    {
        std::int32_t w0 = 0, w1 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            (i < k ? w0 : w1) += e[i];
            dst[2 + i] = e[i];
        }
        dst[0] = w0;
        dst[1] = w1;
    }

    int cmp(const std::int32_t *a, const std::int32_t *b) const noexcept
    {
        if (kind == TermOrder::Kind::Lex) {
            for (std::size_t i = 2; i < s; ++i) {
                if (a[i] != b[i]) {
                    return a[i] < b[i] ? -1 : 1;
                }
            }
            return 0;
        }
        if (a[0] != b[0]) {
            return a[0] < b[0] ? -1 : 1;
        }
        for (std::size_t i = k; i > 0; --i) {
            if (a[1 + i] != b[1 + i]) {
                return a[1 + i] < b[1 + i] ? 1 : -1;
            }
        }
        if (a[1] != b[1]) {
            return a[1] < b[1] ? -1 : 1;
        }
        for (std::size_t i = n; i > k; --i) {
            if (a[1 + i] != b[1 + i]) {
                return a[1 + i] < b[1 + i] ? 1 : -1;
            }
        }
        return 0;
    }

    bool divides(const std::int32_t *a, const std::int32_t *b) const noexcept
    {
        for (std::size_t i = 2; i < s; ++i) {
            if (a[i] > b[i]) {
                return false;
            }
        }
        return true;
    }

    std::uint64_t mask(const std::int32_t *a) const noexcept
    {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[2 + i] > 0) {
                m |= std::uint64_t(1) << (i & 63);
            }
        }
        return m;
    }

    std::int64_t totalDegree(const std::int32_t *a) const noexcept
    {
        std::int64_t d = 0;
        for (std::size_t i = 2; i < s; ++i) {
            d += a[i];
        }
        return d;
    }
};

struct ModArith {
    using C = std::uint32_t;
    std::uint32_t p;

    C mul(C a, C b) const noexcept
    {
        return static_cast<C>(std::uint64_t(a) * b % p);
    }
    C sub(C a, C b) const noexcept
    {
        return a >= b ? a - b : a + (p - b);
    }
    C inv(C a) const
    {
        // Fermat: a^(p-2)
        std::uint64_t r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<C>(r);
    }
};

struct IntArith {
    using C = mpz_class;
};

template <class C>
struct GPoly {
    std::vector<std::int32_t> m;
    std::vector<C> c;
    std::size_t size() const noexcept
    {
        return c.size();
    }
    bool empty() const noexcept
    {
        return c.empty();
    }
};

template <class Arith>
class Engine
{
public:
    using C = typename Arith::C;
    using Poly = GPoly<C>;
    static constexpr bool modular = std::is_same_v<Arith, ModArith>;

    Engine(const Layout &layout, Arith arith, GroebnerStats *stats) : L(layout), A(arith), m_stats(stats) {}

    std::vector<Poly> run(std::vector<Poly> gens)
    {
        for (auto &g : gens) {
            // A generator whose lead is divisible by an earlier lead would
            // otherwise stay in the minimal basis.
            reduce(g, 0, false);
            if (g.empty()) {
                continue;
            }
            normalize(g);
            insert(std::move(g));
        }
        while (!m_pairs.empty()) {
            auto it = std::min_element(m_pairs.begin(), m_pairs.end(),
                                       [&](const Pair &a, const Pair &b) { return pairLess(a, b); });
            Pair p = std::move(*it);
            *it = std::move(m_pairs.back());
            m_pairs.pop_back();
            if (m_stats) {
                ++m_stats->pairsConsidered;
            }
            Poly h = spoly(p);
            reduce(h, 0, false);
            if (h.empty()) {
                if (m_stats) {
                    ++m_stats->zeroReductions;
                }
                continue;
            }
            normalize(h);
            insert(std::move(h));
        }
        // Interreduce the minimal basis.
        std::vector<std::size_t> act;
        for (std::size_t i = 0; i < m_basis.size(); ++i) {
            if (m_active[i]) {
                act.push_back(i);
            }
        }
        std::vector<Poly> out;
        out.reserve(act.size());
        for (auto i : act) {
            Poly g = m_basis[i];
            reduce(g, 1, true, &act);
            normalize(g);
            out.push_back(std::move(g));
        }
        std::sort(out.begin(), out.end(),
                  [&](const Poly &a, const Poly &b) { return L.cmp(a.m.data(), b.m.data()) < 0; });
        return out;
    }

    // Reduces h in place starting at term `pos`. With full == false only the
    // term at `pos` (the leading one when pos == 0) is made irreducible.
    void reduce(Poly &h, std::size_t pos, bool full, const std::vector<std::size_t> *only = nullptr)
    {
        std::size_t steps = 0;
        std::vector<std::int32_t> shift(L.s);
        while (pos < h.size()) {
            const std::int32_t *t = h.m.data() + pos * L.s;
            const std::size_t r = findReducer(t, only);
            if (r == npos) {
                if (!full) {
                    return;
                }
                ++pos;
                continue;
            }
            const Poly &g = m_basis[r];
            for (std::size_t i = 0; i < L.s; ++i) {
                shift[i] = t[i] - g.m[i];
            }
            combine(h, pos, shift.data(), g);
            if (m_stats) {
                ++m_stats->reductionSteps;
            }
            if constexpr (!modular) {
                if (++steps % 16 == 0) {
                    removeContent(h);
                }
            }
        }
    }

    void addReducer(Poly g)
    {
        normalize(g);
        m_basis.push_back(std::move(g));
        m_active.push_back(true);
        refreshLead(m_basis.size() - 1);
    }

    void normalize(Poly &h) const
    {
        if (h.empty()) {
            return;
        }
        if constexpr (modular) {
            if (h.c[0] != 1) {
                const C inv = A.inv(h.c[0]);
                for (auto &x : h.c) {
                    x = A.mul(x, inv);
                }
            }
        } else {
            removeContent(h);
            if (h.c[0] < 0) {
                for (auto &x : h.c) {
                    x = -x;
                }
            }
        }
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    struct Pair {
        std::size_t i, j;
        std::vector<std::int32_t> lcm;
        std::int64_t deg;
    };

    bool pairLess(const Pair &a, const Pair &b) const
    {
        if (a.deg != b.deg) {
            return a.deg < b.deg;
        }
        int c = L.cmp(a.lcm.data(), b.lcm.data());
        if (c != 0) {
            return c < 0;
        }
        if (a.j != b.j) {
            return a.j < b.j;
        }
        return a.i < b.i;
    }

    const std::int32_t *lead(std::size_t i) const
    {
        return m_leads.data() + i * L.s;
    }

    void refreshLead(std::size_t i)
    {
        if (m_leads.size() < (i + 1) * L.s) {
            m_leads.resize((i + 1) * L.s);
            m_masks.resize(i + 1);
        }
        std::copy_n(m_basis[i].m.data(), L.s, m_leads.data() + i * L.s);
        m_masks[i] = L.mask(lead(i));
    }

    std::size_t findReducer(const std::int32_t *t, const std::vector<std::size_t> *only) const
    {
        const std::uint64_t tm = L.mask(t);
        std::size_t best = npos;
        auto consider = [&](std::size_t i) {
            if ((m_masks[i] & ~tm) != 0 || !L.divides(lead(i), t)) {
                return;
            }
            if (best == npos || m_basis[i].size() < m_basis[best].size()) {
                best = i;
            }
        };
        if (only) {
            for (auto i : *only) {
                consider(i);
            }
        } else {
            for (std::size_t i = 0; i < m_basis.size(); ++i) {
                consider(i);
            }
        }
        return best;
    }

    Pair makePair(std::size_t i, std::size_t j) const
    {
        Pair p{i, j, std::vector<std::int32_t>(L.s), 0};
        const std::int32_t *a = lead(i), *b = lead(j);
        std::int32_t w0 = 0, w1 = 0;
        for (std::size_t v = 0; v < L.n; ++v) {
            const std::int32_t e = std::max(a[2 + v], b[2 + v]);
            p.lcm[2 + v] = e;
            (v < L.k ? w0 : w1) += e;
        }
        p.lcm[0] = w0;
        p.lcm[1] = w1;
        p.deg = L.totalDegree(p.lcm.data());
        return p;
    }

    bool coprime(const std::int32_t *a, const std::int32_t *b) const
    {
        for (std::size_t v = 2; v < L.s; ++v) {
            if (a[v] > 0 && b[v] > 0) {
                return false;
            }
        }
        return true;
    }

    bool sameLcm(std::size_t i, std::size_t h, const std::vector<std::int32_t> &lcm) const
    {
        const std::int32_t *a = lead(i), *b = lead(h);
        for (std::size_t v = 2; v < L.s; ++v) {
            if (std::max(a[v], b[v]) != lcm[v]) {
                return false;
            }
        }
        return true;
    }

    // Gebauer–Möller update with the chain and product criteria.
    void insert(Poly h)
    {
        m_basis.push_back(std::move(h));
        m_active.push_back(false);
        const std::size_t hi = m_basis.size() - 1;
        refreshLead(hi);
        const std::int32_t *lh = lead(hi);

        std::vector<Pair> cand;
        for (std::size_t g = 0; g < hi; ++g) {
            if (m_active[g]) {
                cand.push_back(makePair(g, hi));
            }
        }
        std::vector<Pair> kept;
        std::vector<bool> isCoprime;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            const bool cp = coprime(lead(cand[a].i), lh);
            bool dominated = false;
            if (!cp) {
                for (std::size_t b = a + 1; b < cand.size() && !dominated; ++b) {
                    dominated = L.divides(cand[b].lcm.data(), cand[a].lcm.data());
                }
                for (std::size_t b = 0; b < kept.size() && !dominated; ++b) {
                    dominated = L.divides(kept[b].lcm.data(), cand[a].lcm.data());
                }
            }
            if (!dominated) {
                kept.push_back(std::move(cand[a]));
                isCoprime.push_back(cp);
            } else if (m_stats) {
                ++m_stats->pairsSkipped;
            }
        }
        const std::size_t before = m_pairs.size();
        std::erase_if(m_pairs, [&](const Pair &p) {
            return L.divides(lh, p.lcm.data()) && !sameLcm(p.i, hi, p.lcm) && !sameLcm(p.j, hi, p.lcm);
        });
        if (m_stats) {
            m_stats->pairsSkipped += before - m_pairs.size();
        }
        for (std::size_t a = 0; a < kept.size(); ++a) {
            if (!isCoprime[a]) {
                m_pairs.push_back(std::move(kept[a]));
            } else if (m_stats) {
                ++m_stats->pairsSkipped;
            }
        }
        for (std::size_t g = 0; g < hi; ++g) {
            if (m_active[g] && L.divides(lh, lead(g))) {
                m_active[g] = false;
            }
        }
        m_active[hi] = true;
        if (m_stats) {
            const auto live = static_cast<std::size_t>(std::count(m_active.begin(), m_active.end(), true));
            m_stats->maxBasisSize = std::max(m_stats->maxBasisSize, live);
        }
    }

    Poly spoly(const Pair &p) const
    {
        const Poly &f = m_basis[p.i];
        const Poly &g = m_basis[p.j];
        Poly h = f;
        std::vector<std::int32_t> shift(L.s);
        for (std::size_t v = 0; v < L.s; ++v) {
            shift[v] = p.lcm[v] - f.m[v];
        }
        for (std::size_t t = 0; t < h.size(); ++t) {
            for (std::size_t v = 0; v < L.s; ++v) {
                h.m[t * L.s + v] += shift[v];
            }
        }
        for (std::size_t v = 0; v < L.s; ++v) {
            shift[v] = p.lcm[v] - g.m[v];
        }
        combine(h, 0, shift.data(), g);
        return h;
    }

    // h <- alpha*h - beta*x^shift*g, where x^shift*lead(g) equals the term of
    // h at `pos` and alpha, beta are chosen so that this term cancels.
    void combine(Poly &h, std::size_t pos, const std::int32_t *shift, const Poly &g) const
    {
        const std::size_t s = L.s;
        Poly out;
        out.m.reserve(h.m.size() + g.m.size());
        out.c.reserve(h.size() + g.size());
        C alpha, beta;
        bool unitAlpha = true;
        if constexpr (modular) {
            alpha = 1;
            beta = A.mul(h.c[pos], A.inv(g.c[0]));
        } else {
            mpz_class d;
            mpz_gcd(d.get_mpz_t(), h.c[pos].get_mpz_t(), g.c[0].get_mpz_t());
            mpz_divexact(alpha.get_mpz_t(), g.c[0].get_mpz_t(), d.get_mpz_t());
            mpz_divexact(beta.get_mpz_t(), h.c[pos].get_mpz_t(), d.get_mpz_t());
            unitAlpha = alpha == 1;
        }
        auto pushH = [&](std::size_t i) {
            out.m.insert(out.m.end(), h.m.begin() + i * s, h.m.begin() + (i + 1) * s);
            if constexpr (modular) {
                out.c.push_back(h.c[i]);
            } else {
                out.c.push_back(unitAlpha ? h.c[i] : mpz_class(alpha * h.c[i]));
            }
        };
        std::vector<std::int32_t> sg(s);
        auto shiftG = [&](std::size_t j) {
            for (std::size_t v = 0; v < s; ++v) {
                sg[v] = shift[v] + g.m[j * s + v];
            }
        };
        for (std::size_t i = 0; i < pos; ++i) {
            pushH(i);
        }
        std::size_t i = pos + 1, j = 1;
        if (j < g.size()) {
            shiftG(j);
        }
        C tmp;
        while (i < h.size() && j < g.size()) {
            const int c = L.cmp(h.m.data() + i * s, sg.data());
            if (c > 0) {
                pushH(i++);
                continue;
            }
            if (c < 0) {
                out.m.insert(out.m.end(), sg.begin(), sg.end());
                if constexpr (modular) {
                    out.c.push_back(A.sub(0, A.mul(beta, g.c[j])));
                } else {
                    tmp = beta * g.c[j];
                    out.c.push_back(-tmp);
                }
            } else {
                if constexpr (modular) {
                    tmp = A.sub(h.c[i], A.mul(beta, g.c[j]));
                    if (tmp != 0) {
                        out.m.insert(out.m.end(), sg.begin(), sg.end());
                        out.c.push_back(tmp);
                    }
                } else {
                    if (unitAlpha) {
                        tmp = h.c[i];
                    } else {
                        tmp = alpha * h.c[i];
                    }
                    mpz_submul(tmp.get_mpz_t(), beta.get_mpz_t(), g.c[j].get_mpz_t());
                    if (tmp != 0) {
                        out.m.insert(out.m.end(), sg.begin(), sg.end());
                        out.c.push_back(tmp);
                    }
                }
                ++i;
            }
            if (++j < g.size()) {
                shiftG(j);
            }
        }
        while (i < h.size()) {
            pushH(i++);
        }
        while (j < g.size()) {
            out.m.insert(out.m.end(), sg.begin(), sg.end());
            if constexpr (modular) {
                out.c.push_back(A.sub(0, A.mul(beta, g.c[j])));
            } else {
                tmp = beta * g.c[j];
                out.c.push_back(-tmp);
            }
            if (++j < g.size()) {
                shiftG(j);
            }
        }
        h = std::move(out);
    }

    static void removeContent(Poly &h)
    {
        if constexpr (!modular) {
            mpz_class g = 0;
            for (const auto &x : h.c) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
                if (g == 1) {
                    return;
                }
            }
            if (g > 1) {
                for (auto &x : h.c) {
                    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
                }
            }
        }
    }

    const Layout &L;
    Arith A;
    GroebnerStats *m_stats;
    std::vector<Poly> m_basis;
    std::vector<bool> m_active;
    std::vector<std::int32_t> m_leads;
    std::vector<std::uint64_t> m_masks;
    std::vector<Pair> m_pairs;
};

template <class Arith>
GPoly<typename Arith::C> toEngine(const MultiPoly &p, const Layout &L, const Arith &)
{
    using C = typename Arith::C;
    GPoly<C> out;
    const std::size_t n = p.termCount();
    std::vector<std::int32_t> mono(n * L.s);
    for (std::size_t i = 0; i < n; ++i) {
        auto e = p.exponents(i);
        for (auto x : e) {
            if (x < 0) {
                throw LaurentError("Gröbner computations need nonnegative exponents");
            }
        }
        L.fill(mono.data() + i * L.s, e);
    }
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t(0));
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return L.cmp(mono.data() + a * L.s, mono.data() + b * L.s) > 0;
    });
    mpz_class den = 1;
    if constexpr (!std::is_same_v<Arith, ModArith>) {
        for (std::size_t i = 0; i < n; ++i) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.coefficient(i).get_den_mpz_t());
        }
    }
    for (auto i : idx) {
        out.m.insert(out.m.end(), mono.begin() + i * L.s, mono.begin() + (i + 1) * L.s);
        const mpq_class &c = p.coefficient(i);
        if constexpr (std::is_same_v<Arith, ModArith>) {
            out.c.push_back(static_cast<std::uint32_t>(c.get_num().get_ui()));
        } else {
            out.c.push_back(c.get_num() * (den / c.get_den()));
        }
    }
    return out;
}

template <class C>
MultiPoly fromEngine(const GPoly<C> &g, const Layout &L, const RingPtr &ring)
{
    std::vector<Term> terms;
    terms.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        Term t{ExponentVector(g.m.begin() + i * L.s + 2, g.m.begin() + (i + 1) * L.s), mpq_class()};
        if constexpr (std::is_same_v<C, std::uint32_t>) {
            t.coefficient = mpq_class(static_cast<unsigned long>(g.c[i]));
        } else {
            t.coefficient = mpq_class(g.c[i]);
        }
        terms.push_back(std::move(t));
    }
    return MultiPoly::fromTerms(ring, std::move(terms));
}

template <class Arith>
std::vector<MultiPoly> runBasis(const Ideal &ideal, TermOrder order, const Arith &A, GroebnerStats *stats)
{
    Layout L(order, ideal.ring()->arity());
    std::vector<GPoly<typename Arith::C>> gens;
    for (const auto &g : ideal.generators()) {
        gens.push_back(toEngine(g, L, A));
    }
    // Deterministic input order: increasing leading monomial.
    std::stable_sort(gens.begin(), gens.end(), [&](const auto &a, const auto &b) {
        return L.cmp(a.m.data(), b.m.data()) < 0;
    });
    Engine<Arith> engine(L, A, stats);
    auto basis = engine.run(std::move(gens));
    std::vector<MultiPoly> out;
    out.reserve(basis.size());
    for (const auto &b : basis) {
        out.push_back(fromEngine(b, L, ideal.ring()));
    }
    return out;
}

template <class Arith>
MultiPoly runNormalForm(const MultiPoly &p, const std::vector<MultiPoly> &basis, TermOrder order, const Arith &A)
{
    Layout L(order, p.ring()->arity());
    Engine<Arith> engine(L, A, nullptr);
    for (const auto &b : basis) {
        if (!b.isZero()) {
            engine.addReducer(toEngine(b, L, A));
        }
    }
    auto h = toEngine(p, L, A);
    engine.reduce(h, 0, true);
    return fromEngine(h, L, p.ring());
}

} // namespace

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> generators) : m_ring(std::move(ring))
{
    for (auto &g : generators) {
        if (!(*g.ring() == *m_ring)) {
            throw RingMismatch("ideal generator lives in a different ring");
        }
        if (!isPolynomial(g)) {
            throw LaurentError("ideal generators must have nonnegative exponents");
        }
        if (!g.isZero()) {
            m_gens.push_back(std::move(g));
        }
    }
}

std::vector<MultiPoly> groebnerBasis(const Ideal &ideal, TermOrder order, GroebnerStats *stats)
{
    if (ideal.isZero()) {
        return {};
    }
    const auto &dom = ideal.ring()->domain();
    if (dom.isPrimeField()) {
        return runBasis(ideal, order, ModArith{dom.modulus()}, stats);
    }
    return runBasis(ideal, order, IntArith{}, stats);
}

Ideal eliminateVars(const Ideal &ideal, std::size_t k, GroebnerStats *stats)
{
    if (k > ideal.ring()->arity()) {
        throw InputError("cannot eliminate " + std::to_string(k) + " variables from a ring of arity "
                         + std::to_string(ideal.ring()->arity()));
    }
    auto basis = groebnerBasis(ideal, TermOrder::blockElim(k), stats);
    std::vector<MultiPoly> kept;
    for (auto &b : basis) {
        bool free = true;
        for (std::size_t i = 0; i < b.termCount() && free; ++i) {
            auto e = b.exponents(i);
            for (std::size_t v = 0; v < k; ++v) {
                if (e[v] != 0) {
                    free = false;
                    break;
                }
            }
        }
        if (free) {
            kept.push_back(std::move(b));
        }
    }
    return Ideal(ideal.ring(), std::move(kept));
}

Ideal saturateByMonomial(const Ideal &ideal, const MultiPoly &m)
{
    if (m.isZero()) {
        throw InputError("saturation by the zero polynomial");
    }
    if (m.termCount() != 1 || !isPolynomial(m)) {
        throw InputError("saturation needs a monomial");
    }
    const std::string t = freshVariable(*ideal.ring(), "t");
    auto ring = extendRing(ideal.ring(), {t});
    std::vector<MultiPoly> gens;
    for (const auto &g : ideal.generators()) {
        gens.push_back(changeRing(g, ring));
    }
    MultiPoly monic = MultiPoly::monomial(ideal.ring(), m.exponents(0), 1);
    gens.push_back(MultiPoly::variable(ring, t) * changeRing(monic, ring) - MultiPoly::constant(ring, 1));
    auto elim = eliminateVars(Ideal(ring, std::move(gens)), 1);
    std::vector<MultiPoly> back;
    for (const auto &g : elim.generators()) {
        back.push_back(changeRing(g, ideal.ring()));
    }
    return Ideal(ideal.ring(), std::move(back));
}

MultiPoly principalGenerator(const Ideal &ideal)
{
    auto basis = groebnerBasis(ideal, TermOrder::grevlex());
    if (basis.size() != 1) {
        throw NotPrincipal(basis.size());
    }
    if (ideal.ring()->domain().isPrimeField()) {
        return makeMonic(basis.front());
    }
    return primitivePart(basis.front());
}

MultiPoly normalForm(const MultiPoly &p, const std::vector<MultiPoly> &basis, TermOrder order)
{
    for (const auto &b : basis) {
        if (!(*b.ring() == *p.ring())) {
            throw RingMismatch("normal form against a basis in a different ring");
        }
    }
    const auto &dom = p.ring()->domain();
    if (dom.isPrimeField()) {
        return runNormalForm(p, basis, order, ModArith{dom.modulus()});
    }
    return runNormalForm(p, basis, order, IntArith{});
}

bool idealContains(const Ideal &ideal, const MultiPoly &p)
{
    if (p.isZero()) {
        return true;
    }
    auto basis = groebnerBasis(ideal, TermOrder::grevlex());
    return normalForm(changeRing(p, ideal.ring()), basis, TermOrder::grevlex()).isZero();
}

ExponentVector leadingExponent(const MultiPoly &p, TermOrder order)
{
    if (p.isZero()) {
        throw InputError("leading exponent of the zero polynomial");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < p.termCount(); ++i) {
        if (order.compare(p.exponents(i), p.exponents(best)) > 0) {
            best = i;
        }
    }
    auto e = p.exponents(best);
    return ExponentVector(e.begin(), e.end());
}

} // namespace sparseres

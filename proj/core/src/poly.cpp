#include <sparseres/poly.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include <sparseres/errors.hpp>

namespace sparseres
{

namespace
{

// a and b point at the degree slot of a stored term.
int cmpGrevlex(const Exponent *a, const Exponent *b, std::size_t n) noexcept
{
    if (a[0] != b[0]) {
        return a[0] < b[0] ? -1 : 1;
    }
    for (std::size_t i = n; i >= 1; --i) {
        if (a[i] != b[i]) {
            return a[i] < b[i] ? 1 : -1;
        }
    }
    return 0;
}

int grevlexBlock(std::span<const Exponent> a, std::span<const Exponent> b, std::size_t lo, std::size_t hi)
{
    std::int64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) {
        return da < db ? -1 : 1;
    }
    for (std::size_t i = hi; i > lo; --i) {
        if (a[i - 1] != b[i - 1]) {
            return a[i - 1] < b[i - 1] ? 1 : -1;
        }
    }
    return 0;
}

void normalizeInPlace(const CoefficientDomain &dom, mpq_class &c)
{
    if (dom.isPrimeField()) {
        c = dom.normalize(std::move(c));
    }
}

} // namespace

int TermOrder::compare(std::span<const Exponent> a, std::span<const Exponent> b) const
{
    if (a.size() != b.size()) {
        throw InputError("exponent vectors of different lengths");
    }
    switch (kind) {
        case Kind::Lex:
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) {
                    return a[i] < b[i] ? -1 : 1;
                }
            }
            return 0;
        case Kind::GrevLex:
            return grevlexBlock(a, b, 0, a.size());
        case Kind::BlockElim: {
            const std::size_t k = std::min(blockSize, a.size());
            if (int c = grevlexBlock(a, b, 0, k); c != 0) {
                return c;
            }
            return grevlexBlock(a, b, k, a.size());
        }
    }
    return 0;
}

std::int64_t Degree::value() const
{
    if (!m_finite) {
        throw std::logic_error("degree of the zero polynomial is minus infinity");
    }
    return m_value;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(RingPtr ring) : m_ring(std::move(ring))
{
    if (!m_ring) {
        throw InputError("null ring");
    }
}

MultiPoly MultiPoly::constant(RingPtr ring, const mpq_class &c)
{
    ExponentVector zero(ring->arity(), 0);
    return monomial(std::move(ring), zero, c);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name)
{
    ExponentVector e(ring->arity(), 0);
    e[ring->requireIndex(name)] = 1;
    return monomial(std::move(ring), e, 1);
}

MultiPoly MultiPoly::monomial(RingPtr ring, std::span<const Exponent> exponents, const mpq_class &c)
{
    if (exponents.size() != ring->arity()) {
        throw InputError("exponent vector length does not match ring arity");
    }
    MultiPoly r(std::move(ring));
    mpq_class v = r.m_ring->domain().normalize(c);
    if (v == 0) {
        return r;
    }
    Exponent deg = 0;
    for (auto e : exponents) {
        deg += e;
    }
    r.m_data.push_back(deg);
    r.m_data.insert(r.m_data.end(), exponents.begin(), exponents.end());
    r.m_coeffs.push_back(std::move(v));
    return r;
}

MultiPoly MultiPoly::fromTerms(RingPtr ring, std::vector<Term> terms)
{
    MultiPoly r(std::move(ring));
    const std::size_t n = r.arity(), s = n + 1;
    std::vector<Exponent> data;
    data.reserve(terms.size() * s);
    for (const auto &t : terms) {
        if (t.exponents.size() != n) {
            throw InputError("exponent vector length does not match ring arity");
        }
        data.push_back(std::accumulate(t.exponents.begin(), t.exponents.end(), Exponent(0)));
        data.insert(data.end(), t.exponents.begin(), t.exponents.end());
    }
    std::vector<std::size_t> idx(terms.size());
    std::iota(idx.begin(), idx.end(), std::size_t(0));
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return cmpGrevlex(data.data() + a * s, data.data() + b * s, n) > 0;
    });
    const auto &dom = r.m_ring->domain();
    for (std::size_t k = 0; k < idx.size();) {
        std::size_t j = k;
        mpq_class acc = 0;
        while (j < idx.size() && cmpGrevlex(data.data() + idx[k] * s, data.data() + idx[j] * s, n) == 0) {
            acc += terms[idx[j]].coefficient;
            ++j;
        }
        acc = dom.normalize(std::move(acc));
        if (acc != 0) {
            r.m_data.insert(r.m_data.end(), data.begin() + idx[k] * s, data.begin() + (idx[k] + 1) * s);
            r.m_coeffs.push_back(std::move(acc));
        }
        k = j;
    }
    return r;
}

bool MultiPoly::isConstant() const noexcept
{
    if (m_coeffs.empty()) {
        return true;
    }
    if (m_coeffs.size() > 1) {
        return false;
    }
    auto e = exponents(0);
    return std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
}

mpq_class MultiPoly::constantValue() const
{
    if (!isConstant()) {
        throw InputError("polynomial is not a constant");
    }
    return m_coeffs.empty() ? mpq_class(0) : m_coeffs[0];
}

mpq_class MultiPoly::coefficientOf(std::span<const Exponent> e) const
{
    if (e.size() != arity()) {
        throw InputError("exponent vector length does not match ring arity");
    }
    for (std::size_t i = 0; i < termCount(); ++i) {
        auto x = exponents(i);
        if (std::equal(x.begin(), x.end(), e.begin())) {
            return m_coeffs[i];
        }
    }
    return 0;
}

const mpq_class &MultiPoly::leadingCoefficient() const
{
    if (isZero()) {
        throw InputError("leading coefficient of the zero polynomial");
    }
    return m_coeffs.front();
}

std::vector<Term> MultiPoly::terms() const
{
    std::vector<Term> out;
    out.reserve(termCount());
    for (std::size_t i = 0; i < termCount(); ++i) {
        auto e = exponents(i);
        out.push_back({ExponentVector(e.begin(), e.end()), m_coeffs[i]});
    }
    return out;
}

void MultiPoly::checkRing(const MultiPoly &o, const char *op) const
{
    if (m_ring != o.m_ring && !(*m_ring == *o.m_ring)) {
        throw RingMismatch(std::string("ring mismatch in ") + op);
    }
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r(*this);
    for (auto &c : r.m_coeffs) {
        c = -c;
        normalizeInPlace(m_ring->domain(), c);
    }
    return r;
}

MultiPoly MultiPoly::addScaled(const MultiPoly &o, bool negate) const
{
    const std::size_t n = arity(), s = stride();
    const auto &dom = m_ring->domain();
    MultiPoly r(m_ring);
    r.m_data.reserve(m_data.size() + o.m_data.size());
    r.m_coeffs.reserve(termCount() + o.termCount());
    std::size_t i = 0, j = 0;
    auto pushOther = [&](std::size_t jj) {
        r.m_data.insert(r.m_data.end(), o.m_data.begin() + jj * s, o.m_data.begin() + (jj + 1) * s);
        mpq_class c = negate ? mpq_class(-o.m_coeffs[jj]) : o.m_coeffs[jj];
        normalizeInPlace(dom, c);
        r.m_coeffs.push_back(std::move(c));
    };
    while (i < termCount() && j < o.termCount()) {
        int c = cmpGrevlex(m_data.data() + i * s, o.m_data.data() + j * s, n);
        if (c > 0) {
            r.m_data.insert(r.m_data.end(), m_data.begin() + i * s, m_data.begin() + (i + 1) * s);
            r.m_coeffs.push_back(m_coeffs[i]);
            ++i;
        } else if (c < 0) {
            pushOther(j);
            ++j;
        } else {
            mpq_class v = negate ? mpq_class(m_coeffs[i] - o.m_coeffs[j]) : mpq_class(m_coeffs[i] + o.m_coeffs[j]);
            normalizeInPlace(dom, v);
            if (v != 0) {
                r.m_data.insert(r.m_data.end(), m_data.begin() + i * s, m_data.begin() + (i + 1) * s);
                r.m_coeffs.push_back(std::move(v));
            }
            ++i;
            ++j;
        }
    }
    for (; i < termCount(); ++i) {
        r.m_data.insert(r.m_data.end(), m_data.begin() + i * s, m_data.begin() + (i + 1) * s);
        r.m_coeffs.push_back(m_coeffs[i]);
    }
    for (; j < o.termCount(); ++j) {
        pushOther(j);
    }
    return r;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
    checkRing(o, "addition");
    *this = addScaled(o, false);
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o)
{
    checkRing(o, "subtraction");
    *this = addScaled(o, true);
    return *this;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o)
{
    *this = *this * o;
    return *this;
}

// Heap-based (Johnson) multiplication: at most min(|a|, |b|) candidate
// products are live at any time and output terms are produced in order.
MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    a.checkRing(b, "multiplication");
    MultiPoly r(a.m_ring);
    if (a.isZero() || b.isZero()) {
        return r;
    }
    const MultiPoly *p = &a, *q = &b;
    if (p->termCount() > q->termCount()) {
        std::swap(p, q);
    }
    const std::size_t k = p->termCount(), m = q->termCount(), n = a.arity(), s = n + 1;
    const auto &dom = a.m_ring->domain();
    const bool modular = dom.isPrimeField();

    std::vector<std::size_t> col(k, 0);
    std::vector<Exponent> buf(k * s);
    auto setMono = [&](std::size_t i) {
        const Exponent *x = p->m_data.data() + i * s;
        const Exponent *y = q->m_data.data() + col[i] * s;
        Exponent *dst = buf.data() + i * s;
        for (std::size_t t = 0; t < s; ++t) {
            dst[t] = x[t] + y[t];
        }
    };
    auto less = [&](std::size_t i, std::size_t j) {
        return cmpGrevlex(buf.data() + i * s, buf.data() + j * s, n) < 0;
    };
    std::vector<std::size_t> heap;
    heap.reserve(k);
    setMono(0);
    heap.push_back(0);

    auto advance = [&](std::size_t i) {
        if (col[i] == 0 && i + 1 < k) {
            setMono(i + 1);
            heap.push_back(i + 1);
            std::push_heap(heap.begin(), heap.end(), less);
        }
        if (++col[i] < m) {
            setMono(i);
            heap.push_back(i);
            std::push_heap(heap.begin(), heap.end(), less);
        }
    };

    std::vector<Exponent> cur(s);
    mpq_class acc, tmp;
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), less);
        std::size_t i = heap.back();
        heap.pop_back();
        std::copy_n(buf.data() + i * s, s, cur.data());
        mpq_mul(acc.get_mpq_t(), p->m_coeffs[i].get_mpq_t(), q->m_coeffs[col[i]].get_mpq_t());
        advance(i);
        while (!heap.empty() && cmpGrevlex(buf.data() + heap.front() * s, cur.data(), n) == 0) {
            std::pop_heap(heap.begin(), heap.end(), less);
            std::size_t j = heap.back();
            heap.pop_back();
            mpq_mul(tmp.get_mpq_t(), p->m_coeffs[j].get_mpq_t(), q->m_coeffs[col[j]].get_mpq_t());
            acc += tmp;
            advance(j);
        }
        if (modular) {
            acc = dom.normalize(std::move(acc));
        }
        if (acc != 0) {
            r.m_data.insert(r.m_data.end(), cur.begin(), cur.end());
            r.m_coeffs.push_back(acc);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const mpq_class &c) const
{
    const auto &dom = m_ring->domain();
    // Over ZZ a rational factor is fine as long as every product is integral.
    mpq_class v = c;
    v.canonicalize();
    if (dom.isPrimeField()) {
        v = dom.normalize(v);
    }
    MultiPoly r(m_ring);
    if (v == 0) {
        return r;
    }
    r.m_data = m_data;
    r.m_coeffs.reserve(termCount());
    for (const auto &x : m_coeffs) {
        mpq_class y = x * v;
        normalizeInPlace(dom, y);
        r.m_coeffs.push_back(std::move(y));
    }
    return r;
}

MultiPoly MultiPoly::shifted(std::span<const Exponent> e) const
{
    if (e.size() != arity()) {
        throw InputError("exponent vector length does not match ring arity");
    }
    MultiPoly r(*this);
    const std::size_t s = stride();
    const Exponent d = std::accumulate(e.begin(), e.end(), Exponent(0));
    for (std::size_t i = 0; i < termCount(); ++i) {
        r.m_data[i * s] += d;
        for (std::size_t t = 0; t < e.size(); ++t) {
            r.m_data[i * s + 1 + t] += e[t];
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const
{
    MultiPoly result = constant(m_ring, 1);
    MultiPoly base(*this);
    while (k > 0) {
        if (k & 1u) {
            result *= base;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

bool operator==(const MultiPoly &a, const MultiPoly &b)
{
    if (a.m_ring != b.m_ring && !(*a.m_ring == *b.m_ring)) {
        return false;
    }
    return a.m_data == b.m_data && a.m_coeffs == b.m_coeffs;
}

// ---------------------------------------------------------------------------
// PolyBuilder

std::size_t PolyBuilder::Hash::operator()(const ExponentVector &e) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : e) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
        h *= 0x100000001b3ull;
    }
    return h;
}

PolyBuilder::PolyBuilder(RingPtr ring) : m_ring(std::move(ring)) {}

void PolyBuilder::add(std::span<const Exponent> exponents, const mpq_class &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(ExponentVector(exponents.begin(), exponents.end()), c);
    if (!inserted) {
        it->second += c;
        if (m_ring->domain().isPrimeField()) {
            it->second = m_ring->domain().normalize(it->second);
        }
    }
}

void PolyBuilder::add(const MultiPoly &p, const mpq_class &scale)
{
    if (!(*p.ring() == *m_ring)) {
        throw RingMismatch("ring mismatch in PolyBuilder::add");
    }
    for (std::size_t i = 0; i < p.termCount(); ++i) {
        add(p.exponents(i), scale == 1 ? p.coefficient(i) : mpq_class(p.coefficient(i) * scale));
    }
}

MultiPoly PolyBuilder::build()
{
    std::vector<Term> terms;
    terms.reserve(m_terms.size());
    for (auto &[e, c] : m_terms) {
        terms.push_back({e, std::move(c)});
    }
    m_terms.clear();
    return MultiPoly::fromTerms(m_ring, std::move(terms));
}

// ---------------------------------------------------------------------------
// Free functions

MultiPoly mulPoly(const MultiPoly &p, const MultiPoly &q)
{
    return p * q;
}

MultiPoly derivative(const MultiPoly &p, std::string_view var)
{
    const std::size_t v = p.ring()->requireIndex(var);
    std::vector<Term> out;
    for (std::size_t i = 0; i < p.termCount(); ++i) {
        auto e = p.exponents(i);
        if (e[v] < 0) {
            throw LaurentError("derivative in '" + std::string(var) + "' of a term with negative exponent");
        }
        if (e[v] == 0) {
            continue;
        }
        Term t{ExponentVector(e.begin(), e.end()), p.coefficient(i) * e[v]};
        t.exponents[v] -= 1;
        out.push_back(std::move(t));
    }
    return MultiPoly::fromTerms(p.ring(), std::move(out));
}

namespace
{

// Inverse of a single-term polynomial with a unit coefficient.
MultiPoly invertMonomial(const MultiPoly &m)
{
    if (m.termCount() != 1) {
        throw InputError("negative power of a value that is not a monomial");
    }
    const auto &dom = m.ring()->domain();
    auto e = m.exponents(0);
    ExponentVector neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        neg[i] = -e[i];
    }
    return MultiPoly::monomial(m.ring(), neg, dom.inverse(m.coefficient(0)));
}

} // namespace

MultiPoly evaluatePoly(const MultiPoly &p, const Assignment &assignment, const RingPtr &target)
{
    const auto &src = *p.ring();
    const std::size_t n = src.arity();
    // Per source variable: the value in the target ring (or empty if unused).
    std::vector<std::vector<MultiPoly>> posPowers(n), negPowers(n);
    std::vector<std::optional<MultiPoly>> value(n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto &name = src.variable(v);
        if (auto it = assignment.find(name); it != assignment.end()) {
            value[v] = changeRing(it->second, target);
        } else if (target->indexOf(name)) {
            value[v] = MultiPoly::variable(target, name);
        }
    }
    for (const auto &[name, val] : assignment) {
        if (!src.indexOf(name)) {
            throw InputError("assignment to unknown variable '" + name + "'");
        }
    }
    auto power = [&](std::size_t v, Exponent e) -> const MultiPoly & {
        auto &cache = e >= 0 ? posPowers[v] : negPowers[v];
        const std::size_t k = static_cast<std::size_t>(e >= 0 ? e : -e);
        if (cache.empty()) {
            cache.push_back(MultiPoly::constant(target, 1));
            cache.push_back(e >= 0 ? *value[v] : invertMonomial(*value[v]));
        }
        while (cache.size() <= k) {
            cache.push_back(cache.back() * cache[1]);
        }
        return cache[k];
    };

    PolyBuilder acc(target);
    const auto &dom = target->domain();
    for (std::size_t i = 0; i < p.termCount(); ++i) {
        auto e = p.exponents(i);
        MultiPoly term = MultiPoly::constant(target, dom.normalize(p.coefficient(i)));
        for (std::size_t v = 0; v < n && !term.isZero(); ++v) {
            if (e[v] == 0) {
                continue;
            }
            if (!value[v]) {
                throw InputError("unassigned variable '" + src.variable(v) + "' remains");
            }
            term *= power(v, e[v]);
        }
        acc.add(term);
    }
    return acc.build();
}

mpq_class evaluateScalar(const MultiPoly &p, const std::map<std::string, mpq_class, std::less<>> &values,
                         const CoefficientDomain &domain)
{
    const auto &src = *p.ring();
    const std::size_t n = src.arity();
    std::vector<std::optional<mpq_class>> val(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (auto it = values.find(src.variable(v)); it != values.end()) {
            val[v] = domain.normalize(it->second);
        }
    }
    std::vector<std::vector<mpq_class>> cache(n);
    auto power = [&](std::size_t v, Exponent e) -> mpq_class {
        if (!val[v]) {
            throw InputError("unassigned variable '" + src.variable(v) + "' remains");
        }
        if (e < 0) {
            mpq_class inv = domain.inverse(*val[v]);
            mpq_class r = 1;
            for (Exponent k = 0; k < -e; ++k) {
                r = domain.normalize(r * inv);
            }
            return r;
        }
        auto &c = cache[v];
        if (c.empty()) {
            c.push_back(1);
        }
        while (c.size() <= static_cast<std::size_t>(e)) {
            c.push_back(domain.normalize(c.back() * *val[v]));
        }
        return c[static_cast<std::size_t>(e)];
    };
    mpq_class sum = 0;
    for (std::size_t i = 0; i < p.termCount(); ++i) {
        auto e = p.exponents(i);
        mpq_class t = domain.normalize(p.coefficient(i));
        for (std::size_t v = 0; v < n && t != 0; ++v) {
            if (e[v] != 0) {
                t = domain.normalize(t * power(v, e[v]));
            }
        }
        sum = domain.normalize(sum + t);
    }
    return sum;
}

MultiPoly changeRing(const MultiPoly &p, const RingPtr &target)
{
    if (p.ring() == target || *p.ring() == *target) {
        return p;
    }
    const auto &src = *p.ring();
    std::vector<std::optional<std::size_t>> map(src.arity());
    for (std::size_t v = 0; v < src.arity(); ++v) {
        map[v] = target->indexOf(src.variable(v));
    }
    std::vector<Term> terms;
    terms.reserve(p.termCount());
    for (std::size_t i = 0; i < p.termCount(); ++i) {
        auto e = p.exponents(i);
        Term t{ExponentVector(target->arity(), 0), target->domain().normalize(p.coefficient(i))};
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) {
                continue;
            }
            if (!map[v]) {
                throw InputError("variable '" + src.variable(v) + "' does not exist in the target ring");
            }
            t.exponents[*map[v]] = e[v];
        }
        terms.push_back(std::move(t));
    }
    return MultiPoly::fromTerms(target, std::move(terms));
}

MultiPoly primitivePart(const MultiPoly &p)
{
    if (p.isZero()) {
        throw InputError("primitive part of the zero polynomial");
    }
    if (p.ring()->domain().isPrimeField()) {
        throw DomainError("primitive part is defined over ZZ or QQ only");
    }
    mpz_class den = 1, num = 0;
    for (std::size_t i = 0; i < p.termCount(); ++i) {
        const auto &c = p.coefficient(i);
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    }
    mpq_class factor(den, num);
    factor.canonicalize();
    if (p.leadingCoefficient() < 0) {
        factor = -factor;
    }
    return p.scaled(factor);
}

MultiPoly makeMonic(const MultiPoly &p)
{
    if (p.isZero()) {
        throw InputError("monic normalization of the zero polynomial");
    }
    const auto &dom = p.ring()->domain();
    if (!dom.isField()) {
        throw DomainError("monic normalization needs a field");
    }
    return p.scaled(dom.inverse(p.leadingCoefficient()));
}

Degree degreeInGroup(const MultiPoly &p, const std::vector<std::string> &vars)
{
    std::vector<std::size_t> idx;
    for (const auto &v : vars) {
        idx.push_back(p.ring()->requireIndex(v));
    }
    if (p.isZero()) {
        return Degree::minusInfinity();
    }
    std::int64_t best = 0;
    for (std::size_t i = 0; i < p.termCount(); ++i) {
        auto e = p.exponents(i);
        std::int64_t d = 0;
        for (auto v : idx) {
            d += e[v];
        }
        best = i == 0 ? d : std::max(best, d);
    }
    return Degree::of(best);
}

Degree totalDegree(const MultiPoly &p)
{
    return degreeInGroup(p, p.ring()->variables());
}

MultiPoly divideExact(const MultiPoly &p, const MultiPoly &q)
{
    if (q.isZero()) {
        throw InputError("division by the zero polynomial");
    }
    if (!(*p.ring() == *q.ring())) {
        throw RingMismatch("ring mismatch in exact division");
    }
    const auto &dom = p.ring()->domain();
    const std::size_t n = p.arity();
    auto qe = q.exponents(0);
    const mpq_class &qc = q.coefficient(0);
    MultiPoly r = p;
    PolyBuilder quot(p.ring());
    ExponentVector e(n);
    while (!r.isZero()) {
        auto re = r.exponents(0);
        for (std::size_t v = 0; v < n; ++v) {
            e[v] = re[v] - qe[v];
            if (e[v] < 0 && isPolynomial(p) && isPolynomial(q)) {
                throw InputError("inexact polynomial division");
            }
        }
        mpq_class c;
        if (dom.isPrimeField()) {
            c = dom.normalize(r.coefficient(0) * dom.inverse(qc));
        } else {
            c = r.coefficient(0) / qc;
            if (dom.kind() == DomainKind::Integers && c.get_den() != 1) {
                throw InputError("inexact polynomial division");
            }
        }
        quot.add(e, c);
        r -= q.shifted(e).scaled(c);
    }
    return quot.build();
}

bool isPolynomial(const MultiPoly &p)
{
    for (std::size_t i = 0; i < p.termCount(); ++i) {
        for (auto x : p.exponents(i)) {
            if (x < 0) {
                return false;
            }
        }
    }
    return true;
}

std::vector<SplitTerm> splitByVariables(const MultiPoly &p, const std::vector<std::string> &mainVars,
                                        const RingPtr &paramRing)
{
    const auto &src = *p.ring();
    std::vector<std::size_t> mainIdx;
    for (const auto &v : mainVars) {
        mainIdx.push_back(src.requireIndex(v));
    }
    std::vector<std::optional<std::size_t>> paramIdx(src.arity());
    for (std::size_t v = 0; v < src.arity(); ++v) {
        if (std::find(mainIdx.begin(), mainIdx.end(), v) == mainIdx.end()) {
            paramIdx[v] = paramRing->indexOf(src.variable(v));
        }
    }
    std::map<ExponentVector, PolyBuilder> groups;
    ExponentVector pe(paramRing->arity());
    for (std::size_t i = 0; i < p.termCount(); ++i) {
        auto e = p.exponents(i);
        ExponentVector me(mainIdx.size());
        for (std::size_t k = 0; k < mainIdx.size(); ++k) {
            me[k] = e[mainIdx[k]];
        }
        std::fill(pe.begin(), pe.end(), 0);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0 || std::find(mainIdx.begin(), mainIdx.end(), v) != mainIdx.end()) {
                continue;
            }
            if (!paramIdx[v]) {
                throw InputError("variable '" + src.variable(v) + "' missing from the parameter ring");
            }
            pe[*paramIdx[v]] = e[v];
        }
        auto it = groups.try_emplace(me, paramRing).first;
        it->second.add(pe, paramRing->domain().normalize(p.coefficient(i)));
    }
    std::vector<SplitTerm> out;
    for (auto &[e, b] : groups) {
        MultiPoly c = b.build();
        if (!c.isZero()) {
            out.push_back({e, std::move(c)});
        }
    }
    return out;
}

} // namespace sparseres

#include <sparseres/multidim.hpp>

#include <algorithm>
#include <numeric>

#include <sparseres/errors.hpp>

namespace sparseres
{

std::size_t checkShape(const Shape &shape)
{
    if (shape.empty()) {
        throw InputError("a multidimensional matrix needs at least one dimension");
    }
    std::size_t n = 1;
    for (auto d : shape) {
        if (d == 0) {
            throw InputError("matrix dimensions must be at least 1");
        }
        n *= d;
    }
    return n;
}

namespace
{

std::vector<std::size_t> stridesOf(const Shape &shape)
{
    std::vector<std::size_t> s(shape.size(), 1);
    for (std::size_t t = shape.size(); t-- > 1;) {
        s[t - 1] = s[t] * shape[t];
    }
    return s;
}

std::string shapeText(const Shape &s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "x" : "") + std::to_string(s[i]);
    }
    return out;
}

} // namespace

MultidimMatrix::MultidimMatrix(Shape shape, std::vector<MultiPoly> entries)
    : m_shape(std::move(shape)), m_strides(stridesOf(m_shape)), m_ring(nullptr), m_entries(std::move(entries))
{
    const std::size_t n = checkShape(m_shape);
    if (m_entries.size() != n) {
        throw InputError("shape " + shapeText(m_shape) + " needs " + std::to_string(n) + " entries, got "
                         + std::to_string(m_entries.size()));
    }
    m_ring = m_entries.front().ring();
    for (const auto &e : m_entries) {
        if (!(*e.ring() == *m_ring)) {
            throw RingMismatch("matrix entries live in different rings");
        }
    }
}

MultidimMatrix::MultidimMatrix(Shape shape, RingPtr ring)
    : m_shape(std::move(shape)), m_strides(stridesOf(m_shape)), m_ring(std::move(ring))
{
    m_entries.assign(checkShape(m_shape), MultiPoly(m_ring));
}

std::size_t MultidimMatrix::flatIndex(std::span<const std::size_t> index) const
{
    if (index.size() != m_shape.size()) {
        throw InputError("index of the wrong length");
    }
    std::size_t f = 0;
    for (std::size_t t = 0; t < index.size(); ++t) {
        if (index[t] >= m_shape[t]) {
            throw InputError("index out of range");
        }
        f += index[t] * m_strides[t];
    }
    return f;
}

void MultidimMatrix::set(std::span<const std::size_t> index, MultiPoly value)
{
    if (!(*value.ring() == *m_ring)) {
        throw RingMismatch("matrix entry from a different ring");
    }
    m_entries[flatIndex(index)] = std::move(value);
}

bool MultidimMatrix::isNumeric() const
{
    return std::all_of(m_entries.begin(), m_entries.end(), [](const MultiPoly &p) { return p.isConstant(); });
}

bool operator==(const MultidimMatrix &a, const MultidimMatrix &b)
{
    return a.m_shape == b.m_shape && *a.m_ring == *b.m_ring && a.m_entries == b.m_entries;
}

bool nextIndex(std::vector<std::size_t> &index, const Shape &shape)
{
    for (std::size_t t = shape.size(); t-- > 0;) {
        if (++index[t] < shape[t]) {
            return true;
        }
        index[t] = 0;
    }
    return false;
}

std::string entryName(std::span<const std::size_t> index, const std::string &stem)
{
    std::string s = stem;
    for (auto i : index) {
        s += '_' + std::to_string(i);
    }
    return s;
}

MultidimMatrix genericMultidimMatrix(const Shape &shape, const CoefficientDomain &domain, const std::string &stem)
{
    checkShape(shape);
    std::vector<std::string> names;
    std::vector<std::size_t> idx(shape.size(), 0);
    do {
        names.push_back(entryName(idx, stem));
    } while (nextIndex(idx, shape));
    auto ring = makeRing(names, domain);
    std::vector<MultiPoly> entries;
    entries.reserve(names.size());
    for (const auto &n : names) {
        entries.push_back(MultiPoly::variable(ring, n));
    }
    return MultidimMatrix(shape, std::move(entries));
}

std::uint64_t SplitMix64::next() noexcept
{
    std::uint64_t z = (m_state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept
{
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

MultidimMatrix randomMultidimMatrix(const Shape &shape, const CoefficientDomain &domain, std::uint64_t seed)
{
    const std::size_t n = checkShape(shape);
    auto ring = makeRing({}, domain);
    SplitMix64 rng(seed);
    std::vector<MultiPoly> entries;
    entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class c;
        if (domain.isPrimeField()) {
            c = static_cast<unsigned long>(rng.below(domain.modulus()));
        } else {
            c = static_cast<long>(rng.below(201)) - 100;
        }
        entries.push_back(MultiPoly::constant(ring, c));
    }
    return MultidimMatrix(shape, std::move(entries));
}

namespace
{

void checkPermutation(const std::vector<std::size_t> &sigma, std::size_t r)
{
    if (sigma.size() != r) {
        throw InputError("permutation of the wrong length");
    }
    std::vector<bool> seen(r, false);
    for (auto s : sigma) {
        if (s >= r || seen[s]) {
            throw InputError("not a permutation");
        }
        seen[s] = true;
    }
}

} // namespace

MultidimMatrix permuteMatrix(const MultidimMatrix &m, const std::vector<std::size_t> &sigma)
{
    const std::size_t r = m.dimensions();
    checkPermutation(sigma, r);
    Shape shape(r);
    for (std::size_t t = 0; t < r; ++t) {
        shape[sigma[t]] = m.shape()[t];
    }
    std::vector<MultiPoly> entries;
    entries.reserve(m.size());
    std::vector<std::size_t> i(r, 0), j(r);
    do {
        for (std::size_t t = 0; t < r; ++t) {
            j[t] = i[sigma[t]];
        }
        entries.push_back(m[j]);
    } while (nextIndex(i, shape));
    return MultidimMatrix(shape, std::move(entries));
}

std::vector<std::size_t> composePermutations(const std::vector<std::size_t> &tau, const std::vector<std::size_t> &sigma)
{
    checkPermutation(tau, tau.size());
    checkPermutation(sigma, tau.size());
    std::vector<std::size_t> out(sigma.size());
    for (std::size_t t = 0; t < sigma.size(); ++t) {
        out[t] = tau[sigma[t]];
    }
    return out;
}

std::vector<std::size_t> invertPermutation(const std::vector<std::size_t> &sigma)
{
    checkPermutation(sigma, sigma.size());
    std::vector<std::size_t> inv(sigma.size());
    for (std::size_t t = 0; t < sigma.size(); ++t) {
        inv[sigma[t]] = t;
    }
    return inv;
}

MultidimMatrix convolve(const MultidimMatrix &a, const MultidimMatrix &b)
{
    if (!(*a.ring() == *b.ring())) {
        throw RingMismatch("convolution of matrices over different rings");
    }
    const std::size_t inner = a.shape().back();
    if (b.shape().front() != inner) {
        throw InputError("convolution needs the last dimension of the left matrix (" + std::to_string(inner)
                         + ") to equal the first dimension of the right one (" + std::to_string(b.shape().front())
                         + ")");
    }
    Shape left(a.shape().begin(), a.shape().end() - 1);
    Shape right(b.shape().begin() + 1, b.shape().end());
    Shape shape = left;
    shape.insert(shape.end(), right.begin(), right.end());
    if (shape.empty()) {
        shape.push_back(1);
    }
    const std::size_t nl = std::accumulate(left.begin(), left.end(), std::size_t{1}, std::multiplies<>());
    const std::size_t nr = std::accumulate(right.begin(), right.end(), std::size_t{1}, std::multiplies<>());
    std::vector<MultiPoly> entries;
    entries.reserve(nl * nr);
    for (std::size_t l = 0; l < nl; ++l) {
        for (std::size_t q = 0; q < nr; ++q) {
            MultiPoly s(a.ring());
            for (std::size_t t = 0; t < inner; ++t) {
                s += a.at(l * inner + t) * b.at(t * nr + q);
            }
            entries.push_back(std::move(s));
        }
    }
    return MultidimMatrix(shape, std::move(entries));
}

MultidimMatrix identityMatrix(std::size_t n, const CoefficientDomain &domain)
{
    auto ring = makeRing({}, domain);
    MultidimMatrix id({n, n}, ring);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t idx[] = {i, i};
        id.set(idx, MultiPoly::constant(ring, 1));
    }
    return id;
}

MultidimMatrix actOnDimension(const MultidimMatrix &m, std::size_t dim, const MultidimMatrix &g)
{
    if (dim >= m.dimensions()) {
        throw InputError("dimension out of range");
    }
    const std::size_t k = m.shape()[dim];
    if (g.dimensions() != 2 || g.shape()[0] != k || g.shape()[1] != k) {
        throw InputError("acting matrix must be square of the dimension's size");
    }
    if (!(*g.ring() == *m.ring())) {
        throw RingMismatch("acting matrix over a different ring");
    }
    MultidimMatrix out(m.shape(), m.ring());
    std::vector<std::size_t> idx(m.dimensions(), 0), src;
    do {
        MultiPoly s(m.ring());
        src = idx;
        for (std::size_t j = 0; j < k; ++j) {
            src[dim] = j;
            std::size_t gi[] = {idx[dim], j};
            s += g[gi] * m[src];
        }
        out.set(idx, std::move(s));
    } while (nextIndex(idx, m.shape()));
    return out;
}

MultidimMatrix scaleMatrix(const MultidimMatrix &m, const MultiPoly &lambda)
{
    std::vector<MultiPoly> entries;
    entries.reserve(m.size());
    for (const auto &e : m.entries()) {
        entries.push_back(e * lambda);
    }
    return MultidimMatrix(m.shape(), std::move(entries));
}

MultilinearForm toMultilinearForm(const MultidimMatrix &m)
{
    std::vector<std::vector<std::string>> groups;
    std::vector<std::string> front;
    for (std::size_t j = 0; j < m.dimensions(); ++j) {
        std::vector<std::string> g;
        for (std::size_t i = 0; i < m.shape()[j]; ++i) {
            g.push_back("x" + std::to_string(j + 1) + "_" + std::to_string(i));
        }
        front.insert(front.end(), g.begin(), g.end());
        groups.push_back(std::move(g));
    }
    auto ring = extendRing(m.ring(), front, {});
    const std::size_t nf = front.size();
    PolyBuilder b(ring);
    std::vector<std::size_t> idx(m.dimensions(), 0);
    std::vector<std::size_t> offset(m.dimensions(), 0);
    for (std::size_t j = 1; j < m.dimensions(); ++j) {
        offset[j] = offset[j - 1] + m.shape()[j - 1];
    }
    do {
        const auto &c = m[idx];
        for (std::size_t t = 0; t < c.termCount(); ++t) {
            ExponentVector e(ring->arity(), 0);
            auto ce = c.exponents(t);
            std::copy(ce.begin(), ce.end(), e.begin() + static_cast<std::ptrdiff_t>(nf));
            for (std::size_t j = 0; j < idx.size(); ++j) {
                e[offset[j] + idx[j]] = 1;
            }
            b.add(e, c.coefficient(t));
        }
    } while (nextIndex(idx, m.shape()));
    return MultilinearForm{std::move(groups), b.build(), m.ring()};
}

MultidimMatrix fromMultilinearForm(const MultilinearForm &f)
{
    Shape shape;
    std::vector<std::string> groupVars;
    for (const auto &g : f.groups) {
        shape.push_back(g.size());
        groupVars.insert(groupVars.end(), g.begin(), g.end());
    }
    const RingPtr &pr = f.poly.ring();
    std::vector<std::size_t> gi;
    for (const auto &v : groupVars) {
        gi.push_back(pr->requireIndex(v));
    }
    MultidimMatrix m(shape, f.coefficientRing);
    std::vector<PolyBuilder> builders(m.size(), PolyBuilder(f.coefficientRing));
    const auto &cv = f.coefficientRing->variables();
    std::vector<std::size_t> ci;
    for (const auto &v : cv) {
        ci.push_back(pr->requireIndex(v));
    }
    for (std::size_t t = 0; t < f.poly.termCount(); ++t) {
        auto e = f.poly.exponents(t);
        std::vector<std::size_t> idx;
        std::size_t pos = 0;
        for (std::size_t j = 0; j < f.groups.size(); ++j) {
            std::size_t found = f.groups[j].size();
            for (std::size_t i = 0; i < f.groups[j].size(); ++i, ++pos) {
                Exponent x = e[gi[pos]];
                if (x == 0) {
                    continue;
                }
                if (x != 1 || found != f.groups[j].size()) {
                    throw InputError("form is not multilinear in group " + std::to_string(j + 1));
                }
                found = i;
            }
            if (found == f.groups[j].size()) {
                throw InputError("form is not multilinear in group " + std::to_string(j + 1));
            }
            idx.push_back(found);
        }
        std::size_t used = 0;
        for (Exponent x : e) {
            used += x != 0;
        }
        ExponentVector ce(cv.size());
        std::size_t paramUsed = 0;
        for (std::size_t k = 0; k < cv.size(); ++k) {
            ce[k] = e[ci[k]];
            paramUsed += ce[k] != 0;
        }
        if (used != f.groups.size() + paramUsed) {
            throw InputError("form uses variables outside its groups and coefficient ring");
        }
        builders[m.flatIndex(idx)].add(ce, f.poly.coefficient(t));
    }
    std::vector<MultiPoly> entries;
    entries.reserve(m.size());
    for (auto &b : builders) {
        entries.push_back(b.build());
    }
    return MultidimMatrix(shape, std::move(entries));
}

} // namespace sparseres

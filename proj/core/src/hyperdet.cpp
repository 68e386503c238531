#include <sparseres/hyperdet.hpp>

#include <algorithm>
#include <map>
#include <numeric>

#include <sparseres/discriminant.hpp>
#include <sparseres/errors.hpp>
#include <sparseres/linalg.hpp>

namespace sparseres
{

namespace
{

Shape squeezeShape(const Shape &shape)
{
    checkShape(shape);
    Shape out;
    for (auto d : shape) {
        if (d > 1) {
            out.push_back(d);
        }
    }
    return out;
}

MultidimMatrix squeeze(const MultidimMatrix &m)
{
    Shape s = squeezeShape(m.shape());
    if (s.size() == m.dimensions()) {
        return m;
    }
    if (s.empty()) {
        s.push_back(1);
    }
    return MultidimMatrix(s, m.entries());
}

std::string shapeText(const Shape &s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "x" : "") + std::to_string(s[i]);
    }
    return out;
}

// Index of the dimension that differs from the other two (the last one if
// all agree) for m×m×c shapes; r when the shape is not of that form.
std::size_t shortDimension(const Shape &s)
{
    if (s.size() != 3) {
        return s.size();
    }
    for (std::size_t c = 3; c-- > 0;) {
        const std::size_t a = (c + 1) % 3, b = (c + 2) % 3;
        if (s[a] == s[b] && (s[c] == 2 || s[c] == 3)) {
            return c;
        }
    }
    return s.size();
}

// Moves dimension `d` to position `to`, keeping the others in order.
std::vector<std::size_t> moveDimension(std::size_t r, std::size_t d, std::size_t to)
{
    std::vector<std::size_t> rest;
    for (std::size_t t = 0; t < r; ++t) {
        if (t != d) {
            rest.push_back(t);
        }
    }
    std::vector<std::size_t> sigma(r);
    sigma[d] = to;
    for (std::size_t i = 0, pos = 0; i < rest.size(); ++i, ++pos) {
        if (pos == to) {
            ++pos;
        }
        sigma[rest[i]] = pos;
    }
    return sigma;
}

std::vector<std::string> freshNames(const RingPtr &ring, const std::string &stem, std::size_t count)
{
    std::vector<std::string> out;
    RingPtr r = ring;
    for (std::size_t i = 0; i < count; ++i) {
        auto name = freshVariable(*r, stem + std::to_string(i));
        out.push_back(name);
        r = extendRing(r, {}, {name});
    }
    return out;
}

} // namespace

bool detExists(const Shape &shape)
{
    checkShape(shape);
    std::size_t sum = 0, mx = 0;
    for (auto d : shape) {
        sum += d - 1;
        mx = std::max(mx, d - 1);
    }
    return 2 * mx <= sum;
}

bool isBoundaryShape(const Shape &shape)
{
    Shape s = squeezeShape(shape);
    if (s.size() < 2) {
        return false;
    }
    std::size_t sum = 0, mx = 0;
    for (auto d : s) {
        sum += d - 1;
        mx = std::max(mx, d - 1);
    }
    return 2 * mx == sum;
}

bool isSchlafliShape(const Shape &shape)
{
    Shape s = squeezeShape(shape);
    if (s.size() == 4) {
        return std::all_of(s.begin(), s.end(), [](std::size_t d) { return d == 2; });
    }
    return shortDimension(s) < s.size();
}

mpz_class detDegree(const Shape &shape)
{
    if (!detExists(shape)) {
        return 0;
    }
    Shape s = squeezeShape(shape);
    const std::size_t r = s.size();
    // Dense truncated series over the box Π [0, k_j].
    std::vector<std::size_t> stride(r, 1);
    std::size_t total = 1;
    for (std::size_t t = r; t-- > 0;) {
        stride[t] = total;
        total *= s[t];
    }
    // g = Σ_{i>=2} (i-1) e_i: one squarefree term per subset of size >= 2.
    // The coefficient (i-2) instead would give N(1,1) = 0 and
    // N(1,1,1,1) = 4; (i-1) reproduces the 2x2 determinant, the boundary
    // factorial formula and degree 24 for 2x2x2x2.
    std::vector<std::pair<std::size_t, long>> g;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        const int bits = __builtin_popcountll(mask);
        if (bits < 2) {
            continue;
        }
        g.emplace_back(mask, bits - 1);
    }
    auto multiplyByG = [&](const std::vector<mpz_class> &p) {
        std::vector<mpz_class> out(total);
        std::vector<std::size_t> idx(r, 0);
        for (std::size_t f = 0; f < total; ++f, nextIndex(idx, s)) {
            if (p[f] == 0) {
                continue;
            }
            for (const auto &[mask, c] : g) {
                std::size_t to = f;
                bool inside = true;
                for (std::size_t t = 0; t < r && inside; ++t) {
                    if (mask >> t & 1) {
                        inside = idx[t] + 1 < s[t];
                        to += stride[t];
                    }
                }
                if (inside) {
                    out[to] += p[f] * c;
                }
            }
        }
        return out;
    };
    std::vector<mpz_class> power(total);
    power[0] = 1;
    mpz_class coeff = 0;
    for (long m = 0;; ++m) {
        coeff += power[total - 1] * (m + 1);
        power = multiplyByG(power);
        if (std::all_of(power.begin(), power.end(), [](const mpz_class &x) { return x == 0; })) {
            break;
        }
    }
    return coeff;
}

DetMethod parseDetMethod(std::string_view name)
{
    if (name == "auto") {
        return DetMethod::Auto;
    }
    if (name == "schlafli") {
        return DetMethod::Schlafli;
    }
    if (name == "boundary") {
        return DetMethod::Boundary;
    }
    if (name == "discriminant") {
        return DetMethod::Discriminant;
    }
    throw InputError("unknown method '" + std::string(name) + "'");
}

std::string detMethodName(DetMethod m)
{
    switch (m) {
    case DetMethod::Auto:
        return "auto";
    case DetMethod::Schlafli:
        return "schlafli";
    case DetMethod::Boundary:
        return "boundary";
    case DetMethod::Discriminant:
        return "discriminant";
    }
    return "auto";
}

MultiPoly schlafliDet(const MultidimMatrix &input)
{
    const MultidimMatrix m = squeeze(input);
    const Shape &s = m.shape();
    const std::size_t r = s.size();
    std::size_t shortDim = shortDimension(s);
    const bool four = r == 4 && std::all_of(s.begin(), s.end(), [](std::size_t d) { return d == 2; });
    if (four) {
        shortDim = 3;
    }
    if (shortDim >= r) {
        throw UnsupportedShape("shape " + shapeText(input.shape()) + " is not m×m×2, m×m×3 or 2×2×2×2");
    }
    const std::size_t c = s[shortDim];
    const MultidimMatrix p = permuteMatrix(m, moveDimension(r, shortDim, r - 1));

    // Slice along the last dimension into a matrix of linear forms in z.
    const auto zs = freshNames(m.ring(), "z", c);
    auto ring = extendRing(m.ring(), {}, zs);
    Shape sub(p.shape().begin(), p.shape().end() - 1);
    std::vector<MultiPoly> entries;
    for (std::size_t f = 0; f < p.size() / c; ++f) {
        MultiPoly e(ring);
        for (std::size_t i = 0; i < c; ++i) {
            e += changeRing(p.at(f * c + i), ring) * MultiPoly::variable(ring, zs[i]);
        }
        entries.push_back(std::move(e));
    }
    MultidimMatrix slice(sub, std::move(entries));
    MultiPoly form(ring);
    if (sub.size() == 2) {
        PolyMatrix a(sub[0], std::vector<MultiPoly>(sub[1], MultiPoly(ring)));
        for (std::size_t i = 0; i < sub[0]; ++i) {
            for (std::size_t j = 0; j < sub[1]; ++j) {
                a[i][j] = slice.at(i * sub[1] + j);
            }
        }
        form = bareissDeterminant(std::move(a));
    } else {
        form = schlafliDet(slice);
    }
    if (form.isZero()) {
        return MultiPoly(m.ring());
    }
    if (c == 2) {
        return binaryFormDiscriminant(form, zs[0], zs[1]);
    }
    // Ternary form of degree m: dense discriminant of its dehomogenization.
    const int deg = static_cast<int>(s[(shortDim + 1) % 3]);
    Assignment dehom{{zs[0], MultiPoly::constant(ring, 1)}};
    MultiPoly affine = evaluatePoly(form, dehom, dropVariables(ring, {zs[0]}));
    if (deg == 3) {
        if (!m.isNumeric()) {
            // Degree 36 in 27 entries: far beyond what substitution can expand.
            throw UnsupportedShape("symbolic 3x3x3 hyperdeterminant is not supported; use numeric entries");
        }
        const SupportSet cubic = denseSupport(2, 3);
        const RingPtr scalars = dropVariables(affine.ring(), {zs[1], zs[2]});
        Assignment coeffs;
        for (std::size_t j = 0; j < cubic.size(); ++j) {
            coeffs.emplace("a" + std::to_string(j), MultiPoly(scalars));
        }
        for (auto &t : splitByVariables(affine, {zs[1], zs[2]}, scalars)) {
            coeffs.at("a" + std::to_string(*cubic.indexOf(t.exponents))) = std::move(t.coefficient);
        }
        return evaluatePoly(genericTernaryCubicDiscriminant(), coeffs, scalars);
    }
    auto op = denseDiscriminant(2, deg);
    return evaluateDiscriminant(*op, affine, {zs[1], zs[2]});
}

std::vector<std::vector<MultiPoly>> boundaryMatrix(const MultidimMatrix &input)
{
    const MultidimMatrix m0 = squeeze(input);
    if (!isBoundaryShape(m0.shape())) {
        throw NotBoundaryShape("shape " + shapeText(input.shape()) + " is not of boundary format");
    }
    const std::size_t r = m0.dimensions();
    const auto largest = static_cast<std::size_t>(
        std::max_element(m0.shape().begin(), m0.shape().end()) - m0.shape().begin());
    const MultidimMatrix m = permuteMatrix(m0, moveDimension(r, largest, 0));
    const Shape &s = m.shape();
    const std::size_t groups = r - 1;
    std::vector<int> k(groups), md(groups);
    for (std::size_t j = 0; j < groups; ++j) {
        k[j] = static_cast<int>(s[j + 1]) - 1;
    }
    for (std::size_t j = 0; j < groups; ++j) {
        md[j] = std::accumulate(k.begin() + static_cast<std::ptrdiff_t>(j) + 1, k.end(), 0);
    }
    // Monomials of multidegree `deg` as concatenated exponent vectors.
    auto monomials = [&](const std::vector<int> &deg) {
        std::vector<ExponentVector> out{ExponentVector{}};
        for (std::size_t j = 0; j < groups; ++j) {
            std::vector<ExponentVector> next;
            const SupportSet box = denseSupport(static_cast<std::size_t>(k[j]), std::max(deg[j], 1));
            for (const auto &e : box.columns()) {
                int sum = std::accumulate(e.begin(), e.end(), 0);
                if (sum > deg[j]) {
                    continue;
                }
                ExponentVector full{deg[j] - sum};
                full.insert(full.end(), e.begin(), e.end());
                for (const auto &prefix : out) {
                    ExponentVector v = prefix;
                    v.insert(v.end(), full.begin(), full.end());
                    next.push_back(std::move(v));
                }
            }
            out = std::move(next);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto source = monomials(md);
    std::vector<int> tdeg = md;
    for (auto &d : tdeg) {
        ++d;
    }
    const auto target = monomials(tdeg);
    const std::size_t rows0 = s[0];
    if (rows0 * source.size() != target.size()) {
        throw InternalError("boundary construction: source size " + std::to_string(rows0 * source.size())
                            + " differs from target size " + std::to_string(target.size()));
    }
    std::map<ExponentVector, std::size_t> targetIndex;
    for (std::size_t t = 0; t < target.size(); ++t) {
        targetIndex.emplace(target[t], t);
    }
    std::vector<std::size_t> offset(groups, 0);
    for (std::size_t j = 1; j < groups; ++j) {
        offset[j] = offset[j - 1] + static_cast<std::size_t>(k[j - 1]) + 1;
    }
    const std::size_t n = target.size();
    PolyMatrix a(n, std::vector<MultiPoly>(n, MultiPoly(m.ring())));
    std::vector<std::size_t> idx(r, 0);
    do {
        const MultiPoly &entry = m[idx];
        if (entry.isZero()) {
            continue;
        }
        for (std::size_t g = 0; g < source.size(); ++g) {
            ExponentVector e = source[g];
            for (std::size_t j = 0; j < groups; ++j) {
                ++e[offset[j] + idx[j + 1]];
            }
            a[targetIndex.at(e)][idx[0] * source.size() + g] = entry;
        }
    } while (nextIndex(idx, s));
    return a;
}

MultiPoly boundaryDet(const MultidimMatrix &m)
{
    return determinant(boundaryMatrix(m));
}

MultiPoly discriminantDet(const MultidimMatrix &input)
{
    const MultidimMatrix m = squeeze(input);
    if (m.size() > kGenericDiscriminantMaxEntries) {
        throw UnsupportedShape("shape " + shapeText(input.shape())
                               + " is too large for the generic discriminant method");
    }
    const Shape &s = m.shape();
    std::size_t dim = 0;
    for (auto d : s) {
        dim += d - 1;
    }
    std::vector<ExponentVector> cols;
    std::vector<std::size_t> idx(s.size(), 0);
    do {
        ExponentVector e(dim, 0);
        std::size_t off = 0;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (idx[j] > 0) {
                e[off + idx[j] - 1] = 1;
            }
            off += s[j] - 1;
        }
        cols.push_back(std::move(e));
    } while (nextIndex(idx, s));
    SupportSet support(dim, cols);
    auto op = buildSparseDiscriminant(support);
    Assignment assign;
    for (std::size_t f = 0; f < m.size(); ++f) {
        assign.emplace(op->coefficientNames[*support.indexOf(cols[f])], m.at(f));
    }
    return evaluatePoly(op->discriminantPoly, assign, m.ring());
}

namespace
{

// Sign making the boundary determinant of the unit tensor equal to 1.
mpq_class unitSign(const MultidimMatrix &m)
{
    const MultidimMatrix m0 = squeeze(m);
    const Shape &s = m0.shape();
    const auto largest =
        static_cast<std::size_t>(std::max_element(s.begin(), s.end()) - s.begin());
    auto ring = makeRing({}, CoefficientDomain::integers());
    MultidimMatrix u(s, ring);
    std::vector<std::size_t> idx(s.size(), 0);
    do {
        std::size_t sum = 0;
        for (std::size_t t = 0; t < s.size(); ++t) {
            if (t != largest) {
                sum += idx[t];
            }
        }
        if (sum == idx[largest]) {
            u.set(idx, MultiPoly::constant(ring, 1));
        }
    } while (nextIndex(idx, s));
    mpq_class d = boundaryDet(u).constantValue();
    if (d != 1 && d != -1) {
        throw InternalError("unit tensor of shape " + shapeText(s) + " has boundary determinant " + d.get_str());
    }
    return d;
}

} // namespace

MultiPoly hyperdet(const MultidimMatrix &input, DetMethod method)
{
    if (!detExists(input.shape())) {
        throw DetDoesNotExist("no hyperdeterminant for shape " + shapeText(input.shape()));
    }
    const MultidimMatrix m = squeeze(input);
    if (m.size() == 1) {
        return m.at(0);
    }
    const bool numeric = m.isNumeric();
    auto normalize = [&](MultiPoly p) {
        if (numeric || p.isZero() || p.ring()->domain().isPrimeField()) {
            return p;
        }
        return primitivePart(p);
    };
    if (method == DetMethod::Auto) {
        if (m.dimensions() == 2) {
            PolyMatrix a(m.shape()[0], std::vector<MultiPoly>(m.shape()[1], MultiPoly(m.ring())));
            for (std::size_t i = 0; i < m.shape()[0]; ++i) {
                for (std::size_t j = 0; j < m.shape()[1]; ++j) {
                    a[i][j] = m.at(i * m.shape()[1] + j);
                }
            }
            return determinant(a);
        }
        if (isSchlafliShape(m.shape())) {
            method = DetMethod::Schlafli;
        } else if (isBoundaryShape(m.shape())) {
            method = DetMethod::Boundary;
        } else if (m.size() <= kGenericDiscriminantMaxEntries) {
            method = DetMethod::Discriminant;
        } else {
            throw UnsupportedShape("no method handles shape " + shapeText(input.shape()));
        }
    }
    switch (method) {
    case DetMethod::Schlafli:
        return normalize(schlafliDet(m));
    case DetMethod::Boundary: {
        MultiPoly d = boundaryDet(m);
        if (numeric) {
            return d.scaled(unitSign(m));
        }
        return normalize(d);
    }
    case DetMethod::Discriminant:
        return normalize(discriminantDet(m));
    case DetMethod::Auto:
        break;
    }
    throw InternalError("unreachable dispatch");
}

} // namespace sparseres

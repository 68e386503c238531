#include <sparseres/discriminant.hpp>

#include <algorithm>
#include <map>
#include <mutex>

#include <sparseres/errors.hpp>
#include <sparseres/linalg.hpp>
#include <sparseres/multidim.hpp>
#include <sparseres/resultant.hpp>

namespace sparseres
{

namespace
{

std::mutex g_cacheMutex;
std::map<std::string, DiscriminantPtr> g_cache;
std::map<int, MultiPoly> g_binaryCache;

std::string cacheKey(const SupportSet &a, const CoefficientDomain &d)
{
    std::string key = d.name();
    for (const auto &c : a.columns()) {
        key += ';';
        for (auto x : c) {
            key += std::to_string(x) + ',';
        }
    }
    return key;
}

} // namespace

DiscriminantPtr buildSparseDiscriminant(const SupportSet &a, const CoefficientDomain &domain)
{
    if (domain.kind() == DomainKind::Rationals) {
        return buildSparseDiscriminant(a, CoefficientDomain::integers());
    }
    const std::size_t n = a.arity();
    if (a.size() == 0) {
        throw InputError("empty support");
    }
    {
        IntMatrix cols(n);
        for (const auto &c : a.columns()) {
            for (std::size_t v = 0; v < n; ++v) {
                cols[v].push_back(c[v]);
            }
        }
        auto f = smithInvariantFactors(cols);
        if (f.size() != n || std::any_of(f.begin(), f.end(), [](const mpz_class &x) { return x != 1; })) {
            throw ValidationError("the support does not generate the lattice");
        }
    }
    const std::string key = cacheKey(a, domain);
    {
        std::lock_guard lock(g_cacheMutex);
        if (auto it = g_cache.find(key); it != g_cache.end()) {
            return it->second;
        }
    }
    std::vector<std::string> names;
    for (std::size_t j = 0; j < a.size(); ++j) {
        names.push_back("a" + std::to_string(j));
    }
    auto coeffRing = makeRing(names, domain);
    std::vector<std::string> front{"t"};
    for (std::size_t v = 1; v <= n; ++v) {
        front.push_back("x" + std::to_string(v));
    }
    auto ring = extendRing(coeffRing, front, {});
    const auto corner = a.minCorner();
    PolyBuilder b(ring);
    for (std::size_t j = 0; j < a.size(); ++j) {
        ExponentVector e(ring->arity(), 0);
        for (std::size_t v = 0; v < n; ++v) {
            e[1 + v] = a.column(j)[v] - corner[v];
        }
        e[1 + n + j] = 1;
        b.add(e, 1);
    }
    MultiPoly f = b.build();
    std::vector<MultiPoly> gens{f};
    for (std::size_t v = 1; v <= n; ++v) {
        gens.push_back(derivative(f, front[v]));
    }
    ExponentVector te(ring->arity(), 0);
    for (std::size_t v = 0; v <= n; ++v) {
        te[v] = 1;
    }
    gens.push_back(MultiPoly::monomial(ring, te, 1) - MultiPoly::constant(ring, 1));
    GroebnerStats stats;
    Ideal elim = eliminateVars(Ideal(ring, std::move(gens)), n + 1, &stats);
    if (elim.isZero()) {
        throw DualNotHypersurface("the dual variety is not a hypersurface (zero elimination ideal)");
    }
    MultiPoly disc(ring);
    try {
        disc = principalGenerator(elim);
    } catch (const NotPrincipal &e) {
        throw DualNotHypersurface("the dual variety is not a hypersurface (elimination ideal needs "
                                  + std::to_string(e.basisSize()) + " generators)");
    }
    if (disc.isConstant()) {
        throw DualNotHypersurface("the dual variety is empty");
    }
    auto op = std::make_shared<DiscriminantOperator>(
        DiscriminantOperator{a, names, coeffRing, changeRing(disc, coeffRing), stats});
    std::lock_guard lock(g_cacheMutex);
    auto [it, inserted] = g_cache.emplace(key, op);
    return it->second;
}

MultiPoly evaluateDiscriminant(const DiscriminantOperator &op, const MultiPoly &f,
                               const std::vector<std::string> &mainVars)
{
    if (mainVars.size() != op.support.arity()) {
        throw InputError("discriminant operator expects " + std::to_string(op.support.arity()) + " main variables");
    }
    const RingPtr paramRing = dropVariables(f.ring(), mainVars);
    Assignment assign;
    for (auto &st : splitByVariables(f, mainVars, paramRing)) {
        auto j = op.support.indexOf(st.exponents);
        if (!j) {
            std::vector<long> ex(st.exponents.begin(), st.exponents.end());
            throw SupportViolation(0, ex, "polynomial has a monomial outside the support");
        }
        assign.emplace(op.coefficientNames[*j], std::move(st.coefficient));
    }
    for (const auto &name : op.coefficientNames) {
        assign.try_emplace(name, MultiPoly(paramRing));
    }
    return evaluatePoly(op.discriminantPoly, assign, paramRing);
}

DiscriminantPtr denseDiscriminant(std::size_t n, int d, const CoefficientDomain &domain)
{
    SupportSet s = denseSupport(n, d);
    if (s.size() > kDenseDiscriminantMaxSupport) {
        throw UnsupportedShape("dense discriminant of degree " + std::to_string(d) + " in " + std::to_string(n)
                               + " variables exceeds the supported size");
    }
    return buildSparseDiscriminant(s, domain);
}

const MultiPoly &genericBinaryDiscriminant(int d)
{
    if (d < 2) {
        throw InputError("binary discriminant needs degree at least 2");
    }
    std::lock_guard lock(g_cacheMutex);
    if (auto it = g_binaryCache.find(d); it != g_binaryCache.end()) {
        return it->second;
    }
    std::vector<std::string> names{"x"};
    for (int i = 0; i <= d; ++i) {
        names.push_back("a" + std::to_string(i));
    }
    auto ring = makeRing(names, CoefficientDomain::integers());
    MultiPoly g(ring);
    for (int i = 0; i <= d; ++i) {
        g += MultiPoly::variable(ring, names[static_cast<std::size_t>(i) + 1]) * MultiPoly::variable(ring, "x").pow(i);
    }
    MultiPoly res = sylvesterResultant(g, derivative(g, "x"), "x");
    MultiPoly disc = divideExact(res, MultiPoly::variable(ring, names.back()));
    if ((d * (d - 1) / 2) % 2 == 1) {
        disc = -disc;
    }
    auto out = changeRing(disc, dropVariables(ring, {"x"}));
    return g_binaryCache.emplace(d, std::move(out)).first->second;
}

const MultiPoly &genericTernaryCubicDiscriminant()
{
    static const MultiPoly disc = [] {
        // Disc(f) is Res(f_x, f_y, f_z) / 27, and the resultant of three
        // ternary quadrics F_i is -det(M) / 512 where the rows of M are the
        // coefficients of F_0, F_1, F_2 and of the partials of their Jacobian
        // determinant J. Both constants disappear in the primitive part.
        const SupportSet support = denseSupport(2, 3);
        std::vector<std::string> names{"x", "y", "z"};
        for (std::size_t j = 0; j < support.size(); ++j) {
            names.push_back("a" + std::to_string(j));
        }
        auto ring = makeRing(names, CoefficientDomain::integers());
        const std::vector<std::string> xyz{"x", "y", "z"};
        MultiPoly f(ring);
        for (std::size_t j = 0; j < support.size(); ++j) {
            const auto &e = support.column(j);
            f += MultiPoly::variable(ring, names[j + 3]) * MultiPoly::variable(ring, "x").pow(e[0])
                 * MultiPoly::variable(ring, "y").pow(e[1]) * MultiPoly::variable(ring, "z").pow(3 - e[0] - e[1]);
        }
        std::vector<MultiPoly> rows;
        for (const auto &v : xyz) {
            rows.push_back(derivative(f, v));
        }
        PolyMatrix hessian(3, std::vector<MultiPoly>(3, MultiPoly(ring)));
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                hessian[i][j] = derivative(rows[i], xyz[j]);
            }
        }
        const MultiPoly jac = bareissDeterminant(std::move(hessian));
        for (const auto &v : xyz) {
            rows.push_back(derivative(jac, v));
        }
        const auto coeffRing = dropVariables(ring, xyz);
        const std::vector<ExponentVector> quadrics{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
        PolyMatrix m(6, std::vector<MultiPoly>(6, MultiPoly(coeffRing)));
        for (std::size_t i = 0; i < 6; ++i) {
            for (auto &t : splitByVariables(rows[i], xyz, coeffRing)) {
                const auto col = std::find(quadrics.begin(), quadrics.end(), t.exponents) - quadrics.begin();
                m[i][static_cast<std::size_t>(col)] = std::move(t.coefficient);
            }
        }
        return primitivePart(bareissDeterminant(std::move(m)));
    }();
    return disc;
}

MultiPoly binaryFormDiscriminant(const MultiPoly &f, std::string_view x0, std::string_view x1)
{
    if (f.isZero()) {
        throw InputError("discriminant of the zero form");
    }
    const RingPtr &ring = f.ring();
    const std::size_t i0 = ring->requireIndex(x0), i1 = ring->requireIndex(x1);
    const std::vector<std::string> mainVars{std::string(x0), std::string(x1)};
    const RingPtr paramRing = dropVariables(ring, mainVars);
    int d = -1;
    for (std::size_t t = 0; t < f.termCount(); ++t) {
        auto e = f.exponents(t);
        if (e[i0] < 0 || e[i1] < 0) {
            throw LaurentError("binary form with negative exponents");
        }
        const int deg = e[i0] + e[i1];
        if (d >= 0 && deg != d) {
            throw InputError("binary form is not homogeneous");
        }
        d = deg;
    }
    if (d < 2) {
        throw InputError("binary form must have degree at least 2");
    }
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(d) + 1, MultiPoly(paramRing));
    for (auto &st : splitByVariables(f, mainVars, paramRing)) {
        coeffs[static_cast<std::size_t>(st.exponents[0])] = std::move(st.coefficient);
    }
    const auto &dom = ring->domain();
    const bool numeric = paramRing->arity() == 0;
    if (!numeric || d <= 4) {
        const MultiPoly &gen = genericBinaryDiscriminant(d);
        Assignment assign;
        for (int i = 0; i <= d; ++i) {
            assign.emplace("a" + std::to_string(i), coeffs[static_cast<std::size_t>(i)]);
        }
        return evaluatePoly(gen, assign, paramRing);
    }
    // Numeric high degree: one numeric Sylvester determinant. A vanishing
    // leading coefficient is moved away by x1 -> x1 + c*x0, which leaves
    // the discriminant unchanged.
    auto uring = makeRing({"x"}, dom);
    for (long c = 0; c < 8; ++c) {
        // Coefficients of f(x0, x1 + c*x0) as binomial expansions.
        std::vector<mpq_class> b(static_cast<std::size_t>(d) + 1, 0);
        for (int i = 0; i <= d; ++i) {
            const mpq_class ai = coeffs[static_cast<std::size_t>(i)].constantValue();
            if (ai == 0) {
                continue;
            }
            // x0^i (x1 + c x0)^{d-i} = Σ_k C(d-i,k) c^k x0^{i+k} x1^{d-i-k}
            mpz_class binom = 1, cpow = 1;
            for (int k = 0; k <= d - i; ++k) {
                b[static_cast<std::size_t>(i + k)] += ai * binom * cpow;
                binom = binom * (d - i - k) / (k + 1);
                cpow *= c;
            }
        }
        for (auto &x : b) {
            x = dom.normalize(x);
        }
        if (b.back() == 0) {
            continue;
        }
        MultiPoly g(uring);
        for (int i = 0; i <= d; ++i) {
            g += MultiPoly::variable(uring, "x").pow(static_cast<unsigned>(i)).scaled(b[static_cast<std::size_t>(i)]);
        }
        mpq_class res = sylvesterResultant(g, derivative(g, "x"), "x").constantValue();
        mpq_class disc = dom.normalize(dom.isField() ? mpq_class(res * dom.inverse(b.back())) : mpq_class(res / b.back()));
        if ((d * (d - 1) / 2) % 2 == 1) {
            disc = dom.normalize(-disc);
        }
        return MultiPoly::constant(paramRing, disc);
    }
    throw InternalError("binary discriminant: leading coefficient vanished after every coordinate change");
}

} // namespace sparseres

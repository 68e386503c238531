#include <sparseres/resultant.hpp>

#include <map>
#include <mutex>

#include <sparseres/errors.hpp>
#include <sparseres/linalg.hpp>

namespace sparseres
{

namespace
{

std::string cacheKey(const std::string &kind, const std::vector<SupportSet> &supports, const CoefficientDomain &d)
{
    std::string key = kind + '|' + d.name();
    for (const auto &s : supports) {
        key += '|';
        for (const auto &c : s.columns()) {
            for (auto x : c) {
                key += std::to_string(x) + ',';
            }
            key += ';';
        }
    }
    return key;
}

std::mutex g_cacheMutex;
std::map<std::string, ResultantPtr> g_cache;

std::vector<std::string> torusVariables(std::size_t n)
{
    std::vector<std::string> xs;
    for (std::size_t v = 1; v <= n; ++v) {
        xs.push_back("x" + std::to_string(v));
    }
    return xs;
}

// t*x_1*...*x_n - 1 in a ring whose first n+1 variables are t, x_1..x_n.
MultiPoly torusEquation(const RingPtr &ring, std::size_t n)
{
    ExponentVector e(ring->arity(), 0);
    for (std::size_t v = 0; v <= n; ++v) {
        e[v] = 1;
    }
    return MultiPoly::monomial(ring, e, 1) - MultiPoly::constant(ring, 1);
}

} // namespace

ResultantPtr buildSparseResultant(const std::vector<SupportSet> &supports, std::size_t n,
                                  const CoefficientDomain &domain)
{
    if (domain.kind() == DomainKind::Rationals) {
        return buildSparseResultant(supports, n, CoefficientDomain::integers());
    }
    std::vector<SupportSet> list = supports;
    if (list.size() == 1) {
        list.assign(n + 1, supports.front());
    }
    requireValidSupports(list, n);
    const std::string key = cacheKey("res", list, domain);
    {
        std::lock_guard lock(g_cacheMutex);
        if (auto it = g_cache.find(key); it != g_cache.end()) {
            return it->second;
        }
    }

    auto op = std::make_shared<ResultantOperator>(ResultantOperator{list, {}, nullptr, MultiPoly(makeRing({}, domain)), {}});
    std::vector<std::string> names;
    for (std::size_t i = 0; i < list.size(); ++i) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < list[i].size(); ++j) {
            row.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
        }
        names.insert(names.end(), row.begin(), row.end());
        op->coefficientNames.push_back(std::move(row));
    }
    op->coefficientRing = makeRing(names, domain);
    std::vector<std::string> front{"t"};
    for (auto &x : torusVariables(n)) {
        front.push_back(std::move(x));
    }
    auto ring = extendRing(op->coefficientRing, front, {});

    std::vector<MultiPoly> gens;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto corner = list[i].minCorner();
        PolyBuilder b(ring);
        for (std::size_t j = 0; j < list[i].size(); ++j) {
            ExponentVector e(ring->arity(), 0);
            for (std::size_t v = 0; v < n; ++v) {
                e[1 + v] = list[i].column(j)[v] - corner[v];
            }
            e[ring->requireIndex(op->coefficientNames[i][j])] = 1;
            b.add(e, 1);
        }
        gens.push_back(b.build());
    }
    gens.push_back(torusEquation(ring, n));
    Ideal elim = eliminateVars(Ideal(ring, std::move(gens)), n + 1, &op->stats);
    MultiPoly r = principalGenerator(elim);
    op->resultantPoly = changeRing(r, op->coefficientRing);

    std::lock_guard lock(g_cacheMutex);
    auto [it, inserted] = g_cache.emplace(key, op);
    return it->second;
}

MultiPoly evaluateResultant(const ResultantOperator &op, const std::vector<MultiPoly> &polys,
                            const std::vector<std::string> &mainVars)
{
    if (polys.size() != op.supports.size()) {
        throw InputError("resultant operator expects " + std::to_string(op.supports.size()) + " polynomials, got "
                         + std::to_string(polys.size()));
    }
    if (mainVars.size() != op.supports.front().arity()) {
        throw InputError("resultant operator expects " + std::to_string(op.supports.front().arity())
                         + " main variables");
    }
    const RingPtr &src = polys.front().ring();
    const RingPtr paramRing = dropVariables(src, mainVars);
    Assignment assign;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (!(*polys[i].ring() == *src)) {
            throw RingMismatch("resultant inputs from different rings");
        }
        for (auto &st : splitByVariables(polys[i], mainVars, paramRing)) {
            auto j = op.supports[i].indexOf(st.exponents);
            if (!j) {
                std::vector<long> ex(st.exponents.begin(), st.exponents.end());
                throw SupportViolation(i, ex, "polynomial " + std::to_string(i) + " has a monomial outside its support");
            }
            assign.emplace(op.coefficientNames[i][*j], std::move(st.coefficient));
        }
        for (const auto &name : op.coefficientNames[i]) {
            assign.try_emplace(name, MultiPoly(paramRing));
        }
    }
    return evaluatePoly(op.resultantPoly, assign, paramRing);
}

MultiPoly sparseResultantOf(const std::vector<MultiPoly> &polys, const std::vector<std::string> &mainVars,
                            bool unmixed)
{
    if (polys.size() != mainVars.size() + 1) {
        throw InputError("need " + std::to_string(mainVars.size() + 1) + " polynomials in " +
                         std::to_string(mainVars.size()) + " variables, got " + std::to_string(polys.size()));
    }
    std::vector<SupportSet> supports;
    if (unmixed) {
        supports.push_back(exponentsMatrix(polys, mainVars));
    } else {
        for (const auto &p : polys) {
            supports.push_back(exponentsMatrix({p}, mainVars));
        }
    }
    const auto &dom = polys.front().ring()->domain();
    auto op = buildSparseResultant(supports, mainVars.size(),
                                   dom.isPrimeField() ? dom : CoefficientDomain::integers());
    return evaluateResultant(*op, polys, mainVars);
}

ResultantPtr denseResultant(const std::vector<int> &degrees, std::size_t n, const CoefficientDomain &domain)
{
    if (degrees.size() != n + 1) {
        throw InputError("dense resultant needs n+1 degrees");
    }
    std::vector<SupportSet> supports;
    for (int d : degrees) {
        supports.push_back(denseSupport(n, d));
    }
    return buildSparseResultant(supports, n, domain);
}

MultiPoly sylvesterResultant(const MultiPoly &f, const MultiPoly &g, std::string_view var)
{
    if (f.isZero() || g.isZero()) {
        throw InputError("Sylvester resultant of the zero polynomial");
    }
    if (!(*f.ring() == *g.ring())) {
        throw RingMismatch("Sylvester resultant of polynomials from different rings");
    }
    const RingPtr &ring = f.ring();
    const std::size_t vi = ring->requireIndex(var);
    auto coeffs = [&](const MultiPoly &p) {
        std::vector<PolyBuilder> parts;
        for (std::size_t t = 0; t < p.termCount(); ++t) {
            auto e = p.exponents(t);
            if (e[vi] < 0) {
                throw LaurentError("Sylvester resultant of a Laurent polynomial");
            }
            const auto d = static_cast<std::size_t>(e[vi]);
            while (parts.size() <= d) {
                parts.emplace_back(ring);
            }
            ExponentVector rest(e.begin(), e.end());
            rest[vi] = 0;
            parts[d].add(rest, p.coefficient(t));
        }
        std::vector<MultiPoly> out;
        for (auto &b : parts) {
            out.push_back(b.build());
        }
        return out;
    };
    const auto fc = coeffs(f);
    const auto gc = coeffs(g);
    const std::size_t m = fc.size() - 1, k = gc.size() - 1;
    if (m == 0 || k == 0) {
        throw InputError("Sylvester resultant needs positive degree in " + std::string(var));
    }
    const std::size_t size = m + k;
    PolyMatrix s(size, std::vector<MultiPoly>(size, MultiPoly(ring)));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j <= m; ++j) {
            s[r][r + j] = fc[m - j];
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j <= k; ++j) {
            s[k + r][r + j] = gc[k - j];
        }
    }
    return bareissDeterminant(std::move(s));
}

Ideal toricIdeal(const SupportSet &a)
{
    const std::size_t n = a.arity();
    requireValidSupports({a}, n);
    std::vector<std::string> zs;
    for (std::size_t j = 0; j < a.size(); ++j) {
        zs.push_back("z" + std::to_string(j));
    }
    auto zring = makeRing(zs, CoefficientDomain::integers());
    std::vector<std::string> front{"t", "s"};
    for (auto &x : torusVariables(n)) {
        front.push_back(std::move(x));
    }
    auto ring = extendRing(zring, front, {});
    const auto corner = a.minCorner();
    std::vector<MultiPoly> gens;
    for (std::size_t j = 0; j < a.size(); ++j) {
        ExponentVector e(ring->arity(), 0);
        e[1] = 1;
        for (std::size_t v = 0; v < n; ++v) {
            e[2 + v] = a.column(j)[v] - corner[v];
        }
        gens.push_back(MultiPoly::variable(ring, zs[j]) - MultiPoly::monomial(ring, e, 1));
    }
    ExponentVector e(ring->arity(), 0);
    for (std::size_t v = 0; v < n + 2; ++v) {
        e[v] = 1;
    }
    gens.push_back(MultiPoly::monomial(ring, e, 1) - MultiPoly::constant(ring, 1));
    Ideal elim = eliminateVars(Ideal(ring, std::move(gens)), n + 2);
    std::vector<MultiPoly> out;
    for (const auto &g : elim.generators()) {
        out.push_back(changeRing(g, zring));
    }
    return Ideal(zring, std::move(out));
}

bool meetsToricVariety(const SupportSet &a, const std::vector<MultiPoly> &linearForms)
{
    if (linearForms.empty()) {
        throw InputError("no linear forms given");
    }
    Ideal tor = toricIdeal(a);
    const RingPtr &formRing = linearForms.front().ring();
    if (formRing->arity() != a.size()) {
        throw InputError("linear forms must have one variable per support column");
    }
    auto zring = withDomain(tor.ring(), formRing->domain().isPrimeField() ? formRing->domain()
                                                                           : CoefficientDomain::rationals());
    std::vector<MultiPoly> gens;
    for (const auto &g : tor.generators()) {
        gens.push_back(changeRing(g, zring));
    }
    for (const auto &l : linearForms) {
        if (!(*l.ring() == *formRing)) {
            throw RingMismatch("linear forms from different rings");
        }
        PolyBuilder b(zring);
        for (std::size_t t = 0; t < l.termCount(); ++t) {
            auto e = l.exponents(t);
            b.add(e, l.coefficient(t));
        }
        gens.push_back(b.build());
    }
    Ideal j(zring, gens);
    for (std::size_t v = 0; v < zring->arity(); ++v) {
        Ideal sat = saturateByMonomial(j, MultiPoly::variable(zring, zring->variable(v)));
        auto basis = groebnerBasis(sat, TermOrder::grevlex());
        if (!(basis.size() == 1 && basis.front().isConstant())) {
            return true;
        }
    }
    return false;
}

void clearOperatorCache()
{
    std::lock_guard lock(g_cacheMutex);
    g_cache.clear();
}

} // namespace sparseres

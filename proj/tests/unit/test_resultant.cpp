#include <doctest.h>

#include <sparseres/errors.hpp>
#include <sparseres/resultant.hpp>

#include "constructions.hpp"
#include "testutil.hpp"

using namespace sparseres;
using testutil::P;

namespace
{

const CoefficientDomain kField = CoefficientDomain::primeField(33331);

// Generic polynomial variables of an operator, as polynomials in its ring.
MultiPoly coeff(const ResultantOperator &op, std::size_t i, std::size_t j)
{
    return MultiPoly::variable(op.coefficientRing, op.coefficientNames[i][j]);
}

// Sylvester matrix of two univariate coefficient lists (highest degree
// first), built independently of the library routine.
PolyMatrix sylvesterMatrix(const std::vector<MultiPoly> &f, const std::vector<MultiPoly> &g)
{
    const std::size_t m = f.size() - 1, k = g.size() - 1;
    const auto &ring = f[0].ring();
    PolyMatrix s(m + k, std::vector<MultiPoly>(m + k, MultiPoly(ring)));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j <= m; ++j) {
            s[r][r + j] = f[j];
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j <= k; ++j) {
            s[k + r][r + j] = g[j];
        }
    }
    return s;
}

MultiPoly polyWithSupport(const RingPtr &ring, const SupportSet &a, SplitMix64 &rng,
                          const std::vector<mpq_class> *root)
{
    return testutil::polyWithRoot(ring, a, rng, root);
}

std::vector<std::string> mainVars(std::size_t n)
{
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) {
        v.push_back("x" + std::to_string(i));
    }
    return v;
}

} // namespace

TEST_CASE("resultant of two linear forms is the 2x2 determinant")
{
    auto seg = SupportSet(1, {{0}, {1}});
    auto op = buildSparseResultant({seg, seg}, 1);
    auto oracle = coeff(*op, 0, 0) * coeff(*op, 1, 1) - coeff(*op, 0, 1) * coeff(*op, 1, 0);
    CHECK(testutil::equalUpToSign(op->resultantPoly, oracle));
}

TEST_CASE("resultant of three affine forms is the coefficient determinant")
{
    auto op = denseResultant({1, 1, 1}, 2);
    PolyMatrix m(3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            m[i].push_back(coeff(*op, i, j));
        }
    }
    CHECK(testutil::equalUpToSign(op->resultantPoly, testutil::laplaceDeterminant(m)));
}

TEST_CASE("dense univariate resultants equal Sylvester determinants")
{
    for (auto degs : {std::vector<int>{1, 1}, std::vector<int>{1, 2}, std::vector<int>{2, 2}, std::vector<int>{2, 3}}) {
        auto op = denseResultant(degs, 1);
        std::vector<MultiPoly> f, g;
        for (int j = degs[0]; j >= 0; --j) {
            f.push_back(coeff(*op, 0, static_cast<std::size_t>(j)));
        }
        for (int j = degs[1]; j >= 0; --j) {
            g.push_back(coeff(*op, 1, static_cast<std::size_t>(j)));
        }
        auto oracle = testutil::laplaceDeterminant(sylvesterMatrix(f, g));
        CHECK(testutil::equalUpToSign(op->resultantPoly, oracle));
        CHECK(totalDegree(op->resultantPoly).value() == degs[0] + degs[1]);
    }
}

TEST_CASE("evaluation at concrete polynomials")
{
    auto seg = SupportSet(1, {{0}, {1}});
    auto op = buildSparseResultant({seg}, 1);
    auto r = makeRing({"x"}, CoefficientDomain::integers());
    CHECK(evaluateResultant(*op, {P(r, "1 + 2*x"), P(r, "3 + 6*x")}, {"x"}).isZero());
    auto unit = evaluateResultant(*op, {P(r, "x"), P(r, "1")}, {"x"});
    CHECK(unit.isConstant());
    CHECK(abs(unit.constantValue()) == 1);
    try {
        evaluateResultant(*op, {P(r, "x^2"), P(r, "1")}, {"x"});
        FAIL("expected a support violation");
    } catch (const SupportViolation &e) {
        CHECK(e.index() == 0);
        CHECK(e.exponent() == std::vector<long>{2});
    }
}

TEST_CASE("resultants from polynomials")
{
    auto r = makeRing({"x", "a0", "a1", "b0", "b1"}, CoefficientDomain::integers());
    auto res = sparseResultantOf({P(r, "a0 + a1*x"), P(r, "b0 + b1*x")}, {"x"});
    auto params = dropVariables(r, {"x"});
    CHECK(testutil::equalUpToSign(res, P(params, "a0*b1 - a1*b0")));

    auto q = makeRing({"x"}, CoefficientDomain::integers());
    CHECK(sparseResultantOf({P(q, "x^2 - 3*x + 2"), P(q, "2*x^2 - 6*x + 4")}, {"x"}).isZero());
    CHECK_THROWS_AS(sparseResultantOf({P(q, "x")}, {"x"}), InputError);
}

TEST_CASE("unmixed inference uses the union of supports")
{
    auto r = makeRing({"x", "a", "b", "c"}, CoefficientDomain::integers());
    auto params = dropVariables(r, {"x"});
    // Mixed: supports {0,1} and {0,2} in x; unmixed: {0,1,2} for both.
    auto mixed = sparseResultantOf({P(r, "a + x"), P(r, "b + c*x^2")}, {"x"});
    auto unmixed = sparseResultantOf({P(r, "a + x"), P(r, "b + c*x^2")}, {"x"}, true);
    CHECK(testutil::equalUpToSign(mixed, P(params, "a^2*c + b")));
    // The degree-2 resultant of a form with vanishing top coefficient picks
    // up the leading coefficient of the other form.
    CHECK(testutil::equalUpToSign(unmixed, P(params, "a^2*c^2 + b*c")));
}

TEST_CASE("Sylvester resultant")
{
    auto r = makeRing({"x", "a", "b", "c", "d"}, CoefficientDomain::integers());
    CHECK(testutil::equalUpToSign(sylvesterResultant(P(r, "x - a"), P(r, "x - b"), "x"), P(r, "b - a")));
    CHECK(sylvesterResultant(P(r, "x^2 - 1"), P(r, "x - 1"), "x").isZero());
    CHECK(testutil::equalUpToSign(sylvesterResultant(P(r, "a*x + b"), P(r, "c*x + d"), "x"), P(r, "a*d - b*c")));
    CHECK_THROWS_AS(sylvesterResultant(MultiPoly(r), P(r, "x"), "x"), InputError);
}

TEST_CASE("toric ideal of the conic")
{
    auto t = toricIdeal(SupportSet(1, {{0}, {1}, {2}}));
    REQUIRE(t.generators().size() == 1);
    CHECK(testutil::equalUpToSign(t.generators()[0], P(t.ring(), "z0*z2 - z1^2")));
    CHECK_THROWS_AS(toricIdeal(SupportSet(1, {{0}, {2}})), ValidationError);
}

TEST_CASE("vanishing at constructed common torus roots")
{
    SplitMix64 rng(2024);
    std::vector<std::vector<SupportSet>> families{
        {denseSupport(2, 1), denseSupport(2, 1), denseSupport(2, 2)},
        {SupportSet(1, {{-1}, {0}, {2}}), SupportSet(1, {{0}, {1}})},
        {SupportSet(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})},
    };
    for (const auto &fam : families) {
        const std::size_t n = fam.front().arity();
        auto op = buildSparseResultant(fam, n, kField);
        auto ring = makeRing(mainVars(n), kField);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<mpq_class> root(n);
            for (auto &x : root) {
                x = testutil::randomNonzero(kField, rng);
            }
            std::vector<MultiPoly> vanishing, generic;
            for (const auto &a : op->supports) {
                vanishing.push_back(polyWithSupport(ring, a, rng, &root));
                generic.push_back(polyWithSupport(ring, a, rng, nullptr));
            }
            CHECK(evaluateResultant(*op, vanishing, mainVars(n)).isZero());
            CHECK(!evaluateResultant(*op, generic, mainVars(n)).isZero());
        }
    }
}

TEST_CASE("resultant is homogeneous in each coefficient group")
{
    auto op = denseResultant({1, 1, 2}, 2);
    const std::vector<long> expected{2, 2, 1};
    SplitMix64 rng(8);
    auto ring = makeRing(mainVars(2), kField);
    std::vector<MultiPoly> fs;
    for (const auto &a : op->supports) {
        fs.push_back(polyWithSupport(ring, a, rng, nullptr));
    }
    const mpq_class base = evaluateResultant(*op, fs, mainVars(2)).constantValue();
    for (std::size_t i = 0; i < 3; ++i) {
        const auto &group = op->coefficientNames[i];
        const auto &p = op->resultantPoly;
        std::vector<std::size_t> idx;
        for (const auto &g : group) {
            idx.push_back(*p.ring()->indexOf(g));
        }
        for (std::size_t t = 0; t < p.termCount(); ++t) {
            long d = 0;
            for (auto k : idx) {
                d += p.exponents(t)[k];
            }
            CHECK(d == expected[i]);
        }
        const mpq_class lambda = 7;
        auto scaled = fs;
        scaled[i] = scaled[i].scaled(lambda);
        mpq_class want = base;
        for (long k = 0; k < expected[i]; ++k) {
            want = kField.normalize(want * lambda);
        }
        CHECK(evaluateResultant(*op, scaled, mainVars(2)).constantValue() == want);
    }
}

TEST_CASE("resultant is invariant under translating supports")
{
    auto a = SupportSet(1, {{0}, {1}, {3}});
    auto b = SupportSet(1, {{0}, {2}});
    std::vector<Exponent> s1{-4}, s2{5};
    auto base = buildSparseResultant({a, b}, 1);
    auto moved = buildSparseResultant({translateSupport(a, s1), translateSupport(b, s2)}, 1);
    CHECK(base->resultantPoly == moved->resultantPoly);
}

TEST_CASE("unmixed resultant vanishes exactly when the forms meet the toric variety")
{
    SplitMix64 rng(77);
    for (const auto &a : {SupportSet(1, {{0}, {1}, {2}}), SupportSet(1, {{0}, {1}, {3}})}) {
        auto op = buildSparseResultant({a}, 1, kField);
        std::vector<std::string> zs;
        for (std::size_t j = 0; j < a.size(); ++j) {
            zs.push_back("w" + std::to_string(j));
        }
        auto zring = makeRing(zs, kField);
        auto xring = makeRing({"x1"}, kField);
        for (int trial = 0; trial < 6; ++trial) {
            const bool forced = trial % 2 == 0;
            std::vector<mpq_class> root{testutil::randomNonzero(kField, rng)};
            std::vector<MultiPoly> fs, ls;
            for (int i = 0; i < 2; ++i) {
                auto f = polyWithSupport(xring, a, rng, forced ? &root : nullptr);
                PolyBuilder b(zring);
                for (std::size_t j = 0; j < a.size(); ++j) {
                    ExponentVector e(a.size(), 0);
                    e[j] = 1;
                    b.add(e, f.coefficientOf(a.column(j)));
                }
                fs.push_back(f);
                ls.push_back(b.build());
            }
            const bool vanishes = evaluateResultant(*op, fs, {"x1"}).isZero();
            CHECK(vanishes == meetsToricVariety(a, ls));
            if (forced) {
                CHECK(vanishes);
            }
        }
    }
}

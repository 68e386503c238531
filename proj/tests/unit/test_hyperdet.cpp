#include <doctest.h>

#include <sparseres/errors.hpp>
#include <sparseres/hyperdet.hpp>
#include <sparseres/textio.hpp>

#include "testutil.hpp"

using namespace sparseres;
using testutil::P;

namespace
{

const CoefficientDomain kField = CoefficientDomain::primeField(33331);

// Outer product of random vectors: a degenerate matrix for every format.
MultidimMatrix rankOne(const Shape &shape, const CoefficientDomain &domain, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    std::vector<std::vector<long>> vecs;
    for (auto k : shape) {
        std::vector<long> v;
        for (std::size_t i = 0; i < k; ++i) {
            v.push_back(static_cast<long>(rng.below(19)) - 9);
        }
        vecs.push_back(std::move(v));
    }
    auto ring = makeRing({}, domain);
    MultidimMatrix m(shape, ring);
    std::vector<std::size_t> idx(shape.size(), 0);
    do {
        long prod = 1;
        for (std::size_t t = 0; t < shape.size(); ++t) {
            prod *= vecs[t][idx[t]];
        }
        m.set(idx, MultiPoly::constant(ring, prod));
    } while (nextIndex(idx, shape));
    return m;
}

// Random element of SL(n) over the field: unit lower times unit upper triangular.
MultidimMatrix randomSpecialLinear(std::size_t n, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    auto ring = makeRing({}, kField);
    MultidimMatrix lo({n, n}, ring), up({n, n}, ring);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t ij[] = {i, j};
            if (i == j) {
                lo.set(ij, MultiPoly::constant(ring, 1));
                up.set(ij, MultiPoly::constant(ring, 1));
            } else if (i > j) {
                lo.set(ij, MultiPoly::constant(ring, static_cast<long>(rng.below(33331))));
            } else {
                up.set(ij, MultiPoly::constant(ring, static_cast<long>(rng.below(33331))));
            }
        }
    }
    return convolve(lo, up);
}

mpq_class numericDet(const MultidimMatrix &m, DetMethod method = DetMethod::Auto)
{
    return hyperdet(m, method).constantValue();
}

mpq_class negate(const mpq_class &v)
{
    return v == 0 ? mpq_class(0) : mpq_class(33331 - v);
}

bool sameUpToSign(const mpq_class &a, const mpq_class &b)
{
    return a == b || a == negate(b);
}

} // namespace

TEST_CASE("existence and degree")
{
    CHECK(detExists({2, 2}));
    CHECK(!detExists({2, 3}));
    CHECK(detExists({2, 2, 2}));
    CHECK(!detExists({2, 2, 4}));
    CHECK(detExists({2, 2, 3}));
    CHECK(detExists({4, 2, 5}));
    CHECK(detExists({1, 1}));

    CHECK(detDegree({2, 2}) == 2);
    CHECK(detDegree({5, 5}) == 5);
    CHECK(detDegree({2, 2, 2}) == 4);
    CHECK(detDegree({2, 2, 3}) == 6);
    CHECK(detDegree({3, 3, 2}) == 12);
    CHECK(detDegree({3, 3, 3}) == 36);
    CHECK(detDegree({2, 2, 2, 2}) == 24);
    CHECK(detDegree({2, 2, 4}) == 0);

    // Boundary format: (k0+1)!/(k1!...kr!).
    CHECK(detDegree({4, 2, 5}) == 20);
    CHECK(detDegree({2, 3, 4}) == 12);
    CHECK(detDegree({2, 2, 2, 4}) == 24);
    CHECK(detDegree({2, 2, 2, 2, 5}) == 120);

    CHECK(isBoundaryShape({2, 2, 3}));
    CHECK(!isBoundaryShape({2, 2, 2}));
    CHECK(isSchlafliShape({3, 3, 2}));
    CHECK(isSchlafliShape({2, 3, 3}));
    CHECK(isSchlafliShape({2, 2, 2, 2}));
    CHECK(!isSchlafliShape({2, 3, 4}));
}

TEST_CASE("method names")
{
    CHECK(parseDetMethod("auto") == DetMethod::Auto);
    CHECK(parseDetMethod("boundary") == DetMethod::Boundary);
    CHECK(detMethodName(DetMethod::Schlafli) == "schlafli");
    CHECK(parseDetMethod(detMethodName(DetMethod::Discriminant)) == DetMethod::Discriminant);
    CHECK_THROWS_AS(parseDetMethod("magic"), InputError);
}

TEST_CASE("small shapes")
{
    auto z = CoefficientDomain::integers();
    auto m = genericMultidimMatrix({2, 2});
    CHECK(hyperdet(m) == P(m.ring(), "a_0_0*a_1_1 - a_0_1*a_1_0"));
    auto one = genericMultidimMatrix({1, 1, 1});
    CHECK(hyperdet(one) == P(one.ring(), "a_0_0_0"));
    auto squeezed = genericMultidimMatrix({2, 1, 2});
    CHECK(testutil::equalUpToSign(hyperdet(squeezed), P(squeezed.ring(), "a_0_0_0*a_1_0_1 - a_0_0_1*a_1_0_0")));
    CHECK_THROWS_AS(hyperdet(genericMultidimMatrix({2, 2, 4})), DetDoesNotExist);
    CHECK_THROWS_AS(boundaryDet(genericMultidimMatrix({2, 2, 2})), NotBoundaryShape);
    CHECK_THROWS_AS(schlafliDet(randomMultidimMatrix({2, 3, 4}, z, 1)), UnsupportedShape);
    CHECK_THROWS_AS(hyperdet(randomMultidimMatrix({3, 3, 3, 3}, kField, 1)), UnsupportedShape);
    CHECK_THROWS_AS(hyperdet(genericMultidimMatrix({3, 3, 3})), UnsupportedShape);
}

TEST_CASE("symbolic degrees")
{
    for (const Shape &s : {Shape{2, 2}, Shape{2, 2, 2}, Shape{3, 2, 2}, Shape{2, 2, 3}, Shape{3, 3, 2}}) {
        auto d = hyperdet(genericMultidimMatrix(s));
        CHECK(totalDegree(d).value() == detDegree(s));
        for (std::size_t t = 0; t < d.termCount(); ++t) {
            long sum = 0;
            for (auto e : d.exponents(t)) {
                sum += e;
            }
            CHECK(sum == totalDegree(d).value());
        }
    }
}

TEST_CASE("2x2x2 matches the Cayley formula")
{
    auto m = genericMultidimMatrix({2, 2, 2});
    auto r = m.ring();
    auto cayley = P(r, "a_0_0_0^2*a_1_1_1^2 + a_0_0_1^2*a_1_1_0^2 + a_0_1_0^2*a_1_0_1^2 + a_1_0_0^2*a_0_1_1^2"
                       " - 2*a_0_0_0*a_0_0_1*a_1_1_0*a_1_1_1 - 2*a_0_0_0*a_0_1_0*a_1_0_1*a_1_1_1"
                       " - 2*a_0_0_0*a_1_0_0*a_0_1_1*a_1_1_1 - 2*a_0_0_1*a_0_1_0*a_1_0_1*a_1_1_0"
                       " - 2*a_0_0_1*a_1_0_0*a_0_1_1*a_1_1_0 - 2*a_0_1_0*a_1_0_0*a_0_1_1*a_1_0_1"
                       " + 4*a_0_0_0*a_0_1_1*a_1_0_1*a_1_1_0 + 4*a_0_0_1*a_0_1_0*a_1_0_0*a_1_1_1");
    auto s = hyperdet(m, DetMethod::Schlafli);
    CHECK(testutil::equalUpToSign(s, cayley));
    CHECK(termCount(s) == 12);
    CHECK(testutil::equalUpToSign(hyperdet(m, DetMethod::Discriminant), cayley));
    CHECK(hyperdet(m) == s);
}

TEST_CASE("cross-method agreement on 3x2x2")
{
    auto m = genericMultidimMatrix({3, 2, 2});
    auto b = hyperdet(m, DetMethod::Boundary);
    CHECK(totalDegree(b).value() == 6);
    auto s = hyperdet(permuteMatrix(m, {2, 0, 1}), DetMethod::Schlafli);
    CHECK(testutil::equalUpToSign(b, changeRing(s, b.ring())));
}

TEST_CASE("symbolic and numeric paths agree")
{
    auto m = genericMultidimMatrix({2, 2, 3}, kField);
    auto sym = hyperdet(m);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto x = randomMultidimMatrix({2, 2, 3}, kField, seed);
        Assignment a;
        for (std::size_t f = 0; f < m.size(); ++f) {
            a.emplace(m.ring()->variable(f), x.at(f));
        }
        auto value = evaluatePoly(sym, a, x.ring()).constantValue();
        CHECK(sameUpToSign(value, numericDet(x, DetMethod::Boundary)));
        CHECK(sameUpToSign(value, numericDet(x, DetMethod::Schlafli)));
    }
}

TEST_CASE("degenerate matrices")
{
    for (const Shape &s :
         {Shape{2, 2, 2}, Shape{2, 2, 3}, Shape{3, 3, 2}, Shape{2, 3, 4}, Shape{2, 2, 2, 2}, Shape{3, 3, 3}}) {
        CAPTURE(s.size());
        CHECK(hyperdet(rankOne(s, CoefficientDomain::integers(), s.size() + s.back())).isZero());
        CHECK(hyperdet(rankOne(s, kField, 7)).isZero());
    }
}

TEST_CASE("homogeneity")
{
    for (const Shape &s :
         {Shape{2, 2, 2}, Shape{2, 2, 3}, Shape{3, 3, 2}, Shape{2, 3, 4}, Shape{2, 2, 2, 2}, Shape{3, 3, 3}}) {
        const auto n = detDegree(s).get_ui();
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto x = randomMultidimMatrix(s, kField, seed);
            mpz_class lambda = 2 + seed;
            auto scaled = scaleMatrix(x, MultiPoly::constant(x.ring(), mpq_class(lambda)));
            mpz_class factor;
            mpz_powm_ui(factor.get_mpz_t(), lambda.get_mpz_t(), n, mpz_class(33331).get_mpz_t());
            mpz_class expect = numericDet(x).get_num() * factor % 33331;
            CHECK(numericDet(scaled) == mpq_class(expect));
        }
    }
}

TEST_CASE("permutation and SL invariance")
{
    SplitMix64 rng(3);
    for (const Shape &s : {Shape{2, 2, 2}, Shape{2, 2, 3}, Shape{3, 3, 2}, Shape{2, 3, 4}, Shape{3, 3, 3}}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto x = randomMultidimMatrix(s, kField, seed);
            const auto d = numericDet(x);
            std::vector<std::size_t> sigma{0, 1, 2};
            std::swap(sigma[rng.below(3)], sigma[rng.below(3)]);
            std::swap(sigma[rng.below(3)], sigma[rng.below(3)]);
            CHECK(sameUpToSign(numericDet(permuteMatrix(x, sigma)), d));
            const std::size_t dim = rng.below(3);
            auto g = randomSpecialLinear(s[dim], seed + 17);
            CHECK(sameUpToSign(numericDet(actOnDimension(x, dim, g)), d));
        }
    }
}

TEST_CASE("multiplicativity of boundary determinants")
{
    auto a = randomMultidimMatrix({2, 2, 2, 4}, kField, 11);
    auto b = randomMultidimMatrix({4, 2, 5}, kField, 12);
    mpz_class da = numericDet(a, DetMethod::Boundary).get_num();
    mpz_class db = numericDet(b, DetMethod::Boundary).get_num();
    mpz_class p = 33331, lhs, rhs5, rhs6;
    lhs = numericDet(convolve(a, b), DetMethod::Boundary).get_num();
    mpz_powm_ui(rhs5.get_mpz_t(), da.get_mpz_t(), 5, p.get_mpz_t());
    mpz_powm_ui(rhs6.get_mpz_t(), db.get_mpz_t(), 6, p.get_mpz_t());
    CHECK(lhs == rhs5 * rhs6 % p);
}

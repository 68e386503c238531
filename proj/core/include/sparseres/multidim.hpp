#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <sparseres/poly.hpp>

namespace sparseres
{

using Shape = std::vector<std::size_t>;

// Rejects empty shapes and zero dimensions; returns the entry count.
std::size_t checkShape(const Shape &shape);

/// r-dimensional array of polynomials over one common ring, stored flat in
/// row-major order (last index fastest). Numeric matrices use a ring
/// without variables.
class MultidimMatrix
{
public:
    MultidimMatrix(Shape shape, std::vector<MultiPoly> entries);
    // Zero matrix over `ring`.
    MultidimMatrix(Shape shape, RingPtr ring);

    const Shape &shape() const noexcept
    {
        return m_shape;
    }
    std::size_t dimensions() const noexcept
    {
        return m_shape.size();
    }
    std::size_t size() const noexcept
    {
        return m_entries.size();
    }
    const RingPtr &ring() const noexcept
    {
        return m_ring;
    }
    const std::vector<MultiPoly> &entries() const noexcept
    {
        return m_entries;
    }
    const std::vector<std::size_t> &strides() const noexcept
    {
        return m_strides;
    }
    std::size_t flatIndex(std::span<const std::size_t> index) const;
    const MultiPoly &operator[](std::span<const std::size_t> index) const
    {
        return m_entries[flatIndex(index)];
    }
    const MultiPoly &at(std::size_t flat) const
    {
        return m_entries.at(flat);
    }
    void set(std::span<const std::size_t> index, MultiPoly value);
    // True when every entry is a constant.
    bool isNumeric() const;

    friend bool operator==(const MultidimMatrix &a, const MultidimMatrix &b);

private:
    Shape m_shape;
    std::vector<std::size_t> m_strides;
    RingPtr m_ring;
    std::vector<MultiPoly> m_entries;
};

// Advances a row-major multi-index; returns false after the last one.
bool nextIndex(std::vector<std::size_t> &index, const Shape &shape);

// Name of the generic entry at `index`, e.g. a_0_1_1.
std::string entryName(std::span<const std::size_t> index, const std::string &stem = "a");

// Entries are distinct indeterminates named by entryName, in row-major order.
MultidimMatrix genericMultidimMatrix(const Shape &shape, const CoefficientDomain &domain = CoefficientDomain::integers(),
                                     const std::string &stem = "a");

/// SplitMix64; output is identical on every platform.
class SplitMix64
{
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : m_state(seed)
    {
    }
    std::uint64_t next() noexcept;
    // Uniform in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound) noexcept;

private:
    std::uint64_t m_state;
};

// Over GF(p): uniform field elements. Over ZZ or QQ: integers in [-100, 100].
MultidimMatrix randomMultidimMatrix(const Shape &shape, const CoefficientDomain &domain, std::uint64_t seed);

// N[i_0..i_{r-1}] = M[i_{σ(0)}, ..., i_{σ(r-1)}] with a 0-based permutation σ,
// so N.shape[σ(t)] = M.shape[t]. Satisfies
// permuteMatrix(permuteMatrix(M, σ), τ) = permuteMatrix(M, τ∘σ).
MultidimMatrix permuteMatrix(const MultidimMatrix &m, const std::vector<std::size_t> &sigma);
std::vector<std::size_t> composePermutations(const std::vector<std::size_t> &tau, const std::vector<std::size_t> &sigma);
std::vector<std::size_t> invertPermutation(const std::vector<std::size_t> &sigma);

// Contracts the last dimension of a with the first of b.
MultidimMatrix convolve(const MultidimMatrix &a, const MultidimMatrix &b);

// n×n identity over a variable-free ring with the given domain.
MultidimMatrix identityMatrix(std::size_t n, const CoefficientDomain &domain);

// Multiplies along dimension `dim` by the square matrix g:
// N[.., i, ..] = Σ_j g[i][j] M[.., j, ..].
MultidimMatrix actOnDimension(const MultidimMatrix &m, std::size_t dim, const MultidimMatrix &g);

MultidimMatrix scaleMatrix(const MultidimMatrix &m, const MultiPoly &lambda);

struct MultilinearForm {
    // groups[j] lists the variables x<j+1>_0 .. x<j+1>_{k_j}.
    std::vector<std::vector<std::string>> groups;
    // Polynomial over the group variables followed by the matrix ring's variables.
    MultiPoly poly;
    RingPtr coefficientRing;
};

MultilinearForm toMultilinearForm(const MultidimMatrix &m);
// Throws InputError if some monomial does not use exactly one variable of
// each group with exponent 1.
MultidimMatrix fromMultilinearForm(const MultilinearForm &f);

} // namespace sparseres

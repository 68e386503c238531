#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <sparseres/domain.hpp>

namespace sparseres
{

// Ordered list of distinct variable names over a coefficient domain. The
// variable order is fixed at construction and drives the GrevLex order.
class PolyRing
{
public:
    PolyRing(std::vector<std::string> variables, CoefficientDomain domain);

    std::size_t arity() const noexcept
    {
        return m_vars.size();
    }
    const std::vector<std::string> &variables() const noexcept
    {
        return m_vars;
    }
    const std::string &variable(std::size_t i) const
    {
        return m_vars.at(i);
    }
    const CoefficientDomain &domain() const noexcept
    {
        return m_domain;
    }

    std::optional<std::size_t> indexOf(std::string_view name) const;
    // Throws InputError for unknown names.
    std::size_t requireIndex(std::string_view name) const;

    friend bool operator==(const PolyRing &a, const PolyRing &b)
    {
        return a.m_domain == b.m_domain && a.m_vars == b.m_vars;
    }

private:
    std::vector<std::string> m_vars;
    CoefficientDomain m_domain;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr makeRing(std::vector<std::string> variables, CoefficientDomain domain);
RingPtr withDomain(const RingPtr &ring, CoefficientDomain domain);
// New ring with `front` prepended and `back` appended to the variables.
RingPtr extendRing(const RingPtr &ring, const std::vector<std::string> &front,
                   const std::vector<std::string> &back = {});
// The variables of `ring` not listed in `drop`, in their original order.
RingPtr dropVariables(const RingPtr &ring, const std::vector<std::string> &drop);

// A variable name starting with `stem` that does not occur in `ring`.
std::string freshVariable(const PolyRing &ring, const std::string &stem);

bool isIdentifier(std::string_view s);

} // namespace sparseres

#include <sparseres/ring.hpp>

#include <algorithm>
#include <set>

#include <sparseres/errors.hpp>

namespace sparseres
{

bool isIdentifier(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(s[0])) {
        return false;
    }
    return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || digit(c); });
}

PolyRing::PolyRing(std::vector<std::string> variables, CoefficientDomain domain)
    : m_vars(std::move(variables)), m_domain(domain)
{
    std::set<std::string_view> seen;
    for (const auto &v : m_vars) {
        if (!isIdentifier(v)) {
            throw InputError("invalid variable name '" + v + "'");
        }
        if (!seen.insert(v).second) {
            throw InputError("duplicate variable name '" + v + "'");
        }
    }
}

std::optional<std::size_t> PolyRing::indexOf(std::string_view name) const
{
    for (std::size_t i = 0; i < m_vars.size(); ++i) {
        if (m_vars[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t PolyRing::requireIndex(std::string_view name) const
{
    auto i = indexOf(name);
    if (!i) {
        throw InputError("unknown variable '" + std::string(name) + "'");
    }
    return *i;
}

RingPtr makeRing(std::vector<std::string> variables, CoefficientDomain domain)
{
    return std::make_shared<const PolyRing>(std::move(variables), domain);
}

RingPtr withDomain(const RingPtr &ring, CoefficientDomain domain)
{
    if (ring->domain() == domain) {
        return ring;
    }
    return makeRing(ring->variables(), domain);
}

RingPtr extendRing(const RingPtr &ring, const std::vector<std::string> &front, const std::vector<std::string> &back)
{
    std::vector<std::string> vars(front);
    vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
    vars.insert(vars.end(), back.begin(), back.end());
    return makeRing(std::move(vars), ring->domain());
}

RingPtr dropVariables(const RingPtr &ring, const std::vector<std::string> &drop)
{
    std::vector<std::string> vars;
    for (const auto &v : ring->variables()) {
        if (std::find(drop.begin(), drop.end(), v) == drop.end()) {
            vars.push_back(v);
        }
    }
    return makeRing(std::move(vars), ring->domain());
}

std::string freshVariable(const PolyRing &ring, const std::string &stem)
{
    if (!ring.indexOf(stem)) {
        return stem;
    }
    for (std::size_t i = 0;; ++i) {
        std::string cand = stem + "_" + std::to_string(i);
        if (!ring.indexOf(cand)) {
            return cand;
        }
    }
}

} // namespace sparseres

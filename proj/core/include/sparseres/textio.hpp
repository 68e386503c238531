#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <sparseres/multidim.hpp>
#include <sparseres/poly.hpp>
#include <sparseres/supports.hpp>

namespace sparseres
{

// Expression grammar:
//   expr   := ['+' | '-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ['^' ['-'] INT]
//   atom   := INT ['/' INT] | IDENT | '(' expr ')'
// A negative exponent needs a single-term base with an invertible
// coefficient. INT/INT is a rational literal, not a division.
// Throws ParseError (with byte offset) on syntax errors and unknown names.
MultiPoly parsePolynomial(std::string_view src, const RingPtr &ring);

// Canonical text: descending GrevLex, " + " / " - " between terms, no spaces
// around '*' and '^', unit coefficients omitted.
std::string formatPolynomial(const MultiPoly &p);
std::string formatCoefficient(const mpq_class &c);

// Distinct identifiers of `src` in order of first appearance.
std::vector<std::string> scanIdentifiers(std::string_view src);

struct PolySystem {
    std::vector<std::string> variables;
    std::vector<std::string> parameters;
    RingPtr ring; // variables followed by parameters
    std::vector<MultiPoly> polys;
};

// Optional header line "vars: x, y", then one polynomial per nonblank line;
// lines starting with '#' are comments. Identifiers outside the header become
// parameters. Without a header every identifier is a variable.
PolySystem parseSystem(std::string_view text, const CoefficientDomain &domain);

// Nested arrays, outermost = first dimension. Leaves are integers or strings
// holding integers or rationals "p/q". An object {"modulus": p, "data": ...}
// selects GF(p). All-integer data gives a ZZ matrix, otherwise QQ.
MultidimMatrix parseMatrixJson(std::string_view text);
// Compact JSON; entries must be constants.
std::string formatMatrixJson(const MultidimMatrix &m);

// Either one support (array of columns) or an array of supports.
std::vector<SupportSet> parseSupportsJson(std::string_view text);
std::string formatSupportJson(const SupportSet &s);

} // namespace sparseres

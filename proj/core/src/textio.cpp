#include <sparseres/textio.hpp>

#include <cctype>
#include <limits>
#include <sstream>

#include <json.hpp>

#include <sparseres/errors.hpp>

namespace sparseres
{

namespace
{

using json = nlohmann::json;

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string_view text;
};

class Lexer
{
public:
    explicit Lexer(std::string_view src) : m_src(src)
    {
    }

    Token next()
    {
        while (m_pos < m_src.size() && std::isspace(static_cast<unsigned char>(m_src[m_pos]))) {
            ++m_pos;
        }
        const std::size_t start = m_pos;
        if (m_pos == m_src.size()) {
            return {Tok::End, start, {}};
        }
        const char c = m_src[m_pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (m_pos < m_src.size() && std::isdigit(static_cast<unsigned char>(m_src[m_pos]))) {
                ++m_pos;
            }
            return {Tok::Int, start, m_src.substr(start, m_pos - start)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (m_pos < m_src.size()
                   && (std::isalnum(static_cast<unsigned char>(m_src[m_pos])) || m_src[m_pos] == '_')) {
                ++m_pos;
            }
            return {Tok::Ident, start, m_src.substr(start, m_pos - start)};
        }
        ++m_pos;
        switch (c) {
        case '+':
            return {Tok::Plus, start, m_src.substr(start, 1)};
        case '-':
            return {Tok::Minus, start, m_src.substr(start, 1)};
        case '*':
            return {Tok::Star, start, m_src.substr(start, 1)};
        case '^':
            return {Tok::Caret, start, m_src.substr(start, 1)};
        case '/':
            return {Tok::Slash, start, m_src.substr(start, 1)};
        case '(':
            return {Tok::LParen, start, m_src.substr(start, 1)};
        case ')':
            return {Tok::RParen, start, m_src.substr(start, 1)};
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

private:
    std::string_view m_src;
    std::size_t m_pos = 0;
};

class Parser
{
public:
    Parser(std::string_view src, const RingPtr &ring) : m_lex(src), m_ring(ring)
    {
        advance();
    }

    MultiPoly parse()
    {
        if (m_tok.kind == Tok::End) {
            throw ParseError("empty expression", m_tok.offset);
        }
        MultiPoly p = expr();
        if (m_tok.kind != Tok::End) {
            throw ParseError("unexpected '" + std::string(m_tok.text) + "'", m_tok.offset);
        }
        return p;
    }

private:
    static constexpr int kMaxExponent = 1 << 20;

    void advance()
    {
        m_tok = m_lex.next();
    }

    void expect(Tok kind, const char *what)
    {
        if (m_tok.kind != kind) {
            throw ParseError(std::string("expected ") + what, m_tok.offset);
        }
        advance();
    }

    MultiPoly expr()
    {
        bool negate = false;
        if (m_tok.kind == Tok::Plus || m_tok.kind == Tok::Minus) {
            negate = m_tok.kind == Tok::Minus;
            advance();
        }
        MultiPoly acc = term();
        if (negate) {
            acc = -acc;
        }
        while (m_tok.kind == Tok::Plus || m_tok.kind == Tok::Minus) {
            const bool minus = m_tok.kind == Tok::Minus;
            advance();
            if (minus) {
                acc -= term();
            } else {
                acc += term();
            }
        }
        return acc;
    }

    MultiPoly term()
    {
        MultiPoly acc = factor();
        while (m_tok.kind == Tok::Star) {
            advance();
            acc *= factor();
        }
        return acc;
    }

    MultiPoly factor()
    {
        if (m_tok.kind == Tok::Minus) {
            advance();
            return -factor();
        }
        MultiPoly base = atom();
        if (m_tok.kind != Tok::Caret) {
            return base;
        }
        advance();
        bool negative = false;
        if (m_tok.kind == Tok::Minus) {
            negative = true;
            advance();
        }
        if (m_tok.kind != Tok::Int) {
            throw ParseError("expected an integer exponent", m_tok.offset);
        }
        const std::size_t at = m_tok.offset;
        mpz_class k(std::string(m_tok.text));
        advance();
        if (k > kMaxExponent) {
            throw ParseError("exponent too large", at);
        }
        const auto e = static_cast<unsigned>(k.get_ui());
        if (!negative) {
            return base.pow(e);
        }
        return inversePower(base, e, at);
    }

    MultiPoly inversePower(const MultiPoly &base, unsigned e, std::size_t at)
    {
        if (base.termCount() != 1) {
            throw ParseError("negative exponent needs a single-term base", at);
        }
        const mpq_class &c = base.coefficient(0);
        const auto &dom = m_ring->domain();
        if (!dom.isField() && abs(c) != 1) {
            throw ParseError("negative exponent of a non-unit coefficient", at);
        }
        ExponentVector ex(base.exponents(0).begin(), base.exponents(0).end());
        for (auto &x : ex) {
            x = -x * static_cast<Exponent>(e);
        }
        mpq_class ci = dom.inverse(c);
        mpq_class cc = 1;
        for (unsigned i = 0; i < e; ++i) {
            cc = dom.normalize(cc * ci);
        }
        return MultiPoly::monomial(m_ring, ex, cc);
    }

    MultiPoly atom()
    {
        switch (m_tok.kind) {
        case Tok::Int: {
            mpq_class c{mpz_class(std::string(m_tok.text))};
            advance();
            if (m_tok.kind == Tok::Slash) {
                advance();
                if (m_tok.kind != Tok::Int) {
                    throw ParseError("expected a denominator", m_tok.offset);
                }
                mpz_class den(std::string(m_tok.text));
                if (den == 0) {
                    throw ParseError("zero denominator", m_tok.offset);
                }
                advance();
                c /= den;
                c.canonicalize();
            }
            if (!m_ring->domain().isField() && c.get_den() != 1) {
                // Rational literals are read in the fraction field.
                throw ParseError("rational coefficient in an integer ring", m_tok.offset);
            }
            return MultiPoly::constant(m_ring, c);
        }
        case Tok::Ident: {
            auto idx = m_ring->indexOf(m_tok.text);
            if (!idx) {
                throw ParseError("unknown identifier '" + std::string(m_tok.text) + "'", m_tok.offset);
            }
            auto p = MultiPoly::variable(m_ring, m_tok.text);
            advance();
            return p;
        }
        case Tok::LParen: {
            advance();
            MultiPoly p = expr();
            expect(Tok::RParen, "')'");
            return p;
        }
        case Tok::End:
            throw ParseError("unexpected end of input", m_tok.offset);
        default:
            throw ParseError("unexpected '" + std::string(m_tok.text) + "'", m_tok.offset);
        }
    }

    Lexer m_lex;
    RingPtr m_ring;
    Token m_tok{Tok::End, 0, {}};
};

} // namespace

MultiPoly parsePolynomial(std::string_view src, const RingPtr &ring)
{
    return Parser(src, ring).parse();
}

std::string formatCoefficient(const mpq_class &c)
{
    return c.get_str();
}

std::string formatPolynomial(const MultiPoly &p)
{
    if (p.isZero()) {
        return "0";
    }
    const auto &vars = p.ring()->variables();
    std::string out;
    for (std::size_t i = 0; i < p.termCount(); ++i) {
        mpq_class c = p.coefficient(i);
        const bool neg = c < 0;
        if (neg) {
            c = -c;
        }
        if (i == 0) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        auto e = p.exponents(i);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += vars[v];
            if (e[v] != 1) {
                mono += '^' + std::to_string(e[v]);
            }
        }
        if (mono.empty()) {
            out += formatCoefficient(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += formatCoefficient(c) + '*' + mono;
        }
    }
    return out;
}

std::vector<std::string> scanIdentifiers(std::string_view src)
{
    std::vector<std::string> out;
    Lexer lex(src);
    for (Token t = lex.next(); t.kind != Tok::End; t = lex.next()) {
        if (t.kind == Tok::Ident) {
            std::string s(t.text);
            if (std::find(out.begin(), out.end(), s) == out.end()) {
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

namespace
{

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

PolySystem parseSystem(std::string_view text, const CoefficientDomain &domain)
{
    struct Line {
        std::size_t number;
        std::string text;
    };
    std::vector<Line> lines;
    std::optional<std::vector<std::string>> header;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto s = trim(raw);
        if (s.empty() || s.front() == '#') {
            continue;
        }
        if (s.substr(0, 5) == "vars:") {
            if (header || !lines.empty()) {
                throw InputError("line " + std::to_string(number) + ": the vars header must come first, once");
            }
            header.emplace();
            std::string list(s.substr(5));
            std::istringstream items(list);
            std::string item;
            while (std::getline(items, item, ',')) {
                auto name = std::string(trim(item));
                if (!isIdentifier(name)) {
                    throw InputError("line " + std::to_string(number) + ": bad variable name '" + name + "'");
                }
                header->push_back(name);
            }
            if (header->empty()) {
                throw InputError("line " + std::to_string(number) + ": empty variable list");
            }
            continue;
        }
        lines.push_back({number, std::string(s)});
    }
    if (lines.empty()) {
        throw InputError("no polynomials in input");
    }
    PolySystem sys;
    std::vector<std::string> seen;
    for (const auto &l : lines) {
        try {
            for (auto &id : scanIdentifiers(l.text)) {
                if (std::find(seen.begin(), seen.end(), id) == seen.end()) {
                    seen.push_back(std::move(id));
                }
            }
        } catch (const ParseError &e) {
            throw InputError("line " + std::to_string(l.number) + ": " + e.what());
        }
    }
    if (header) {
        sys.variables = *header;
        for (const auto &id : seen) {
            if (std::find(header->begin(), header->end(), id) == header->end()) {
                sys.parameters.push_back(id);
            }
        }
    } else {
        sys.variables = seen;
    }
    std::vector<std::string> all = sys.variables;
    all.insert(all.end(), sys.parameters.begin(), sys.parameters.end());
    sys.ring = makeRing(all, domain);
    for (const auto &l : lines) {
        try {
            sys.polys.push_back(parsePolynomial(l.text, sys.ring));
        } catch (const ParseError &e) {
            throw InputError("line " + std::to_string(l.number) + ": " + e.what());
        }
    }
    return sys;
}

namespace
{

mpq_class leafValue(const json &leaf)
{
    if (leaf.is_number_integer()) {
        if (leaf.is_number_unsigned()) {
            return mpq_class(mpz_class(std::to_string(leaf.get<std::uint64_t>())));
        }
        return mpq_class(mpz_class(std::to_string(leaf.get<std::int64_t>())));
    }
    if (leaf.is_string()) {
        const auto &s = leaf.get_ref<const std::string &>();
        const auto slash = s.find('/');
        auto isInt = [](std::string_view t) {
            if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
                t.remove_prefix(1);
            }
            return !t.empty() && std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
        };
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!isInt(num) || !isInt(den) || den.front() == '-' || den.front() == '+') {
            throw InputError("matrix leaf \"" + s + "\" is not an integer or rational");
        }
        if (num.front() == '+') {
            num.erase(0, 1);
        }
        mpz_class d(den);
        if (d == 0) {
            throw InputError("matrix leaf \"" + s + "\" has a zero denominator");
        }
        mpq_class q(mpz_class(num), d);
        q.canonicalize();
        return q;
    }
    throw InputError("matrix leaf " + leaf.dump() + " is not an integer or rational");
}

void walk(const json &node, std::size_t depth, Shape &shape, std::vector<mpq_class> &out)
{
    if (!node.is_array()) {
        if (depth != shape.size()) {
            throw InputError("ragged matrix: leaf at depth " + std::to_string(depth));
        }
        out.push_back(leafValue(node));
        return;
    }
    if (node.empty()) {
        throw InputError("empty array in matrix document");
    }
    if (depth == shape.size()) {
        if (!out.empty()) {
            throw InputError("ragged matrix: nesting depth varies");
        }
        shape.push_back(node.size());
    } else if (depth > shape.size() || shape[depth] != node.size()) {
        throw InputError("ragged matrix: sub-arrays at depth " + std::to_string(depth) + " differ in length");
    }
    for (const auto &child : node) {
        walk(child, depth + 1, shape, out);
    }
}

json parseJson(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
}

json leafJson(const mpq_class &c)
{
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) {
        return c.get_num().get_si();
    }
    return c.get_str();
}

json matrixData(const MultidimMatrix &m, std::size_t depth, std::size_t &flat)
{
    json arr = json::array();
    for (std::size_t i = 0; i < m.shape()[depth]; ++i) {
        if (depth + 1 == m.dimensions()) {
            arr.push_back(leafJson(m.at(flat++).constantValue()));
        } else {
            arr.push_back(matrixData(m, depth + 1, flat));
        }
    }
    return arr;
}

} // namespace

MultidimMatrix parseMatrixJson(std::string_view text)
{
    json doc = parseJson(text);
    std::optional<CoefficientDomain> domain;
    const json *data = &doc;
    if (doc.is_object()) {
        if (!doc.contains("data")) {
            throw InputError("matrix object lacks a \"data\" field");
        }
        for (const auto &[key, value] : doc.items()) {
            if (key != "data" && key != "modulus") {
                throw InputError("unknown matrix field \"" + key + "\"");
            }
        }
        data = &doc["data"];
        if (doc.contains("modulus")) {
            const auto &mod = doc["modulus"];
            if (!mod.is_number_integer() || mod.get<std::int64_t>() < 0) {
                throw InputError("modulus must be a nonnegative integer");
            }
            const auto p = mod.get<std::uint64_t>();
            if (p != 0) {
                domain = CoefficientDomain::primeField(p);
            }
        }
    }
    if (!data->is_array()) {
        throw InputError("matrix document must be a nested array");
    }
    Shape shape;
    std::vector<mpq_class> values;
    walk(*data, 0, shape, values);
    if (!domain) {
        bool integral = std::all_of(values.begin(), values.end(), [](const mpq_class &q) { return q.get_den() == 1; });
        domain = integral ? CoefficientDomain::integers() : CoefficientDomain::rationals();
    }
    auto ring = makeRing({}, *domain);
    std::vector<MultiPoly> entries;
    entries.reserve(values.size());
    for (const auto &v : values) {
        entries.push_back(MultiPoly::constant(ring, v));
    }
    return MultidimMatrix(shape, std::move(entries));
}

std::string formatMatrixJson(const MultidimMatrix &m)
{
    if (!m.isNumeric()) {
        throw InputError("only numeric matrices have a JSON encoding");
    }
    std::size_t flat = 0;
    json data = matrixData(m, 0, flat);
    const auto &dom = m.ring()->domain();
    if (dom.isPrimeField()) {
        json doc;
        doc["modulus"] = dom.modulus();
        doc["data"] = std::move(data);
        return doc.dump();
    }
    return data.dump();
}

std::vector<SupportSet> parseSupportsJson(std::string_view text)
{
    json doc = parseJson(text);
    auto readSupport = [](const json &s) {
        if (!s.is_array() || s.empty()) {
            throw InputError("a support must be a nonempty array of columns");
        }
        std::vector<ExponentVector> cols;
        std::size_t arity = 0;
        for (const auto &c : s) {
            if (!c.is_array()) {
                throw InputError("support column must be an array of integers");
            }
            ExponentVector e;
            for (const auto &x : c) {
                if (!x.is_number_integer()) {
                    throw InputError("support column must be an array of integers");
                }
                const auto v = x.get<std::int64_t>();
                if (v < std::numeric_limits<Exponent>::min() || v > std::numeric_limits<Exponent>::max()) {
                    throw InputError("exponent out of range");
                }
                e.push_back(static_cast<Exponent>(v));
            }
            if (cols.empty()) {
                arity = e.size();
            } else if (e.size() != arity) {
                throw InputError("support columns differ in length");
            }
            cols.push_back(std::move(e));
        }
        return SupportSet(arity, std::move(cols));
    };
    if (!doc.is_array() || doc.empty() || !doc.front().is_array()) {
        throw InputError("supports document must be an array of columns or an array of supports");
    }
    std::vector<SupportSet> out;
    if (!doc.front().empty() && doc.front().front().is_array()) {
        for (const auto &s : doc) {
            out.push_back(readSupport(s));
        }
    } else {
        out.push_back(readSupport(doc));
    }
    return out;
}

std::string formatSupportJson(const SupportSet &s)
{
    json arr = json::array();
    for (const auto &c : s.columns()) {
        arr.push_back(c);
    }
    return arr.dump();
}

} // namespace sparseres

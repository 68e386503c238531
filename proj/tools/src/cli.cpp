#include <sparseres_cli/cli.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <sparseres/discriminant.hpp>
#include <sparseres/errors.hpp>
#include <sparseres/hyperdet.hpp>
#include <sparseres/resultant.hpp>
#include <sparseres/textio.hpp>

namespace sparseres::cli
{

namespace
{

std::string readInput(const std::string &path, std::istream &in)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw InputError("cannot open '" + path + "'");
    }
    buf << f.rdbuf();
    return buf.str();
}

Shape parseShape(const std::string &text)
{
    Shape s;
    std::istringstream items(text);
    std::string item;
    while (std::getline(items, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v == 0 || v > 1000) {
            throw InputError("bad shape entry '" + item + "'");
        }
        s.push_back(v);
    }
    checkShape(s);
    return s;
}

CoefficientDomain domainFor(std::uint64_t modulus, const CoefficientDomain &fallback)
{
    return modulus == 0 ? fallback : CoefficientDomain::primeField(modulus);
}

MultidimMatrix convertDomain(const MultidimMatrix &m, const CoefficientDomain &dom)
{
    auto ring = withDomain(m.ring(), dom);
    std::vector<MultiPoly> entries;
    for (const auto &e : m.entries()) {
        entries.push_back(changeRing(e, ring));
    }
    return MultidimMatrix(m.shape(), std::move(entries));
}

MultidimMatrix toModulus(const MultidimMatrix &m, std::uint64_t modulus)
{
    if (modulus == 0) {
        return m;
    }
    const auto dom = CoefficientDomain::primeField(modulus);
    if (m.ring()->domain().isPrimeField() && !(m.ring()->domain() == dom)) {
        throw InputError("matrix is over " + m.ring()->domain().name() + " but --modulus selects " + dom.name());
    }
    return convertDomain(m, dom);
}

struct Options {
    bool timings = false;
    std::string matrix, method = "auto", generic, randomShape;
    std::uint64_t modulus = 0, seed = 0;
    std::string shape;
    std::string system, supports, poly, support;
    bool unmixed = false;
    std::string left, right;
};

int dispatch(const std::string &command, const Options &o, std::istream &in, std::ostream &out)
{
    if (command == "degree") {
        out << detDegree(parseShape(o.shape)).get_str() << '\n';
    } else if (command == "exists") {
        out << (detExists(parseShape(o.shape)) ? "true" : "false") << '\n';
    } else if (command == "det") {
        const int sources = !o.matrix.empty() + !o.generic.empty() + !o.randomShape.empty();
        if (sources != 1) {
            throw InputError("det needs exactly one of --matrix, --generic, --random-shape");
        }
        const DetMethod method = parseDetMethod(o.method);
        std::optional<MultidimMatrix> m;
        if (!o.matrix.empty()) {
            m = toModulus(parseMatrixJson(readInput(o.matrix, in)), o.modulus);
        } else if (!o.generic.empty()) {
            m = genericMultidimMatrix(parseShape(o.generic), domainFor(o.modulus, CoefficientDomain::integers()));
        } else {
            m = randomMultidimMatrix(parseShape(o.randomShape), domainFor(o.modulus, CoefficientDomain::integers()),
                                     o.seed);
        }
        out << formatPolynomial(hyperdet(*m, method)) << '\n';
    } else if (command == "resultant") {
        const auto dom = domainFor(o.modulus, CoefficientDomain::rationals());
        PolySystem sys = parseSystem(readInput(o.system, in), dom);
        MultiPoly r(sys.ring);
        if (!o.supports.empty()) {
            auto supports = parseSupportsJson(readInput(o.supports, in));
            auto op = buildSparseResultant(supports, sys.variables.size(),
                                           dom.isPrimeField() ? dom : CoefficientDomain::integers());
            r = evaluateResultant(*op, sys.polys, sys.variables);
        } else {
            r = sparseResultantOf(sys.polys, sys.variables, o.unmixed);
        }
        out << formatPolynomial(r) << '\n';
    } else if (command == "discriminant") {
        const auto dom = domainFor(o.modulus, CoefficientDomain::rationals());
        PolySystem sys = parseSystem(readInput(o.poly, in), dom);
        if (sys.polys.size() != 1) {
            throw InputError("discriminant expects exactly one polynomial");
        }
        std::optional<SupportSet> support;
        if (!o.support.empty()) {
            auto list = parseSupportsJson(readInput(o.support, in));
            if (list.size() != 1) {
                throw InputError("discriminant expects a single support");
            }
            support = list.front();
        } else {
            support = exponentsMatrix(sys.polys, sys.variables);
        }
        auto op = buildSparseDiscriminant(*support, dom.isPrimeField() ? dom : CoefficientDomain::integers());
        out << formatPolynomial(evaluateDiscriminant(*op, sys.polys.front(), sys.variables)) << '\n';
    } else if (command == "convolve") {
        auto a = parseMatrixJson(readInput(o.left, in));
        auto b = parseMatrixJson(readInput(o.right, in));
        const auto dom = commonDomain(a.ring()->domain(), b.ring()->domain());
        out << formatMatrixJson(convolve(convertDomain(a, dom), convertDomain(b, dom))) << '\n';
    } else if (command == "validate-supports") {
        auto list = parseSupportsJson(readInput(o.supports, in));
        const std::size_t n = list.front().arity();
        auto report = validateSupports(list, n);
        out << report.describe() << '\n';
        return report.ok() ? Ok : InputFailure;
    }
    return Ok;
}

} // namespace

int runCli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Sparse resultants, discriminants and hyperdeterminants", "sparseres"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--timings", o.timings, "Print elapsed time to stderr");

    auto *det = app.add_subcommand("det", "Hyperdeterminant of a multidimensional matrix");
    det->add_option("--matrix", o.matrix, "Matrix JSON file, or - for stdin");
    det->add_option("--generic", o.generic, "Generic symbolic matrix of this shape, e.g. 2,2,2");
    det->add_option("--random-shape", o.randomShape, "Seeded random matrix of this shape");
    det->add_option("--seed", o.seed, "Seed for --random-shape");
    det->add_option("--method", o.method, "auto, schlafli, boundary or discriminant")
        ->check(CLI::IsMember({"auto", "schlafli", "boundary", "discriminant"}));
    det->add_option("--modulus", o.modulus, "Prime modulus; 0 for exact arithmetic");

    auto *degree = app.add_subcommand("degree", "Degree of the hyperdeterminant of a shape");
    degree->add_option("--shape", o.shape, "Comma-separated dimensions")->required();
    auto *exists = app.add_subcommand("exists", "Whether the hyperdeterminant of a shape exists");
    exists->add_option("--shape", o.shape, "Comma-separated dimensions")->required();

    auto *res = app.add_subcommand("resultant", "Sparse resultant of a polynomial system");
    res->add_option("--system", o.system, "System file: 'vars:' header and one polynomial per line")->required();
    res->add_option("--supports", o.supports, "Supports JSON (list of column lists)");
    res->add_flag("--unmixed", o.unmixed, "Use the union of the supports for every polynomial");
    res->add_option("--modulus", o.modulus, "Prime modulus; 0 for exact arithmetic");

    auto *disc = app.add_subcommand("discriminant", "Sparse discriminant of a polynomial");
    disc->add_option("--poly", o.poly, "Polynomial file with an optional 'vars:' header")->required();
    disc->add_option("--support", o.support, "Support JSON (list of columns)");
    disc->add_option("--modulus", o.modulus, "Prime modulus; 0 for exact arithmetic");

    auto *conv = app.add_subcommand("convolve", "Convolution of two matrices");
    conv->add_option("--left", o.left, "Left matrix JSON")->required();
    conv->add_option("--right", o.right, "Right matrix JSON")->required();

    auto *val = app.add_subcommand("validate-supports", "Check the hypotheses on a list of supports");
    val->add_option("--supports", o.supports, "Supports JSON")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return InputFailure;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    int code = Ok;
    try {
        code = dispatch(command, o, in, out);
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        code = InputFailure;
    } catch (const ShapeError &e) {
        err << "error: " << e.what() << '\n';
        code = ShapeFailure;
    } catch (const NotPrincipal &e) {
        err << "error: " << e.what() << '\n';
        code = NotHypersurface;
    } catch (const DualNotHypersurface &e) {
        err << "error: " << e.what() << '\n';
        code = NotHypersurface;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        code = Internal;
    }
    if (o.timings) {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        err << "     -- used " << secs << " seconds\n";
    }
    return code;
}

} // namespace sparseres::cli

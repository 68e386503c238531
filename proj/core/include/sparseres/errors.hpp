#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sparseres
{

// Root of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes, so new errors should derive from the closest
// existing category.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: parse failures, ring mismatches, precondition violations
// on user data.
class InputError : public Error
{
public:
    using Error::Error;
};

class ParseError : public InputError
{
public:
    ParseError(const std::string &what, std::size_t offset)
        : InputError(what + " at offset " + std::to_string(offset)), m_offset(offset)
    {
    }
    std::size_t offset() const noexcept
    {
        return m_offset;
    }

private:
    std::size_t m_offset;
};

class RingMismatch : public InputError
{
public:
    using InputError::InputError;
};

class DomainError : public InputError
{
public:
    using InputError::InputError;
};

// Laurent exponents reaching an operation that only accepts polynomials.
class LaurentError : public InputError
{
public:
    using InputError::InputError;
};

class ValidationError : public InputError
{
public:
    using InputError::InputError;
};

// A polynomial carries a monomial outside the support it was declared on.
class SupportViolation : public InputError
{
public:
    SupportViolation(std::size_t index, std::vector<long> exponent, const std::string &what)
        : InputError(what), m_index(index), m_exponent(std::move(exponent))
    {
    }
    std::size_t index() const noexcept
    {
        return m_index;
    }
    const std::vector<long> &exponent() const noexcept
    {
        return m_exponent;
    }

private:
    std::size_t m_index;
    std::vector<long> m_exponent;
};

// Shape-related failures of the hyperdeterminant layer.
class ShapeError : public Error
{
public:
    using Error::Error;
};

class UnsupportedShape : public ShapeError
{
public:
    using ShapeError::ShapeError;
};

class DetDoesNotExist : public ShapeError
{
public:
    using ShapeError::ShapeError;
};

class NotBoundaryShape : public ShapeError
{
public:
    using ShapeError::ShapeError;
};

// The elimination ideal is not generated by a single polynomial.
class NotPrincipal : public Error
{
public:
    NotPrincipal(std::size_t basisSize)
        : Error("elimination ideal is not principal (reduced basis has " + std::to_string(basisSize)
                + " elements)"),
          m_size(basisSize)
    {
    }
    std::size_t basisSize() const noexcept
    {
        return m_size;
    }

private:
    std::size_t m_size;
};

class DualNotHypersurface : public Error
{
public:
    using Error::Error;
};

// Broken internal invariant. Never caused by user input.
class InternalError : public Error
{
public:
    using Error::Error;
};

} // namespace sparseres

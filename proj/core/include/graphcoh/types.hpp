#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace graphcoh {

using Rational = mpq_class;
using Integer = mpz_class;

// p/q in lowest terms; the two-argument mpq_class constructor does not reduce.
inline Rational make_rational(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

enum class Backbone : std::uint8_t { circle, line };
enum class Parity : std::uint8_t { odd, even };

std::string_view to_string(Backbone b);
std::string_view to_string(Parity p);
Backbone parse_backbone(std::string_view s);
Parity parse_parity(std::string_view s);

// Every error raised by the library derives from Error so callers can catch
// one type; the subclasses exist for the CLI exit-code mapping and for tests.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A graph or chain violates one of the structural invariants. The message
// names the invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class GradingError : public Error {
public:
    using Error::Error;
};

class UnsupportedBackboneError : public Error {
public:
    using Error::Error;
};

class NotContractibleError : public Error {
public:
    using Error::Error;
};

class BasisIncompleteError : public Error {
public:
    using Error::Error;
};

class ResourceLimitError : public Error {
public:
    using Error::Error;
};

class NontrivialityViolation : public Error {
public:
    using Error::Error;
};

// Default resource guards; both can be overridden through the environment
// (GRAPHCOH_MAX_RAW_GRAPHS, GRAPHCOH_MAX_MATRIX_DIM) or explicitly.
struct Limits {
    std::uint64_t max_raw_graphs = 5'000'000;
    std::uint64_t max_matrix_dim = 10'000;
    int max_internal_vertices = 8;

    static Limits from_environment();
};

}  // namespace graphcoh

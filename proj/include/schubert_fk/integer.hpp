#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schubert_fk {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Integer& c) { return c.is_zero(); }

inline std::string to_string(const Integer& c) { return c.str(); }

/// Exact binomial coefficient; zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Base of the error hierarchy. Every domain failure derives from this.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class NotGrassmannian : public Error {
  public:
    using Error::Error;
};

class DoesNotFit : public Error {
  public:
    using Error::Error;
};

class NotInSpan : public Error {
  public:
    using Error::Error;
};

class SizeMismatch : public Error {
  public:
    using Error::Error;
};

} // namespace schubert_fk

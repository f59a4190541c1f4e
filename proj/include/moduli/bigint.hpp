#ifndef MODULI_BIGINT_HPP
#define MODULI_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace moduli {

/// Arbitrary-precision signed integer. All enumerative answers are exact;
/// the largest in the test corpus has 27 digits.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

/// Quotient a/b, required to be exact. A nonzero remainder means an
/// internal counting identity failed, so it is reported as a logic error
/// rather than a user error.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::logic_error("exact_div: division by zero");
    BigInt q = a / b;
    if (q * b != a)
        throw std::logic_error("exact_div: non-exact division (" + a.str() + " / " + b.str() + ")");
    return q;
}

inline BigInt factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r = exact_div(r, BigInt(i + 1));
    }
    return r;
}

/// Product of the odd integers up to 2k-1.
inline BigInt double_factorial_odd(long long k) {
    BigInt r = 1;
    for (long long i = 1; i <= 2 * k - 1; i += 2) r *= i;
    return r;
}

} // namespace moduli

#endif // MODULI_BIGINT_HPP

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <vector>

namespace treelab {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial_exact(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline double log_factorial(double n) { return std::lgamma(n + 1.0); }

inline double log_binomial(double n, double k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

// log of q! / prod(parts_i!), parts summing to q
inline double log_multinomial(const std::vector<double>& parts) {
    double q = 0;
    for (double p : parts) q += p;
    double r = log_factorial(q);
    for (double p : parts) r -= log_factorial(p);
    return r;
}

inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

inline double log_of_bigint(const BigInt& x) {
    if (x <= 0) return -std::numeric_limits<double>::infinity();
    // convert via msb to stay in range for huge values
    const unsigned bits = boost::multiprecision::msb(x);
    if (bits < 900) return std::log(x.convert_to<double>());
    BigInt scaled = x >> (bits - 512);
    return std::log(scaled.convert_to<double>()) + double(bits - 512) * std::log(2.0);
}

} // namespace treelab

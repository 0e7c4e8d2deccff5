// logmath.hpp -- numerically stable log-domain primitives shared across modules.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace ssot {

// log(sum_i exp(x_i)) with the usual max shift; -inf entries are ignored.
// An empty input (or all -inf) yields -inf.
inline double log_sum_exp(std::span<const double> xs) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : xs) m = std::max(m, x);
    if (!std::isfinite(m)) return m;
    double acc = 0.0;
    for (double x : xs) {
        if (std::isfinite(x)) acc += std::exp(x - m);
    }
    return m + std::log(acc);
}

inline double log_sum_exp(const std::vector<double>& xs) {
    return log_sum_exp(std::span<const double>(xs.data(), xs.size()));
}

// log of the binomial coefficient C(n, k) via lgamma.
inline double log_choose(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("log_choose: k exceeds n");
    return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
           std::lgamma(double(n - k) + 1.0);
}

// x*log(x) extended continuously to x = 0.
inline double xlogx(double x) {
    return x > 0.0 ? x * std::log(x) : 0.0;
}

// Binary entropy in nats, h(q) = -q ln q - (1-q) ln(1-q), defined on [0, 1].
inline double binary_entropy(double q) {
    if (q < 0.0 || q > 1.0) throw std::domain_error("binary_entropy: q outside [0, 1]");
    return -xlogx(q) - xlogx(1.0 - q);
}

// Binary relative entropy D(q || p) in nats; infinite when supports disagree.
inline double binary_relative_entropy(double q, double p) {
    if (q < 0.0 || q > 1.0) throw std::domain_error("binary_relative_entropy: q outside [0, 1]");
    if (p <= 0.0 || p >= 1.0) throw std::domain_error("binary_relative_entropy: p outside (0, 1)");
    double d = 0.0;
    if (q > 0.0) d += q * std::log(q / p);
    if (q < 1.0) d += (1.0 - q) * std::log((1.0 - q) / (1.0 - p));
    return d;
}

} // namespace ssot

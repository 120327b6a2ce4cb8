#include "gdt/rng.hpp"

#include <cmath>

#include "gdt/errors.hpp"

namespace gdt {

uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

static inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

RngStream::RngStream(uint64_t master_seed, std::string_view label) : label_(label) {
    uint64_t sm = master_seed ^ fnv1a64(label);
    for (auto& w : s_) w = splitmix64_next(sm);
}

uint64_t RngStream::next_u64() {
    // xoshiro256++
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

uint64_t RngStream::randint(uint64_t n) {
    if (n == 0) throw NumericError("randint(0)");
    // rejection sampling to avoid modulo bias
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

double RngStream::normal() {
    if (have_cached_normal_) {
        have_cached_normal_ = false;
        return cached_normal_;
    }
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_normal_ = r * std::sin(a);
    have_cached_normal_ = true;
    return r * std::cos(a);
}

double RngStream::normal(double mean, double stddev) { return mean + stddev * normal(); }

double RngStream::exponential() {
    double u = uniform();
    if (u < 1e-300) u = 1e-300;
    return -std::log(u);
}

double RngStream::pareto_truncated(double x_min, double alpha, double x_max) {
    if (!(x_min > 0.0) || !(alpha > 0.0) || !(x_max >= x_min))
        throw NumericError("pareto_truncated: bad parameters");
    // CDF on [x_min, x_max]: F(x) = (1 - (x_min/x)^a) / (1 - (x_min/x_max)^a)
    const double tail = 1.0 - std::pow(x_min / x_max, alpha);
    const double u = uniform() * tail;
    return x_min * std::pow(1.0 - u, -1.0 / alpha);
}

size_t RngStream::categorical(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) {
        if (w < 0.0 || !std::isfinite(w)) throw NumericError("categorical: bad weight");
        total += w;
    }
    if (!(total > 0.0)) throw NumericError("categorical: zero total weight");
    double x = uniform() * total;
    for (size_t i = 0; i < weights.size(); ++i) {
        x -= weights[i];
        if (x < 0.0) return i;
    }
    return weights.size() - 1;
}

}  // namespace gdt

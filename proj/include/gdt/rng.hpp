#ifndef GDT_RNG_HPP
#define GDT_RNG_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gdt {

// Seeded, label-derived random substreams. Each named stream is an
// independently seeded xoshiro256++ engine whose seed is
// splitmix64(master_seed ^ fnv1a64(label)), so substreams never share state
// and draws on one stream cannot perturb another. All distributions are
// implemented here (not via <random> adaptors) so sequences are identical
// on every platform and standard library.

uint64_t fnv1a64(std::string_view s);
uint64_t splitmix64_next(uint64_t& state);

class RngStream {
public:
    RngStream() : RngStream(0, "default") {}
    RngStream(uint64_t master_seed, std::string_view label);

    uint64_t next_u64();

    // uniform double in [0, 1)
    double uniform();
    double uniform(double lo, double hi);

    // integer in [0, n)
    uint64_t randint(uint64_t n);

    // standard normal via Box-Muller (pairs cached)
    double normal();
    double normal(double mean, double stddev);

    double exponential();  // rate 1

    // Pareto(alpha) on [x_min, x_max] by inverse-CDF of the truncated law
    double pareto_truncated(double x_min, double alpha, double x_max);

    // index draw with probability proportional to weights[i]; weights >= 0,
    // at least one strictly positive
    size_t categorical(const std::vector<double>& weights);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(randint(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    const std::string& label() const { return label_; }

private:
    uint64_t s_[4];
    std::string label_;
    bool have_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

// Factory holding the master seed; hands out named substreams.
class RngSet {
public:
    explicit RngSet(uint64_t master_seed) : master_(master_seed) {}
    RngStream stream(std::string_view label) const { return RngStream(master_, label); }
    uint64_t master_seed() const { return master_; }

private:
    uint64_t master_;
};

}  // namespace gdt

#endif

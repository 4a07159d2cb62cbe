#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ptdial {

// Seeded generator with portable draws. std::mt19937_64 output is fully
// specified by the standard; the std::uniform_* distributions are not, so
// the integer/real mappings are done by hand here. Every seeded artifact in
// the pipeline goes through this class.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform integer in [0, n), n > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53-bit resolution.
    double real01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace ptdial

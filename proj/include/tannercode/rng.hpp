#pragma once

#include <cstdint>

namespace tanner {

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter), so independent streams never interact and a
// draw keyed by a bit index is the same no matter in which order bits are
// visited. That property is what makes the sparse and dense flip loops
// bit-identical under one seed.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t at(std::uint64_t stream, std::uint64_t counter) const {
        return at(stream, counter, 0);
    }

    std::uint64_t at(std::uint64_t stream, std::uint64_t counter,
                     std::uint64_t lane) const {
        std::uint64_t h = mix(seed_ ^ 0x6a09e667f3bcc909ULL);
        h = mix(h ^ (stream * 0x9e3779b97f4a7c15ULL + 0xbb67ae8584caa73bULL));
        h = mix(h ^ (counter * 0xc2b2ae3d27d4eb4fULL + 0x3c6ef372fe94f82bULL));
        h = mix(h ^ (lane * 0x165667b19e3779f9ULL + 0xa54ff53a5f1d36f1ULL));
        return h;
    }

    // Exactly uniform on [0, bound) via rejection; extra attempts advance the
    // lane so the (stream, counter) key stays stable.
    std::uint64_t bounded_at(std::uint64_t stream, std::uint64_t counter,
                             std::uint64_t bound) const {
        std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        for (std::uint64_t lane = 0;; ++lane) {
            std::uint64_t u = at(stream, counter, lane);
            if (u < limit) return u % bound;
        }
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
};

// Sequential view over one stream of a CounterRng.
class StreamRng {
  public:
    StreamRng(CounterRng base, std::uint64_t stream)
        : base_(base), stream_(stream) {}

    std::uint64_t next() { return base_.at(stream_, counter_++); }

    std::uint64_t bounded(std::uint64_t bound) {
        return base_.bounded_at(stream_, counter_++, bound);
    }

    // True with probability exactly num/den.
    bool bernoulli(std::uint64_t num, std::uint64_t den) {
        return bounded(den) < num;
    }

  private:
    CounterRng base_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

}  // namespace tanner

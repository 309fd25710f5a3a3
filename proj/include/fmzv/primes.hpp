#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fmzv/errors.hpp"

namespace fmzv {

// The ascending primes in [lo, hi]. A finite stand-in for "all but finitely
// many primes": identities are asserted per prime across the window.
struct PrimeWindow {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::vector<std::int64_t> primes;

    bool operator==(const PrimeWindow&) const = default;
};

inline std::string to_string(const PrimeWindow& w) {
    return std::to_string(w.lo) + ".." + std::to_string(w.hi);
}

inline PrimeWindow primes_in(std::int64_t lo, std::int64_t hi) {
    if (lo < 2 || hi < lo) throw config_error("prime window requires 2 <= lo <= hi");
    if (hi > 100'000'000) throw config_error("prime window upper bound too large (max 1e8)");
    std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
    PrimeWindow w{lo, hi, {}};
    for (std::int64_t p = 2; p <= hi; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        if (p >= lo) w.primes.push_back(p);
        for (std::int64_t q = p * p; q <= hi; q += p) composite[static_cast<std::size_t>(q)] = true;
    }
    if (w.primes.empty())
        throw config_error("no primes in window " + std::to_string(lo) + ".." + std::to_string(hi));
    return w;
}

inline std::shared_ptr<const PrimeWindow> make_window(std::int64_t lo, std::int64_t hi) {
    return std::make_shared<const PrimeWindow>(primes_in(lo, hi));
}

}  // namespace fmzv

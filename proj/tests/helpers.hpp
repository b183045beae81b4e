#ifndef FCALG_TESTS_HELPERS_HPP
#define FCALG_TESTS_HELPERS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcalg/errors.hpp"

namespace fcalg::testing {

/// Runs fn and reports which ErrorCode it threw, if any.
template <typename Fn>
std::optional<ErrorCode> error_of(Fn&& fn) {
    try {
        std::forward<Fn>(fn)();
        return std::nullopt;
    } catch (const Error& e) {
        return e.code();
    }
}

/// Deterministic 64-bit generator (splitmix64) so property tests are
/// reproducible without depending on <random> distribution details.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    /// Small signed integer in [-bound, bound].
    std::int64_t small_int(std::int64_t bound) {
        return static_cast<std::int64_t>(below(2 * bound + 1)) - bound;
    }

  private:
    std::uint64_t state_;
};

inline std::string data_file(const std::string& name) {
    return std::string(FCALG_DATA_DIR) + "/" + name;
}

}  // namespace fcalg::testing

#endif

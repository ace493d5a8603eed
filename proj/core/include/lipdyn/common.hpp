#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lipdyn {

inline constexpr const char* kVersion = "0.1.0";

// Error taxonomy shared by all modules. The CLI maps every code to exit 3
// except the verdict-style outcomes, which are encoded in reports instead.
enum class ErrorCode {
  domain,
  eval,
  parse,
  coverage_gap,
  degenerate_region,
  not_invariant,
  not_hyperbolic,
  singular,
  ill_conditioned,
  precondition_failed,
  no_convergence,
  inversion_failure,
  lip_blowup,
  threshold_exceeded,
  not_fixed,
  degenerate_c,
  orbit_escape,
  zero_constant,
  not_asymptotic,
  escaped_compactum,
  not_on_set,
  regraph_failure,
  depth_exceeded,
  bound_inapplicable,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

const char* error_code_name(ErrorCode code);

// splitmix64: tiny, portable, bit-reproducible across platforms.  We do not
// use <random> distributions because their output is implementation-defined.
struct SplitMix64 {
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;

  explicit SplitMix64(std::uint64_t seed = 1) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi]
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace lipdyn

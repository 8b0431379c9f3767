#pragma once

#include <cstdint>

#include "lamup/syntax.hpp"

// Seeded, type-directed generation of well-typed terms and substitutions
// for the property suites. Everything is driven by a splitmix64 stream,
// so identical (config, arguments) give byte-identical output on every
// platform.

namespace lamup {

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_term_size = 40;  // node-count budget ceiling
  std::size_t max_ctx_len = 5;
  std::size_t max_ty_depth = 3;
  double weaken_bias = 0.3;  // chance of wrapping in a weakening
};

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); returns 0 when n is 0. The slight modulo bias is
  // irrelevant at test-generator scales and keeps the stream portable.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  // Stream for the i-th case of a suite seeded with `seed`.
  static SplitMix64 for_case(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  }

 private:
  std::uint64_t state_;
};

TyPtr gen_type(SplitMix64& rng, const GenConfig& cfg, std::size_t depth = 0);
Ctx gen_ctx(SplitMix64& rng, const GenConfig& cfg);

// Result typechecks at (ctx, ty). The budget is a node-count bound; it is
// raised internally to the least size any inhabitant needs, and
// Unsatisfiable is thrown only when that exceeds cfg.max_term_size.
TermPtr gen_term(SplitMix64& rng, const GenConfig& cfg, const Ctx& ctx, const TyPtr& ty,
                 std::size_t budget);

SubstPtr gen_subst(SplitMix64& rng, const GenConfig& cfg, const Ctx& src, const Ctx& dst,
                   std::size_t budget);

// Convenience entry points that seed a fresh stream from cfg.seed, so a
// fixed config reproduces the identical value on every run.
TyPtr gen_type(const GenConfig& cfg, std::size_t depth = 0);
Ctx gen_ctx(const GenConfig& cfg);
TermPtr gen_term(const GenConfig& cfg, const Ctx& ctx, const TyPtr& ty, std::size_t budget);
SubstPtr gen_subst(const GenConfig& cfg, const Ctx& src, const Ctx& dst, std::size_t budget);

}  // namespace lamup

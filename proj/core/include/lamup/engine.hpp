#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "lamup/check.hpp"
#include "lamup/syntax.hpp"

// Instantiation and composition with the clause order of the calculus:
// case analysis always starts on the (right) substitution, and only a
// cons forces a case analysis on the term. Traces label every clause
// application; before/after are whole-term renderings with pending
// instantiations shown as `M [ s ]` and pending compositions as `s ; t`.

namespace lamup {

struct TraceStep {
  std::string rule;  // inst-1..inst-8, comp-1..comp-5, beta, force-*
  std::string before;
  std::string after;
};

using TraceSink = std::function<void(const TraceStep&)>;

// One JSON object, single line, fields {rule, before, after}.
std::string trace_step_json(const TraceStep& step);

// m over s.dst() becomes a term over s.src(); the type is unchanged.
TypedTerm instantiate(const TypedTerm& m, const TypedSubst& s, const TraceSink& sink = {});

// s : mid |= dst composed with t : src |= mid gives src |= dst; applying
// the result equals applying s, then t.
TypedSubst compose(const TypedSubst& s, const TypedSubst& t, const TraceSink& sink = {});

// N [ M ]0: substitute M for index zero.
TypedTerm subst0(const TypedTerm& n, const TypedTerm& m);

// N [ M ]1: substitute M for index one, keeping index zero.
TypedTerm subst1(const TypedTerm& n, const TypedTerm& m);

// Exposes the head constructor by distributing one top-level weakening;
// variable spines are left alone. The erasure is unchanged.
TypedTerm force(const TypedTerm& m, const TraceSink& sink = {});

// Contracts the leftmost-outermost redex on the forced view, or returns
// nullopt when m is beta-normal. Force steps taken while searching go to
// the sink; the returned TraceStep describes the contraction.
std::optional<std::pair<TypedTerm, TraceStep>> beta_step(const TypedTerm& m,
                                                         const TraceSink& sink = {});

// Iterated beta_step followed by the weakening-canonical form (weakening
// pushed onto variable spines).
inline constexpr std::uint64_t kDefaultStepLimit = 1000000;
TypedTerm normalize(const TypedTerm& m, std::uint64_t step_limit = kDefaultStepLimit,
                    const TraceSink& sink = {});

}  // namespace lamup

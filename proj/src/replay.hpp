#pragma once

#include <string>
#include <vector>

#include "corpus.hpp"
#include "statement.hpp"

namespace absinc {

struct ReplayStep {
  std::string name;
  bool pass{false};
  std::string detail;
};

/// Ordered record of the scripted derivation; passes iff every step passes.
struct ReplayTranscript {
  std::vector<ReplayStep> steps;
  bool pass() const {
    for (const auto& s : steps)
      if (!s.pass) return false;
    return !steps.empty();
  }
};

/// Replays the symbolic derivation for the solved 13-point family: minor
/// identities, the two elimination steps, the summed identity, the sextic
/// factorization, the solved instances over Q[x]/(x^2-2) and F7, and the
/// degenerate-case closures. Halts at the first failing step, recording both
/// sides of the failed identity.
ReplayTranscript replay_second_proof();

struct CounterexampleCheck {
  std::string name;
  bool ok{false};
  std::string value;
};

struct CounterexampleReport {
  bool pass{false};
  std::string ring;
  std::string conclusion_value;
  bool conclusion_nonzero{false};
  std::vector<CounterexampleCheck> checks;
};

/// Checks the 13-point witness over Q[x,eps]/(eps^2, x^2-2-1/4*eps): unit
/// column ideals, unit pair ideals, the 20 vanishing collinearity minors
/// (the five non-obvious ones first), and the nonzero conclusion minor with
/// its exact value.
CounterexampleReport run_counterexample();

}  // namespace absinc

#pragma once

#include "gcl/rational.hpp"

namespace gcl {

/// A strict pair of cut levels alpha < beta; gamma() is the gap.
struct Levels {
  Levels(Rational alpha_, Rational beta_);

  Rational gamma() const { return beta - alpha; }

  Rational alpha;
  Rational beta;
};

}  // namespace gcl

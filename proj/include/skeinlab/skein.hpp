#pragma once

#include <string>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"

namespace skeinlab {

/// Oriented skein relation in resolved form: the value of a diagram at its
/// first non-descending crossing is
///   switch_coeff * value(switched) + smooth_coeff * value(smoothed)
/// with coefficients chosen by the crossing sign.  `unlink_delta` is the
/// value of one extra split component.
struct SkeinRule {
  std::string name;
  LaurentPoly switch_pos, smooth_pos;  // resolving a positive crossing
  LaurentPoly switch_neg, smooth_neg;  // resolving a negative crossing
  LaurentPoly unlink_delta;
};

/// nabla_+ - nabla_- = z nabla_0; unknot 1, split links 0.
SkeinRule conway_rule();
/// a P_+ - a^{-1} P_- = z P_0; delta = (a - a^{-1}) / z.
SkeinRule homflypt_rule();
/// t^{-1} V_+ - t V_- = (sqrt t - 1/sqrt t) V_0; delta = -sqrt t - 1/sqrt t.
SkeinRule jones_skein_rule();

/// Recursive skein evaluation toward descending diagrams, memoized on
/// canonical link codes.  Oriented classical diagrams only.
LaurentPoly skein_eval(const Diagram& d, const SkeinRule& rule);

}  // namespace skeinlab

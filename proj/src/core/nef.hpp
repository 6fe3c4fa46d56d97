#pragma once
#include "cone.hpp"
#include "fan.hpp"

namespace fanmat::cones {

// intersection over maximal cones I of cone(Q^I), Q^I the columns of Q
// complementary to I; pre: Q*V^T = 0 (checked)
RationalCone nef_cone(const fans::Fan& f, const IntMatrix& Q);

// every generator of the nef cone lies in cone(Q^J) for every k-subset J
bool k_neighborly_dual(const fans::Fan& f, const IntMatrix& Q, int k);

}  // namespace fanmat::cones

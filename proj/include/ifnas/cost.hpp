#pragma once

#include "ifnas/space.hpp"

namespace ifnas {

// Multiply-add accounting, one count per output element:
//   SepConv3x3 on (C,H,W): H*W*C*(9 + C)   (depthwise taps + pointwise mix)
//   ToyLinear  on (C,H,W): F*F with F = C*H*W
//   Skip, ReLU, pooling:   0
// Stage transitions (pointwise conv, stride 2 when reduction_after) and the
// classifier head are charged with the same rule.

long long op_madds(OperatorKind op, const StageSpec& stage);

// Transition and head cost; present in every architecture of the spec.
long long fixed_madds(const SupernetSpec& spec, int num_classes);

long long madds(const DiscreteArchitecture& arch, int num_classes);

// Removes alive pairs uniformly at random (validity preserving, with
// cascading dead-node cleanup) until madds(arch) <= budget.
// Throws InfeasibleBudgetError when the budget cannot be met.
void prune_to_budget(DiscreteArchitecture& arch, long long budget, int num_classes, Rng& rng);

}  // namespace ifnas

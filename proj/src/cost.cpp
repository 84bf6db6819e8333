#include "ifnas/cost.hpp"

#include <algorithm>

namespace ifnas {

long long op_madds(OperatorKind op, const StageSpec& stage) {
  const long long c = stage.channels;
  const long long hw = static_cast<long long>(stage.spatial) * stage.spatial;
  switch (op) {
    case OperatorKind::SepConv3x3: return hw * c * (9 + c);
    case OperatorKind::Skip: return 0;
    case OperatorKind::ToyLinear: {
      const long long f = c * hw;
      return f * f;
    }
  }
  return 0;
}

long long fixed_madds(const SupernetSpec& spec, int num_classes) {
  long long total = 0;
  for (std::size_t s = 0; s + 1 < spec.stages.size(); ++s) {
    const StageSpec& cur = spec.stages[s];
    const StageSpec& next = spec.stages[s + 1];
    const int stride = cur.reduction_after ? 2 : 1;
    const long long out_hw = static_cast<long long>((cur.spatial + stride - 1) / stride) *
                             ((cur.spatial + stride - 1) / stride);
    total += out_hw * next.channels * cur.channels;  // pointwise transition
  }
  total += static_cast<long long>(spec.stages.back().channels) * num_classes;  // head
  return total;
}

long long madds(const DiscreteArchitecture& arch, int num_classes) {
  long long total = fixed_madds(arch.spec, num_classes);
  for (const AlivePair& p : arch.alive)
    total += op_madds(p.op, arch.spec.stages[static_cast<std::size_t>(p.conn.stage)]);
  return total;
}

void prune_to_budget(DiscreteArchitecture& arch, long long budget, int num_classes, Rng& rng) {
  if (budget < fixed_madds(arch.spec, num_classes))
    throw InfeasibleBudgetError("madds budget " + std::to_string(budget) +
                                " is below the minimal valid chain cost " +
                                std::to_string(fixed_madds(arch.spec, num_classes)));
  while (madds(arch, num_classes) > budget) {
    // Candidate removal order: random permutation; commit the first removal
    // that leaves a valid architecture after cleanup.
    std::vector<AlivePair> pairs(arch.alive.begin(), arch.alive.end());
    for (std::size_t i = pairs.size(); i > 1; --i)
      std::swap(pairs[i - 1], pairs[rng.below(i)]);
    bool removed = false;
    for (const AlivePair& p : pairs) {
      DiscreteArchitecture trial = arch;
      trial.alive.erase(p);
      dead_node_cleanup(trial);
      if (is_valid(trial)) {
        arch = std::move(trial);
        removed = true;
        break;
      }
    }
    if (!removed)
      throw InfeasibleBudgetError("cannot reach madds budget " + std::to_string(budget) +
                                  ": no further pair is removable without breaking validity");
  }
}

}  // namespace ifnas

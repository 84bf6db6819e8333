#pragma once

#include <functional>
#include <vector>

#include "ifnas/tensor.hpp"

namespace ifnas {

// Edge/operator gate activation and its derivative.
inline double gate(double v) { return 1.0 / (1.0 + std::exp(-v)); }
inline double gate_grad(double v) {
  const double g = gate(v);
  return g * (1.0 - g);
}

// Reverse-mode tape over whole tensors. Ops push nodes that reference
// earlier ids only, so the push order is a topological order and the
// backward sweep is its reverse. A tape is single-owner and single-shot:
// after backward() it must be reset() before reuse.
class Tape {
 public:
  using NodeId = int;
  static constexpr NodeId kNone = -1;

  NodeId leaf(const Tensor& value);
  NodeId scalar(double v) { return leaf(Tensor::scalar(v)); }

  const Tensor& value(NodeId id) const { return nodes_[check(id)].value; }
  const Tensor& grad(NodeId id) const { return nodes_[check(id)].grad; }

  // --- elementwise / scalar algebra ---
  NodeId relu(NodeId x);
  NodeId sigmoid(NodeId x);
  NodeId add(NodeId a, NodeId b);                 // same shape
  NodeId sum(const std::vector<NodeId>& xs);      // same shape, fixed order
  NodeId mul(NodeId a, NodeId b);                 // same shape
  NodeId div(NodeId a, NodeId b);                 // same shape
  NodeId log1p(NodeId x);
  NodeId scale_const(NodeId x, double k);
  NodeId scale(NodeId x, NodeId s);               // s: scalar node
  NodeId mean_of(const std::vector<NodeId>& scalars);

  // --- network ops ---
  NodeId dwconv3x3(NodeId x, NodeId w);                 // w numel == C*9
  NodeId pwconv(NodeId x, NodeId w, NodeId b, int stride);  // w: (Co,Ci,1,1); b scalar-per-channel or kNone
  NodeId linear(NodeId x, NodeId w, NodeId b);          // x: (B,F,1,1); w: (Fo,F,1,1)
  NodeId flatten(NodeId x);                             // (B,C,H,W) -> (B,C*H*W,1,1)
  NodeId reshape(NodeId x, int c, int h, int w);        // same numel per batch element
  NodeId global_avg_pool(NodeId x);                     // (B,C,H,W) -> (B,C,1,1)
  NodeId cross_entropy(NodeId logits, const std::vector<int>& labels);  // mean NLL, scalar

  // Seeds d(root)=1 and accumulates exact gradients into every node.
  void backward(NodeId root);

  void reset();
  int size() const { return static_cast<int>(nodes_.size()); }

 private:
  struct Node {
    Tensor value;
    Tensor grad;
    std::function<void(Tape&)> back;  // null for leaves
  };

  NodeId push(Tensor value, std::function<void(Tape&)> back);
  int check(NodeId id) const;
  void require_open(const char* op) const;

  std::vector<Node> nodes_;
  bool swept_ = false;
};

}  // namespace ifnas

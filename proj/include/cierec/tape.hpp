#pragma once

// Reverse-mode autodiff over dense double vectors. A graph is rebuilt per
// training example; backward() replays recorded closures in reverse creation
// order. Parameter leaves accumulate straight into Param::grad, so gradients
// from a batch of examples sum naturally before the optimizer step.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "cierec/param.hpp"

namespace cierec::ad {

using VarId = int;

// Clamp floor of the gated normalization denominator. Fixed by definition,
// never user-configurable.
inline constexpr double kNormEpsilon = 1e-12;

class Tape {
 public:
  // Leaves.
  VarId constant(std::span<const double> v);
  VarId constant(std::vector<double> v);
  VarId zeros(std::size_t n);
  VarId param_vector(Param& p);                 // whole flat param
  VarId lookup(Param& table, std::size_t row);  // one row of a 2-D param

  // y = W [x1 ; x2 ; ...] + b, the blocks standing for a concatenated input.
  // Accumulation per output element runs across blocks in order, which makes
  // the result bit-identical to a matvec over an explicit concatenation.
  VarId dense(DenseLayer& layer, std::initializer_list<VarId> blocks);
  VarId dense(DenseLayer& layer, VarId x) { return dense(layer, {x}); }

  // Elementwise / structural.
  VarId add(VarId a, VarId b);
  VarId sub(VarId a, VarId b);
  VarId mul(VarId a, VarId b);
  VarId mul_const(VarId a, double c);
  VarId add_all(const std::vector<VarId>& xs);
  VarId slice(VarId x, std::size_t offset, std::size_t len);
  VarId concat(VarId a, VarId b);

  // Nonlinearities.
  VarId leaky_relu(VarId x, double slope);
  VarId sigmoid(VarId x);
  VarId tanh(VarId x);
  VarId softplus(VarId x);  // log(1 + e^x), numerically stable
  VarId softmax(VarId x);

  // x / max(||x||_2, kNormEpsilon); maps the zero vector to exactly zero.
  VarId normalize_clamped(VarId x);

  // Reductions.
  VarId dot(VarId a, VarId b);    // -> size 1
  VarId sum_sq(VarId a);          // -> size 1
  VarId pick(VarId x, std::size_t i);

  // Identity on the forward pass; multiplies the incoming gradient by
  // `scale` on the backward pass.
  VarId scale_grad(VarId x, double scale);

  // Valid-padding stride-1 convolution over a flattened [c][h][w] input.
  // kernel shape {out_c, in_c, k, k}, bias shape {out_c}.
  VarId conv2d(Param& kernel, Param& bias, VarId input, int in_c, int in_h,
               int in_w, int out_c, int k);

  const std::vector<double>& value(VarId v) const { return nodes_[v].value; }
  double scalar(VarId v) const { return nodes_[v].value[0]; }
  const std::vector<double>& grad_of(VarId v) const { return nodes_[v].grad; }

  // Seeds the (scalar) root with `seed` and propagates; Param::grad buffers
  // referenced by the graph receive their contributions.
  void backward(VarId root, double seed = 1.0);

  void reset() { nodes_.clear(); }
  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    std::vector<double> value;
    std::vector<double> grad;
    std::function<void(Tape&)> back;  // empty for constants
  };

  std::vector<Node> nodes_;

  VarId push(std::vector<double> v) {
    nodes_.push_back(Node{std::move(v), {}, {}});
    return static_cast<VarId>(nodes_.size() - 1);
  }
  Node& node(VarId v) { return nodes_[v]; }
};

}  // namespace cierec::ad

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cierec/rng.hpp"

namespace cierec {

// One learnable tensor: flat row-major values with a paired gradient buffer.
struct Param {
  std::string name;
  std::vector<std::size_t> shape;
  std::vector<double> value;
  std::vector<double> grad;

  Param() = default;
  Param(std::string n, std::vector<std::size_t> s)
      : name(std::move(n)), shape(std::move(s)) {
    std::size_t total = 1;
    for (std::size_t d : shape) total *= d;
    value.assign(total, 0.0);
    grad.assign(total, 0.0);
  }

  std::size_t size() const { return value.size(); }
  std::size_t rows() const { return shape.empty() ? 0 : shape[0]; }
  std::size_t cols() const { return shape.size() > 1 ? shape[1] : 1; }

  double* row(std::size_t r) { return value.data() + r * cols(); }
  const double* row(std::size_t r) const { return value.data() + r * cols(); }
  double* grad_row(std::size_t r) { return grad.data() + r * cols(); }

  void zero_grad() { std::fill(grad.begin(), grad.end(), 0.0); }

  // Each parameter draws from its own stream keyed by name, so the presence
  // of one parameter never shifts the initial values of another.
  void init_normal(std::uint64_t seed, double stddev) {
    Rng rng(derive_seed(seed, "init:" + name));
    for (double& v : value) v = stddev * rng.normal();
  }
};

// y = W x + b with W row-major (out x in).
struct DenseLayer {
  Param W, b;

  DenseLayer() = default;
  DenseLayer(const std::string& name, std::size_t in, std::size_t out)
      : W(name + ".W", {out, in}), b(name + ".b", {out}) {}

  std::size_t in_dim() const { return W.shape[1]; }
  std::size_t out_dim() const { return W.shape[0]; }

  void init_normal(std::uint64_t seed, double stddev) {
    W.init_normal(seed, stddev);
    // biases start at zero
  }
};

}  // namespace cierec

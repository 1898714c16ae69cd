#pragma once

#include <functional>
#include <string>
#include <vector>

#include "boostseg/tensor.hpp"

namespace boostseg {

// Reverse-mode tape. Ops append one node per recorded output; backward walks
// the nodes in exact reverse recording order, so gradient accumulation order
// is fixed and runs are reproducible.
template <typename T>
class Graph {
 public:
  struct Node {
    std::string op;
    std::function<void()> backward;
  };

  bool recording() const { return recording_; }
  void set_recording(bool on) { recording_ = on; }
  bool check_finite() const { return check_finite_; }
  void set_check_finite(bool on) { check_finite_ = on; }

  void record(std::string op, std::function<void()> backward_fn) {
    nodes_.push_back({std::move(op), std::move(backward_fn)});
  }

  size_t size() const { return nodes_.size(); }
  void clear() { nodes_.clear(); }

  // Seeds d(loss)/d(loss) = 1 and propagates through every recorded node.
  // Grads accumulate additively across fan-out.
  void backward(const TensorPtr<T>& loss) {
    if (loss->size() != 1) throw ShapeError("backward expects a scalar loss");
    if (!loss->requires_grad)
      throw ValueError("loss does not require grad (was it recorded on this graph?)");
    loss->grad[0] += T(1);
    for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) it->backward();
  }

 private:
  std::vector<Node> nodes_;
  bool recording_ = true;
  bool check_finite_ = false;
};

template <typename T>
class NoGradGuard {
 public:
  explicit NoGradGuard(Graph<T>& g) : g_(g), prev_(g.recording()) { g_.set_recording(false); }
  ~NoGradGuard() { g_.set_recording(prev_); }

 private:
  Graph<T>& g_;
  bool prev_;
};

namespace detail {

// Output tensors join the tape iff the graph is recording and any input needs
// gradients; they then get a zeroed grad buffer for the accumulation pass.
template <typename T>
bool track(Graph<T>& g, std::initializer_list<const TensorPtr<T>*> inputs) {
  if (!g.recording()) return false;
  for (const auto* in : inputs)
    if (*in && (*in)->requires_grad) return true;
  return false;
}

template <typename T>
void finish_output(Graph<T>& g, const TensorPtr<T>& out, bool tracked, const char* op) {
  if (tracked) out->set_requires_grad(true);
  if (g.check_finite() && !out->all_finite())
    throw NumericError(std::string("non-finite values in output of ") + op);
}

}  // namespace detail

}  // namespace boostseg

#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "boostseg/common.hpp"
#include "boostseg/rng.hpp"

namespace boostseg {

// Dense N-d array, row-major. Images and feature maps use [N,C,H,W].
// grad is allocated iff requires_grad; shapes always match data.
template <typename T>
struct Tensor {
  Shape shape;
  std::vector<T> data;
  bool requires_grad = false;
  std::vector<T> grad;

  Tensor() = default;
  explicit Tensor(Shape s) : shape(std::move(s)) {
    for (int d : shape)
      if (d < 1) throw ShapeError("tensor dim must be >= 1, got " + shape_str(shape));
    data.assign(static_cast<size_t>(numel(shape)), T(0));
  }

  int64_t size() const { return static_cast<int64_t>(data.size()); }
  int dim(int i) const { return shape[static_cast<size_t>(i)]; }

  void set_requires_grad(bool rg) {
    requires_grad = rg;
    if (rg)
      grad.assign(data.size(), T(0));
    else
      grad.clear();
  }
  void zero_grad() {
    if (requires_grad) std::fill(grad.begin(), grad.end(), T(0));
  }

  T* ptr() { return data.data(); }
  const T* ptr() const { return data.data(); }
  T* gptr() { return grad.data(); }
  const T* gptr() const { return grad.data(); }

  bool all_finite() const {
    for (T v : data)
      if (!std::isfinite(static_cast<double>(v))) return false;
    return true;
  }
};

template <typename T>
using TensorPtr = std::shared_ptr<Tensor<T>>;

struct InitSpec {
  enum class Kind { Zeros, Gaussian, Constant };
  Kind kind = Kind::Zeros;
  double mean = 0.0;
  double std = 1.0;
  double value = 0.0;

  static InitSpec zeros() { return {}; }
  static InitSpec gaussian(double mean, double std) {
    if (std <= 0) throw ValueError("gaussian init requires std > 0");
    InitSpec s;
    s.kind = Kind::Gaussian;
    s.mean = mean;
    s.std = std;
    return s;
  }
  static InitSpec constant(double v) {
    InitSpec s;
    s.kind = Kind::Constant;
    s.value = v;
    return s;
  }
};

// Fresh tensor, deterministically filled. Gaussian draws come from the named
// counter PRNG, stream = `name`, one normal per element in row-major order.
template <typename T>
TensorPtr<T> tensor_new(Shape shape, const InitSpec& init, uint64_t seed,
                        const std::string& name = "tensor") {
  auto t = std::make_shared<Tensor<T>>(std::move(shape));
  switch (init.kind) {
    case InitSpec::Kind::Zeros:
      break;
    case InitSpec::Kind::Constant:
      std::fill(t->data.begin(), t->data.end(), static_cast<T>(init.value));
      break;
    case InitSpec::Kind::Gaussian: {
      Rng rng(seed, name);
      for (size_t i = 0; i < t->data.size(); ++i)
        t->data[i] = static_cast<T>(init.mean + init.std * rng.normal_at(i));
      break;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Fixture dump format "BSTD1": magic(5) | dtype u8 (0=f32, 1=f64) | rank u32 |
// dims u32[rank] | row-major payload, all little-endian.
// ---------------------------------------------------------------------------

namespace detail {
template <typename V>
void write_raw(std::ostream& os, const V& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(V));
}
template <typename V>
V read_raw(std::istream& is) {
  V v;
  is.read(reinterpret_cast<char*>(&v), sizeof(V));
  if (!is) throw IoError("unexpected end of tensor stream");
  return v;
}
}  // namespace detail

template <typename T>
void save_tensor(std::ostream& os, const Tensor<T>& t) {
  os.write("BSTD1", 5);
  uint8_t dtype = std::is_same_v<T, float> ? 0 : 1;
  detail::write_raw(os, dtype);
  detail::write_raw(os, static_cast<uint32_t>(t.shape.size()));
  for (int d : t.shape) detail::write_raw(os, static_cast<uint32_t>(d));
  os.write(reinterpret_cast<const char*>(t.data.data()),
           static_cast<std::streamsize>(t.data.size() * sizeof(T)));
}

template <typename T>
TensorPtr<T> load_tensor(std::istream& is) {
  char magic[5];
  is.read(magic, 5);
  if (!is || std::memcmp(magic, "BSTD1", 5) != 0) throw IoError("bad tensor magic");
  auto dtype = detail::read_raw<uint8_t>(is);
  uint8_t want = std::is_same_v<T, float> ? 0 : 1;
  if (dtype != want) throw IoError("tensor dtype mismatch");
  auto rank = detail::read_raw<uint32_t>(is);
  Shape shape(rank);
  for (auto& d : shape) d = static_cast<int>(detail::read_raw<uint32_t>(is));
  auto t = std::make_shared<Tensor<T>>(shape);
  is.read(reinterpret_cast<char*>(t->data.data()),
          static_cast<std::streamsize>(t->data.size() * sizeof(T)));
  if (!is) throw IoError("tensor payload truncated");
  return t;
}

template <typename T>
void save_tensor_file(const std::string& path, const Tensor<T>& t) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for write: " + path);
  save_tensor(os, t);
}

template <typename T>
TensorPtr<T> load_tensor_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path);
  return load_tensor<T>(is);
}

}  // namespace boostseg

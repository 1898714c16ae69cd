#pragma once

#include <cstdint>
#include <vector>

#include "boostseg/common.hpp"

namespace boostseg {

// Per-pixel class mask over {0 = bkg, 1 = rim, 2 = oc}.
struct Mask {
  int h = 0, w = 0;
  std::vector<uint8_t> v;

  Mask() = default;
  Mask(int h_, int w_, uint8_t fill = 0)
      : h(h_), w(w_), v(static_cast<size_t>(h_) * w_, fill) {}

  uint8_t& at(int y, int x) { return v[static_cast<size_t>(y) * w + x]; }
  uint8_t at(int y, int x) const { return v[static_cast<size_t>(y) * w + x]; }
  size_t size() const { return v.size(); }
};

// Batched label map for the loss, same class coding as Mask.
struct LabelMap {
  int n = 0, h = 0, w = 0;
  std::vector<uint8_t> v;

  LabelMap() = default;
  LabelMap(int n_, int h_, int w_)
      : n(n_), h(h_), w(w_), v(static_cast<size_t>(n_) * h_ * w_, 0) {}

  uint8_t& at(int i, int y, int x) {
    return v[(static_cast<size_t>(i) * h + y) * w + x];
  }
  uint8_t at(int i, int y, int x) const {
    return v[(static_cast<size_t>(i) * h + y) * w + x];
  }
};

struct BinaryMask {
  int h = 0, w = 0;
  std::vector<uint8_t> v;  // 0 or 1

  BinaryMask() = default;
  BinaryMask(int h_, int w_) : h(h_), w(w_), v(static_cast<size_t>(h_) * w_, 0) {}
  uint8_t& at(int y, int x) { return v[static_cast<size_t>(y) * w + x]; }
  uint8_t at(int y, int x) const { return v[static_cast<size_t>(y) * w + x]; }
};

}  // namespace boostseg

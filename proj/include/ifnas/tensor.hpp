#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ifnas/errors.hpp"

namespace ifnas {

// Dense double-precision NCHW tensor. Feature vectors are (batch, f, 1, 1),
// scalars (1, 1, 1, 1). Double throughout: the gradient tests need it.
struct Tensor {
  std::array<int, 4> shape{0, 0, 0, 0};  // batch, channels, height, width
  std::vector<double> data;

  Tensor() = default;
  Tensor(int b, int c, int h, int w)
      : shape{b, c, h, w},
        data(static_cast<std::size_t>(b) * c * h * w, 0.0) {}

  static Tensor scalar(double v) {
    Tensor t(1, 1, 1, 1);
    t.data[0] = v;
    return t;
  }

  static Tensor zeros_like(const Tensor& o) {
    return Tensor(o.shape[0], o.shape[1], o.shape[2], o.shape[3]);
  }

  int batch() const { return shape[0]; }
  int channels() const { return shape[1]; }
  int height() const { return shape[2]; }
  int width() const { return shape[3]; }

  std::size_t numel() const { return data.size(); }

  double& at(int b, int c, int y, int x) {
    return data[((static_cast<std::size_t>(b) * shape[1] + c) * shape[2] + y) * shape[3] + x];
  }
  double at(int b, int c, int y, int x) const {
    return data[((static_cast<std::size_t>(b) * shape[1] + c) * shape[2] + y) * shape[3] + x];
  }

  double item() const { return data.at(0); }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

inline std::string shape_str(const Tensor& t) {
  return "(" + std::to_string(t.shape[0]) + "," + std::to_string(t.shape[1]) + "," +
         std::to_string(t.shape[2]) + "," + std::to_string(t.shape[3]) + ")";
}

inline void require_same_shape(const char* op, const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b))
    throw ValidationError(std::string(op) + ": shape mismatch " + shape_str(a) + " vs " + shape_str(b));
}

inline void require_finite(const char* where, const Tensor& t) {
  if (!t.all_finite())
    throw NumericalFault(std::string(where) + ": non-finite value in tensor " + shape_str(t));
}

}  // namespace ifnas

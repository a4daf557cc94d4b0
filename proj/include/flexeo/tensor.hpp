#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace flexeo {

using Shape = std::vector<std::size_t>;

/// Dense row-major tensor of 64-bit floats. Values are owned; copies are
/// deep. Gradient checks and all loss math run in double precision.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape);
  Tensor(Shape shape, std::vector<double> values);

  static Tensor scalar(double v);
  static Tensor full(Shape shape, double v);
  static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }

  const Shape& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t dim(std::size_t i) const { return shape_.at(i); }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  // rank-2 accessors; throw if the tensor is not a matrix
  std::size_t rows() const;
  std::size_t cols() const;
  double operator()(std::size_t r, std::size_t c) const;
  double& operator()(std::size_t r, std::size_t c);

  double operator[](std::size_t i) const { return data_[i]; }
  double& operator[](std::size_t i) { return data_[i]; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  const std::vector<double>& values() const { return data_; }

  bool all_finite() const;
  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  /// Same data, new shape; element count must match.
  Tensor reshaped(Shape shape) const;

  std::string shape_str() const;

 private:
  Shape shape_;
  std::vector<double> data_;
};

std::size_t shape_numel(const Shape& shape);

// Elementwise / linear algebra helpers shared by the graph engine and tests.
Tensor matmul(const Tensor& a, const Tensor& b, bool trans_a = false,
              bool trans_b = false);
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);
Tensor transpose(const Tensor& a);
double sum(const Tensor& a);
double mean(const Tensor& a);

/// Non-overlapping block mean over the leading two dims of an HxW or HxWxC
/// tensor. Trailing rows/cols that do not fill a block are dropped.
Tensor block_mean(const Tensor& image, std::size_t ratio);

/// Throws std::runtime_error naming `op` if any value is NaN or infinite.
void ensure_finite(const Tensor& t, const char* op);

}  // namespace flexeo

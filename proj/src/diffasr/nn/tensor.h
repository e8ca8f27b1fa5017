// diffasr/nn/tensor.h
//
// Copyright 2026 The diffasr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIFFASR_NN_TENSOR_H_
#define DIFFASR_NN_TENSOR_H_

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <vector>

#include "diffasr/common.h"

namespace diffasr {

using MatMap = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using ConstMatMap =
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using VecMap = Eigen::Map<Eigen::VectorXd>;
using ConstVecMap = Eigen::Map<const Eigen::VectorXd>;

// Dense row-major double tensor. Copies share storage; use clone() for a
// deep copy. All NN code runs in double so finite-difference gradient checks
// are meaningful at 1e-4 relative tolerance.
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    data_ = std::make_shared<std::vector<double>>(numel_from_shape(shape_), 0.0);
  }

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }

  static Tensor full(std::vector<int> shape, double v) {
    Tensor t(std::move(shape));
    std::fill(t.data(), t.data() + t.numel(), v);
    return t;
  }

  static Tensor scalar(double v) { return full({1}, v); }

  static Tensor from(std::vector<int> shape, std::vector<double> values) {
    Tensor t;
    t.shape_ = std::move(shape);
    require(static_cast<int64_t>(values.size()) == numel_from_shape(t.shape_),
            "Tensor::from: value count does not match shape");
    t.data_ = std::make_shared<std::vector<double>>(std::move(values));
    return t;
  }

  bool defined() const { return data_ != nullptr; }
  int dim() const { return static_cast<int>(shape_.size()); }
  const std::vector<int>& shape() const { return shape_; }
  int size(int axis) const { return shape_.at(static_cast<size_t>(axis)); }

  int64_t numel() const { return data_ ? static_cast<int64_t>(data_->size()) : 0; }

  double* data() { return data_->data(); }
  const double* data() const { return data_->data(); }

  double& operator[](int64_t i) { return (*data_)[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return (*data_)[static_cast<size_t>(i)]; }

  // Deep copy.
  Tensor clone() const {
    Tensor t;
    t.shape_ = shape_;
    t.data_ = std::make_shared<std::vector<double>>(*data_);
    return t;
  }

  // Shares storage, new shape (numel must match).
  Tensor reshaped(std::vector<int> shape) const {
    require(numel_from_shape(shape) == numel(), "reshape: numel mismatch");
    Tensor t;
    t.shape_ = std::move(shape);
    t.data_ = data_;
    return t;
  }

  void fill(double v) { std::fill(data(), data() + numel(), v); }
  void zero() { fill(0.0); }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  // 2-D Eigen views. mat() requires dim()==2; as_mat reshapes on the fly.
  MatMap mat() {
    require(dim() == 2, "mat(): tensor is not 2-D");
    return MatMap(data(), shape_[0], shape_[1]);
  }
  ConstMatMap mat() const {
    require(dim() == 2, "mat(): tensor is not 2-D");
    return ConstMatMap(data(), shape_[0], shape_[1]);
  }
  MatMap as_mat(int rows, int cols) {
    require(static_cast<int64_t>(rows) * cols == numel(), "as_mat: numel mismatch");
    return MatMap(data(), rows, cols);
  }
  ConstMatMap as_mat(int rows, int cols) const {
    require(static_cast<int64_t>(rows) * cols == numel(), "as_mat: numel mismatch");
    return ConstMatMap(data(), rows, cols);
  }
  VecMap vec() { return VecMap(data(), numel()); }
  ConstVecMap vec() const { return ConstVecMap(data(), numel()); }

  static int64_t numel_from_shape(const std::vector<int>& shape) {
    int64_t n = 1;
    for (int d : shape) {
      require(d >= 0, "negative dimension");
      n *= d;
    }
    return n;
  }

 private:
  std::vector<int> shape_;
  std::shared_ptr<std::vector<double>> data_;
};

}  // namespace diffasr

#endif  // DIFFASR_NN_TENSOR_H_

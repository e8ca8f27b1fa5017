// diffasr/nn/autograd.h
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

#ifndef DIFFASR_NN_AUTOGRAD_H_
#define DIFFASR_NN_AUTOGRAD_H_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "diffasr/nn/tensor.h"

namespace diffasr {

// Reverse-mode autodiff over a per-forward tape. Nodes are freed when the
// last Var referencing the graph goes out of scope.
struct VarNode {
  Tensor value;
  Tensor grad;  // lazily allocated; may alias a Parameter's grad buffer
  bool requires_grad = false;
  std::vector<std::shared_ptr<VarNode>> parents;
  std::function<void(VarNode&)> backward_fn;  // accumulates into parents' grads
  const char* op = "leaf";

  Tensor& ensure_grad() {
    if (!grad.defined()) {
      grad = Tensor::zeros(value.shape());
    }
    return grad;
  }
};

using Var = std::shared_ptr<VarNode>;

inline Var make_leaf(Tensor value, bool requires_grad = false) {
  auto n = std::make_shared<VarNode>();
  n->value = std::move(value);
  n->requires_grad = requires_grad;
  return n;
}

inline Var make_op(Tensor value, std::vector<Var> parents,
                   std::function<void(VarNode&)> backward_fn, const char* op) {
  bool needs = false;
  for (const auto& p : parents) needs = needs || p->requires_grad;
  auto n = std::make_shared<VarNode>();
  n->value = std::move(value);
  n->op = op;
  if (needs) {
    n->requires_grad = true;
    n->parents = std::move(parents);
    n->backward_fn = std::move(backward_fn);
  }
  return n;
}

// Runs the tape in reverse topological order. `root` must be scalar (numel 1)
// unless seed is supplied.
void backward(const Var& root, const Tensor* seed = nullptr);

}  // namespace diffasr

#endif  // DIFFASR_NN_AUTOGRAD_H_

// diffasr/nn/autograd.cc
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

#include "diffasr/nn/autograd.h"

#include <unordered_set>

namespace diffasr {

void backward(const Var& root, const Tensor* seed) {
  require(root != nullptr, "backward: null root");
  if (seed != nullptr) {
    require(seed->same_shape(root->value), "backward: seed shape mismatch");
    root->ensure_grad().vec() += seed->vec();
  } else {
    require(root->value.numel() == 1, "backward: non-scalar root needs a seed");
    root->ensure_grad()[0] += 1.0;
  }

  // Iterative post-order DFS; graphs can be a few thousand nodes deep.
  std::vector<VarNode*> order;
  std::unordered_set<VarNode*> visited;
  std::vector<std::pair<VarNode*, size_t>> stack;
  stack.emplace_back(root.get(), 0);
  visited.insert(root.get());
  while (!stack.empty()) {
    auto& [node, next_child] = stack.back();
    if (next_child < node->parents.size()) {
      VarNode* child = node->parents[next_child].get();
      ++next_child;
      if (child->requires_grad && visited.insert(child).second) {
        stack.emplace_back(child, 0);
      }
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }

  // order is post-order (children first); walk it backwards.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VarNode* node = *it;
    if (node->backward_fn && node->grad.defined()) {
      node->backward_fn(*node);
    }
  }
}

}  // namespace diffasr

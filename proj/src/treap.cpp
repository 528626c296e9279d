// Copyright 2026 The certilab Authors
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

#include "certilab/treap.hpp"

#include <algorithm>
#include <limits>

#include "certilab/error.hpp"
#include "certilab/rng.hpp"

namespace certilab {

Treap::Treap(bool persistent, PriorityMode mode, std::uint64_t seed)
    : persistent_(persistent), mode_(mode), seed_(seed) {}

std::uint64_t Treap::priority_of(std::uint32_t element) const {
  if (mode_ == PriorityMode::kIncreasingIndex) return element;
  return splitmix64(seed_ ^ splitmix64(element));
}

bool Treap::before(const Node& a, const Node& b) const {
  if (a.priority != b.priority) return a.priority < b.priority;
  return a.element < b.element;
}

TreapHandle Treap::make(std::uint32_t element) {
  if (nodes_.size() >= static_cast<std::size_t>(std::numeric_limits<TreapHandle>::max())) {
    throw ResourceError("treap arena is full");
  }
  Node n;
  n.element = element;
  n.priority = priority_of(element);
  nodes_.push_back(n);
  return static_cast<TreapHandle>(nodes_.size() - 1);
}

TreapHandle Treap::writable(TreapHandle t) {
  if (!persistent_) return t;
  if (nodes_.size() >= static_cast<std::size_t>(std::numeric_limits<TreapHandle>::max())) {
    throw ResourceError("treap arena is full");
  }
  nodes_.push_back(nodes_[idx(t)]);
  return static_cast<TreapHandle>(nodes_.size() - 1);
}

void Treap::update(TreapHandle t) {
  Node& n = nodes_[idx(t)];
  n.size = 1 + static_cast<std::uint32_t>(size(n.left) + size(n.right));
  n.height = 1 + static_cast<std::uint32_t>(std::max(height(n.left), height(n.right)));
}

void Treap::set_child(TreapHandle parent, bool right_side, TreapHandle child,
                      std::vector<std::uint32_t>* touched) {
  Node& p = nodes_[idx(parent)];
  TreapHandle& slot = right_side ? p.right : p.left;
  const TreapHandle old = slot;
  slot = child;
  if (touched) {
    const bool same_element =
        old != kEmptyTreap && child != kEmptyTreap &&
        nodes_[idx(old)].element == nodes_[idx(child)].element;
    if (!same_element) {
      touched->push_back(p.element);
      if (child != kEmptyTreap) touched->push_back(nodes_[idx(child)].element);
      if (old != kEmptyTreap) touched->push_back(nodes_[idx(old)].element);
    }
  }
}

TreapHandle Treap::join_rec(TreapHandle a, TreapHandle b,
                            std::vector<std::uint32_t>* touched) {
  if (a == kEmptyTreap) return b;
  if (b == kEmptyTreap) return a;
  if (before(nodes_[idx(a)], nodes_[idx(b)])) {
    const TreapHandle right = join_rec(nodes_[idx(a)].right, b, touched);
    const TreapHandle out = writable(a);
    set_child(out, true, right, touched);
    update(out);
    return out;
  }
  const TreapHandle left = join_rec(a, nodes_[idx(b)].left, touched);
  const TreapHandle out = writable(b);
  set_child(out, false, left, touched);
  update(out);
  return out;
}

std::pair<TreapHandle, TreapHandle> Treap::split_rec(TreapHandle t, std::size_t k,
                                                     std::vector<std::uint32_t>* touched) {
  if (t == kEmptyTreap) return {kEmptyTreap, kEmptyTreap};
  const std::size_t left_size = size(nodes_[idx(t)].left);
  if (k <= left_size) {
    auto [l1, l2] = split_rec(nodes_[idx(t)].left, k, touched);
    const TreapHandle out = writable(t);
    set_child(out, false, l2, touched);
    update(out);
    return {l1, out};
  }
  auto [r1, r2] = split_rec(nodes_[idx(t)].right, k - left_size - 1, touched);
  const TreapHandle out = writable(t);
  set_child(out, true, r1, touched);
  update(out);
  return {out, r2};
}

TreapHandle Treap::join(TreapHandle a, TreapHandle b) {
  std::vector<std::uint32_t> touched;
  const TreapHandle out = join_rec(a, b, log_ ? &touched : nullptr);
  if (log_) {
    TreapEvent e;
    e.kind = TreapEvent::Kind::kJoin;
    if (out != kEmptyTreap) e.roots.push_back(nodes_[idx(out)].element);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    e.touched = std::move(touched);
    log_->append(std::move(e));
  }
  return out;
}

std::pair<TreapHandle, TreapHandle> Treap::split(TreapHandle t, std::size_t k) {
  if (k > size(t)) throw ParameterError("split position exceeds treap size");
  std::vector<std::uint32_t> touched;
  auto out = split_rec(t, k, log_ ? &touched : nullptr);
  if (log_) {
    TreapEvent e;
    e.kind = TreapEvent::Kind::kSplit;
    for (auto h : {out.first, out.second}) {
      if (h == kEmptyTreap) continue;
      e.roots.push_back(nodes_[idx(h)].element);
    }
    // A piece whose root used to have a parent is a changed element too.
    if (t != kEmptyTreap) {
      const auto old_root = nodes_[idx(t)].element;
      for (auto r : e.roots) {
        if (r != old_root) touched.push_back(r);
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    e.touched = std::move(touched);
    log_->append(std::move(e));
  }
  return out;
}

std::uint32_t Treap::member_root(TreapHandle t) const {
  if (t == kEmptyTreap) throw DomainError("member of an empty treap");
  return nodes_[idx(t)].element;
}

std::vector<std::uint32_t> Treap::sequence(TreapHandle t) const {
  std::vector<std::uint32_t> out;
  std::vector<TreapHandle> stack;
  TreapHandle cur = t;
  while (cur != kEmptyTreap || !stack.empty()) {
    while (cur != kEmptyTreap) {
      stack.push_back(cur);
      cur = nodes_[idx(cur)].left;
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back(nodes_[idx(cur)].element);
    cur = nodes_[idx(cur)].right;
  }
  return out;
}

bool Treap::check_invariants(TreapHandle t) const {
  if (t == kEmptyTreap) return true;
  const Node& n = nodes_[idx(t)];
  for (auto c : {n.left, n.right}) {
    if (c == kEmptyTreap) continue;
    if (before(nodes_[idx(c)], n)) return false;
    if (!check_invariants(c)) return false;
  }
  return n.size == 1 + size(n.left) + size(n.right) &&
         n.height == 1 + std::max(height(n.left), height(n.right)) &&
         n.priority == priority_of(n.element);
}

std::uint64_t Treap::structure_hash(TreapHandle t) const {
  if (t == kEmptyTreap) return 0x51ed27a3ULL;
  const Node& n = nodes_[idx(t)];
  std::uint64_t h = splitmix64(n.element ^ (static_cast<std::uint64_t>(n.size) << 32));
  h = splitmix64(h ^ structure_hash(n.left));
  h = splitmix64(h + 0x9e37 + structure_hash(n.right));
  return h;
}

}  // namespace certilab

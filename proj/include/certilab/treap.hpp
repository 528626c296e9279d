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

// Implicit-key treaps over sequences of element ids, with optional path
// copying so that old handles stay valid after later operations.

#ifndef CERTILAB_TREAP_HPP_
#define CERTILAB_TREAP_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace certilab {

using TreapHandle = std::int32_t;
inline constexpr TreapHandle kEmptyTreap = -1;

enum class PriorityMode {
  kRandom,
  /// Priority equals the element id: smaller ids sit closer to the root.
  kIncreasingIndex,
};

/// One record per join / split.
struct TreapEvent {
  enum class Kind { kJoin, kSplit };
  Kind kind = Kind::kJoin;
  /// Root elements of the result(s); empty results are omitted.
  std::vector<std::uint32_t> roots;
  /// Elements whose child reference or parent changed.
  std::vector<std::uint32_t> touched;
};

/// Append-only operation log.
class EventLog {
 public:
  void append(TreapEvent e) { events_.push_back(std::move(e)); }
  const std::vector<TreapEvent>& events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }

 private:
  std::vector<TreapEvent> events_;
};

/// Arena of treap nodes. Handles index into the arena.
class Treap {
 public:
  struct Node {
    std::uint32_t element = 0;
    std::uint64_t priority = 0;
    std::uint32_t size = 1;
    std::uint32_t height = 1;
    TreapHandle left = kEmptyTreap;
    TreapHandle right = kEmptyTreap;
  };

  explicit Treap(bool persistent = true,
                 PriorityMode mode = PriorityMode::kRandom,
                 std::uint64_t seed = 0);

  bool persistent() const noexcept { return persistent_; }
  PriorityMode mode() const noexcept { return mode_; }

  /// Records every later operation into `log` (nullptr disables logging).
  void set_event_log(EventLog* log) { log_ = log; }

  std::uint64_t priority_of(std::uint32_t element) const;

  TreapHandle make(std::uint32_t element);
  TreapHandle join(TreapHandle a, TreapHandle b);
  /// First k elements and the rest. Throws ParameterError if k > size(t).
  std::pair<TreapHandle, TreapHandle> split(TreapHandle t, std::size_t k);
  /// Root element. Throws DomainError on an empty treap.
  std::uint32_t member_root(TreapHandle t) const;

  std::size_t size(TreapHandle t) const { return t == kEmptyTreap ? 0 : nodes_[idx(t)].size; }
  /// Nodes on the longest root-to-leaf path (0 for empty).
  std::size_t height(TreapHandle t) const { return t == kEmptyTreap ? 0 : nodes_[idx(t)].height; }
  const Node& node(TreapHandle t) const { return nodes_[idx(t)]; }
  std::size_t nodes_created() const noexcept { return nodes_.size(); }

  std::vector<std::uint32_t> sequence(TreapHandle t) const;
  /// Heap order, in-order consistency of sizes and heights.
  bool check_invariants(TreapHandle t) const;
  /// Hash of the full structure reachable from t.
  std::uint64_t structure_hash(TreapHandle t) const;

 private:
  static std::size_t idx(TreapHandle t) { return static_cast<std::size_t>(t); }
  bool before(const Node& a, const Node& b) const;
  TreapHandle writable(TreapHandle t);
  void update(TreapHandle t);
  void set_child(TreapHandle parent, bool right_side, TreapHandle child,
                 std::vector<std::uint32_t>* touched);
  TreapHandle join_rec(TreapHandle a, TreapHandle b, std::vector<std::uint32_t>* touched);
  std::pair<TreapHandle, TreapHandle> split_rec(TreapHandle t, std::size_t k,
                                                std::vector<std::uint32_t>* touched);

  bool persistent_;
  PriorityMode mode_;
  std::uint64_t seed_;
  std::vector<Node> nodes_;
  EventLog* log_ = nullptr;
};

}  // namespace certilab

#endif  // CERTILAB_TREAP_HPP_

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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "certilab/error.hpp"
#include "certilab/treap.hpp"

namespace certilab {
namespace {

TEST(Treap, JoinSingletons) {
  Treap t(false, PriorityMode::kRandom, 5);
  const auto a = t.make(3);
  const auto b = t.make(8);
  const auto j = t.join(a, b);
  EXPECT_EQ(t.sequence(j), (std::vector<std::uint32_t>{3, 8}));
  const std::uint32_t want = t.priority_of(3) < t.priority_of(8) ? 3 : 8;
  EXPECT_EQ(t.member_root(j), want);
  EXPECT_EQ(t.join(a, kEmptyTreap), a);
  EXPECT_EQ(t.join(kEmptyTreap, a), a);
}

TEST(Treap, SplitEnds) {
  Treap t(true);
  auto root = kEmptyTreap;
  for (std::uint32_t i = 0; i < 10; ++i) root = t.join(root, t.make(i));
  auto [l0, r0] = t.split(root, 0);
  EXPECT_EQ(l0, kEmptyTreap);
  EXPECT_EQ(t.sequence(r0), t.sequence(root));
  auto [l1, r1] = t.split(root, 10);
  EXPECT_EQ(t.sequence(l1), t.sequence(root));
  EXPECT_EQ(r1, kEmptyTreap);
  EXPECT_THROW(t.split(root, 11), ParameterError);
}

TEST(Treap, MemberRoot) {
  Treap t(true, PriorityMode::kIncreasingIndex);
  EXPECT_EQ(t.member_root(t.make(4)), 4u);
  auto root = kEmptyTreap;
  for (std::uint32_t i = 0; i < 20; ++i) root = t.join(root, t.make(i));
  EXPECT_EQ(t.member_root(root), 0u);
  EXPECT_THROW(t.member_root(kEmptyTreap), DomainError);
}

TEST(Treap, MatchesListOracle) {
  for (bool persistent : {false, true}) {
    Treap t(persistent, PriorityMode::kRandom, 17);
    std::mt19937_64 rng(99);
    std::vector<TreapHandle> handles;
    std::vector<std::vector<std::uint32_t>> lists;
    std::uint32_t next = 0;
    for (int op = 0; op < 3000; ++op) {
      const auto kind = rng() % 3;
      if (handles.size() < 2 || kind == 0) {
        handles.push_back(t.make(next));
        lists.push_back({next++});
      } else if (kind == 1) {
        const std::size_t i = rng() % handles.size();
        std::size_t j = rng() % handles.size();
        if (i == j) continue;
        const auto h = t.join(handles[i], handles[j]);
        auto l = lists[i];
        l.insert(l.end(), lists[j].begin(), lists[j].end());
        const std::size_t hi = std::max(i, j), lo = std::min(i, j);
        handles.erase(handles.begin() + hi);
        handles.erase(handles.begin() + lo);
        lists.erase(lists.begin() + hi);
        lists.erase(lists.begin() + lo);
        handles.push_back(h);
        lists.push_back(l);
      } else {
        const std::size_t i = rng() % handles.size();
        const std::size_t k = rng() % (lists[i].size() + 1);
        auto [a, b] = t.split(handles[i], k);
        std::vector<std::uint32_t> la(lists[i].begin(), lists[i].begin() + k);
        std::vector<std::uint32_t> lb(lists[i].begin() + k, lists[i].end());
        handles.erase(handles.begin() + i);
        lists.erase(lists.begin() + i);
        if (a != kEmptyTreap) {
          handles.push_back(a);
          lists.push_back(la);
        }
        if (b != kEmptyTreap) {
          handles.push_back(b);
          lists.push_back(lb);
        }
      }
    }
    for (std::size_t i = 0; i < handles.size(); ++i) {
      EXPECT_EQ(t.sequence(handles[i]), lists[i]);
      EXPECT_TRUE(t.check_invariants(handles[i]));
    }
  }
}

TEST(Treap, PersistentHandlesImmutable) {
  Treap t(true, PriorityMode::kRandom, 3);
  auto root = kEmptyTreap;
  for (std::uint32_t i = 0; i < 200; ++i) root = t.join(root, t.make(i));
  const auto before = t.sequence(root);
  const auto hash = t.structure_hash(root);
  std::mt19937_64 rng(1);
  auto cur = root;
  for (int i = 0; i < 300; ++i) {
    auto [a, b] = t.split(cur, rng() % (t.size(cur) + 1));
    cur = t.join(b, a);
  }
  EXPECT_EQ(t.sequence(root), before);
  EXPECT_EQ(t.structure_hash(root), hash);
}

TEST(Treap, DepthLogarithmic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Treap t(false, PriorityMode::kRandom, seed);
    auto root = kEmptyTreap;
    for (std::uint32_t i = 0; i < 2000; ++i) root = t.join(root, t.make(i));
    EXPECT_LE(static_cast<double>(t.height(root)), 4.0 * std::log2(2000.0));
  }
}

TEST(Treap, EventLog) {
  Treap t(true, PriorityMode::kIncreasingIndex);
  EventLog log;
  const auto a = t.make(0);
  const auto b = t.make(1);
  t.set_event_log(&log);
  const auto j = t.join(a, b);
  ASSERT_EQ(log.size(), 1u);
  EXPECT_EQ(log.events()[0].kind, TreapEvent::Kind::kJoin);
  EXPECT_EQ(log.events()[0].roots, (std::vector<std::uint32_t>{0}));
  t.split(j, 1);
  ASSERT_EQ(log.size(), 2u);
  EXPECT_EQ(log.events()[1].kind, TreapEvent::Kind::kSplit);
  EXPECT_EQ(log.events()[1].roots.size(), 2u);
}

}  // namespace
}  // namespace certilab

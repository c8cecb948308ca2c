// Copyright 2026 The netcon Authors
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

#include "netcon/chain_sched.h"

namespace netcon {
namespace {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  size_t index = 0;  // number of jobs in the prefix
};

// > 0 when o -> a -> b turns left (counter-clockwise).
Int128 Cross(const Point& o, const Point& a, const Point& b) {
  return static_cast<Int128>(a.x - o.x) * (b.y - o.y) -
         static_cast<Int128>(a.y - o.y) * (b.x - o.x);
}

}  // namespace

std::vector<DensityBlock> DensityDecomposition(std::span<const Job> chain) {
  // Upper hull of the prefix points, left to right. A point is dropped unless
  // the hull turns strictly clockwise at it, which also removes collinear
  // points and therefore fuses equal-density blocks.
  std::vector<Point> hull;
  hull.reserve(chain.size() + 1);
  hull.push_back({0, 0, 0});
  Point cur;
  for (size_t i = 0; i < chain.size(); ++i) {
    cur.x += chain[i].processing;
    cur.y += chain[i].weight;
    cur.index = i + 1;
    while (hull.size() >= 2 && Cross(hull[hull.size() - 2], hull.back(), cur) >= 0) {
      hull.pop_back();
    }
    hull.push_back(cur);
  }

  std::vector<DensityBlock> blocks;
  blocks.reserve(hull.size() - 1);
  for (size_t k = 1; k < hull.size(); ++k) {
    DensityBlock b{hull[k - 1].index, hull[k].index, hull[k].x - hull[k - 1].x,
                   hull[k].y - hull[k - 1].y, 0};
    b.self_cost = WeightedCompletion(chain.subspan(b.begin, b.end - b.begin));
    blocks.push_back(b);
  }
  return blocks;
}

Density RhoFactor(std::span<const Job> chain) {
  if (chain.empty()) return {0, 1};
  return DensityDecomposition(chain).front().density();
}

MergedSchedule MergeTwoChains(std::span<const Job> first, std::span<const Job> second) {
  const auto first_blocks = DensityDecomposition(first);
  const auto second_blocks = DensityDecomposition(second);
  return MergeTwoChains(first, first_blocks, second, second_blocks);
}

MergedSchedule MergeTwoChains(std::span<const Job> first,
                              std::span<const DensityBlock> first_blocks,
                              std::span<const Job> second,
                              std::span<const DensityBlock> second_blocks) {
  MergedSchedule out;
  out.order.reserve(first.size() + second.size());
  std::int64_t clock = 0;
  auto emit = [&](std::uint8_t which, std::span<const Job> jobs, const DensityBlock& b) {
    for (size_t j = b.begin; j < b.end; ++j) {
      clock += jobs[j].processing;
      out.objective += jobs[j].weight * clock;
      out.order.push_back({which, static_cast<std::uint32_t>(j)});
    }
  };

  size_t i = 0;
  size_t k = 0;
  while (i < first_blocks.size() || k < second_blocks.size()) {
    // Ties go to the first chain.
    const bool take_first =
        k == second_blocks.size() ||
        (i < first_blocks.size() &&
         first_blocks[i].density() >= second_blocks[k].density());
    if (take_first) {
      emit(0, first, first_blocks[i++]);
    } else {
      emit(1, second, second_blocks[k++]);
    }
  }
  return out;
}

std::int64_t MergeObjective(std::span<const DensityBlock> first_blocks,
                            std::span<const DensityBlock> second_blocks) {
  std::int64_t clock = 0;
  std::int64_t total = 0;
  size_t i = 0;
  size_t k = 0;
  while (i < first_blocks.size() || k < second_blocks.size()) {
    const bool take_first =
        k == second_blocks.size() ||
        (i < first_blocks.size() &&
         first_blocks[i].density() >= second_blocks[k].density());
    const DensityBlock& b = take_first ? first_blocks[i++] : second_blocks[k++];
    total += b.self_cost + b.weight * clock;
    clock += b.processing;
  }
  return total;
}

std::vector<std::int32_t> MergedTags(const MergedSchedule& schedule,
                                     std::span<const Job> first,
                                     std::span<const Job> second) {
  std::vector<std::int32_t> tags;
  tags.reserve(schedule.order.size());
  for (const JobRef& ref : schedule.order) {
    tags.push_back(ref.chain == 0 ? first[ref.index].tag : second[ref.index].tag);
  }
  return tags;
}

std::int64_t WeightedCompletion(std::span<const Job> jobs) {
  std::int64_t clock = 0;
  std::int64_t total = 0;
  for (const Job& j : jobs) {
    clock += j.processing;
    total += j.weight * clock;
  }
  return total;
}

}  // namespace netcon

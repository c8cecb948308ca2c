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

// Single-machine scheduling of chains, minimizing total weighted completion
// time.
//
// A chain's density decomposition splits it into consecutive blocks where
// each block is a maximum-density initial block of what remains. Those blocks
// are exactly the segments of the upper convex hull of the prefix points
// (sum p, sum w), so the decomposition takes one linear pass. Two chains are
// merged optimally by repeatedly emitting the next block of whichever chain
// has the higher density at its front.

#ifndef NETCON_CHAIN_SCHED_H_
#define NETCON_CHAIN_SCHED_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace netcon {

struct Job {
  std::int64_t processing = 1;  // >= 1
  std::int64_t weight = 0;      // >= 0
  std::int32_t tag = 0;
};

using Chain = std::vector<Job>;

__extension__ using Int128 = __int128;

// Exact non-negative rational weight / processing with processing >= 1.
struct Density {
  std::int64_t weight = 0;
  std::int64_t processing = 1;

  friend std::strong_ordering operator<=>(const Density& a, const Density& b) {
    const Int128 lhs = static_cast<Int128>(a.weight) * b.processing;
    const Int128 rhs = static_cast<Int128>(b.weight) * a.processing;
    return lhs <=> rhs;
  }
  friend bool operator==(const Density& a, const Density& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

// Jobs [begin, end) of the chain.
struct DensityBlock {
  size_t begin = 0;
  size_t end = 0;
  std::int64_t processing = 0;
  std::int64_t weight = 0;
  // Sum of w_j C_j over the block's jobs when the block starts at time 0.
  std::int64_t self_cost = 0;

  Density density() const { return {weight, processing}; }
  friend bool operator==(const DensityBlock&, const DensityBlock&) = default;
};

// Equal-density neighbours are fused, so densities strictly decrease.
std::vector<DensityBlock> DensityDecomposition(std::span<const Job> chain);

// Density of the first block; 0/1 for an empty chain.
Density RhoFactor(std::span<const Job> chain);

struct JobRef {
  std::uint8_t chain = 0;  // 0 or 1
  std::uint32_t index = 0;

  friend bool operator==(const JobRef&, const JobRef&) = default;
};

struct MergedSchedule {
  std::vector<JobRef> order;
  std::int64_t objective = 0;  // sum of w_j C_j
};

MergedSchedule MergeTwoChains(std::span<const Job> first, std::span<const Job> second);

// Same as above with decompositions supplied by the caller, for reuse across
// many merges of the same chain.
MergedSchedule MergeTwoChains(std::span<const Job> first,
                              std::span<const DensityBlock> first_blocks,
                              std::span<const Job> second,
                              std::span<const DensityBlock> second_blocks);

// Objective of the merge above, computed block by block without building the
// order.
std::int64_t MergeObjective(std::span<const DensityBlock> first_blocks,
                            std::span<const DensityBlock> second_blocks);

// Tags of the merged jobs in order.
std::vector<std::int32_t> MergedTags(const MergedSchedule& schedule,
                                     std::span<const Job> first,
                                     std::span<const Job> second);

// Sum of w_j C_j when the jobs run back to back in the given order.
std::int64_t WeightedCompletion(std::span<const Job> jobs);

}  // namespace netcon

#endif  // NETCON_CHAIN_SCHED_H_

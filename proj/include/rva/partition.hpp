#pragma once

/**
 * @file partition.hpp
 * @brief Hopcroft partition refinement for deterministic Moore machines.
 *
 * Computes the coarsest partition that refines the initial colouring and is
 * stable under every letter: two states end up in the same block iff they
 * emit the same colour sequence on every word. Splitters are whole blocks
 * processed for all letters; when a block outside the worklist is split only
 * the smaller half is queued, giving O(k n log n).
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <span>
#include <vector>

#include "rva/alphabet.hpp"

namespace rva {

/// Successor table: target of (q, a) at delta[q * letters + a].
/// Returns block id per state; block ids are dense but otherwise arbitrary.
inline std::vector<std::size_t> refine_partition(std::size_t n, std::size_t letters,
                                                 std::span<const StateId> delta,
                                                 std::span<const std::size_t> colour) {
  if (n == 0) return {};
  using Index = std::uint32_t;
  if (n * letters >= UINT32_MAX) throw std::length_error("refine_partition: automaton too large");
  // Predecessors per (state, letter), CSR.
  std::vector<Index> pstart(n * letters + 1, 0);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < letters; ++a) ++pstart[delta[q * letters + a] * letters + a + 1];
  }
  for (std::size_t i = 1; i < pstart.size(); ++i) pstart[i] += pstart[i - 1];
  std::vector<StateId> psrc(n * letters);
  {
    std::vector<Index> fill(pstart.begin(), pstart.end() - 1);
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t a = 0; a < letters; ++a) psrc[fill[delta[q * letters + a] * letters + a]++] = static_cast<StateId>(q);
    }
  }

  // Elements sorted by colour; blocks are contiguous ranges [first, end).
  std::vector<StateId> elems(n);
  for (std::size_t q = 0; q < n; ++q) elems[q] = static_cast<StateId>(q);
  std::stable_sort(elems.begin(), elems.end(), [&](StateId x, StateId y) { return colour[x] < colour[y]; });
  std::vector<Index> pos(n), block(n);
  std::vector<Index> first, end, mid;
  for (Index i = 0; i < n; ++i) {
    if (i == 0 || colour[elems[i]] != colour[elems[i - 1]]) {
      if (i) end.push_back(i);
      first.push_back(i);
    }
    pos[elems[i]] = i;
    block[elems[i]] = static_cast<Index>(first.size() - 1);
  }
  end.push_back(static_cast<Index>(n));
  mid = first;

  std::vector<bool> queued(first.size(), false);
  std::vector<Index> work;
  {
    Index largest = 0;
    for (Index b = 1; b < first.size(); ++b) {
      if (end[b] - first[b] > end[largest] - first[largest]) largest = b;
    }
    for (Index b = 0; b < first.size(); ++b) {
      if (b != largest) {
        work.push_back(b);
        queued[b] = true;
      }
    }
  }

  std::vector<StateId> splitter;
  std::vector<Index> touched;
  while (!work.empty()) {
    const Index s = work.back();
    work.pop_back();
    queued[s] = false;
    splitter.assign(elems.begin() + static_cast<std::ptrdiff_t>(first[s]),
                    elems.begin() + static_cast<std::ptrdiff_t>(end[s]));
    for (std::size_t a = 0; a < letters; ++a) {
      touched.clear();
      for (StateId q : splitter) {
        const std::size_t slot = q * letters + a;
        for (Index i = pstart[slot]; i < pstart[slot + 1]; ++i) {
          const StateId p = psrc[i];
          const Index b = block[p];
          if (pos[p] < mid[b]) continue;  // already marked
          if (mid[b] == first[b]) touched.push_back(b);
          // Move p to the marked zone at the front of its block.
          const Index at = mid[b]++;
          const StateId other = elems[at];
          std::swap(elems[at], elems[pos[p]]);
          pos[other] = pos[p];
          pos[p] = at;
        }
      }
      for (Index b : touched) {
        if (mid[b] == end[b]) {
          mid[b] = first[b];
          continue;
        }
        // Marked part [first, mid) becomes a new block.
        const auto nb = static_cast<Index>(first.size());
        first.push_back(first[b]);
        end.push_back(mid[b]);
        mid.push_back(first[b]);
        first[b] = mid[b];
        queued.push_back(false);
        for (Index i = first[nb]; i < end[nb]; ++i) block[elems[i]] = nb;
        if (queued[b]) {
          work.push_back(nb);
          queued[nb] = true;
        } else {
          const Index pick = (end[nb] - first[nb] <= end[b] - first[b]) ? nb : b;
          work.push_back(pick);
          queued[pick] = true;
        }
      }
    }
  }
  return std::vector<std::size_t>(block.begin(), block.end());
}

}  // namespace rva

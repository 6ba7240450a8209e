// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact limit oracle: mixed moments of a free family of standard
// semicircular elements, computed by counting non-crossing pair partitions
// whose blocks join equal variable indices.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nclab/ncpoly.hpp"

namespace nclab::freeprob {

using matkernel::Complex;

// Perfect matching of {1, ..., d}; pairs are stored smaller-first and sorted.
class Pairing {
  public:
    explicit Pairing(std::vector<std::pair<int, int>> pairs);

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int ground_size() const { return 2 * static_cast<int>(pairs_.size()); }

    friend bool operator==(const Pairing&, const Pairing&) = default;

  private:
    std::vector<std::pair<int, int>> pairs_;
};

// True iff no two pairs (a,b), (c,d) interleave as a < c < b < d.
bool is_noncrossing(const Pairing& p);

// All (d-1)!! perfect matchings of {1, ..., d}. Odd d yields an empty list;
// d > 20 is rejected.
std::vector<Pairing> all_pairings(int d);

// Variable indices of a word in selfadjoint elements (stars erased).
using IndexWord = std::vector<int>;

// Number of non-crossing pairings of the word positions matching equal
// indices: the mixed semicircular moment. Zero for odd length; the empty
// word is rejected (the unit is handled at the polynomial level).
std::uint64_t free_moment_word(const IndexWord& w);

// Moment of a *-polynomial in free standard semicirculars. Stars are erased
// on ingestion (the limit elements are selfadjoint; do not reuse this for
// non-selfadjoint limit families). The empty word contributes coeff * 1.
Complex free_moment(const ncpoly::Polynomial& p);

}  // namespace nclab::freeprob

// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0

#include "nclab/freeprob.hpp"

#include <algorithm>
#include <stdexcept>

namespace nclab::freeprob {

Pairing::Pairing(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    const int d = 2 * static_cast<int>(pairs_.size());
    std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
    for (auto& [a, b] : pairs_) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > d || a == b) throw std::invalid_argument("Pairing: indices out of range");
        if (seen[static_cast<std::size_t>(a)] || seen[static_cast<std::size_t>(b)])
            throw std::invalid_argument("Pairing: repeated index");
        seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = true;
    }
    std::sort(pairs_.begin(), pairs_.end());
}

bool is_noncrossing(const Pairing& p) {
    const auto& pr = p.pairs();
    for (std::size_t i = 0; i < pr.size(); ++i)
        for (std::size_t j = i + 1; j < pr.size(); ++j) {
            const auto [a, b] = pr[i];
            const auto [c, d] = pr[j];
            if (a < c && c < b && b < d) return false;
        }
    return true;
}

std::vector<Pairing> all_pairings(int d) {
    if (d > 20) throw std::invalid_argument("all_pairings: d exceeds the enumeration guard");
    std::vector<Pairing> out;
    if (d < 2 || d % 2 != 0) return out;

    std::vector<int> free_idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) free_idx[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::pair<int, int>> acc;

    // Pair the smallest free index with each remaining one, recursively.
    auto rec = [&](auto&& self, std::vector<int>& rest) -> void {
        if (rest.empty()) {
            out.emplace_back(acc);
            return;
        }
        const int first = rest.front();
        for (std::size_t k = 1; k < rest.size(); ++k) {
            std::vector<int> next;
            next.reserve(rest.size() - 2);
            for (std::size_t t = 1; t < rest.size(); ++t)
                if (t != k) next.push_back(rest[t]);
            acc.emplace_back(first, rest[k]);
            self(self, next);
            acc.pop_back();
        }
    };
    rec(rec, free_idx);
    return out;
}

namespace {

std::uint64_t count_noncrossing(const int* w, std::size_t len) {
    if (len == 0) return 1;
    if (len % 2 != 0) return 0;
    std::uint64_t total = 0;
    // Position 0 pairs with an equal-index position at odd offset, splitting
    // the word into two independent segments.
    for (std::size_t j = 1; j < len; j += 2) {
        if (w[j] != w[0]) continue;
        total += count_noncrossing(w + 1, j - 1) * count_noncrossing(w + j + 1, len - j - 1);
    }
    return total;
}

}  // namespace

std::uint64_t free_moment_word(const IndexWord& w) {
    if (w.empty()) throw std::invalid_argument("free_moment_word: empty word");
    for (int idx : w)
        if (idx < 1) throw std::invalid_argument("free_moment_word: indices must be positive");
    return count_noncrossing(w.data(), w.size());
}

Complex free_moment(const ncpoly::Polynomial& p) {
    Complex total = 0.0;
    for (const auto& [word, coeff] : p.terms()) {
        if (word.empty()) {
            total += coeff;  // tau(1) = 1
            continue;
        }
        IndexWord iw(word.size());
        for (std::size_t i = 0; i < word.size(); ++i) iw[i] = word[i].var;  // stars erased
        total += coeff * static_cast<double>(free_moment_word(iw));
    }
    return total;
}

}  // namespace nclab::freeprob

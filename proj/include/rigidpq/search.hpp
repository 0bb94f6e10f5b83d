#pragma once

// Exhaustive search for character sextuples satisfying the four conditions
// of the six-character criterion.
//
// Conditions (1), (3) and (4) constrain characters one at a time, and (2)
// constrains the two characters of one pair. So the solution set is the
// product of three independent pair lists, one per branch point. Pairs are
// kept as chi < chi' and listed lexicographically, which makes the nested
// product lexicographic in the six slots.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "rigidpq/product_quotient.hpp"
#include "rigidpq/rigidity.hpp"

namespace rigidpq {

class SextupleSearch {
 public:
  using Pair = std::pair<Character, Character>;

  explicit SextupleSearch(Int n_value) : n_(check(n_value)) {
    const auto cover = TriangleCoverData::standard(n_);
    const auto twist = TwistMatrix::standard(n_);
    const auto aux = auxiliary_elements(n_);
    for (BranchPoint p : kBranchPoints) {
      std::vector<Character> candidates;
      for (Int a = 0; a < n_value; ++a) {
        for (Int b = 0; b < n_value; ++b) {
          const Character chi{n_, a, b};
          if (!has_slot_parity(chi, p)) continue;
          if (h0_eigensheaf(canonical_eigendegree(cover, chi)) == 0) continue;
          const Character image = twisted_char(negate(n_, chi), n_, twist);
          if (h0_eigensheaf(bicanonical_eigendegree(cover, image)) == 0) continue;
          candidates.push_back(chi);
        }
      }
      auto& pairs = pairs_[index_of(p)];
      for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
          if (char_eval(n_, candidates[i], aux.translation(p)) !=
              char_eval(n_, candidates[j], aux.translation(p)))
            pairs.emplace_back(candidates[i], candidates[j]);
    }
  }

  GroupModulus modulus() const noexcept { return n_; }
  const std::vector<Pair>& pairs(BranchPoint p) const noexcept { return pairs_[index_of(p)]; }

  /// Number of solutions, saturating at the uint64 maximum.
  std::uint64_t size() const noexcept {
    std::uint64_t total = 1;
    for (const auto& list : pairs_) {
      const std::uint64_t k = list.size();
      if (k == 0) return 0;
      if (total > std::numeric_limits<std::uint64_t>::max() / k)
        return std::numeric_limits<std::uint64_t>::max();
      total *= k;
    }
    return total;
  }

  /// Membership up to the order within each pair.
  bool contains(const CharacterSextuple& sextuple) const {
    const auto c = sextuple.canonicalized();
    return std::all_of(kBranchPoints.begin(), kBranchPoints.end(), [&](BranchPoint p) {
      const auto& list = pairs(p);
      return std::binary_search(list.begin(), list.end(), Pair{c.at(p, false), c.at(p, true)});
    });
  }

  /// Solutions in lexicographic order, at most `limit` of them. Work is split
  /// by the pair at 0 into contiguous chunks, so the output does not depend
  /// on `jobs`.
  std::vector<CharacterSextuple> enumerate(std::optional<std::size_t> limit = std::nullopt,
                                           unsigned jobs = 1) const {
    const auto& first = pairs_[0];
    const std::size_t cap = limit.value_or(std::numeric_limits<std::size_t>::max());
    if (cap == 0 || first.empty()) return {};
    jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(first.size()));

    std::vector<std::vector<CharacterSextuple>> parts(jobs);
    auto work = [&](unsigned w) {
      const std::size_t lo = first.size() * w / jobs;
      const std::size_t hi = first.size() * (w + 1) / jobs;
      auto& out = parts[w];
      for (std::size_t i = lo; i < hi; ++i)
        for (const auto& one : pairs_[1])
          for (const auto& inf : pairs_[2]) {
            if (out.size() >= cap) return;
            out.emplace_back(std::array<Character, 6>{first[i].first, first[i].second, one.first,
                                                      one.second, inf.first, inf.second});
          }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      threads.reserve(jobs);
      for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    }

    std::vector<CharacterSextuple> result;
    for (auto& part : parts) {
      for (auto& s : part) {
        if (result.size() >= cap) return result;
        result.push_back(std::move(s));
      }
    }
    return result;
  }

 private:
  static GroupModulus check(Int n) {
    check_construction_domain(n, 8);
    return GroupModulus{n};
  }

  GroupModulus n_;
  std::array<std::vector<Pair>, 3> pairs_;
};

inline std::vector<CharacterSextuple> search_sextuples(Int n,
                                                       std::optional<std::size_t> limit = {},
                                                       unsigned jobs = 1) {
  return SextupleSearch{n}.enumerate(limit, jobs);
}

}  // namespace rigidpq

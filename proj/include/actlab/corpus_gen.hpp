#ifndef ACTLAB_CORPUS_GEN_HPP_
#define ACTLAB_CORPUS_GEN_HPP_

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "core.hpp"
#include "monoid.hpp"

namespace actlab {

  namespace gen_detail {
    // Smallest relabelled table over permutations fixing the identity 0.
    inline std::vector<Elem> canonical_table(std::size_t n, std::vector<Elem> const& t) {
      std::vector<Elem> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<Elem> best;
      do {
        std::vector<Elem> r(n * n);
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            r[perm[x] * n + perm[y]] = perm[t[x * n + y]];
          }
        }
        if (best.empty() || r < best) {
          best = std::move(r);
        }
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
      return best;
    }
  }  // namespace gen_detail

  // Every monoid of the given order up to isomorphism, identity at 0, in
  // order of canonical table.
  inline std::vector<FiniteMonoid> generate_monoids(std::size_t n) {
    if (n == 0 || n > 5) {
      throw PreconditionFailed("generation supports orders 1..5");
    }
    std::vector<Elem> t(n * n, 0);
    std::vector<bool> set(n * n, false);
    for (Elem x = 0; x < n; ++x) {
      t[x] = x;
      t[x * n] = x;
      set[x] = set[x * n] = true;
    }
    std::vector<std::size_t> cells;
    for (std::size_t x = 1; x < n; ++x) {
      for (std::size_t y = 1; y < n; ++y) {
        cells.push_back(x * n + y);
      }
    }
    auto consistent = [&]() {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (!set[x * n + y]) {
            continue;
          }
          Elem xy = t[x * n + y];
          for (std::size_t z = 0; z < n; ++z) {
            if (!set[y * n + z] || !set[xy * n + z]) {
              continue;
            }
            Elem yz = t[y * n + z];
            if (set[x * n + yz] && t[xy * n + z] != t[x * n + yz]) {
              return false;
            }
          }
        }
      }
      return true;
    };
    std::set<std::vector<Elem>> seen;
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == cells.size()) {
        seen.insert(gen_detail::canonical_table(n, t));
        return;
      }
      for (Elem v = 0; v < n; ++v) {
        t[cells[k]]   = v;
        set[cells[k]] = true;
        if (consistent()) {
          self(self, k + 1);
        }
      }
      set[cells[k]] = false;
    };
    rec(rec, 0);
    std::vector<FiniteMonoid> out;
    for (auto const& tab : seen) {
      out.push_back(FiniteMonoid::make(n, tab, 0));
    }
    return out;
  }

}  // namespace actlab

#endif  // ACTLAB_CORPUS_GEN_HPP_

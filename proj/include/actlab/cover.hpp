#ifndef ACTLAB_COVER_HPP_
#define ACTLAB_COVER_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "core.hpp"
#include "monoid.hpp"

namespace actlab {

  class REmptyError : public Error {
   public:
    REmptyError() : Error("regular core is empty") {}
  };

  // Smallest k candidates whose union is `universe`, ties broken by the
  // lexicographically least index list.  Candidates outside the universe are
  // ignored.
  inline std::optional<std::vector<std::size_t>>
  exact_set_cover(ElementSet const& universe, std::vector<ElementSet> const& candidates) {
    if (universe.empty()) {
      return std::vector<std::size_t>{};
    }
    std::vector<std::size_t> useful;
    std::set<ElementSet>     seen;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!candidates[i].empty() && candidates[i].subset_of(universe)
          && seen.insert(candidates[i]).second) {
        useful.push_back(i);
      }
    }
    ElementSet all;
    for (auto i : useful) {
      all = all.unite(candidates[i]);
    }
    if (all != universe) {
      return std::nullopt;
    }
    std::size_t u = useful.size();
    for (std::size_t k = 1; k <= u; ++k) {
      std::vector<std::size_t> pick(k);
      for (std::size_t i = 0; i < k; ++i) {
        pick[i] = i;
      }
      while (true) {
        ElementSet acc;
        for (auto p : pick) {
          acc = acc.unite(candidates[useful[p]]);
        }
        if (acc == universe) {
          std::vector<std::size_t> out;
          for (auto p : pick) {
            out.push_back(useful[p]);
          }
          return out;
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == u - k + i - 1) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) {
          pick[j] = pick[j - 1] + 1;
        }
      }
    }
    return std::nullopt;
  }

  // x·R
  inline ElementSet right_multiples(FiniteMonoid const& m, ElementSet const& core, Elem x) {
    std::vector<Elem> out;
    for (auto r : core) {
      out.push_back(m.mul(x, r));
    }
    return ElementSet(std::move(out));
  }

  // Fewest idempotents e of `within` (∩ R) with X = ∪ e·R, for X ⊆ R.
  inline std::optional<std::vector<Elem>> idempotent_cover_of(FiniteMonoid const& m,
                                                              ElementSet const&   core,
                                                              ElementSet const&   x) {
    std::vector<Elem>       idem;
    std::vector<ElementSet> sets;
    for (auto e : x) {
      if (core.contains(e) && is_idempotent(m, e)) {
        idem.push_back(e);
        sets.push_back(right_multiples(m, core, e));
      }
    }
    auto pick = exact_set_cover(x, sets);
    if (!pick) {
      return std::nullopt;
    }
    std::vector<Elem> out;
    for (auto i : *pick) {
      out.push_back(idem[i]);
    }
    return out;
  }

  // R = e_1·R ∪ ... ∪ e_n·R with n least.
  inline std::vector<Elem> idempotent_cover(FiniteMonoid const& m, ElementSet const& core) {
    if (core.empty()) {
      throw REmptyError();
    }
    auto c = idempotent_cover_of(m, core, core);
    if (!c) {
      throw VerificationFailed("regular core has no idempotent cover");
    }
    return *c;
  }

  // Fewest x_i in X with X = ∪ x_i·R.
  inline std::optional<std::vector<Elem>> generator_set(FiniteMonoid const& m,
                                                        ElementSet const&   core,
                                                        ElementSet const&   x) {
    std::vector<ElementSet> sets;
    for (auto g : x) {
      sets.push_back(right_multiples(m, core, g));
    }
    auto pick = exact_set_cover(x, sets);
    if (!pick) {
      return std::nullopt;
    }
    std::vector<Elem> out;
    for (auto i : *pick) {
      out.push_back(x[i]);
    }
    return out;
  }

  // X_{s,t} = {x in R : s·x = t·x} and their finite intersections.
  struct EqualizerFamily {
    std::vector<ElementSet> members;
    std::vector<std::pair<Elem, Elem>> basic;  // one (s, t) per basic member
    bool truncated = false;
  };

  inline ElementSet equalizer(FiniteMonoid const& m, ElementSet const& core, Elem s, Elem t) {
    std::vector<Elem> out;
    for (auto x : core) {
      if (m.mul(s, x) == m.mul(t, x)) {
        out.push_back(x);
      }
    }
    return ElementSet(std::move(out));
  }

  inline EqualizerFamily equalizer_family(FiniteMonoid const& m,
                                          ElementSet const&   core,
                                          std::size_t         cap = 4096) {
    EqualizerFamily       fam;
    std::set<ElementSet>  seen;
    for (Elem s = 0; s < m.order(); ++s) {
      for (Elem t = s; t < m.order(); ++t) {
        auto x = equalizer(m, core, s, t);
        if (seen.insert(x).second) {
          fam.members.push_back(x);
          fam.basic.emplace_back(s, t);
        }
      }
    }
    std::size_t nbasic = fam.members.size();
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      for (std::size_t j = 0; j < nbasic; ++j) {
        auto x = fam.members[i].intersect(fam.members[j]);
        if (seen.insert(x).second) {
          if (fam.members.size() >= cap) {
            fam.truncated = true;
            return fam;
          }
          fam.members.push_back(x);
        }
      }
    }
    return fam;
  }

}  // namespace actlab

#endif  // ACTLAB_COVER_HPP_

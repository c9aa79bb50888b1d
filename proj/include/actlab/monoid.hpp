#ifndef ACTLAB_MONOID_HPP_
#define ACTLAB_MONOID_HPP_

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace actlab {

  class NonAssociative : public Error {
   public:
    NonAssociative(Elem s, Elem t, Elem u)
        : Error("not associative at (" + std::to_string(s) + ","
                + std::to_string(t) + "," + std::to_string(u) + ")"),
          s(s),
          t(t),
          u(u) {}
    Elem s, t, u;
  };

  class NoIdentity : public Error {
   public:
    using Error::Error;
  };

  class OutOfRange : public Error {
   public:
    using Error::Error;
  };

  class FiniteMonoid {
   public:
    // Validates associativity, the index range and the identity.  When
    // `identity` is given it must be a two-sided identity; otherwise the first
    // one found is used.
    static FiniteMonoid make(std::size_t              order,
                             std::vector<Elem>        table,
                             std::optional<Elem>      identity = std::nullopt) {
      if (order == 0) {
        throw NoIdentity("a monoid has at least one element");
      }
      if (table.size() != order * order) {
        throw OutOfRange("table has " + std::to_string(table.size())
                         + " entries, expected " + std::to_string(order * order));
      }
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= order) {
          throw OutOfRange("entry (" + std::to_string(i / order) + ","
                           + std::to_string(i % order) + ") = "
                           + std::to_string(table[i]) + " out of range");
        }
      }
      FiniteMonoid m;
      m.order_ = order;
      m.table_ = std::move(table);
      for (Elem s = 0; s < order; ++s) {
        for (Elem t = 0; t < order; ++t) {
          Elem st = m.mul(s, t);
          for (Elem u = 0; u < order; ++u) {
            if (m.mul(st, u) != m.mul(s, m.mul(t, u))) {
              throw NonAssociative(s, t, u);
            }
          }
        }
      }
      auto is_identity = [&m](Elem e) {
        for (Elem x = 0; x < m.order_; ++x) {
          if (m.mul(e, x) != x || m.mul(x, e) != x) {
            return false;
          }
        }
        return true;
      };
      if (identity) {
        if (*identity >= order) {
          throw OutOfRange("identity index out of range");
        }
        if (!is_identity(*identity)) {
          throw NoIdentity("element " + std::to_string(*identity)
                           + " is not a two-sided identity");
        }
        m.identity_ = *identity;
      } else {
        bool found = false;
        for (Elem e = 0; e < order && !found; ++e) {
          if (is_identity(e)) {
            m.identity_ = e;
            found       = true;
          }
        }
        if (!found) {
          throw NoIdentity("no two-sided identity");
        }
      }
      return m;
    }

    Elem mul(Elem a, Elem b) const noexcept {
      return table_[a * order_ + b];
    }
    std::size_t              order() const noexcept { return order_; }
    Elem                     identity() const noexcept { return identity_; }
    std::vector<Elem> const& table() const noexcept { return table_; }

    // FNV-1a over order, identity and table.
    std::uint64_t digest() const noexcept {
      std::uint64_t h   = 1469598103934665603ull;
      auto          mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
          h ^= (v >> (8 * i)) & 0xffu;
          h *= 1099511628211ull;
        }
      };
      mix(order_);
      mix(identity_);
      for (auto x : table_) {
        mix(x);
      }
      return h;
    }

    std::string fingerprint() const {
      char buf[17];
      std::snprintf(buf, sizeof(buf), "%016llx",
                    static_cast<unsigned long long>(digest()));
      return "n" + std::to_string(order_) + "-" + buf;
    }

    friend bool operator==(FiniteMonoid const& a, FiniteMonoid const& b) {
      return a.order_ == b.order_ && a.identity_ == b.identity_
             && a.table_ == b.table_;
    }

   private:
    FiniteMonoid() = default;

    std::size_t       order_    = 0;
    std::vector<Elem> table_;
    Elem              identity_ = 0;
  };

  inline FiniteMonoid validate_monoid(std::size_t         order,
                                      std::vector<Elem>   table,
                                      std::optional<Elem> identity
                                      = std::nullopt) {
    return FiniteMonoid::make(order, std::move(table), identity);
  }

  inline bool is_idempotent(FiniteMonoid const& m, Elem e) {
    return m.mul(e, e) == e;
  }

  inline ElementSet idempotents(FiniteMonoid const& m) {
    std::vector<Elem> out;
    for (Elem e = 0; e < m.order(); ++e) {
      if (is_idempotent(m, e)) {
        out.push_back(e);
      }
    }
    return ElementSet(std::move(out));
  }

  // S·a
  inline ElementSet left_ideal(FiniteMonoid const& m, Elem a) {
    std::vector<Elem> out;
    out.reserve(m.order());
    for (Elem s = 0; s < m.order(); ++s) {
      out.push_back(m.mul(s, a));
    }
    return ElementSet(std::move(out));
  }

  // a·S
  inline ElementSet right_ideal(FiniteMonoid const& m, Elem a) {
    std::vector<Elem> out;
    out.reserve(m.order());
    for (Elem s = 0; s < m.order(); ++s) {
      out.push_back(m.mul(a, s));
    }
    return ElementSet(std::move(out));
  }

  // {x·y : x in X, y in Y}
  inline ElementSet product(FiniteMonoid const& m,
                            ElementSet const&   xs,
                            ElementSet const&   ys) {
    std::vector<Elem> out;
    for (auto x : xs) {
      for (auto y : ys) {
        out.push_back(m.mul(x, y));
      }
    }
    return ElementSet(std::move(out));
  }

  // Principal left ideals ordered by inclusion.
  struct IdealPoset {
    std::vector<ElementSet>                          ideals;     // distinct S·a
    std::vector<Elem>                                generator;  // first a with S·a = ideals[i]
    std::vector<std::uint32_t>                       node_of;    // element -> node
    std::vector<std::pair<std::uint32_t, std::uint32_t>> strict;  // (i, j): ideals[i] ⊂ ideals[j]

    bool below(std::uint32_t i, std::uint32_t j) const {
      return ideals[i].subset_of(ideals[j]);
    }
  };

  inline IdealPoset ideal_poset(FiniteMonoid const& m) {
    IdealPoset p;
    p.node_of.assign(m.order(), 0);
    for (Elem a = 0; a < m.order(); ++a) {
      auto           ideal = left_ideal(m, a);
      std::uint32_t  found = UINT32_MAX;
      for (std::uint32_t i = 0; i < p.ideals.size(); ++i) {
        if (p.ideals[i] == ideal) {
          found = i;
          break;
        }
      }
      if (found == UINT32_MAX) {
        found = static_cast<std::uint32_t>(p.ideals.size());
        p.ideals.push_back(std::move(ideal));
        p.generator.push_back(a);
      }
      p.node_of[a] = found;
    }
    for (std::uint32_t i = 0; i < p.ideals.size(); ++i) {
      for (std::uint32_t j = 0; j < p.ideals.size(); ++j) {
        if (i != j && p.ideals[i].strict_subset_of(p.ideals[j])) {
          p.strict.emplace_back(i, j);
        }
      }
    }
    return p;
  }

  // Longest strict chain of principal left ideals, listed bottom-up as nodes.
  inline std::vector<std::uint32_t> longest_chain(IdealPoset const& p) {
    std::size_t              n = p.ideals.size();
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&p](auto x, auto y) {
      return p.ideals[x].size() < p.ideals[y].size();
    });
    std::vector<std::uint32_t> len(n, 1), prev(n, UINT32_MAX);
    for (auto j : order) {
      for (auto i : order) {
        if (p.ideals[i].size() >= p.ideals[j].size()) {
          break;
        }
        if (p.ideals[i].strict_subset_of(p.ideals[j]) && len[i] + 1 > len[j]) {
          len[j]  = len[i] + 1;
          prev[j] = i;
        }
      }
    }
    std::uint32_t best = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (len[i] > len[best]) {
        best = i;
      }
    }
    std::vector<std::uint32_t> chain;
    for (auto i = best; i != UINT32_MAX; i = prev[i]) {
      chain.push_back(i);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  }

  // Number of ideals in the longest chain; the trivial monoid has depth 1.
  inline std::size_t depth(FiniteMonoid const& m) {
    return longest_chain(ideal_poset(m)).size();
  }

  // A nonempty left ideal L is minimal iff S·a = L for every a in L.
  inline bool is_minimal_left_ideal(FiniteMonoid const& m, ElementSet const& l) {
    if (l.empty()) {
      return false;
    }
    for (auto a : l) {
      if (left_ideal(m, a) != l) {
        return false;
      }
    }
    return true;
  }

  inline bool is_minimal_right_ideal(FiniteMonoid const& m, ElementSet const& r) {
    if (r.empty()) {
      return false;
    }
    for (auto a : r) {
      if (right_ideal(m, a) != r) {
        return false;
      }
    }
    return true;
  }

  // Union of the minimal left ideals.
  inline ElementSet kernel(FiniteMonoid const& m) {
    ElementSet out;
    for (Elem a = 0; a < m.order(); ++a) {
      auto l = left_ideal(m, a);
      if (is_minimal_left_ideal(m, l)) {
        out = out.unite(l);
      }
    }
    return out;
  }

  class NotIdempotent : public Error {
   public:
    using Error::Error;
  };
  class IdealNotMinimal : public Error {
   public:
    using Error::Error;
  };
  class NotAGroup : public Error {
   public:
    NotAGroup(std::string const& msg, Elem w) : Error(msg), witness(w) {}
    Elem witness;
  };

  struct GroupComponent {
    Elem              unit;
    ElementSet        members;
    std::vector<Elem> inverse;  // inverse[i] is the inverse of members[i]
  };

  // Members of `cell` with unit e; checks closure and inverses.
  inline GroupComponent group_on(FiniteMonoid const& m, Elem e, ElementSet const& cell) {
    GroupComponent g{e, cell, {}};
    for (auto a : cell) {
      if (m.mul(e, a) != a || m.mul(a, e) != a) {
        throw NotAGroup("element " + std::to_string(a) + " not fixed by unit", a);
      }
      for (auto b : cell) {
        if (!cell.contains(m.mul(a, b))) {
          throw NotAGroup("product leaves the group at " + std::to_string(a), a);
        }
      }
    }
    for (auto a : cell) {
      bool found = false;
      for (auto b : cell) {
        if (m.mul(a, b) == e && m.mul(b, a) == e) {
          g.inverse.push_back(b);
          found = true;
          break;
        }
      }
      if (!found) {
        throw NotAGroup("no inverse for " + std::to_string(a), a);
      }
    }
    return g;
  }

  // G_e = {a : e·a = a·e = a}, required to be a group when S·e is minimal.
  inline GroupComponent group_component(FiniteMonoid const& m, Elem e) {
    if (e >= m.order()) {
      throw OutOfRange("element out of range");
    }
    if (!is_idempotent(m, e)) {
      throw NotIdempotent(std::to_string(e) + " is not idempotent");
    }
    if (!is_minimal_left_ideal(m, left_ideal(m, e))) {
      throw IdealNotMinimal("S·" + std::to_string(e) + " is not minimal");
    }
    std::vector<Elem> cell;
    for (Elem a = 0; a < m.order(); ++a) {
      if (m.mul(e, a) == a && m.mul(a, e) == a) {
        cell.push_back(a);
      }
    }
    return group_on(m, e, ElementSet(std::move(cell)));
  }

  // Two elements whose principal left ideals are incomparable.
  struct IncomparablePair {
    Elem b;
    Elem c;
  };

  inline std::optional<IncomparablePair> linear_order_failure(FiniteMonoid const& m) {
    auto p = ideal_poset(m);
    for (std::uint32_t i = 0; i < p.ideals.size(); ++i) {
      for (std::uint32_t j = i + 1; j < p.ideals.size(); ++j) {
        if (!p.ideals[i].comparable(p.ideals[j])) {
          return IncomparablePair{p.generator[i], p.generator[j]};
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_linearly_ordered(FiniteMonoid const& m) {
    return !linear_order_failure(m).has_value();
  }

  // a in R with S·b, S·c ⊆ S·a incomparable.
  struct RegularOrderFailure {
    Elem a;
    Elem b;
    Elem c;
  };

  inline std::optional<RegularOrderFailure>
  regular_linear_order_failure(FiniteMonoid const& m, ElementSet const& core) {
    std::vector<ElementSet> ideal(m.order());
    for (Elem x = 0; x < m.order(); ++x) {
      ideal[x] = left_ideal(m, x);
    }
    for (auto a : core) {
      std::vector<Elem> below;
      for (Elem b = 0; b < m.order(); ++b) {
        if (ideal[b].subset_of(ideal[a])) {
          below.push_back(b);
        }
      }
      for (std::size_t i = 0; i < below.size(); ++i) {
        for (std::size_t j = i + 1; j < below.size(); ++j) {
          if (!ideal[below[i]].comparable(ideal[below[j]])) {
            return RegularOrderFailure{a, below[i], below[j]};
          }
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_regularly_linearly_ordered(FiniteMonoid const& m,
                                            ElementSet const&   core) {
    return !regular_linear_order_failure(m, core).has_value();
  }

  // The monoid with element x renamed perm[x].
  inline FiniteMonoid relabel(FiniteMonoid const& m, std::vector<Elem> const& perm) {
    std::size_t       n = m.order();
    std::vector<Elem> table(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        table[perm[a] * n + perm[b]] = perm[m.mul(a, b)];
      }
    }
    return FiniteMonoid::make(n, std::move(table), perm[m.identity()]);
  }

}  // namespace actlab

#endif  // ACTLAB_MONOID_HPP_

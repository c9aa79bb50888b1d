#ifndef ACTLAB_REGULAR_HPP_
#define ACTLAB_REGULAR_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "act.hpp"
#include "core.hpp"
#include "monoid.hpp"
#include "union_find.hpp"

namespace actlab {

  // {(s, t) : s·x = t·x} as canonical block labels over S.
  using Annihilator = std::vector<std::uint32_t>;

  inline Annihilator annihilator(FiniteAct const& a, Point x) {
    std::vector<Point> image(a.alphabet_size());
    for (Elem s = 0; s < a.alphabet_size(); ++s) {
      image[s] = a.act(s, x);
    }
    return canonical_labels(image);
  }

  inline Annihilator annihilator_in_monoid(FiniteMonoid const& m, Elem e) {
    std::vector<Elem> image(m.order());
    for (Elem s = 0; s < m.order(); ++s) {
      image[s] = m.mul(s, e);
    }
    return canonical_labels(image);
  }

  // s ~ t implies u·s ~ u·t.
  inline bool is_left_congruence(FiniteMonoid const& m, Annihilator const& rel) {
    for (Elem s = 0; s < m.order(); ++s) {
      for (Elem t = s + 1; t < m.order(); ++t) {
        if (rel[s] == rel[t]) {
          for (Elem u = 0; u < m.order(); ++u) {
            if (rel[m.mul(u, s)] != rel[m.mul(u, t)]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  // A pair (s, t) separating the annihilators of x and of e.
  struct Refutation {
    Elem e;
    Elem s;
    Elem t;
  };

  struct PointRegularity {
    Point                   point = 0;
    std::optional<Elem>     idempotent;  // e with S·x ≅ S·e, x ↦ e
    ActHom                  iso;         // S·x → S·e inside S_S
    std::vector<Refutation> refutations; // one per idempotent when not regular

    bool regular() const noexcept { return idempotent.has_value(); }
  };

  // Annihilators of the idempotents, computed once per monoid.
  class IdempotentTable {
   public:
    explicit IdempotentTable(FiniteMonoid const& m) : idem_(idempotents(m)) {
      for (auto e : idem_) {
        ann_.push_back(annihilator_in_monoid(m, e));
      }
    }
    ElementSet const&  elements() const noexcept { return idem_; }
    Annihilator const& annihilator_of(std::size_t i) const { return ann_[i]; }
    std::size_t        size() const noexcept { return idem_.size(); }

   private:
    ElementSet               idem_;
    std::vector<Annihilator> ann_;
  };

  inline PointRegularity point_regularity(FiniteAct const&       a,
                                          Point                  x,
                                          IdempotentTable const& table) {
    PointRegularity out;
    out.point   = x;
    auto ann    = annihilator(a, x);
    auto const& m = a.monoid();
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table.annihilator_of(i) == ann) {
        Elem e          = table.elements()[i];
        out.idempotent  = e;
        std::map<Point, Elem> forced;
        for (Elem s = 0; s < m.order(); ++s) {
          forced.emplace(a.act(s, x), m.mul(s, e));
        }
        for (auto [p, q] : forced) {
          out.iso.domain.push_back(p);
          out.iso.image.push_back(q);
        }
        out.refutations.clear();
        return out;
      }
      Elem e = table.elements()[i];
      bool done = false;
      for (Elem s = 0; s < m.order() && !done; ++s) {
        for (Elem t = s + 1; t < m.order() && !done; ++t) {
          bool same_x = a.act(s, x) == a.act(t, x);
          bool same_e = m.mul(s, e) == m.mul(t, e);
          if (same_x != same_e) {
            out.refutations.push_back({e, s, t});
            done = true;
          }
        }
      }
    }
    return out;
  }

  inline PointRegularity is_act_regular(FiniteAct const& a, Point x) {
    if (x >= a.size()) {
      throw OutOfRange("point out of range");
    }
    return point_regularity(a, x, IdempotentTable(a.monoid()));
  }

  inline std::vector<PointRegularity> regularity_certificate(FiniteAct const& a) {
    IdempotentTable              table(a.monoid());
    std::vector<PointRegularity> out;
    for (Point x = 0; x < a.size(); ++x) {
      out.push_back(point_regularity(a, x, table));
    }
    return out;
  }

  // Re-checks a certificate entry from scratch.
  inline bool verify_point_regularity(FiniteAct const& a, PointRegularity const& pr) {
    auto const& m = a.monoid();
    if (pr.regular()) {
      Elem e = *pr.idempotent;
      if (!is_idempotent(m, e)) {
        return false;
      }
      for (Elem s = 0; s < m.order(); ++s) {
        auto img = pr.iso.at(a.act(s, pr.point));
        if (!img || *img != m.mul(s, e)) {
          return false;
        }
      }
      return ElementSet(pr.iso.image).size() == pr.iso.image.size();
    }
    auto idem = idempotents(m);
    if (pr.refutations.size() != idem.size()) {
      return false;
    }
    for (std::size_t i = 0; i < idem.size(); ++i) {
      auto const& r = pr.refutations[i];
      if (r.e != idem[i]) {
        return false;
      }
      bool same_x = a.act(r.s, pr.point) == a.act(r.t, pr.point);
      bool same_e = m.mul(r.s, r.e) == m.mul(r.t, r.e);
      if (same_x == same_e) {
        return false;
      }
    }
    return true;
  }

  // Points whose whole orbit is act-regular: the largest regular subact.
  inline ElementSet regular_core(FiniteAct const& a) {
    IdempotentTable   table(a.monoid());
    std::vector<bool> ok(a.size());
    for (Point x = 0; x < a.size(); ++x) {
      ok[x] = point_regularity(a, x, table).regular();
    }
    std::vector<Point> core;
    for (Point x = 0; x < a.size(); ++x) {
      bool all = true;
      for (Elem s = 0; s < a.alphabet_size() && all; ++s) {
        all = ok[a.act(s, x)];
      }
      if (all) {
        core.push_back(x);
      }
    }
    return ElementSet(std::move(core));
  }

  inline ElementSet monoid_regular_core(MonoidPtr const& m) {
    return regular_core(regular_representation(m));
  }

  inline bool is_regular_act(FiniteAct const& a) {
    return regular_core(a).size() == a.size();
  }

  // a·b·a = a for some b, for every a; returns the first a without one.
  inline std::optional<Elem> vn_regularity_failure(FiniteMonoid const& m) {
    for (Elem a = 0; a < m.order(); ++a) {
      bool found = false;
      for (Elem b = 0; b < m.order() && !found; ++b) {
        found = m.mul(m.mul(a, b), a) == a;
      }
      if (!found) {
        return a;
      }
    }
    return std::nullopt;
  }

  inline bool is_vn_regular(FiniteMonoid const& m) {
    return !vn_regularity_failure(m).has_value();
  }

  class NotRegular : public Error {
   public:
    NotRegular(Point x)
        : Error("point " + std::to_string(x) + " is not act-regular"), point(x) {}
    Point point;
  };

  // A ≅ (⊔ S·e_a) / theta with theta an amalgam congruence.
  struct RegularDecomposition {
    std::vector<Point>  generators;   // a in A'
    std::vector<Elem>   idempotents;  // e_a
    Coproduct           summands;     // ⊔ S·e_a, each a cyclic subact of S_S
    ActCongruence       theta;
    std::vector<Point>  block_to_point;  // quotient block -> point of A
  };

  inline RegularDecomposition decompose_regular(FiniteAct const& a) {
    IdempotentTable              table(a.monoid());
    std::vector<PointRegularity> cert;
    for (Point x = 0; x < a.size(); ++x) {
      cert.push_back(point_regularity(a, x, table));
      if (!cert.back().regular()) {
        throw NotRegular(x);
      }
    }
    std::vector<ElementSet> orbits;
    std::vector<Point>      order;
    for (Point x = 0; x < a.size(); ++x) {
      orbits.push_back(orbit(a, x));
      order.push_back(x);
    }
    std::stable_sort(order.begin(), order.end(), [&orbits](Point x, Point y) {
      return orbits[x].size() > orbits[y].size();
    });
    std::vector<Point> gens;
    ElementSet         covered;
    for (auto x : order) {
      if (!covered.contains(x)) {
        gens.push_back(x);
        covered = covered.unite(orbits[x]);
      }
    }
    std::sort(gens.begin(), gens.end());
    auto                          rep = regular_representation(a.monoid_ptr());
    std::vector<Elem>             idems;
    std::vector<Subact>           parts;
    std::vector<FiniteAct const*> ptrs;
    for (auto x : gens) {
      idems.push_back(*cert[x].idempotent);
      parts.push_back(cyclic_subact(rep, idems.back()));
    }
    for (auto const& p : parts) {
      ptrs.push_back(&p.act);
    }
    RegularDecomposition d{gens, idems, coproduct(ptrs), {}, {}};
    auto const& m = a.monoid();
    // π(s·e_a in summand k) = s·a
    std::vector<Point> pi(d.summands.act.size());
    for (std::size_t k = 0; k < parts.size(); ++k) {
      for (Elem s = 0; s < m.order(); ++s) {
        Point local = parts[k].local(m.mul(s, d.idempotents[k]));
        pi[d.summands.inject(k, local)] = a.act(s, d.generators[k]);
      }
    }
    d.theta = ActCongruence(pi);
    if (!is_congruence(d.summands.act, d.theta) || !is_amalgam(d.summands.act, d.theta)) {
      throw VerificationFailed("decomposition congruence is not an amalgam");
    }
    auto q = quotient_act(d.summands.act, d.theta);
    d.block_to_point.assign(q.act.size(), 0);
    for (Point p = 0; p < pi.size(); ++p) {
      d.block_to_point[q.projection[p]] = pi[p];
    }
    if (ElementSet(d.block_to_point).size() != a.size()) {
      throw VerificationFailed("decomposition does not cover the act");
    }
    for (Elem s = 0; s < m.order(); ++s) {
      for (Point b = 0; b < q.act.size(); ++b) {
        if (d.block_to_point[q.act.act(s, b)] != a.act(s, d.block_to_point[b])) {
          throw VerificationFailed("decomposition map is not a homomorphism");
        }
      }
    }
    return d;
  }

  // For a ∈ A, the principal subacts below S·a form a chain.
  struct LiftFailure {
    Point a;
    Point b;
    Point c;
  };

  inline std::optional<LiftFailure>
  regular_linear_order_lift_check(FiniteMonoid const& m, ElementSet const& core, FiniteAct const& a) {
    if (auto f = regular_linear_order_failure(m, core)) {
      throw PreconditionFailed("monoid is not regularly linearly ordered");
    }
    if (!is_regular_act(a)) {
      throw PreconditionFailed("act is not regular");
    }
    std::vector<ElementSet> orb(a.size());
    for (Point x = 0; x < a.size(); ++x) {
      orb[x] = orbit(a, x);
    }
    for (Point x = 0; x < a.size(); ++x) {
      auto const& below = orb[x];
      for (std::size_t i = 0; i < below.size(); ++i) {
        for (std::size_t j = i + 1; j < below.size(); ++j) {
          if (!orb[below[i]].comparable(orb[below[j]])) {
            return LiftFailure{x, below[i], below[j]};
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace actlab

#endif  // ACTLAB_REGULAR_HPP_

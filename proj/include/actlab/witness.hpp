#ifndef ACTLAB_WITNESS_HPP_
#define ACTLAB_WITNESS_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "act.hpp"
#include "core.hpp"
#include "cover.hpp"
#include "formula.hpp"
#include "monoid.hpp"
#include "regular.hpp"

namespace actlab {

  class IdealsComparable : public PreconditionFailed {
   public:
    using PreconditionFailed::PreconditionFailed;
  };
  class ChainNotStrict : public PreconditionFailed {
   public:
    using PreconditionFailed::PreconditionFailed;
  };
  class NoCoverIdempotentApplies : public PreconditionFailed {
   public:
    using PreconditionFailed::PreconditionFailed;
  };
  class PatternViolated : public VerificationFailed {
   public:
    PatternViolated(std::string const& msg, std::size_t i, std::size_t j)
        : VerificationFailed(msg), i(i), j(j) {}
    std::size_t i, j;
  };
  class SeparationViolated : public VerificationFailed {
   public:
    using VerificationFailed::VerificationFailed;
  };

  namespace detail {
    inline Elem element_sending(FiniteAct const& act, Point from, Point to) {
      for (Elem s = 0; s < act.alphabet_size(); ++s) {
        if (act.act(s, from) == to) {
          return s;
        }
      }
      throw PreconditionFailed("point " + std::to_string(to) + " is not in the orbit of "
                               + std::to_string(from));
    }

    inline void require_regular_orbit(FiniteAct const& source, Point a) {
      if (!regular_core(source).contains(a)) {
        throw PreconditionFailed("orbit of " + std::to_string(a) + " is not regular");
      }
    }

    inline std::vector<FiniteAct const*> copies(FiniteAct const& part, std::size_t k) {
      return std::vector<FiniteAct const*>(k, &part);
    }
  }  // namespace detail

  // Copies A_ij (j ≤ i ≤ N) of S·a glued along t·a within a row and along s·a
  // within a column.  In the quotient, ∃z(x = t·z ∧ y = s·z) holds of
  // (b_i, c_j) exactly when i ≥ j.
  struct GridWitness {
    Point                                          a;
    Elem                                           t, s;
    std::size_t                                    n;
    FiniteAct                                      act;
    std::vector<Point>                             b_points;  // index i
    std::vector<Point>                             c_points;  // index j
    std::vector<std::pair<std::size_t, std::size_t>> cells;   // (i, j) per copy
    std::vector<std::vector<Point>>                copy_points;
    fo::Formula                                    phi;
  };

  inline fo::Formula grid_formula(Elem t, Elem s) {
    using fo::Formula;
    using fo::Term;
    return Formula::exists(
        "z", Formula::conj(Formula::eq(Term::variable("x"), Term::variable("z", t)),
                           Formula::eq(Term::variable("y"), Term::variable("z", s))));
  }

  inline std::vector<std::vector<bool>> verify_order_pattern(GridWitness const& w) {
    std::vector<std::vector<bool>> out(w.n + 1, std::vector<bool>(w.n + 1));
    for (std::size_t i = 0; i <= w.n; ++i) {
      for (std::size_t j = 0; j <= w.n; ++j) {
        out[i][j] = fo::eval(w.act, w.phi, {{"x", w.b_points[i]}, {"y", w.c_points[j]}});
      }
    }
    return out;
  }

  inline GridWitness build_grid(FiniteAct const& source, Point a, Elem t, Elem s, std::size_t n) {
    if (a >= source.size() || t >= source.alphabet_size() || s >= source.alphabet_size()) {
      throw OutOfRange("grid parameters out of range");
    }
    Point b  = source.act(t, a);
    Point c  = source.act(s, a);
    auto  ob = orbit(source, b);
    auto  oc = orbit(source, c);
    if (ob.subset_of(oc) || oc.subset_of(ob)) {
      throw IdealsComparable("orbits of t·a and s·a are comparable");
    }
    detail::require_regular_orbit(source, a);
    auto sub = cyclic_subact(source, a);
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        cells.emplace_back(i, j);
      }
    }
    auto cop   = coproduct(detail::copies(sub.act, cells.size()));
    auto index = [&](std::size_t i, std::size_t j) {
      return static_cast<std::size_t>(std::find(cells.begin(), cells.end(), std::pair{i, j})
                                      - cells.begin());
    };
    Point lb = sub.local(b), lc = sub.local(c);
    std::vector<std::pair<Point, Point>> pairs;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 1; j <= i; ++j) {
        pairs.emplace_back(cop.inject(index(i, 0), lb), cop.inject(index(i, j), lb));
      }
    }
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = j + 1; i <= n; ++i) {
        pairs.emplace_back(cop.inject(index(j, j), lc), cop.inject(index(i, j), lc));
      }
    }
    auto theta = congruence_generated(cop.act, pairs);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      for (Point x = 0; x < sub.act.size(); ++x) {
        for (Point y = x + 1; y < sub.act.size(); ++y) {
          if (theta.related(cop.inject(k, x), cop.inject(k, y))) {
            throw VerificationFailed("gluing collapses a copy");
          }
        }
      }
    }
    auto q = quotient_act(cop.act, theta);
    std::vector<std::string> labels(q.act.size());
    std::vector<std::vector<Point>> copy_points;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      std::vector<Point> pts;
      for (Point x = 0; x < sub.act.size(); ++x) {
        Point p = q.projection[cop.inject(k, x)];
        pts.push_back(p);
        if (labels[p].empty()) {
          labels[p] = source.label(sub.embed[x]) + "@" + std::to_string(cells[k].first) + ","
                      + std::to_string(cells[k].second);
        }
      }
      copy_points.push_back(std::move(pts));
    }
    GridWitness w{a, t, s, n, std::move(q.act), {}, {}, cells, std::move(copy_points),
                  grid_formula(t, s)};
    w.act.set_labels(std::move(labels));
    for (std::size_t i = 0; i <= n; ++i) {
      w.b_points.push_back(w.copy_points[index(i, 0)][lb]);
      w.c_points.push_back(w.copy_points[index(i, i)][lc]);
    }
    if (!is_regular_act(w.act)) {
      throw VerificationFailed("grid act is not regular");
    }
    auto pattern = verify_order_pattern(w);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        if (pattern[i][j] != (i >= j)) {
          throw PatternViolated("order pattern fails at (" + std::to_string(i) + ","
                                    + std::to_string(j) + ")",
                                i, j);
        }
      }
    }
    return w;
  }

  // Copies of S·a indexed by κ^d, glued so that the level-k points of two
  // copies coincide exactly when the sequences agree on positions 0..k.
  struct TreeWitness {
    Point                                  a;
    std::vector<Point>                     chain;
    std::size_t                            kappa, depth;
    FiniteAct                              act;
    std::vector<std::vector<std::uint8_t>> leaves;       // in gluing order
    std::vector<Point>                     leaf_points;
    std::vector<Elem>                      level_elems;  // s_k with s_k·a = a_k
  };

  // Eventually-zero order: by the index after the last nonzero entry, then
  // lexicographically.
  inline std::size_t support_end(std::vector<std::uint8_t> const& eta) {
    for (std::size_t i = eta.size(); i-- > 0;) {
      if (eta[i] != 0) {
        return i + 1;
      }
    }
    return 0;
  }

  inline bool tree_order(std::vector<std::uint8_t> const& x, std::vector<std::uint8_t> const& y) {
    auto rx = support_end(x), ry = support_end(y);
    return rx != ry ? rx < ry : x < y;
  }

  inline std::vector<std::vector<bool>> tree_separation(TreeWitness const& w) {
    std::size_t                    n = w.leaves.size();
    std::vector<std::vector<bool>> sep(n, std::vector<bool>(n, false));
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t k = 0; k < w.depth; ++k) {
          if (w.act.act(w.level_elems[k], w.leaf_points[p])
              != w.act.act(w.level_elems[k], w.leaf_points[q])) {
            sep[p][q] = true;
          }
        }
      }
    }
    return sep;
  }

  inline TreeWitness build_tree(FiniteAct const&          source,
                                Point                     a,
                                std::vector<Point> const& chain,
                                std::size_t               kappa,
                                std::size_t               depth) {
    if (a >= source.size()) {
      throw OutOfRange("point out of range");
    }
    if (kappa == 0 || kappa > 255) {
      throw PreconditionFailed("kappa must be in 1..255");
    }
    if (depth > chain.size()) {
      throw ChainNotStrict("chain is shorter than the depth");
    }
    auto oa = orbit(source, a);
    for (std::size_t k = 0; k < chain.size(); ++k) {
      auto ok = orbit(source, chain[k]);
      if (!ok.subset_of(oa)) {
        throw ChainNotStrict("chain element outside S·a");
      }
      if (k > 0 && !orbit(source, chain[k - 1]).strict_subset_of(ok)) {
        throw ChainNotStrict("orbits are not strictly increasing at position " + std::to_string(k));
      }
    }
    detail::require_regular_orbit(source, a);
    auto               sub = cyclic_subact(source, a);
    std::vector<Elem>  level_elems;
    std::vector<Point> level_local;
    for (auto x : chain) {
      level_elems.push_back(detail::element_sending(source, a, x));
      level_local.push_back(sub.local(x));
    }
    std::vector<std::vector<std::uint8_t>> leaves;
    std::vector<std::uint8_t>              eta(depth, 0);
    while (true) {
      leaves.push_back(eta);
      std::size_t i = 0;
      while (i < depth && std::size_t(eta[i]) + 1 == kappa) {
        eta[i] = 0;
        ++i;
      }
      if (i == depth) {
        break;
      }
      ++eta[i];
    }
    std::sort(leaves.begin(), leaves.end(), tree_order);
    auto cop      = coproduct(detail::copies(sub.act, leaves.size()));
    auto position = [&leaves](std::vector<std::uint8_t> const& x) {
      return static_cast<std::size_t>(std::find(leaves.begin(), leaves.end(), x) - leaves.begin());
    };
    std::vector<std::pair<Point, Point>> pairs;
    for (std::size_t k = 0; k < leaves.size(); ++k) {
      auto r = support_end(leaves[k]);
      if (r < 2) {
        continue;
      }
      auto parent  = leaves[k];
      parent[r - 1] = 0;
      pairs.emplace_back(cop.inject(k, level_local[r - 2]),
                         cop.inject(position(parent), level_local[r - 2]));
    }
    auto theta = congruence_generated(cop.act, pairs);
    auto q     = quotient_act(cop.act, theta);
    std::vector<std::string> labels(q.act.size());
    for (std::size_t k = 0; k < leaves.size(); ++k) {
      std::string tag;
      for (auto v : leaves[k]) {
        tag += std::to_string(v);
      }
      for (Point x = 0; x < sub.act.size(); ++x) {
        Point p = q.projection[cop.inject(k, x)];
        if (labels[p].empty()) {
          labels[p] = source.label(sub.embed[x]) + "@" + tag;
        }
      }
    }
    TreeWitness w{a, chain, kappa, depth, std::move(q.act), leaves, {}, level_elems};
    w.act.set_labels(std::move(labels));
    Point la = sub.local(a);
    for (std::size_t k = 0; k < leaves.size(); ++k) {
      w.leaf_points.push_back(q.projection[cop.inject(k, la)]);
    }
    for (std::size_t p = 0; p < leaves.size(); ++p) {
      for (std::size_t r = 0; r < leaves.size(); ++r) {
        for (std::size_t k = 0; k < depth; ++k) {
          bool same_node = w.act.act(level_elems[k], w.leaf_points[p])
                           == w.act.act(level_elems[k], w.leaf_points[r]);
          bool agree = std::equal(leaves[p].begin(), leaves[p].begin() + k + 1, leaves[r].begin());
          if (same_node != agree) {
            throw SeparationViolated("level " + std::to_string(k) + " node mismatch");
          }
        }
      }
    }
    return w;
  }

  // ⟨θ, I, α⟩ over S·e: θ a congruence with regular quotient, I a θ-saturated
  // subact and α: I → A a homomorphism with kernel θ restricted to I.
  struct Triple {
    Elem               idempotent;
    ActCongruence      theta;   // on the points of S·e (local indices)
    ElementSet         ideal;   // local indices
    std::vector<Point> alpha;   // alpha[k] is the image of ideal[k]
  };

  // Checks the six defining conditions from scratch.
  inline std::optional<std::string> triple_violation(FiniteAct const& target, Triple const& tr) {
    auto const& m = target.monoid();
    if (!is_idempotent(m, tr.idempotent)) {
      return "not an idempotent";
    }
    auto rep = regular_representation(target.monoid_ptr());
    auto se  = cyclic_subact(rep, tr.idempotent);
    if (tr.theta.size() != se.act.size() || !is_congruence(se.act, tr.theta)) {
      return "theta is not a congruence";
    }
    tr.ideal.check_bound(se.act.size());
    if (!is_closed(se.act, tr.ideal)) {
      return "I is not a subact";
    }
    if (tr.alpha.size() != tr.ideal.size()) {
      return "alpha is not total on I";
    }
    ActHom f;
    f.domain = tr.ideal.items();
    f.image  = tr.alpha;
    for (auto y : tr.alpha) {
      if (y >= target.size()) {
        return "alpha leaves the act";
      }
    }
    if (!is_homomorphism(se.act, target, f)) {
      return "alpha is not a homomorphism";
    }
    for (Point x = 0; x < se.act.size(); ++x) {
      for (Point y = 0; y < se.act.size(); ++y) {
        if (tr.theta.related(x, y) && tr.ideal.contains(x) != tr.ideal.contains(y)) {
          return "I is not theta-saturated";
        }
      }
    }
    for (std::size_t i = 0; i < tr.ideal.size(); ++i) {
      for (std::size_t j = 0; j < tr.ideal.size(); ++j) {
        if ((tr.alpha[i] == tr.alpha[j]) != tr.theta.related(tr.ideal[i], tr.ideal[j])) {
          return "kernel of alpha differs from theta on I";
        }
      }
    }
    if (!is_regular_act(quotient_act(se.act, tr.theta).act)) {
      return "quotient is not regular";
    }
    return std::nullopt;
  }

  struct TripleList {
    std::vector<Triple> items;
    std::vector<Elem>   cover;
    bool                overflow = false;
  };

  // Congruences of S·e whose quotient is a regular act, in canonical order.
  inline CongruenceList regular_quotient_congruences(FiniteAct const& se, std::size_t cap) {
    auto           all = enumerate_congruences(se, cap);
    CongruenceList out;
    out.overflow = all.overflow;
    for (auto& th : all.items) {
      if (is_regular_act(quotient_act(se, th).act)) {
        out.items.push_back(std::move(th));
      }
    }
    return out;
  }

  inline void triples_at(FiniteAct const& target, Elem e, std::size_t cap, TripleList& out) {
    auto rep = regular_representation(target.monoid_ptr());
    auto se  = cyclic_subact(rep, e);
    auto congs = regular_quotient_congruences(se.act, cap);
    out.overflow = out.overflow || congs.overflow;
    std::size_t m = se.act.size();
    if (m > 20) {
      throw PreconditionFailed("S·e too large for triple enumeration");
    }
    for (auto const& theta : congs.items) {
      auto blocks = theta.classes();
      std::vector<ElementSet> ideals;
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << blocks.size()); ++mask) {
        ElementSet ideal;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          if (mask >> b & 1u) {
            ideal = ideal.unite(blocks[b]);
          }
        }
        if (is_closed(se.act, ideal)) {
          ideals.push_back(ideal);
        }
      }
      auto bits = [](ElementSet const& s) {
        std::uint64_t v = 0;
        for (auto x : s) {
          v |= std::uint64_t(1) << x;
        }
        return v;
      };
      std::sort(ideals.begin(), ideals.end(),
                [&bits](auto const& x, auto const& y) { return bits(x) < bits(y); });
      for (auto const& ideal : ideals) {
        std::vector<Point> alpha(ideal.size(), 0);
        std::vector<Point> pos(m, UINT32_MAX);
        for (std::size_t k = 0; k < ideal.size(); ++k) {
          pos[ideal[k]] = static_cast<Point>(k);
        }
        std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
          if (k == ideal.size()) {
            if (out.items.size() >= cap) {
              out.overflow = true;
              return false;
            }
            out.items.push_back(Triple{e, theta, ideal, alpha});
            return true;
          }
          for (Point y = 0; y < target.size(); ++y) {
            alpha[k] = y;
            bool ok  = true;
            for (std::size_t j = 0; j <= k && ok; ++j) {
              ok = (alpha[j] == alpha[k]) == theta.related(ideal[j], ideal[k]);
              for (Elem s = 0; s < se.act.alphabet_size() && ok; ++s) {
                for (auto u : {j, k}) {
                  auto sx = pos[se.act.act(s, ideal[u])];
                  if (sx <= k && alpha[sx] != target.act(s, alpha[u])) {
                    ok = false;
                  }
                }
              }
            }
            if (ok && !extend(k + 1)) {
              return false;
            }
          }
          return true;
        };
        if (!extend(0)) {
          return;
        }
      }
    }
  }

  inline TripleList enumerate_triples_at(FiniteAct const& target, Elem e, std::size_t cap = 100000) {
    if (!is_idempotent(target.monoid(), e)) {
      throw NotIdempotent(std::to_string(e) + " is not idempotent");
    }
    TripleList out;
    out.cover = {e};
    triples_at(target, e, cap, out);
    return out;
  }

  // Triples for every idempotent of the least idempotent cover of R.
  inline TripleList enumerate_triples(FiniteAct const& target, std::size_t cap = 100000) {
    auto       core = monoid_regular_core(target.monoid_ptr());
    TripleList out;
    out.cover = idempotent_cover(target.monoid(), core);
    for (auto e : out.cover) {
      triples_at(target, e, cap, out);
      if (out.overflow) {
        break;
      }
    }
    return out;
  }

  struct ExtractedTriple {
    Triple triple;
    Subact target;  // the subact A of B; alpha uses its local indices
    Elem   witness_idempotent;  // f with S·b0 ≅ S·f
  };

  // The triple read off from b0 ∈ B relative to the subact A ⊆ B.
  inline ExtractedTriple extract_triple(FiniteAct const& b, ElementSet const& a_points, Point b0) {
    if (b0 >= b.size()) {
      throw OutOfRange("point out of range");
    }
    auto        target = subact_on(b, a_points);
    auto const& m      = b.monoid();
    auto        pr     = is_act_regular(b, b0);
    if (!pr.regular()) {
      throw NoCoverIdempotentApplies("point is not act-regular");
    }
    Elem f    = *pr.idempotent;
    auto core = monoid_regular_core(b.monoid_ptr());
    auto cover = idempotent_cover(m, core);
    std::optional<Elem> chosen;
    for (auto e : cover) {
      if (m.mul(e, f) == f) {
        chosen = e;
        break;
      }
    }
    if (!chosen) {
      throw NoCoverIdempotentApplies("no cover idempotent e with e·f = f");
    }
    Elem e   = *chosen;
    auto rep = regular_representation(b.monoid_ptr());
    auto se  = cyclic_subact(rep, e);
    std::vector<Point> image(se.act.size(), UINT32_MAX);
    for (Elem r = 0; r < m.order(); ++r) {
      Point x = se.local(m.mul(r, e));
      Point y = b.act(r, b0);
      if (image[x] == UINT32_MAX) {
        image[x] = y;
      } else if (image[x] != y) {
        throw VerificationFailed("r·e = s·e without r·b0 = s·b0");
      }
    }
    Triple tr{e, ActCongruence(image), {}, {}};
    std::vector<Point> ideal;
    for (Point x = 0; x < se.act.size(); ++x) {
      if (a_points.contains(image[x])) {
        ideal.push_back(x);
        tr.alpha.push_back(target.local(image[x]));
      }
    }
    tr.ideal = ElementSet(ideal);
    if (auto bad = triple_violation(target.act, tr)) {
      throw VerificationFailed("extracted triple invalid: " + *bad);
    }
    return ExtractedTriple{std::move(tr), std::move(target), f};
  }

  // Data of the counting construction over S_S: a, b, c with
  // S·c ⊂ S·b ⊂ S·a, b = α·a, c = β·b, and Φ with free variables x, y, z.
  struct CountingSpec {
    Elem        a, b, c;
    Elem        alpha, beta;
    fo::Formula phi;
    std::size_t n;
  };

  struct CountingWitness {
    ElementSet         k_set;
    std::size_t        bound;
    FiniteAct          act;
    Point              c_point;
    std::vector<bool>  pattern;   // formula i at the c-point, i = 0..bound
    std::vector<fo::Formula> formulas;
  };

  namespace detail {
    inline fo::Formula rename_free(fo::Formula const& f, std::map<std::string, std::string> const& ren) {
      using fo::Formula;
      using fo::Kind;
      auto const& n = f.node();
      auto term = [&ren](fo::Term t) {
        if (!t.is_const) {
          auto it = ren.find(t.var);
          if (it != ren.end()) {
            t.var = it->second;
          }
        }
        return t;
      };
      switch (n.kind) {
        case Kind::Eq:
          return Formula::eq(term(n.lhs), term(n.rhs));
        case Kind::Not:
          return Formula::negation(rename_free(n.kids[0], ren));
        case Kind::And:
          return Formula::conj(rename_free(n.kids[0], ren), rename_free(n.kids[1], ren));
        case Kind::Or:
          return Formula::disj(rename_free(n.kids[0], ren), rename_free(n.kids[1], ren));
        case Kind::Implies:
          return Formula::implies(rename_free(n.kids[0], ren), rename_free(n.kids[1], ren));
        default:
          break;
      }
      for (auto const& [from, to] : ren) {
        if (n.var == to) {
          throw fo::ArityMismatch("bound variable " + to + " would capture a substitution");
        }
      }
      auto inner = ren;
      inner.erase(n.var);
      auto body = rename_free(n.kids[0], inner);
      switch (n.kind) {
        case Kind::Exists:
          return Formula::exists(n.var, body);
        case Kind::ForAll:
          return Formula::forall(n.var, body);
        case Kind::ExistsExactly:
          return Formula::exists_exactly(n.count, n.var, body);
        default:
          return Formula::exists_at_least(n.count, n.var, body);
      }
    }
  }  // namespace detail

  // ∃y ∃^{n(i+1)} z (x = β·y ∧ y = α·z ∧ Φ(z, y, x)), free in x (named "p").
  inline fo::Formula counting_formula(CountingSpec const& spec, std::size_t i) {
    using fo::Formula;
    using fo::Term;
    auto phi = detail::rename_free(spec.phi, {{"x", "w_"}, {"y", "q_"}, {"z", "p_"}});
    auto body = Formula::conj(
        Formula::conj(Formula::eq(Term::variable("p_"), Term::variable("q_", spec.beta)),
                      Formula::eq(Term::variable("q_"), Term::variable("w_", spec.alpha))),
        phi);
    return Formula::exists("q_", Formula::exists_exactly(spec.n * (i + 1), "w_", body));
  }

  // Throws PreconditionFailed naming the first hypothesis that fails.
  inline void check_counting_preconditions(MonoidPtr const& m, CountingSpec const& spec) {
    using fo::Formula;
    using fo::Term;
    auto const& mm = *m;
    for (auto x : {spec.a, spec.b, spec.c, spec.alpha, spec.beta}) {
      if (x >= mm.order()) {
        throw OutOfRange("counting parameter out of range");
      }
    }
    auto fv = spec.phi.free_variables();
    for (auto const& v : fv) {
      if (v != "x" && v != "y" && v != "z") {
        throw fo::ArityMismatch("phi may only have free variables x, y, z");
      }
    }
    auto sa = left_ideal(mm, spec.a), sb = left_ideal(mm, spec.b), sc = left_ideal(mm, spec.c);
    if (!sc.strict_subset_of(sb) || !sb.strict_subset_of(sa)) {
      throw PreconditionFailed("need S·c ⊂ S·b ⊂ S·a");
    }
    if (mm.mul(spec.alpha, spec.a) != spec.b || mm.mul(spec.beta, spec.b) != spec.c) {
      throw PreconditionFailed("need b = alpha·a and c = beta·b");
    }
    auto rep = regular_representation(m);
    if (!regular_core(rep).contains(spec.a)) {
      throw PreconditionFailed("a is not in the regular core");
    }
    auto upper = sa.minus(sb), middle = sb.minus(sc);
    for (Elem x = 0; x < mm.order(); ++x) {
      for (Elem y = 0; y < mm.order(); ++y) {
        if (fo::eval(rep, spec.phi, {{"x", x}, {"y", y}, {"z", spec.c}})
            && !(upper.contains(x) && middle.contains(y))) {
          throw PreconditionFailed("phi(x, y, c) has a solution outside (Sa\\Sb) x (Sb\\Sc)");
        }
      }
    }
    auto sub = cyclic_subact(rep, spec.a);
    auto la = sub.local(spec.a), lb = sub.local(spec.b), lc = sub.local(spec.c);
    if (!fo::eval(sub.act, spec.phi, {{"x", la}, {"y", lb}, {"z", lc}})) {
      throw PreconditionFailed("S·a does not satisfy phi(a, b, c)");
    }
    auto inner = Formula::conj(detail::rename_free(spec.phi, {{"z", "c_"}}),
                               Formula::eq(Term::variable("y"), Term::variable("x", spec.alpha)));
    auto uniq = Formula::forall(
        "y", Formula::implies(
                 Formula::conj(Formula::eq(Term::variable("y", spec.beta), Term::variable("c_")),
                               Formula::exists("x", inner)),
                 Formula::exists_exactly(spec.n, "x", inner)));
    if (!fo::eval(sub.act, uniq, {{"c_", lc}})) {
      throw PreconditionFailed("S·a violates the uniqueness clause");
    }
  }

  inline CountingWitness build_counting(MonoidPtr const&   m,
                                        CountingSpec const& spec,
                                        ElementSet const&   k_set,
                                        std::size_t         bound) {
    check_counting_preconditions(m, spec);
    for (auto i : k_set) {
      if (i > bound) {
        throw OutOfRange("K contains an index above the bound");
      }
    }
    auto rep   = regular_representation(m);
    auto sub_a = cyclic_subact(rep, spec.a);
    auto sub_c = cyclic_subact(rep, spec.c);
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (auto i : k_set) {
      for (std::size_t j = 0; j <= i; ++j) {
        cells.emplace_back(i, j);
      }
    }
    std::vector<FiniteAct const*> parts(cells.size(), &sub_a.act);
    parts.push_back(&sub_c.act);  // anchor for the c-point
    auto  cop    = coproduct(parts);
    auto  anchor = cells.size();
    Point lb = sub_a.local(spec.b), lc = sub_a.local(spec.c);
    std::vector<std::pair<Point, Point>> pairs;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (cells[k].second != 0) {
        auto first = std::find(cells.begin(), cells.end(), std::pair{cells[k].first, std::size_t(0)})
                     - cells.begin();
        pairs.emplace_back(cop.inject(first, lb), cop.inject(k, lb));
      }
      pairs.emplace_back(cop.inject(anchor, sub_c.local(spec.c)), cop.inject(k, lc));
    }
    auto theta = congruence_generated(cop.act, pairs);
    auto q     = quotient_act(cop.act, theta);
    CountingWitness w{k_set, bound, std::move(q.act),
                      q.projection[cop.inject(anchor, sub_c.local(spec.c))], {}, {}};
    for (std::size_t i = 0; i <= bound; ++i) {
      w.formulas.push_back(counting_formula(spec, i));
      w.pattern.push_back(fo::eval(w.act, w.formulas.back(), {{"p_", w.c_point}}));
      if (w.pattern.back() != k_set.contains(static_cast<Elem>(i))) {
        throw PatternViolated("counting formula " + std::to_string(i) + " disagrees with K", i, i);
      }
    }
    return w;
  }

}  // namespace actlab

#endif  // ACTLAB_WITNESS_HPP_

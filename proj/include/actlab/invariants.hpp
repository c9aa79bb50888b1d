#ifndef ACTLAB_INVARIANTS_HPP_
#define ACTLAB_INVARIANTS_HPP_

// Property suites run over whole monoids.  Each suite returns one message per
// violated instance; an empty list means the suite passed.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "act.hpp"
#include "classify.hpp"
#include "cover.hpp"
#include "monoid.hpp"
#include "rect_band.hpp"
#include "regular.hpp"

namespace actlab {

  using Violations = std::vector<std::string>;

  namespace inv_detail {
    inline std::string at(char const* what, std::initializer_list<Elem> xs) {
      std::string out = what;
      out += " at (";
      bool first = true;
      for (auto x : xs) {
        out += (first ? "" : ",") + std::to_string(x);
        first = false;
      }
      return out + ")";
    }

    inline bool minimal_among(std::vector<ElementSet> const& family, ElementSet const& x) {
      return std::none_of(family.begin(), family.end(), [&](ElementSet const& y) {
        return y.subset_of(x) && !(y == x);
      });
    }
  }  // namespace inv_detail

  // aS ⊆ eS ⟺ ea = a, Sa ⊆ Se ⟺ ae = a; idempotents with Se ⊆ Sf and
  // fS ⊆ eS coincide; Se minimal among idempotent-generated left ideals iff
  // eS minimal among idempotent-generated right ideals.
  inline Violations check_ideal_laws(FiniteMonoid const& m) {
    Violations bad;
    auto       idem = idempotents(m).items();
    std::vector<ElementSet> left(m.order()), right(m.order());
    for (Elem a = 0; a < m.order(); ++a) {
      left[a]  = left_ideal(m, a);
      right[a] = right_ideal(m, a);
    }
    for (auto e : idem) {
      for (Elem a = 0; a < m.order(); ++a) {
        if (right[a].subset_of(right[e]) != (m.mul(e, a) == a)) {
          bad.push_back(inv_detail::at("right ideal containment vs e·a = a", {a, e}));
        }
        if (left[a].subset_of(left[e]) != (m.mul(a, e) == a)) {
          bad.push_back(inv_detail::at("left ideal containment vs a·e = a", {a, e}));
        }
      }
      for (auto f : idem) {
        if (left[e].subset_of(left[f]) && right[f].subset_of(right[e]) && e != f) {
          bad.push_back(inv_detail::at("idempotents with Se ⊆ Sf, fS ⊆ eS differ", {e, f}));
        }
      }
    }
    std::vector<ElementSet> lefts, rights;
    for (auto e : idem) {
      lefts.push_back(left[e]);
      rights.push_back(right[e]);
    }
    for (auto e : idem) {
      if (inv_detail::minimal_among(lefts, left[e]) != inv_detail::minimal_among(rights, right[e])) {
        bad.push_back(inv_detail::at("left/right minimality disagree", {e}));
      }
    }
    return bad;
  }

  // Kernel facts: it is the union of the band cells, every cell is the group
  // of its unit, and the rectangular band identities hold.
  inline Violations check_kernel_band(FiniteMonoid const& m) {
    Violations bad;
    auto       k = kernel(m);
    if (!std::any_of(k.begin(), k.end(), [&](Elem x) { return is_idempotent(m, x); })) {
      bad.push_back("kernel of a finite monoid has no idempotent");
      return bad;
    }
    auto res = rect_band_decompose(m, k);
    if (auto const* f = std::get_if<BandFailure>(&res)) {
      bad.push_back(std::string("kernel is not a rectangular band of groups: ") + to_string(f->kind));
      return bad;
    }
    auto const& d = std::get<RectBandDecomposition>(res);
    std::vector<Elem> cells;
    for (std::size_t i = 0; i < d.rows; ++i) {
      for (std::size_t j = 0; j < d.cols; ++j) {
        auto const& c = d.cell(i, j);
        cells.insert(cells.end(), c.members.begin(), c.members.end());
        try {
          auto g = group_component(m, d.unit(i, j));
          if (!(g.members == c.members)) {
            bad.push_back(inv_detail::at("group component differs from band cell", {d.unit(i, j)}));
          }
        } catch (Error const& e) {
          bad.push_back(std::string("group component: ") + e.what());
        }
      }
    }
    if (!(ElementSet(std::move(cells)) == k)) {
      bad.push_back("band cells do not cover the kernel");
    }
    for (auto& v : band_fact_violations(m, d)) {
      bad.push_back(std::move(v));
    }
    return bad;
  }

  // Regular representation: the annihilator test agrees with a direct search
  // for a pointed isomorphism onto some S·e; von Neumann regular monoids give
  // regular representations.
  inline Violations check_act_regularity(FiniteAct const& a) {
    Violations bad;
    auto const& m    = a.monoid();
    auto        idem = idempotents(m).items();
    auto        rep  = regular_representation(a.monoid_ptr());
    for (Point x = 0; x < a.size(); ++x) {
      auto pr      = is_act_regular(a, x);
      bool by_iso  = std::any_of(idem.begin(), idem.end(), [&](Elem e) {
        return pointed_iso(a, x, rep, e).has_value();
      });
      if (pr.idempotent.has_value() != by_iso) {
        bad.push_back(inv_detail::at("annihilator test disagrees with pointed-iso search", {x}));
      }
      if (pr.idempotent && !pointed_iso(a, x, rep, *pr.idempotent)) {
        bad.push_back(inv_detail::at("reported idempotent has no pointed iso", {x}));
      }
    }
    return bad;
  }

  inline Violations check_regularity(MonoidPtr const& m) {
    auto rep = regular_representation(m);
    auto bad = check_act_regularity(rep);
    if (is_vn_regular(*m) && !is_regular_act(rep)) {
      bad.push_back("von Neumann regular monoid with non-regular representation");
    }
    return bad;
  }

  // The idempotent cover of R and the covers of every nonempty equalizer set.
  inline Violations check_covers(MonoidPtr const& mp, std::size_t cap = 4096) {
    Violations  bad;
    auto const& m    = *mp;
    auto        core = monoid_regular_core(mp);
    if (core.empty()) {
      bad.push_back("regular core is empty");
      return bad;
    }
    auto union_of = [&](std::vector<Elem> const& es) {
      ElementSet u;
      for (auto e : es) {
        if (!is_idempotent(m, e) || !core.contains(e)) {
          bad.push_back(inv_detail::at("cover member is not an idempotent of R", {e}));
        }
        u = u.unite(right_multiples(m, core, e));
      }
      return u;
    };
    if (!(union_of(idempotent_cover(m, core)) == core)) {
      bad.push_back("idempotent cover does not reproduce R");
    }
    auto fam = equalizer_family(m, core, cap);
    for (auto const& x : fam.members) {
      if (x.empty()) {
        continue;
      }
      auto c = idempotent_cover_of(m, core, x);
      if (!c) {
        bad.push_back("nonempty equalizer set without idempotent cover");
      } else if (!(union_of(*c) == x)) {
        bad.push_back("equalizer cover does not reproduce its set");
      }
    }
    return bad;
  }

  // The finite-size condition always fails on a finite monoid; the witness
  // size is recounted from the table.
  inline Violations check_model_completeness(MonoidPtr const& mp) {
    Violations bad;
    auto       rep = classify(mp).to_json();
    auto const& s  = rep.at("sections").at("thm51");
    if (s.at("verdict") != "FAILS") {
      bad.push_back("model completeness verdict is not FAILS");
      return bad;
    }
    Elem              e = s.at("witness").at("e"), f = s.at("witness").at("f");
    std::vector<Elem> esf;
    for (Elem x = 0; x < mp->order(); ++x) {
      esf.push_back(mp->mul(mp->mul(e, x), f));
    }
    if (ElementSet(std::move(esf)).size() != s.at("witness").at("size").get<std::size_t>()) {
      bad.push_back(inv_detail::at("|eSf| mismatch", {e, f}));
    }
    return bad;
  }

  // Depth and the ideal-chain verdicts survive random relabelling.
  inline Violations check_relabel(FiniteMonoid const& m, std::uint64_t seed, int rounds = 4) {
    Violations        bad;
    std::mt19937_64   rng(seed);
    std::vector<Elem> perm(m.order());
    for (int r = 0; r < rounds; ++r) {
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto p = relabel(m, perm);
      if (depth(p) != depth(m)) {
        bad.push_back("depth changed under relabelling");
      }
      if (is_linearly_ordered(p) != is_linearly_ordered(m)) {
        bad.push_back("linear order verdict changed under relabelling");
      }
      if (kernel(p).size() != kernel(m).size()) {
        bad.push_back("kernel size changed under relabelling");
      }
    }
    return bad;
  }

  inline Violations check_report(MonoidPtr const& mp, ClassifyConfig const& cfg) {
    auto first  = classify(mp, cfg).to_json();
    auto second = classify(mp, cfg).to_json();
    Violations bad;
    if (first.dump() != second.dump()) {
      bad.push_back("report not reproducible");
    }
    for (auto& v : verify_report(mp, first)) {
      bad.push_back("report: " + v);
    }
    return bad;
  }

  struct SuiteResult {
    std::string name;
    Violations  violations;
  };

  inline std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{
        "ideals", "kernel", "regularity", "covers", "model_completeness", "relabel", "report"};
    return names;
  }

  inline std::vector<SuiteResult> run_suites(MonoidPtr const& mp, ClassifyConfig const& cfg) {
    std::vector<std::function<Violations()>> runs{
        [&] { return check_ideal_laws(*mp); },
        [&] { return check_kernel_band(*mp); },
        [&] { return check_regularity(mp); },
        [&] { return check_covers(mp, cfg.cap_closure); },
        [&] { return check_model_completeness(mp); },
        [&] { return check_relabel(*mp, cfg.seed); },
        [&] { return check_report(mp, cfg); },
    };
    std::vector<SuiteResult> out;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      Violations v;
      try {
        v = runs[i]();
      } catch (std::exception const& e) {
        v.push_back(std::string("exception: ") + e.what());
      }
      out.push_back({suite_names()[i], std::move(v)});
    }
    return out;
  }

}  // namespace actlab

#endif  // ACTLAB_INVARIANTS_HPP_

#ifndef ACTLAB_TESTS_SUPPORT_HPP_
#define ACTLAB_TESTS_SUPPORT_HPP_

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "actlab/actlab.hpp"
#include "oracles.hpp"

namespace support {

  using namespace actlab;

  inline std::vector<std::pair<std::string, NamedMonoid>> fixture_monoids() {
    return {{"trivial", fixtures::trivial()},
            {"rz2_plus1", fixtures::rz2_plus1()},
            {"cg21", fixtures::cg21()},
            {"b22_plus1", fixtures::b22_plus1()},
            {"column_band_z2", fixtures::column_band_z2()},
            {"nil3", fixtures::nil3()},
            {"layered_z2", fixtures::layered_z2()},
            {"chain3", fixtures::chain3()},
            {"cg32", chain_of_groups(3, 2)},
            {"cg21_shifts", chain_of_groups(2, 1, true)}};
  }

  // Fixtures followed by every monoid of order at most 4.
  inline std::vector<std::pair<std::string, MonoidPtr>> corpus_monoids() {
    std::vector<std::pair<std::string, MonoidPtr>> out;
    for (auto& [name, nm] : fixture_monoids()) {
      out.emplace_back(name, nm.monoid);
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      auto ms = generate_monoids(n);
      for (std::size_t k = 0; k < ms.size(); ++k) {
        out.emplace_back("gen" + std::to_string(n) + "_" + std::to_string(k), share(ms[k]));
      }
    }
    return out;
  }

  inline oracle::Table table_of(FiniteMonoid const& m) {
    return oracle::Table{m.order(), m.table()};
  }

  inline oracle::Act act_of(oracle::Table const& t, FiniteAct const& a) {
    return oracle::Act{&t, a.size(), a.table()};
  }

  // A quotient of a coproduct of cyclic subacts of S_S, with at most
  // `max_points` points.
  inline FiniteAct random_act(MonoidPtr const& m, std::mt19937_64& rng, std::size_t max_points = 6) {
    auto                  rep = regular_representation(m);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(m->order() - 1));
    for (;;) {
      std::vector<Subact> parts;
      std::size_t         total = 0;
      std::size_t         want  = 1 + rng() % 3;
      for (std::size_t k = 0; k < want; ++k) {
        auto sub = cyclic_subact(rep, pick(rng));
        total += sub.act.size();
        parts.push_back(std::move(sub));
      }
      std::vector<FiniteAct const*> ptrs;
      for (auto const& p : parts) {
        ptrs.push_back(&p.act);
      }
      auto co = coproduct(ptrs);
      std::vector<std::pair<Point, Point>> glue;
      std::uniform_int_distribution<Point> pt(0, static_cast<Point>(total - 1));
      for (std::size_t g = rng() % 3; g > 0; --g) {
        glue.emplace_back(pt(rng), pt(rng));
      }
      auto q = quotient_act(co.act, congruence_generated(co.act, glue)).act;
      if (q.size() <= max_points) {
        return q;
      }
    }
  }

}  // namespace support

#endif  // ACTLAB_TESTS_SUPPORT_HPP_

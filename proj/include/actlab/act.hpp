#ifndef ACTLAB_ACT_HPP_
#define ACTLAB_ACT_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "core.hpp"
#include "monoid.hpp"
#include "union_find.hpp"

namespace actlab {

  using MonoidPtr = std::shared_ptr<FiniteMonoid const>;

  inline MonoidPtr share(FiniteMonoid m) {
    return std::make_shared<FiniteMonoid const>(std::move(m));
  }

  class IdentityLawViolated : public Error {
   public:
    explicit IdentityLawViolated(Point a)
        : Error("1·" + std::to_string(a) + " != " + std::to_string(a)), point(a) {}
    Point point;
  };

  class ActionLawViolated : public Error {
   public:
    ActionLawViolated(Elem s, Elem t, Point a)
        : Error("(" + std::to_string(s) + "·" + std::to_string(t) + ")·"
                + std::to_string(a) + " != " + std::to_string(s) + "·("
                + std::to_string(t) + "·" + std::to_string(a) + ")"),
          s(s),
          t(t),
          point(a) {}
    Elem  s, t;
    Point point;
  };

  class MonoidMismatch : public Error {
   public:
    using Error::Error;
  };

  class NotASubact : public Error {
   public:
    using Error::Error;
  };

  // A finite left S-act; row s of the table is the action of s.
  class FiniteAct {
   public:
    static FiniteAct make(MonoidPtr                m,
                          std::size_t              points,
                          std::vector<Point>       table,
                          std::vector<std::string> labels = {}) {
      if (!m) {
        throw Error("act without monoid");
      }
      if (table.size() != m->order() * points) {
        throw OutOfRange("action table has " + std::to_string(table.size())
                         + " entries, expected "
                         + std::to_string(m->order() * points));
      }
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= points) {
          throw OutOfRange("action entry (" + std::to_string(i / points) + ","
                           + std::to_string(i % points) + ") out of range");
        }
      }
      FiniteAct a;
      a.monoid_ = std::move(m);
      a.size_   = points;
      a.table_  = std::move(table);
      a.labels_ = std::move(labels);
      if (!a.labels_.empty() && a.labels_.size() != points) {
        a.labels_.resize(points);
      }
      auto one = a.monoid_->identity();
      for (Point x = 0; x < points; ++x) {
        if (a.act(one, x) != x) {
          throw IdentityLawViolated(x);
        }
      }
      auto const& mm = *a.monoid_;
      for (Elem s = 0; s < mm.order(); ++s) {
        for (Elem t = 0; t < mm.order(); ++t) {
          Elem st = mm.mul(s, t);
          for (Point x = 0; x < points; ++x) {
            if (a.act(st, x) != a.act(s, a.act(t, x))) {
              throw ActionLawViolated(s, t, x);
            }
          }
        }
      }
      return a;
    }

    Point act(Elem s, Point x) const noexcept {
      return table_[s * size_ + x];
    }
    std::size_t               size() const noexcept { return size_; }
    std::size_t               alphabet_size() const noexcept { return monoid_->order(); }
    FiniteMonoid const&       monoid() const noexcept { return *monoid_; }
    MonoidPtr const&          monoid_ptr() const noexcept { return monoid_; }
    std::vector<Point> const& table() const noexcept { return table_; }
    std::vector<std::string> const& labels() const noexcept { return labels_; }
    std::string label(Point x) const {
      if (x < labels_.size() && !labels_[x].empty()) {
        return labels_[x];
      }
      return std::to_string(x);
    }
    void set_labels(std::vector<std::string> labels) {
      labels_ = std::move(labels);
      labels_.resize(size_);
    }

    bool same_monoid(FiniteAct const& other) const {
      return monoid_ == other.monoid_ || *monoid_ == *other.monoid_;
    }

   private:
    FiniteAct() = default;

    MonoidPtr                monoid_;
    std::size_t              size_ = 0;
    std::vector<Point>       table_;
    std::vector<std::string> labels_;
  };

  inline FiniteAct validate_act(MonoidPtr m, std::size_t points, std::vector<Point> table) {
    return FiniteAct::make(std::move(m), points, std::move(table));
  }

  // S acting on itself by left multiplication.
  inline FiniteAct regular_representation(MonoidPtr const& m) {
    std::size_t        n = m->order();
    std::vector<Point> table(n * n);
    for (Elem s = 0; s < n; ++s) {
      for (Elem a = 0; a < n; ++a) {
        table[s * n + a] = m->mul(s, a);
      }
    }
    return FiniteAct::make(m, n, std::move(table));
  }

  inline ElementSet orbit(FiniteAct const& a, Point x) {
    std::vector<Point> out;
    for (Elem s = 0; s < a.alphabet_size(); ++s) {
      out.push_back(a.act(s, x));
    }
    return ElementSet(std::move(out));
  }

  inline bool is_closed(FiniteAct const& a, ElementSet const& points) {
    for (auto x : points) {
      for (Elem s = 0; s < a.alphabet_size(); ++s) {
        if (!points.contains(a.act(s, x))) {
          return false;
        }
      }
    }
    return true;
  }

  struct Subact {
    FiniteAct          act;
    std::vector<Point> embed;  // sub point -> ambient point

    Point local(Point ambient) const {
      auto it = std::lower_bound(embed.begin(), embed.end(), ambient);
      if (it == embed.end() || *it != ambient) {
        throw NotASubact("point " + std::to_string(ambient) + " not in subact");
      }
      return static_cast<Point>(it - embed.begin());
    }
  };

  inline Subact subact_on(FiniteAct const& a, ElementSet const& points) {
    points.check_bound(a.size());
    if (!is_closed(a, points)) {
      throw NotASubact("point set is not closed under the action");
    }
    std::vector<Point> embed(points.begin(), points.end());
    std::vector<Point> table(a.alphabet_size() * embed.size());
    for (Elem s = 0; s < a.alphabet_size(); ++s) {
      for (std::size_t i = 0; i < embed.size(); ++i) {
        Point y = a.act(s, embed[i]);
        table[s * embed.size() + i]
            = static_cast<Point>(std::lower_bound(embed.begin(), embed.end(), y) - embed.begin());
      }
    }
    std::vector<std::string> labels;
    if (!a.labels().empty()) {
      for (auto x : embed) {
        labels.push_back(a.label(x));
      }
    }
    auto sub = FiniteAct::make(a.monoid_ptr(), embed.size(), std::move(table), std::move(labels));
    return Subact{std::move(sub), std::move(embed)};
  }

  inline Subact cyclic_subact(FiniteAct const& a, Point x) {
    if (x >= a.size()) {
      throw OutOfRange("point out of range");
    }
    return subact_on(a, orbit(a, x));
  }

  struct Coproduct {
    FiniteAct                act;
    std::vector<std::size_t> offsets;  // summand k occupies [offsets[k], offsets[k] + size)

    Point inject(std::size_t k, Point x) const {
      return static_cast<Point>(offsets[k] + x);
    }
  };

  inline Coproduct coproduct(std::vector<FiniteAct const*> const& parts) {
    if (parts.empty()) {
      throw Error("coproduct of no acts");
    }
    auto const& m = parts.front()->monoid_ptr();
    std::size_t total = 0;
    std::vector<std::size_t> offsets;
    for (auto const* p : parts) {
      if (!p->same_monoid(*parts.front())) {
        throw MonoidMismatch("summands over different monoids");
      }
      offsets.push_back(total);
      total += p->size();
    }
    std::vector<Point> table(m->order() * total);
    std::vector<std::string> labels;
    bool any_labels = false;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      any_labels = any_labels || !parts[k]->labels().empty();
    }
    for (std::size_t k = 0; k < parts.size(); ++k) {
      auto const& p = *parts[k];
      for (Elem s = 0; s < m->order(); ++s) {
        for (Point x = 0; x < p.size(); ++x) {
          table[s * total + offsets[k] + x] = static_cast<Point>(offsets[k] + p.act(s, x));
        }
      }
      if (any_labels) {
        for (Point x = 0; x < p.size(); ++x) {
          labels.push_back(p.label(x) + "@" + std::to_string(k));
        }
      }
    }
    return Coproduct{FiniteAct::make(m, total, std::move(table), std::move(labels)),
                     std::move(offsets)};
  }

  // An equivalence on the points of an act, stored as canonical block labels.
  class ActCongruence {
   public:
    ActCongruence() = default;
    explicit ActCongruence(std::vector<std::uint32_t> labels)
        : block_of_(canonical_labels(labels)) {
      blocks_ = 0;
      for (auto b : block_of_) {
        blocks_ = std::max<std::size_t>(blocks_, b + 1);
      }
    }

    static ActCongruence identity(std::size_t n) {
      std::vector<std::uint32_t> labels(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        labels[i] = i;
      }
      return ActCongruence(std::move(labels));
    }

    bool related(Point a, Point b) const { return block_of_[a] == block_of_[b]; }
    std::uint32_t block(Point a) const { return block_of_[a]; }
    std::size_t num_blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return block_of_.size(); }
    std::vector<std::uint32_t> const& labels() const noexcept { return block_of_; }
    bool is_identity() const noexcept { return blocks_ == block_of_.size(); }

    std::vector<ElementSet> classes() const {
      std::vector<std::vector<Point>> out(blocks_);
      for (Point x = 0; x < block_of_.size(); ++x) {
        out[block_of_[x]].push_back(x);
      }
      std::vector<ElementSet> sets;
      for (auto& c : out) {
        sets.emplace_back(std::move(c));
      }
      return sets;
    }

    // this ⊆ other as relations
    bool refines(ActCongruence const& other) const {
      std::vector<std::uint32_t> image(blocks_, UINT32_MAX);
      for (std::size_t x = 0; x < block_of_.size(); ++x) {
        auto& slot = image[block_of_[x]];
        if (slot == UINT32_MAX) {
          slot = other.block_of_[x];
        } else if (slot != other.block_of_[x]) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(ActCongruence const&, ActCongruence const&) = default;

   private:
    std::vector<std::uint32_t> block_of_;
    std::size_t                blocks_ = 0;
  };

  inline bool is_congruence(FiniteAct const& a, ActCongruence const& theta) {
    if (theta.size() != a.size()) {
      return false;
    }
    for (Point x = 0; x < a.size(); ++x) {
      for (Point y = x + 1; y < a.size(); ++y) {
        if (theta.related(x, y)) {
          for (Elem s = 0; s < a.alphabet_size(); ++s) {
            if (!theta.related(a.act(s, x), a.act(s, y))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  namespace detail {
    // Closes `ds` under the action after the given seed pairs were merged.
    inline void close_pairs(FiniteAct const&                         a,
                            DisjointSets&                            ds,
                            std::vector<std::pair<Point, Point>> const& todo) {
      // The equivalence generated by {(s·x, s·y)} over seed pairs is already
      // compatible, so each seed only needs its orbit pairs merged.
      for (auto [x, y] : todo) {
        for (Elem s = 0; s < a.alphabet_size(); ++s) {
          ds.unite(a.act(s, x), a.act(s, y));
        }
      }
    }
  }  // namespace detail

  inline ActCongruence congruence_generated(FiniteAct const&                            a,
                                            std::vector<std::pair<Point, Point>> const& pairs) {
    DisjointSets ds(a.size());
    for (auto [x, y] : pairs) {
      if (x >= a.size() || y >= a.size()) {
        throw OutOfRange("pair point out of range");
      }
    }
    detail::close_pairs(a, ds, pairs);
    return ActCongruence(ds.canonical_blocks());
  }

  // theta ∨ θ(x, y)
  inline ActCongruence join_pair(FiniteAct const& a, ActCongruence const& theta, Point x, Point y) {
    DisjointSets ds(a.size());
    std::vector<Point> rep(theta.num_blocks(), UINT32_MAX);
    for (Point p = 0; p < a.size(); ++p) {
      auto& r = rep[theta.block(p)];
      if (r == UINT32_MAX) {
        r = p;
      } else {
        ds.unite(r, p);
      }
    }
    detail::close_pairs(a, ds, {{x, y}});
    return ActCongruence(ds.canonical_blocks());
  }

  struct Quotient {
    FiniteAct          act;
    std::vector<Point> projection;  // point -> block
  };

  inline Quotient quotient_act(FiniteAct const& a, ActCongruence const& theta) {
    if (theta.size() != a.size()) {
      throw OutOfRange("congruence size does not match act");
    }
    std::size_t        k = theta.num_blocks();
    std::vector<Point> rep(k, UINT32_MAX);
    for (Point x = 0; x < a.size(); ++x) {
      if (rep[theta.block(x)] == UINT32_MAX) {
        rep[theta.block(x)] = x;
      }
    }
    std::vector<Point> table(a.alphabet_size() * k);
    for (Elem s = 0; s < a.alphabet_size(); ++s) {
      for (std::size_t b = 0; b < k; ++b) {
        table[s * k + b] = theta.block(a.act(s, rep[b]));
      }
    }
    std::vector<std::string> labels;
    if (!a.labels().empty()) {
      for (std::size_t b = 0; b < k; ++b) {
        labels.push_back(a.label(rep[b]));
      }
    }
    // make() re-checks the action law, which fails if theta is not compatible.
    auto q = FiniteAct::make(a.monoid_ptr(), k, std::move(table), std::move(labels));
    return Quotient{std::move(q), theta.labels()};
  }

  // Least congruence containing every (x, s·x): the connected components.
  inline ActCongruence connectivity(FiniteAct const& a) {
    DisjointSets ds(a.size());
    for (Point x = 0; x < a.size(); ++x) {
      for (Elem s = 0; s < a.alphabet_size(); ++s) {
        ds.unite(x, a.act(s, x));
      }
    }
    return ActCongruence(ds.canonical_blocks());
  }

  // theta meets connectivity only in the diagonal.
  inline bool is_amalgam(FiniteAct const& a, ActCongruence const& theta) {
    auto conn = connectivity(a);
    for (Point x = 0; x < a.size(); ++x) {
      for (Point y = x + 1; y < a.size(); ++y) {
        if (theta.related(x, y) && conn.related(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  // Partial map between carriers; domain[i] ↦ image[i].
  struct ActHom {
    std::vector<Point> domain;
    std::vector<Point> image;

    std::optional<Point> at(Point x) const {
      auto it = std::find(domain.begin(), domain.end(), x);
      if (it == domain.end()) {
        return std::nullopt;
      }
      return image[it - domain.begin()];
    }
  };

  // f(s·x) = s·f(x) wherever both sides are defined, and the domain is closed.
  inline bool is_homomorphism(FiniteAct const& a, FiniteAct const& b, ActHom const& f) {
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
      for (Elem s = 0; s < a.alphabet_size(); ++s) {
        auto y = f.at(a.act(s, f.domain[i]));
        if (!y || *y != b.act(s, f.image[i])) {
          return false;
        }
      }
    }
    return true;
  }

  // The pointed isomorphism S·x → S·y sending x to y, if one exists.  It is
  // forced to be s·x ↦ s·y and exists iff both points have the same
  // annihilator {(s,t) : s·x = t·x}.
  inline std::optional<ActHom> pointed_iso(FiniteAct const& a, Point x,
                                           FiniteAct const& b, Point y) {
    if (!a.same_monoid(b)) {
      throw MonoidMismatch("pointed_iso across different monoids");
    }
    std::size_t        n = a.alphabet_size();
    std::vector<Point> img_of(a.size(), UINT32_MAX);
    std::vector<Point> pre_of(b.size(), UINT32_MAX);
    for (Elem s = 0; s < n; ++s) {
      Point sx = a.act(s, x);
      Point sy = b.act(s, y);
      if (img_of[sx] == UINT32_MAX && pre_of[sy] == UINT32_MAX) {
        img_of[sx] = sy;
        pre_of[sy] = sx;
      } else if (img_of[sx] != sy || pre_of[sy] != sx) {
        return std::nullopt;
      }
    }
    ActHom f;
    for (Point p = 0; p < a.size(); ++p) {
      if (img_of[p] != UINT32_MAX) {
        f.domain.push_back(p);
        f.image.push_back(img_of[p]);
      }
    }
    return f;
  }

  struct CongruenceList {
    std::vector<ActCongruence> items;
    bool                       overflow = false;
  };

  // Sort key: finer first (more blocks), then lexicographic on labels.
  inline bool congruence_order(ActCongruence const& x, ActCongruence const& y) {
    if (x.num_blocks() != y.num_blocks()) {
      return x.num_blocks() > y.num_blocks();
    }
    return x.labels() < y.labels();
  }

  // Every congruence is a join of principal ones, so a search that adds one
  // principal congruence at a time from the diagonal reaches all of them.
  inline CongruenceList enumerate_congruences(FiniteAct const& a, std::size_t cap = 100000) {
    struct Hash {
      std::size_t operator()(std::vector<std::uint32_t> const& v) const noexcept {
        std::size_t h = 0;
        for (auto x : v) {
          h = h * 1000003u ^ x;
        }
        return h;
      }
    };
    CongruenceList out;
    std::unordered_set<std::vector<std::uint32_t>, Hash> seen;
    std::deque<ActCongruence> frontier;
    auto start = ActCongruence::identity(a.size());
    seen.insert(start.labels());
    out.items.push_back(start);
    frontier.push_back(start);

    std::vector<std::pair<Point, Point>> principal_pair;
    for (Point x = 0; x < a.size(); ++x) {
      for (Point y = x + 1; y < a.size(); ++y) {
        principal_pair.emplace_back(x, y);
      }
    }
    while (!frontier.empty() && !out.overflow) {
      auto theta = std::move(frontier.front());
      frontier.pop_front();
      for (auto [x, y] : principal_pair) {
        if (theta.related(x, y)) {
          continue;
        }
        auto next = join_pair(a, theta, x, y);
        if (seen.insert(next.labels()).second) {
          if (out.items.size() >= cap) {
            out.overflow = true;
            break;
          }
          out.items.push_back(next);
          frontier.push_back(std::move(next));
        }
      }
    }
    std::sort(out.items.begin(), out.items.end(), congruence_order);
    return out;
  }

}  // namespace actlab

#endif  // ACTLAB_ACT_HPP_

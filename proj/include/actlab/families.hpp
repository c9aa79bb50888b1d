#ifndef ACTLAB_FAMILIES_HPP_
#define ACTLAB_FAMILIES_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "act.hpp"
#include "core.hpp"
#include "monoid.hpp"

namespace actlab {

  // A finite monoid together with display names for its elements.
  struct NamedMonoid {
    MonoidPtr                monoid;
    std::vector<std::string> names;
    std::vector<std::string> notes;

    Elem operator[](std::string const& name) const {
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
          return static_cast<Elem>(i);
        }
      }
      throw Error("no element named " + name);
    }
    std::string name(Elem x) const {
      return x < names.size() ? names[x] : std::to_string(x);
    }
  };

  inline NamedMonoid named(FiniteMonoid m, std::vector<std::string> names = {}) {
    if (names.empty()) {
      for (std::size_t i = 0; i < m.order(); ++i) {
        names.push_back(std::to_string(i));
      }
    }
    return NamedMonoid{share(std::move(m)), std::move(names), {}};
  }

  class GNotGroup : public Error {
   public:
    using Error::Error;
  };
  class GNotAbelian : public Error {
   public:
    using Error::Error;
  };

  inline FiniteMonoid cyclic_group(std::size_t m) {
    std::vector<Elem> table(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        table[a * m + b] = static_cast<Elem>((a + b) % m);
      }
    }
    return FiniteMonoid::make(m, std::move(table), 0);
  }

  inline FiniteMonoid group_product(FiniteMonoid const& g, FiniteMonoid const& h) {
    std::size_t       n = g.order() * h.order();
    std::vector<Elem> table(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem x = g.mul(a / h.order(), b / h.order());
        Elem y = h.mul(a % h.order(), b % h.order());
        table[a * n + b] = static_cast<Elem>(x * h.order() + y);
      }
    }
    return FiniteMonoid::make(n, std::move(table),
                              static_cast<Elem>(g.identity() * h.order() + h.identity()));
  }

  inline std::vector<Elem> group_inverses(FiniteMonoid const& g) {
    std::vector<Elem> inv(g.order());
    for (Elem a = 0; a < g.order(); ++a) {
      bool found = false;
      for (Elem b = 0; b < g.order() && !found; ++b) {
        if (g.mul(a, b) == g.identity() && g.mul(b, a) == g.identity()) {
          inv[a] = b;
          found  = true;
        }
      }
      if (!found) {
        throw GNotGroup("element " + std::to_string(a) + " has no inverse");
      }
    }
    return inv;
  }

  inline void require_abelian_group(FiniteMonoid const& g) {
    group_inverses(g);
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem b = 0; b < g.order(); ++b) {
        if (g.mul(a, b) != g.mul(b, a)) {
          throw GNotAbelian("group is not abelian");
        }
      }
    }
  }

  // Elements ⟨a,i,j⟩ with ⟨a,i,j⟩∗⟨b,k,l⟩ = ⟨a+b+φ(k,j), i, l⟩; an identity is
  // adjoined unless rows = cols = 1.  `phi` is row-major over (k, j).
  inline NamedMonoid rect_band_monoid(FiniteMonoid const&      g,
                                      std::size_t              rows,
                                      std::size_t              cols,
                                      std::vector<Elem> const& phi) {
    require_abelian_group(g);
    if (rows == 0 || cols == 0) {
      throw Error("rect band needs at least one row and column");
    }
    if (phi.size() != rows * cols) {
      throw Error("phi must have rows*cols entries");
    }
    for (auto x : phi) {
      if (x >= g.order()) {
        throw OutOfRange("phi value out of range");
      }
    }
    bool        adjoin = rows * cols > 1;
    std::size_t gn     = g.order();
    std::size_t off    = adjoin ? 1 : 0;
    std::size_t n      = off + rows * cols * gn;
    auto index = [&](Elem a, std::size_t i, std::size_t j) {
      return static_cast<Elem>(off + (i * cols + j) * gn + a);
    };
    std::vector<Elem>        table(n * n);
    std::vector<std::string> names;
    if (adjoin) {
      names.push_back("1");
    }
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        for (Elem a = 0; a < gn; ++a) {
          names.push_back("<" + std::to_string(a) + "," + std::to_string(i) + ","
                          + std::to_string(j) + ">");
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (adjoin && x == 0) {
          table[x * n + y] = y;
        } else if (adjoin && y == 0) {
          table[x * n + y] = x;
        } else {
          Elem        a = (x - off) % gn, b = (y - off) % gn;
          std::size_t i = (x - off) / gn / cols, j = (x - off) / gn % cols;
          std::size_t k = (y - off) / gn / cols, l = (y - off) / gn % cols;
          table[x * n + y] = index(g.mul(g.mul(a, b), phi[k * cols + j]), i, l);
        }
      }
    }
    std::optional<Elem> one;
    if (adjoin) {
      one = 0;
    }
    return NamedMonoid{share(FiniteMonoid::make(n, std::move(table), one)), std::move(names), {}};
  }

  // 1 together with levels 0..k of copies of Z_m, n_i·m_j = (n+m)_min(i,j).
  // With shifts, a copy of Z_m of shift elements σ_d is added, σ_d acting on
  // every level by +d; it is a finite stand-in for words in two commuting
  // shift generators.
  inline NamedMonoid chain_of_groups(std::size_t m, std::size_t k, bool shifts = false) {
    if (m == 0) {
      throw Error("group order must be positive");
    }
    std::size_t levels = k + 1;
    std::size_t base   = 1 + levels * m;
    std::size_t n      = base + (shifts ? m : 0);
    auto level_elem = [m](std::size_t v, std::size_t i) { return static_cast<Elem>(1 + i * m + v); };
    std::vector<std::string> names{"1"};
    for (std::size_t i = 0; i < levels; ++i) {
      for (std::size_t v = 0; v < m; ++v) {
        names.push_back(std::to_string(v) + "_" + std::to_string(i));
      }
    }
    if (shifts) {
      for (std::size_t d = 0; d < m; ++d) {
        names.push_back("sh" + std::to_string(d));
      }
    }
    std::vector<Elem> table(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem r;
        if (x == 0) {
          r = y;
        } else if (y == 0) {
          r = x;
        } else if (x < base && y < base) {
          std::size_t vx = (x - 1) % m, ix = (x - 1) / m;
          std::size_t vy = (y - 1) % m, iy = (y - 1) / m;
          r = level_elem((vx + vy) % m, std::min(ix, iy));
        } else if (x >= base && y >= base) {
          r = static_cast<Elem>(base + ((x - base) + (y - base)) % m);
        } else {
          std::size_t d = x >= base ? x - base : y - base;
          Elem        z = x >= base ? y : x;
          std::size_t v = (z - 1) % m, i = (z - 1) / m;
          r = level_elem((v + d) % m, i);
        }
        table[x * n + y] = r;
      }
    }
    NamedMonoid out{share(FiniteMonoid::make(n, std::move(table), 0)), std::move(names), {}};
    if (shifts) {
      out.notes.push_back(
          "shift words are collapsed to their total shift mod m; a finite stand-in for the free "
          "commutative shift monoid");
    }
    return out;
  }

  // Families [t,i,h] (t = 1,2,3, i < copies) and [4,h], [5,h] over a group H,
  // each a copy of H, multiplied by the layered table; [5,1_H] is the identity.
  inline NamedMonoid layered_monoid(FiniteMonoid const& h, std::size_t copies) {
    group_inverses(h);
    if (copies == 0) {
      throw Error("layered monoid needs at least one copy");
    }
    std::size_t hn = h.order();
    std::size_t low = 3 * copies * hn;  // families 1..3
    std::size_t n   = low + 2 * hn;
    auto idx = [&](std::size_t fam, std::size_t i, Elem v) -> Elem {
      if (fam <= 3) {
        return static_cast<Elem>(((fam - 1) * copies + i) * hn + v);
      }
      return static_cast<Elem>(low + (fam - 4) * hn + v);
    };
    struct Parts {
      std::size_t fam, i;
      Elem        v;
    };
    auto parts = [&](Elem x) -> Parts {
      if (x < low) {
        return {x / hn / copies + 1, x / hn % copies, static_cast<Elem>(x % hn)};
      }
      return {(x - low) / hn + 4, 0, static_cast<Elem>((x - low) % hn)};
    };
    std::vector<std::string> names(n);
    for (Elem x = 0; x < n; ++x) {
      auto p = parts(x);
      names[x] = "[" + std::to_string(p.fam) + (p.fam <= 3 ? "," + std::to_string(p.i) : "")
                 + "," + std::to_string(p.v) + "]";
    }
    std::vector<Elem> table(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        auto p = parts(x), q = parts(y);
        Elem v = h.mul(p.v, q.v);
        Elem r = 0;
        if (p.fam <= 3) {
          r = idx(p.fam, p.i, v);
        } else if (p.fam == 4) {
          switch (q.fam) {
            case 1:
              r = idx(1, q.i, v);
              break;
            case 2:
            case 3:
              r = idx(2, q.i, v);
              break;
            default:
              r = idx(4, 0, v);
          }
        } else {
          r = idx(q.fam, q.i, v);
        }
        table[x * n + y] = r;
      }
    }
    return NamedMonoid{share(FiniteMonoid::make(n, std::move(table), idx(5, 0, h.identity()))),
                       std::move(names),
                       {}};
  }

  // Finite 0/1 sequences a_0 a_1 ... standing for eventually-zero ones.
  using BitSequence = std::vector<std::uint8_t>;

  class LengthInsufficient : public Error {
   public:
    using Error::Error;
  };

  // Prefix up to and including the last 1; (0) for the zero sequence.
  inline BitSequence bit_head(BitSequence const& a) {
    std::size_t last = a.size();
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != 0) {
        last = i;
        break;
      }
    }
    if (last == a.size()) {
      return BitSequence{0};
    }
    return BitSequence(a.begin(), a.begin() + last + 1);
  }

  inline std::size_t bit_length(BitSequence const& a) {
    auto h = bit_head(a);
    return h.size() == 1 && h[0] == 0 ? 0 : h.size();
  }

  inline std::uint64_t bit_value(BitSequence const& a) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0) {
        if (i >= 64) {
          throw OutOfRange("bit sequence too long for 64-bit value");
        }
        v |= std::uint64_t(1) << i;
      }
    }
    return v;
  }

  inline std::uint64_t isqrt(std::uint64_t m) {
    // r ≤ 2^32 - 1 keeps r·r inside 64 bits; compare by division near the top
    auto r = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(m))),
                                     UINT32_MAX);
    while (r > 0 && r > m / r) {
      --r;
    }
    while (r < UINT32_MAX && r + 1 <= m / (r + 1)) {
      ++r;
    }
    return r;
  }

  // The length-n sequence whose value is ⌊√m⌋.
  inline BitSequence bit_sqrt(std::uint64_t m, std::size_t n) {
    auto r = isqrt(m);
    if (n < 64 && r >= (std::uint64_t(1) << n)) {
      throw LengthInsufficient("floor(sqrt(" + std::to_string(m) + ")) needs more than "
                               + std::to_string(n) + " bits");
    }
    BitSequence out(n, 0);
    for (std::size_t i = 0; i < n && i < 64; ++i) {
      out[i] = (r >> i) & 1u;
    }
    return out;
  }

  namespace fixtures {

    inline NamedMonoid trivial() {
      return NamedMonoid{share(FiniteMonoid::make(1, {0}, 0)), {"1"}, {}};
    }

    // {1, x, y}, x and y right zeros among themselves.
    inline NamedMonoid rz2_plus1() {
      return NamedMonoid{share(FiniteMonoid::make(3, {0, 1, 2, 1, 1, 2, 2, 1, 2}, 0)),
                         {"1", "x", "y"},
                         {}};
    }

    inline NamedMonoid cg21() {
      return chain_of_groups(2, 1, false);
    }

    inline NamedMonoid b22_plus1() {
      return rect_band_monoid(cyclic_group(2), 2, 2, {0, 0, 0, 0});
    }

    inline NamedMonoid column_band_z2() {
      return rect_band_monoid(cyclic_group(2), 2, 1, {0, 0});
    }

    // {1, a, 0} with a·a = 0.
    inline NamedMonoid nil3() {
      return NamedMonoid{share(FiniteMonoid::make(3, {0, 1, 2, 1, 2, 2, 2, 2, 2}, 0)),
                         {"1", "a", "0"},
                         {}};
    }

    inline NamedMonoid layered_z2() {
      return layered_monoid(cyclic_group(2), 1);
    }

    // 1 > b > c under min; S·c ⊂ S·b ⊂ S.
    inline NamedMonoid chain3() {
      return NamedMonoid{share(FiniteMonoid::make(3, {0, 1, 2, 1, 1, 2, 2, 2, 2}, 0)),
                         {"1", "b", "c"},
                         {}};
    }

    // Two points over cg21: level 0 sends both to p, the rest fix them.
    // Neither point is act-regular.
    inline FiniteAct cg21_collapse_act() {
      auto m = cg21().monoid;
      return FiniteAct::make(m, 2, {0, 1, 0, 0, 0, 0, 0, 1, 0, 1}, {"p", "q"});
    }

  }  // namespace fixtures

}  // namespace actlab

#endif  // ACTLAB_FAMILIES_HPP_

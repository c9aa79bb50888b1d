#ifndef ACTLAB_RECT_BAND_HPP_
#define ACTLAB_RECT_BAND_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "core.hpp"
#include "monoid.hpp"

namespace actlab {

  class NotSubsemigroup : public Error {
   public:
    NotSubsemigroup(Elem s, Elem t)
        : Error("product " + std::to_string(s) + "·" + std::to_string(t)
                + " leaves the subset"),
          s(s),
          t(t) {}
    Elem s, t;
  };

  // T as a rectangular band of groups: cell (i, j) collects the a with
  // a·T equal to the i-th right ideal and T·a equal to the j-th left ideal,
  // so that T_ij · T_kl ⊆ T_il.
  struct RectBandDecomposition {
    ElementSet                 carrier;
    std::size_t                rows = 0;
    std::size_t                cols = 0;
    std::vector<ElementSet>    row_ideals;  // a·T for a in row i
    std::vector<ElementSet>    col_ideals;  // T·a for a in column j
    std::vector<std::uint32_t> row_of;      // indexed by monoid element
    std::vector<std::uint32_t> col_of;
    std::vector<GroupComponent> cells;      // row-major

    GroupComponent const& cell(std::size_t i, std::size_t j) const {
      return cells[i * cols + j];
    }
    Elem unit(std::size_t i, std::size_t j) const { return cell(i, j).unit; }
    std::vector<std::size_t> group_orders() const {
      std::vector<std::size_t> out;
      for (auto const& g : cells) {
        out.push_back(g.members.size());
      }
      return out;
    }
  };

  struct BandFailure {
    enum class Kind { LeftIdealNotMinimal, RightIdealNotMinimal, EmptyCell, CellNotGroup, ProductLeavesCell };
    Kind        kind;
    Elem        a = 0;
    Elem        b = 0;  // smaller ideal generator or second factor
    std::string message;
  };

  inline char const* to_string(BandFailure::Kind k) {
    switch (k) {
      case BandFailure::Kind::LeftIdealNotMinimal:
        return "left-ideal-not-minimal";
      case BandFailure::Kind::RightIdealNotMinimal:
        return "right-ideal-not-minimal";
      case BandFailure::Kind::EmptyCell:
        return "empty-cell";
      case BandFailure::Kind::CellNotGroup:
        return "cell-not-group";
      case BandFailure::Kind::ProductLeavesCell:
        return "product-leaves-cell";
    }
    return "?";
  }

  using BandResult = std::variant<RectBandDecomposition, BandFailure>;

  inline void require_subsemigroup(FiniteMonoid const& m, ElementSet const& t) {
    t.check_bound(m.order());
    for (auto x : t) {
      for (auto y : t) {
        if (!t.contains(m.mul(x, y))) {
          throw NotSubsemigroup(x, y);
        }
      }
    }
  }

  // T·a and a·T inside T.
  inline ElementSet left_ideal_in(FiniteMonoid const& m, ElementSet const& t, Elem a) {
    std::vector<Elem> out;
    for (auto x : t) {
      out.push_back(m.mul(x, a));
    }
    return ElementSet(std::move(out));
  }

  inline ElementSet right_ideal_in(FiniteMonoid const& m, ElementSet const& t, Elem a) {
    std::vector<Elem> out;
    for (auto x : t) {
      out.push_back(m.mul(a, x));
    }
    return ElementSet(std::move(out));
  }

  inline BandResult rect_band_decompose(FiniteMonoid const& m, ElementSet const& t) {
    require_subsemigroup(m, t);
    if (t.empty()) {
      return BandFailure{BandFailure::Kind::EmptyCell, 0, 0, "empty subset"};
    }
    std::vector<ElementSet> left(m.order()), right(m.order());
    for (auto a : t) {
      left[a]  = left_ideal_in(m, t, a);
      right[a] = right_ideal_in(m, t, a);
    }
    for (auto a : t) {
      for (auto b : t) {
        if (left[b].strict_subset_of(left[a])) {
          return BandFailure{BandFailure::Kind::LeftIdealNotMinimal, a, b,
                             "T·" + std::to_string(b) + " ⊂ T·" + std::to_string(a)};
        }
        if (right[b].strict_subset_of(right[a])) {
          return BandFailure{BandFailure::Kind::RightIdealNotMinimal, a, b,
                             std::to_string(b) + "·T ⊂ " + std::to_string(a) + "·T"};
        }
      }
    }
    RectBandDecomposition d;
    d.carrier = t;
    d.row_of.assign(m.order(), UINT32_MAX);
    d.col_of.assign(m.order(), UINT32_MAX);
    for (auto a : t) {
      auto find_or_add = [](std::vector<ElementSet>& xs, ElementSet const& x) {
        for (std::uint32_t i = 0; i < xs.size(); ++i) {
          if (xs[i] == x) {
            return i;
          }
        }
        xs.push_back(x);
        return static_cast<std::uint32_t>(xs.size() - 1);
      };
      d.row_of[a] = find_or_add(d.row_ideals, right[a]);
      d.col_of[a] = find_or_add(d.col_ideals, left[a]);
    }
    d.rows = d.row_ideals.size();
    d.cols = d.col_ideals.size();
    std::vector<std::vector<Elem>> cells(d.rows * d.cols);
    for (auto a : t) {
      cells[d.row_of[a] * d.cols + d.col_of[a]].push_back(a);
    }
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (cells[k].empty()) {
        return BandFailure{BandFailure::Kind::EmptyCell,
                           static_cast<Elem>(k / d.cols), static_cast<Elem>(k % d.cols),
                           "cell (" + std::to_string(k / d.cols) + ","
                               + std::to_string(k % d.cols) + ") is empty"};
      }
      ElementSet cell(cells[k]);
      std::optional<Elem> unit;
      for (auto a : cell) {
        if (is_idempotent(m, a)) {
          unit = a;
          break;
        }
      }
      if (!unit) {
        return BandFailure{BandFailure::Kind::CellNotGroup, cell[0], 0,
                           "cell without idempotent"};
      }
      try {
        d.cells.push_back(group_on(m, *unit, cell));
      } catch (NotAGroup const& e) {
        return BandFailure{BandFailure::Kind::CellNotGroup, e.witness, *unit, e.what()};
      }
    }
    for (auto a : t) {
      for (auto b : t) {
        auto ab = m.mul(a, b);
        if (d.row_of[ab] != d.row_of[a] || d.col_of[ab] != d.col_of[b]) {
          return BandFailure{BandFailure::Kind::ProductLeavesCell, a, b,
                             "product lands outside T_il"};
        }
      }
    }
    return d;
  }

  // Checks the standard facts about a rectangular band of groups; returns one
  // message per violation.
  inline std::vector<std::string> band_fact_violations(FiniteMonoid const&          m,
                                                       RectBandDecomposition const& d) {
    std::vector<std::string> bad;
    auto const&              t    = d.carrier;
    auto                     unit = [&d](std::size_t i, std::size_t j) { return d.unit(i, j); };
    auto                     cell = [&d](std::size_t i, std::size_t j) {
      return d.cell(i, j).members;
    };
    auto tag = [](char const* what, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
      return std::string(what) + " at (" + std::to_string(i) + "," + std::to_string(j) + "),("
             + std::to_string(k) + "," + std::to_string(l) + ")";
    };
    for (std::size_t i = 0; i < d.rows; ++i) {
      for (std::size_t j = 0; j < d.cols; ++j) {
        for (std::size_t k = 0; k < d.rows; ++k) {
          for (std::size_t l = 0; l < d.cols; ++l) {
            if (k < d.rows && m.mul(unit(i, j), unit(k, j)) != unit(i, j)) {
              bad.push_back(tag("e_ij·e_kj != e_ij", i, j, k, j));
            }
            if (m.mul(unit(i, j), unit(i, l)) != unit(i, l)) {
              bad.push_back(tag("e_ij·e_il != e_il", i, j, i, l));
            }
            auto const target = cell(i, l);
            ElementSet u{unit(i, j)}, v{unit(k, l)};
            if (product(m, u, cell(k, l)) != target) {
              bad.push_back(tag("e_ij·T_kl != T_il", i, j, k, l));
            }
            if (product(m, cell(i, j), v) != target) {
              bad.push_back(tag("T_ij·e_kl != T_il", i, j, k, l));
            }
            if (product(m, cell(i, j), cell(k, l)) != target) {
              bad.push_back(tag("T_ij·T_kl != T_il", i, j, k, l));
            }
            if (cell(i, j).size() != cell(k, l).size()) {
              bad.push_back(tag("group orders differ", i, j, k, l));
            }
          }
        }
        ElementSet column, row;
        for (std::size_t p = 0; p < d.rows; ++p) {
          column = column.unite(cell(p, j));
        }
        for (std::size_t p = 0; p < d.cols; ++p) {
          row = row.unite(cell(i, p));
        }
        if (left_ideal_in(m, t, unit(i, j)) != column) {
          bad.push_back(tag("T·e_ij is not column j", i, j, i, j));
        }
        if (right_ideal_in(m, t, unit(i, j)) != row) {
          bad.push_back(tag("e_ij·T is not row i", i, j, i, j));
        }
        for (auto a : t) {
          bool same_col = left_ideal_in(m, t, a) == left_ideal_in(m, t, unit(i, j));
          bool same_row = right_ideal_in(m, t, a) == right_ideal_in(m, t, unit(i, j));
          if (same_col != (d.col_of[a] == j)) {
            bad.push_back("T·a = T·e_ij does not match column membership for "
                          + std::to_string(a));
          }
          if (same_row != (d.row_of[a] == i)) {
            bad.push_back("a·T = e_ij·T does not match row membership for "
                          + std::to_string(a));
          }
        }
      }
    }
    for (auto a : t) {
      auto la = left_ideal_in(m, t, a);
      auto ra = right_ideal_in(m, t, a);
      for (auto b : t) {
        if (left_ideal_in(m, t, b).strict_subset_of(la)) {
          bad.push_back("T·" + std::to_string(a) + " not minimal");
        }
        if (right_ideal_in(m, t, b).strict_subset_of(ra)) {
          bad.push_back(std::to_string(a) + "·T not minimal");
        }
      }
    }
    return bad;
  }

  // For a single column: T ≅ G × I with ⟨c,j⟩·⟨d,k⟩ = ⟨cd, j⟩, G = T_00 and
  // ⟨b,i⟩ ↦ e_i0 · b.
  struct ColumnNormalForm {
    std::vector<Elem> group;   // members of T_00
    std::size_t       rows = 0;
    std::vector<Elem> image;   // image[i * |G| + g] = e_i0 · group[g]
    // Index of ⟨group[g1]·group[g2], i⟩ for the pair product.
    std::size_t pair_product(std::size_t x, std::size_t y, FiniteMonoid const& m) const {
      std::size_t gn = group.size();
      Elem        c  = m.mul(group[x % gn], group[y % gn]);
      std::size_t pos = std::find(group.begin(), group.end(), c) - group.begin();
      return (x / gn) * gn + pos;
    }
  };

  class NotSingleColumn : public Error {
   public:
    using Error::Error;
  };

  inline ColumnNormalForm band_normal_form_single_column(FiniteMonoid const&          m,
                                                         RectBandDecomposition const& d) {
    if (d.cols != 1) {
      throw NotSingleColumn("band has " + std::to_string(d.cols) + " columns");
    }
    ColumnNormalForm nf;
    nf.group = d.cell(0, 0).members.items();
    nf.rows  = d.rows;
    std::size_t gn = nf.group.size();
    for (std::size_t i = 0; i < d.rows; ++i) {
      for (std::size_t g = 0; g < gn; ++g) {
        nf.image.push_back(m.mul(d.unit(i, 0), nf.group[g]));
      }
    }
    if (ElementSet(nf.image) != d.carrier || ElementSet(nf.image).size() != nf.image.size()) {
      throw VerificationFailed("normal form map is not a bijection");
    }
    for (std::size_t x = 0; x < nf.image.size(); ++x) {
      for (std::size_t y = 0; y < nf.image.size(); ++y) {
        if (nf.image[nf.pair_product(x, y, m)] != m.mul(nf.image[x], nf.image[y])) {
          throw VerificationFailed("normal form map is not a homomorphism");
        }
      }
    }
    return nf;
  }

}  // namespace actlab

#endif  // ACTLAB_RECT_BAND_HPP_

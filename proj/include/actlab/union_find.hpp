#ifndef ACTLAB_UNION_FIND_HPP_
#define ACTLAB_UNION_FIND_HPP_

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace actlab {

  class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
      std::iota(parent_.begin(), parent_.end(), std::uint32_t(0));
    }

    std::uint32_t find(std::uint32_t x) {
      while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x          = parent_[x];
      }
      return x;
    }

    // Returns false if already joined.
    bool unite(std::uint32_t x, std::uint32_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (rank_[x] < rank_[y]) {
        std::swap(x, y);
      }
      parent_[y] = x;
      if (rank_[x] == rank_[y]) {
        ++rank_[x];
      }
      return true;
    }

    std::size_t size() const noexcept { return parent_.size(); }

    // Block index per element, blocks numbered by first occurrence.
    std::vector<std::uint32_t> canonical_blocks() {
      std::vector<std::uint32_t> root_to_block(parent_.size(), UINT32_MAX);
      std::vector<std::uint32_t> out(parent_.size());
      std::uint32_t              next = 0;
      for (std::uint32_t i = 0; i < parent_.size(); ++i) {
        auto r = find(i);
        if (root_to_block[r] == UINT32_MAX) {
          root_to_block[r] = next++;
        }
        out[i] = root_to_block[r];
      }
      return out;
    }

   private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t>  rank_;
  };

  // Renumber an arbitrary labelling so blocks appear in first-occurrence order.
  template <typename T>
  std::vector<std::uint32_t> canonical_labels(std::vector<T> const& labels) {
    std::vector<std::uint32_t>    out(labels.size());
    std::map<T, std::uint32_t>    seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, fresh] = seen.try_emplace(
          labels[i], static_cast<std::uint32_t>(seen.size()));
      out[i] = it->second;
    }
    return out;
  }

}  // namespace actlab

#endif  // ACTLAB_UNION_FIND_HPP_

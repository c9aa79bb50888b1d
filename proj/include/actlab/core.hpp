#ifndef ACTLAB_CORE_HPP_
#define ACTLAB_CORE_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace actlab {

  // Elements of a monoid and points of an act are plain indices.
  using Elem  = std::uint32_t;
  using Point = std::uint32_t;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A hypothesis of a construction was not met (exit code 4 in the CLI).
  class PreconditionFailed : public Error {
   public:
    using Error::Error;
  };

  // A computed object failed its own re-verification (exit code 3 in the CLI).
  class VerificationFailed : public Error {
   public:
    using Error::Error;
  };

  // Sorted, duplicate-free set of indices.
  class ElementSet {
   public:
    ElementSet() = default;
    ElementSet(std::initializer_list<Elem> xs) : items_(xs) {
      normalize();
    }
    explicit ElementSet(std::vector<Elem> xs) : items_(std::move(xs)) {
      normalize();
    }

    static ElementSet range(std::size_t n) {
      ElementSet out;
      out.items_.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        out.items_[i] = static_cast<Elem>(i);
      }
      return out;
    }

    bool contains(Elem x) const {
      return std::binary_search(items_.begin(), items_.end(), x);
    }
    // this ⊆ other
    bool subset_of(ElementSet const& other) const {
      return std::includes(
          other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
    }
    bool strict_subset_of(ElementSet const& other) const {
      return size() < other.size() && subset_of(other);
    }
    bool comparable(ElementSet const& other) const {
      return subset_of(other) || other.subset_of(*this);
    }

    ElementSet unite(ElementSet const& other) const {
      std::vector<Elem> out;
      std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                     other.items_.end(), std::back_inserter(out));
      ElementSet s;
      s.items_ = std::move(out);
      return s;
    }
    ElementSet intersect(ElementSet const& other) const {
      std::vector<Elem> out;
      std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                            other.items_.end(), std::back_inserter(out));
      ElementSet s;
      s.items_ = std::move(out);
      return s;
    }
    ElementSet minus(ElementSet const& other) const {
      std::vector<Elem> out;
      std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                          other.items_.end(), std::back_inserter(out));
      ElementSet s;
      s.items_ = std::move(out);
      return s;
    }

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    Elem operator[](std::size_t i) const { return items_[i]; }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }
    std::vector<Elem> const& items() const noexcept { return items_; }

    // Throws if some index is not below `order`.
    void check_bound(std::size_t order) const {
      if (!items_.empty() && items_.back() >= order) {
        throw Error("element index " + std::to_string(items_.back())
                    + " out of range for order " + std::to_string(order));
      }
    }

    friend bool operator==(ElementSet const&, ElementSet const&) = default;
    friend auto operator<=>(ElementSet const&, ElementSet const&) = default;

   private:
    void normalize() {
      std::sort(items_.begin(), items_.end());
      items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    std::vector<Elem> items_;
  };

  inline std::string to_string(ElementSet const& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += std::to_string(s[i]);
    }
    return out + "}";
  }

}  // namespace actlab

#endif  // ACTLAB_CORE_HPP_

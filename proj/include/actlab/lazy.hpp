#ifndef ACTLAB_LAZY_HPP_
#define ACTLAB_LAZY_HPP_

#include <algorithm>
#include <climits>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "core.hpp"
#include "formula.hpp"

namespace actlab {

  class UnknownFamily : public Error {
   public:
    using Error::Error;
  };
  class WindowTooSmall : public Error {
   public:
    using Error::Error;
  };
  class OracleInvalid : public VerificationFailed {
   public:
    using VerificationFailed::VerificationFailed;
  };

  // Tagged normal form.  tag: '1' identity, 'a' 'b' 'c' named points,
  // 'n' integer copies (ints = {n, level}) or naturals (ints = {n}),
  // 'w' words: free (word) or commutative (ints = exponents).
  struct LazyElem {
    char                      tag = '1';
    std::vector<std::int64_t> ints;
    std::string               word;

    auto operator<=>(LazyElem const&) const = default;
  };

  inline constexpr std::int64_t kOmegaLevel = INT64_MAX;

  inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) {
      throw Error("integer overflow in lazy product");
    }
    return r;
  }

  class LazyMonoid {
   public:
    explicit LazyMonoid(std::size_t window) : window_(window) {}
    virtual ~LazyMonoid() = default;

    virtual std::string family() const = 0;
    std::size_t         window() const noexcept { return window_; }
    LazyElem            identity() const { return LazyElem{}; }

    LazyElem mul(LazyElem const& x, LazyElem const& y) const {
      auto key = std::pair{x, y};
      {
        std::lock_guard lock(mu_);
        auto            it = cache_.find(key);
        if (it != cache_.end()) {
          return it->second;
        }
      }
      auto r = multiply(x, y);
      std::lock_guard lock(mu_);
      cache_.emplace(std::move(key), r);
      return r;
    }

    // Enumerated slice of S, with the identity first.
    virtual std::vector<LazyElem> elements() const = 0;
    // The designated part of R inside the slice.
    virtual std::vector<LazyElem> core() const = 0;
    // Candidate multipliers for certificate search.
    virtual std::vector<LazyElem> ball(std::size_t radius) const = 0;
    // S·x ⊆ S·y, derived by hand from the defining rules.
    virtual bool                        leq(LazyElem const& x, LazyElem const& y) const = 0;
    virtual std::string                 show(LazyElem const& x) const = 0;
    virtual std::unique_ptr<LazyMonoid> with_window(std::size_t w) const = 0;
    virtual std::vector<std::string>    notes() const { return {}; }

    // Points x_i, y_j and elements t, s for a probe of ∃z(x = t·z ∧ y = s·z)
    // over core(), where it should hold exactly when i ≥ j.
    struct OrderProbe {
      std::vector<LazyElem> xs, ys;
      LazyElem              t, s;
    };
    virtual std::optional<OrderProbe> order_probe() const { return std::nullopt; }

   protected:
    virtual LazyElem multiply(LazyElem const& x, LazyElem const& y) const = 0;

    std::size_t window_;

   private:
    mutable std::mutex                                      mu_;
    mutable std::map<std::pair<LazyElem, LazyElem>, LazyElem> cache_;
  };

  namespace lazy_detail {
    inline LazyElem named(char c) { return LazyElem{c, {}, {}}; }
    inline LazyElem indexed(char c, std::vector<std::int64_t> v) { return LazyElem{c, std::move(v), {}}; }
    inline LazyElem word(std::string w) { return LazyElem{'w', {}, std::move(w)}; }
    inline LazyElem powers(std::int64_t p, std::int64_t q) { return LazyElem{'w', {p, q}, {}}; }

    // 0, 1, -1, 2, -2, ... up to |n| ≤ w
    inline std::vector<std::int64_t> centred(std::int64_t w) {
      std::vector<std::int64_t> out{0};
      for (std::int64_t k = 1; k <= w; ++k) {
        out.push_back(k);
        out.push_back(-k);
      }
      return out;
    }

    inline std::string greek(std::string const& w) {
      std::string out;
      for (char ch : w) {
        out += ch == 'a' ? "α" : "β";
      }
      return out;
    }

    inline std::string commutative_word(std::int64_t p, std::int64_t q) {
      std::string out;
      if (p > 0) {
        out += "α";
        if (p > 1) {
          out += "^" + std::to_string(p);
        }
      }
      if (q > 0) {
        out += "β";
        if (q > 1) {
          out += "^" + std::to_string(q);
        }
      }
      return out;
    }

    inline std::vector<LazyElem> commutative_words(std::int64_t max_len) {
      std::vector<LazyElem> out;
      for (std::int64_t len = 1; len <= max_len; ++len) {
        for (std::int64_t p = len; p >= 0; --p) {
          out.push_back(powers(p, len - p));
        }
      }
      return out;
    }

    inline std::vector<LazyElem> free_words(std::size_t max_len) {
      std::vector<LazyElem> out;
      std::vector<std::string> layer{""};
      for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (auto const& w : layer) {
          next.push_back(w + "a");
          next.push_back(w + "b");
        }
        for (auto const& w : next) {
          out.push_back(word(w));
        }
        layer = std::move(next);
      }
      return out;
    }

    inline void append_unique(std::vector<LazyElem>& into, std::vector<LazyElem> const& from) {
      for (auto const& x : from) {
        if (std::find(into.begin(), into.end(), x) == into.end()) {
          into.push_back(x);
        }
      }
    }
  }  // namespace lazy_detail

  // 1, a_i, b_i, c_ij (i ≥ j) and the free semigroup on α, β.
  class LeftZeroFamily final : public LazyMonoid {
   public:
    using LazyMonoid::LazyMonoid;
    std::string family() const override { return "ex7_1"; }

    std::vector<LazyElem> elements() const override {
      std::vector<LazyElem> out{identity()};
      auto                  c = core();
      out.insert(out.end(), c.begin(), c.end());
      auto w = lazy_detail::free_words(2);
      out.insert(out.end(), w.begin(), w.end());
      return out;
    }
    std::vector<LazyElem> core() const override {
      using lazy_detail::indexed;
      std::vector<LazyElem> out;
      auto                  n = static_cast<std::int64_t>(window_);
      for (std::int64_t i = 0; i <= n; ++i) {
        out.push_back(indexed('a', {i}));
      }
      for (std::int64_t i = 0; i <= n; ++i) {
        out.push_back(indexed('b', {i}));
      }
      for (std::int64_t i = 0; i <= n; ++i) {
        for (std::int64_t j = 0; j <= i; ++j) {
          out.push_back(indexed('c', {i, j}));
        }
      }
      return out;
    }
    std::vector<LazyElem> ball(std::size_t radius) const override {
      auto out = elements();
      lazy_detail::append_unique(out, lazy_detail::free_words(radius));
      return out;
    }
    bool leq(LazyElem const& x, LazyElem const& y) const override {
      if (y.tag == '1') {
        return true;
      }
      if (x.tag == '1') {
        return false;
      }
      if (x.tag != 'w') {
        return true;  // S·x = R, and R ⊆ S·y for every y
      }
      if (y.tag != 'w') {
        return false;
      }
      return x.word.size() >= y.word.size()
             && x.word.compare(x.word.size() - y.word.size(), y.word.size(), y.word) == 0;
    }
    std::string show(LazyElem const& x) const override {
      switch (x.tag) {
        case '1':
          return "1";
        case 'c':
          return "c_" + std::to_string(x.ints[0]) + "_" + std::to_string(x.ints[1]);
        case 'w':
          return lazy_detail::greek(x.word);
        default:
          return std::string(1, x.tag) + "_" + std::to_string(x.ints[0]);
      }
    }
    std::unique_ptr<LazyMonoid> with_window(std::size_t w) const override {
      return std::make_unique<LeftZeroFamily>(w);
    }
    std::optional<OrderProbe> order_probe() const override {
      OrderProbe p;
      for (std::int64_t i = 0; i <= static_cast<std::int64_t>(window_); ++i) {
        p.xs.push_back(lazy_detail::indexed('a', {i}));
        p.ys.push_back(lazy_detail::indexed('b', {i}));
      }
      p.t = lazy_detail::word("a");
      p.s = lazy_detail::word("b");
      return p;
    }

   protected:
    LazyElem multiply(LazyElem const& x, LazyElem const& y) const override {
      if (x.tag == '1') {
        return y;
      }
      if (y.tag == '1' || x.tag != 'w') {
        return x;
      }
      switch (y.tag) {
        case 'w':
          return lazy_detail::word(x.word + y.word);
        case 'c':
          return x.word.back() == 'a' ? lazy_detail::indexed('a', {y.ints[0]})
                                      : lazy_detail::indexed('b', {y.ints[1]});
        default:
          return y;
      }
    }
  };

  // Copies Z_i of the integers at the given levels, n_i·m_j = (n+m)_min(i,j),
  // with α, β shifting by 3 and 2.
  class ShiftedLevelsFamily final : public LazyMonoid {
   public:
    enum class Levels { Window, Single, WindowOmega };

    ShiftedLevelsFamily(std::size_t window, Levels kind) : LazyMonoid(window), kind_(kind) {}

    std::string family() const override {
      switch (kind_) {
        case Levels::Window:
          return "ex7_2";
        case Levels::Single:
          return "ex8_3";
        default:
          return "ex8_4";
      }
    }
    std::vector<std::int64_t> levels() const {
      if (kind_ == Levels::Single) {
        return {0};
      }
      std::vector<std::int64_t> out;
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(window_); ++i) {
        out.push_back(i);
      }
      if (kind_ == Levels::WindowOmega) {
        out.push_back(kOmegaLevel);
      }
      return out;
    }
    std::vector<LazyElem> elements() const override {
      std::vector<LazyElem> out{identity()};
      auto                  c = core();
      out.insert(out.end(), c.begin(), c.end());
      auto w = lazy_detail::commutative_words(2);
      out.insert(out.end(), w.begin(), w.end());
      return out;
    }
    std::vector<LazyElem> core() const override {
      std::vector<LazyElem> out;
      for (auto i : levels()) {
        for (auto n : lazy_detail::centred(static_cast<std::int64_t>(window_))) {
          out.push_back(lazy_detail::indexed('n', {n, i}));
        }
      }
      return out;
    }
    std::vector<LazyElem> ball(std::size_t radius) const override {
      auto out  = elements();
      auto span = static_cast<std::int64_t>(2 * window_ + 3 * radius);
      std::vector<LazyElem> extra;
      for (auto i : levels()) {
        for (auto n : lazy_detail::centred(span)) {
          extra.push_back(lazy_detail::indexed('n', {n, i}));
        }
      }
      lazy_detail::append_unique(out, extra);
      lazy_detail::append_unique(out, lazy_detail::commutative_words(static_cast<std::int64_t>(radius)));
      return out;
    }
    bool leq(LazyElem const& x, LazyElem const& y) const override {
      if (y.tag == '1') {
        return true;
      }
      if (x.tag == '1') {
        return false;
      }
      if (x.tag == 'n') {
        return y.tag == 'w' || x.ints[1] <= y.ints[1];
      }
      return y.tag == 'w' && x.ints[0] >= y.ints[0] && x.ints[1] >= y.ints[1];
    }
    std::string show(LazyElem const& x) const override {
      switch (x.tag) {
        case '1':
          return "1";
        case 'n':
          return std::to_string(x.ints[0]) + "_"
                 + (x.ints[1] == kOmegaLevel ? std::string("ω") : std::to_string(x.ints[1]));
        default:
          return lazy_detail::commutative_word(x.ints[0], x.ints[1]);
      }
    }
    std::unique_ptr<LazyMonoid> with_window(std::size_t w) const override {
      return std::make_unique<ShiftedLevelsFamily>(w, kind_);
    }
    std::vector<std::string> notes() const override {
      return {"integer parts are 64-bit with overflow checks"};
    }

   protected:
    LazyElem multiply(LazyElem const& x, LazyElem const& y) const override {
      using lazy_detail::indexed;
      if (x.tag == '1') {
        return y;
      }
      if (y.tag == '1') {
        return x;
      }
      if (x.tag == 'n' && y.tag == 'n') {
        return indexed('n', {checked_add(x.ints[0], y.ints[0]), std::min(x.ints[1], y.ints[1])});
      }
      if (x.tag == 'w' && y.tag == 'w') {
        return lazy_detail::powers(checked_add(x.ints[0], y.ints[0]), checked_add(x.ints[1], y.ints[1]));
      }
      auto const& w = x.tag == 'w' ? x : y;
      auto const& n = x.tag == 'w' ? y : x;
      auto shift    = checked_add(3 * w.ints[0], 2 * w.ints[1]);
      return indexed('n', {checked_add(n.ints[0], shift), n.ints[1]});
    }

   private:
    Levels kind_;
  };

  // ω ∪ ⟨α⟩ ∪ {1}: n·m = n, α^i fixes every n on both sides.
  class NaturalsFamily final : public LazyMonoid {
   public:
    using LazyMonoid::LazyMonoid;
    std::string family() const override { return "ex8_2"; }

    std::vector<LazyElem> elements() const override {
      std::vector<LazyElem> out{identity()};
      auto                  c = core();
      out.insert(out.end(), c.begin(), c.end());
      for (std::int64_t i = 1; i <= static_cast<std::int64_t>(window_); ++i) {
        out.push_back(lazy_detail::indexed('w', {i}));
      }
      return out;
    }
    std::vector<LazyElem> core() const override {
      std::vector<LazyElem> out;
      for (std::int64_t n = 0; n < static_cast<std::int64_t>(window_); ++n) {
        out.push_back(lazy_detail::indexed('n', {n}));
      }
      return out;
    }
    std::vector<LazyElem> ball(std::size_t radius) const override {
      auto out = elements();
      std::vector<LazyElem> extra;
      for (std::int64_t i = 1; i <= static_cast<std::int64_t>(window_ + radius); ++i) {
        extra.push_back(lazy_detail::indexed('w', {i}));
      }
      lazy_detail::append_unique(out, extra);
      return out;
    }
    bool leq(LazyElem const& x, LazyElem const& y) const override {
      if (y.tag == '1') {
        return true;
      }
      if (x.tag == '1') {
        return false;
      }
      if (x.tag == 'n') {
        return true;
      }
      return y.tag == 'w' && x.ints[0] >= y.ints[0];
    }
    std::string show(LazyElem const& x) const override {
      switch (x.tag) {
        case '1':
          return "1";
        case 'n':
          return std::to_string(x.ints[0]);
        default:
          return x.ints[0] == 1 ? std::string("α") : "α^" + std::to_string(x.ints[0]);
      }
    }
    std::unique_ptr<LazyMonoid> with_window(std::size_t w) const override {
      return std::make_unique<NaturalsFamily>(w);
    }

   protected:
    LazyElem multiply(LazyElem const& x, LazyElem const& y) const override {
      if (x.tag == '1') {
        return y;
      }
      if (y.tag == '1' || x.tag == 'n') {
        return x;
      }
      if (y.tag == 'n') {
        return y;
      }
      return lazy_detail::indexed('w', {checked_add(x.ints[0], y.ints[0])});
    }
  };

  // {a, b, c} ∪ ⟨α, β⟩ (commutative) ∪ {1} with the stated products.
  class ThreePointFamily final : public LazyMonoid {
   public:
    using LazyMonoid::LazyMonoid;
    std::string family() const override { return "ex9_1"; }

    std::vector<LazyElem> elements() const override {
      std::vector<LazyElem> out{identity()};
      auto                  c = core();
      out.insert(out.end(), c.begin(), c.end());
      auto w = lazy_detail::commutative_words(static_cast<std::int64_t>(window_));
      out.insert(out.end(), w.begin(), w.end());
      return out;
    }
    std::vector<LazyElem> core() const override {
      return {lazy_detail::named('a'), lazy_detail::named('b'), lazy_detail::named('c')};
    }
    std::vector<LazyElem> ball(std::size_t radius) const override {
      auto out = elements();
      lazy_detail::append_unique(out, lazy_detail::commutative_words(static_cast<std::int64_t>(radius)));
      return out;
    }
    bool leq(LazyElem const& x, LazyElem const& y) const override {
      if (y.tag == '1') {
        return true;
      }
      if (x.tag == '1') {
        return false;
      }
      switch (y.tag) {
        case 'a':
          return x.tag == 'a';
        case 'b':
          return x.tag == 'a' || x.tag == 'b';
        case 'c':
          return x.tag != 'w';
        default:
          return x.tag != 'w' || (x.ints[0] >= y.ints[0] && x.ints[1] >= y.ints[1]);
      }
    }
    std::string show(LazyElem const& x) const override {
      if (x.tag == 'w') {
        return lazy_detail::commutative_word(x.ints[0], x.ints[1]);
      }
      return std::string(1, x.tag);
    }
    std::unique_ptr<LazyMonoid> with_window(std::size_t w) const override {
      return std::make_unique<ThreePointFamily>(w);
    }
    std::vector<std::string> notes() const override {
      return {"shipped as stated; the designated R is {a, b, c}",
              "from the operation: S·c = {a, b, c}, not S",
              "from the operation: 1 is idempotent besides a, b, c",
              "from the operation: every element is act-regular, so R = S"};
    }

   protected:
    LazyElem multiply(LazyElem const& x, LazyElem const& y) const override {
      if (x.tag == '1') {
        return y;
      }
      if (y.tag == '1') {
        return x;
      }
      if (x.tag == 'w' && y.tag == 'w') {
        return lazy_detail::powers(checked_add(x.ints[0], y.ints[0]), checked_add(x.ints[1], y.ints[1]));
      }
      if (x.tag == 'w') {
        return y;
      }
      if (y.tag == 'w' || y.tag == 'c') {
        return x;
      }
      if (x.tag == 'c') {
        return y;
      }
      // x, y ∈ {a, b}
      return x.tag == 'a' ? x : y;
    }
  };

  inline std::vector<std::string> const& lazy_family_names() {
    static std::vector<std::string> const names{"ex7_1", "ex7_2", "ex8_2", "ex8_3", "ex8_4", "ex9_1"};
    return names;
  }

  inline std::unique_ptr<LazyMonoid> lazy_family(std::string const& name, std::size_t window) {
    if (window == 0) {
      throw WindowTooSmall("window must be at least 1");
    }
    if (name == "ex7_1") {
      return std::make_unique<LeftZeroFamily>(window);
    }
    if (name == "ex7_2") {
      return std::make_unique<ShiftedLevelsFamily>(window, ShiftedLevelsFamily::Levels::Window);
    }
    if (name == "ex8_3") {
      return std::make_unique<ShiftedLevelsFamily>(window, ShiftedLevelsFamily::Levels::Single);
    }
    if (name == "ex8_4") {
      return std::make_unique<ShiftedLevelsFamily>(window, ShiftedLevelsFamily::Levels::WindowOmega);
    }
    if (name == "ex8_2") {
      return std::make_unique<NaturalsFamily>(window);
    }
    if (name == "ex9_1") {
      return std::make_unique<ThreePointFamily>(window);
    }
    throw UnknownFamily("unknown family " + name);
  }

  struct LazyBounds {
    std::size_t   ball_radius = 6;
    std::uint64_t seed        = 0;
  };

  struct OracleStats {
    std::size_t pairs   = 0;
    std::size_t triples = 0;
  };

  // Associativity on all slice triples; leq against certificate search.
  inline OracleStats validate_lazy(LazyMonoid const& l, std::size_t radius = 6) {
    auto        elems = l.elements();
    auto        ball  = l.ball(radius);
    OracleStats st;
    for (auto const& x : elems) {
      for (auto const& y : elems) {
        auto xy = l.mul(x, y);
        for (auto const& z : elems) {
          if (l.mul(xy, z) != l.mul(x, l.mul(y, z))) {
            throw OracleInvalid("not associative at (" + l.show(x) + ", " + l.show(y) + ", "
                                + l.show(z) + ")");
          }
          ++st.triples;
        }
      }
    }
    for (auto const& x : elems) {
      for (auto const& y : elems) {
        bool found = false;
        for (auto const& s : ball) {
          if (l.mul(s, y) == x) {
            found = true;
            break;
          }
        }
        if (found != l.leq(x, y)) {
          throw OracleInvalid("ideal oracle disagrees with certificate search at (" + l.show(x)
                              + ", " + l.show(y) + ")");
        }
        ++st.pairs;
      }
    }
    return st;
  }

  // A finite set of points closed under a finite alphabet of elements.
  struct LazySlice {
    std::vector<LazyElem> points;
    std::vector<LazyElem> alphabet;
    std::vector<Point>    table;

    std::size_t size() const noexcept { return points.size(); }
    std::size_t alphabet_size() const noexcept { return alphabet.size(); }
    Point       act(Elem s, Point x) const noexcept { return table[s * points.size() + x]; }
    Point       index(LazyElem const& x) const {
      auto it = std::find(points.begin(), points.end(), x);
      if (it == points.end()) {
        throw OutOfRange("element outside the slice");
      }
      return static_cast<Point>(it - points.begin());
    }
  };

  inline LazySlice make_slice(LazyMonoid const& l, std::vector<LazyElem> points, std::vector<LazyElem> alphabet) {
    LazySlice sl{std::move(points), std::move(alphabet), {}};
    for (auto const& s : sl.alphabet) {
      for (auto const& x : sl.points) {
        sl.table.push_back(sl.index(l.mul(s, x)));
      }
    }
    return sl;
  }

  namespace lazy_detail {
    inline bool equivalent(LazyMonoid const& l, LazyElem const& x, LazyElem const& y) {
      return l.leq(x, y) && l.leq(y, x);
    }

    // One representative per ideal class, in slice order.
    inline std::vector<LazyElem> classes(LazyMonoid const& l, std::vector<LazyElem> const& xs) {
      std::vector<LazyElem> out;
      for (auto const& x : xs) {
        bool seen = false;
        for (auto const& y : out) {
          if (equivalent(l, x, y)) {
            seen = true;
            break;
          }
        }
        if (!seen) {
          out.push_back(x);
        }
      }
      return out;
    }

    inline std::vector<LazyElem> strictly_below(LazyMonoid const& l, LazyElem const& a) {
      std::vector<LazyElem> out;
      for (auto const& x : l.elements()) {
        if (l.leq(x, a) && !l.leq(a, x)) {
          out.push_back(x);
        }
      }
      return classes(l, out);
    }

    // Classes of `later` strictly below a that no element of `earlier` represents.
    inline std::vector<LazyElem> fresh_below(LazyMonoid const& earlier, LazyMonoid const& later, LazyElem const& a) {
      std::vector<LazyElem> out;
      auto                  old = earlier.elements();
      for (auto const& x : strictly_below(later, a)) {
        bool known = false;
        for (auto const& y : old) {
          if (equivalent(later, x, y)) {
            known = true;
            break;
          }
        }
        if (!known) {
          out.push_back(x);
        }
      }
      return out;
    }

    inline std::vector<LazyElem> longest_chain(LazyMonoid const& l, std::vector<LazyElem> const& cls) {
      std::vector<std::size_t> idx(cls.size());
      for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
      }
      // topological order: fewer elements below first
      std::vector<std::size_t> rank(cls.size(), 0);
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = 0; j < cls.size(); ++j) {
          if (i != j && l.leq(cls[j], cls[i])) {
            ++rank[i];
          }
        }
      }
      std::stable_sort(idx.begin(), idx.end(), [&rank](auto x, auto y) { return rank[x] < rank[y]; });
      std::vector<std::size_t> best(cls.size(), 1), prev(cls.size(), SIZE_MAX);
      for (std::size_t p = 0; p < idx.size(); ++p) {
        for (std::size_t q = 0; q < p; ++q) {
          if (l.leq(cls[idx[q]], cls[idx[p]]) && best[q] + 1 > best[p]) {
            best[p] = best[q] + 1;
            prev[p] = q;
          }
        }
      }
      if (cls.empty()) {
        return {};
      }
      auto end = static_cast<std::size_t>(std::max_element(best.begin(), best.end()) - best.begin());
      std::vector<LazyElem> chain;
      for (auto p = end; p != SIZE_MAX; p = prev[p]) {
        chain.push_back(cls[idx[p]]);
      }
      std::reverse(chain.begin(), chain.end());
      return chain;
    }

    inline json names(LazyMonoid const& l, std::vector<LazyElem> const& xs) {
      json out = json::array();
      for (auto const& x : xs) {
        out.push_back(l.show(x));
      }
      return out;
    }

    // First incomparable pair among elements below a (or among all when a
    // is the identity).
    inline std::optional<std::pair<LazyElem, LazyElem>> incomparable_below(LazyMonoid const& l, LazyElem const& a) {
      std::vector<LazyElem> below;
      for (auto const& x : l.elements()) {
        if (l.leq(x, a)) {
          below.push_back(x);
        }
      }
      for (std::size_t i = 0; i < below.size(); ++i) {
        for (std::size_t j = i + 1; j < below.size(); ++j) {
          if (!l.leq(below[i], below[j]) && !l.leq(below[j], below[i])) {
            return std::pair{below[i], below[j]};
          }
        }
      }
      return std::nullopt;
    }

    // Evidence of an infinite ascending chain below a: classes that appear
    // when the window grows sit strictly above the ones that appeared at the
    // previous step.
    inline std::optional<json> ascending_evidence(LazyMonoid const& l, LazyElem const& a) {
      if (l.window() < 2) {
        throw WindowTooSmall("the chain probe needs a window of at least 2");
      }
      auto prev = l.with_window(l.window() - 1);
      auto next = l.with_window(l.window() + 1);
      auto now  = fresh_below(*prev, l, a);
      auto then = fresh_below(l, *next, a);
      for (auto const& y : now) {
        for (auto const& z : then) {
          if (next->leq(y, z) && !next->leq(z, y)) {
            return json{{"a", l.show(a)},
                        {"chain", names(l, longest_chain(l, strictly_below(l, a)))},
                        {"step", {l.show(y), next->show(z)}}};
          }
        }
      }
      return std::nullopt;
    }

    inline std::size_t greedy_cover_size(LazyMonoid const& l) {
      auto core = l.core();
      std::vector<std::vector<std::size_t>> sets;
      for (auto const& x : core) {
        std::vector<std::size_t> s;
        for (auto const& r : core) {
          auto p  = l.mul(x, r);
          auto it = std::find(core.begin(), core.end(), p);
          if (it != core.end()) {
            s.push_back(static_cast<std::size_t>(it - core.begin()));
          }
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        sets.push_back(std::move(s));
      }
      std::vector<bool> covered(core.size(), false);
      std::size_t       left = core.size(), used = 0;
      while (left > 0) {
        std::size_t best = 0, gain = 0;
        for (std::size_t i = 0; i < sets.size(); ++i) {
          std::size_t g = 0;
          for (auto k : sets[i]) {
            g += covered[k] ? 0 : 1;
          }
          if (g > gain) {
            gain = g;
            best = i;
          }
        }
        if (gain == 0) {
          break;
        }
        for (auto k : sets[best]) {
          if (!covered[k]) {
            covered[k] = true;
            --left;
          }
        }
        ++used;
      }
      return used;
    }
  }  // namespace lazy_detail

  // ∃z(x = t·z ∧ y = s·z) over the core slice; rows x_i, columns y_j.
  inline std::vector<std::vector<bool>> lazy_order_pattern(LazyMonoid const& l, LazyMonoid::OrderProbe const& p) {
    auto slice = make_slice(l, l.core(), {p.t, p.s});
    auto phi   = grid_formula(0, 1);
    std::vector<std::vector<bool>> out;
    for (auto const& x : p.xs) {
      std::vector<bool> row;
      for (auto const& y : p.ys) {
        row.push_back(fo::eval(slice, phi, {{"x", slice.index(x)}, {"y", slice.index(y)}}));
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  inline ClassifierReport bounded_classify(LazyMonoid const& l, LazyBounds const& b = {}) {
    using namespace lazy_detail;
    auto stats = validate_lazy(l, b.ball_radius);

    ClassifierReport r;
    r.fingerprint     = "lazy-" + l.family() + "-w" + std::to_string(l.window());
    r.config.seed     = b.seed;
    r.config.window   = l.window();
    for (auto const& x : l.elements()) {
      r.elements.push_back(l.show(x));
    }
    json bounds{{"window", l.window()},
                {"ball_radius", b.ball_radius},
                {"checked_pairs", stats.pairs},
                {"checked_triples", stats.triples}};

    auto up_to = [&bounds](bool holds, std::string reason) {
      Section s;
      s.verdict = Verdict::UpToBound;
      s.outcome = holds;
      s.reason  = std::move(reason);
      s.bounds  = bounds;
      return s;
    };

    // growth is read off windows w-1, w, w+1, so w = 1 leaves the chain sections open
    bool const probe_growth = l.window() >= 2;
    auto       too_narrow   = [] {
      Section s;
      s.reason = "window 1 is too narrow to probe ascending chains";
      return s;
    };

    // linear order over the slice, ACC for S
    auto lin   = incomparable_below(l, l.identity());
    auto accs  = probe_growth ? ascending_evidence(l, l.identity()) : std::nullopt;
    {
      auto s = up_to(!lin, lin ? "two principal left ideals are incomparable" : "principal left ideals form a chain on the window");
      if (lin) {
        s.witness = {{"b", l.show(lin->first)}, {"c", l.show(lin->second)}};
      }
      r.sections["thm38"] = s;
      auto t = up_to(!lin && !accs, lin    ? "two principal left ideals are incomparable"
                                    : accs ? "an ascending chain grows with the window"
                                           : "linear on the window and no ascending growth");
      if (lin) {
        t.witness = s.witness;
      } else if (accs) {
        t.witness = *accs;
      }
      r.sections["thm39"] = (lin || probe_growth) ? t : too_narrow();
    }

    // regular linear order over the core, ACC in S·a
    std::optional<std::pair<LazyElem, std::pair<LazyElem, LazyElem>>> rlo;
    std::optional<json>                                                acc;
    for (auto const& a : l.core()) {
      if (!rlo) {
        if (auto f = incomparable_below(l, a)) {
          rlo = std::pair{a, *f};
        }
      }
      if (!acc && probe_growth) {
        acc = ascending_evidence(l, a);
      }
    }
    auto wider = l.with_window(l.window() + 1);
    json hyp{{"greedy_cover_size", greedy_cover_size(l)},
             {"greedy_cover_size_next_window", greedy_cover_size(*wider)}};
    {
      auto s = up_to(!rlo, rlo ? "two principal left ideals below S·a (a in R) are incomparable"
                               : "regularly linearly ordered on the window");
      s.certificate = {{"hypothesis_cover", hyp}};
      if (rlo) {
        s.witness = {{"a", l.show(rlo->first)},
                     {"b", l.show(rlo->second.first)},
                     {"c", l.show(rlo->second.second)}};
      }
      if (auto p = l.order_probe()) {
        auto pat = lazy_order_pattern(l, *p);
        bool ok  = true;
        for (std::size_t i = 0; i < pat.size(); ++i) {
          for (std::size_t j = 0; j < pat[i].size(); ++j) {
            ok = ok && pat[i][j] == (i >= j);
          }
        }
        s.certificate["order_property"] = {{"formula", "E z (x = [t]z & y = [s]z)"},
                                           {"t", l.show(p->t)},
                                           {"s", l.show(p->s)},
                                           {"pattern", pat},
                                           {"lower_triangular", ok}};
      }
      r.sections["thm71"] = s;
      auto t = up_to(!rlo && !acc, rlo   ? "two principal left ideals below S·a (a in R) are incomparable"
                                   : acc ? "an ascending chain below S·a grows with the window"
                                         : "regular linear order and no ascending growth on the window");
      t.certificate = s.certificate;
      if (rlo) {
        t.witness = s.witness;
      } else if (acc) {
        t.witness = *acc;
      }
      if (!rlo && !probe_growth) {
        t = too_narrow();
      }
      r.sections["thm81"] = t;
    }
    for (auto const* k : {"thm41", "thm51", "thm61", "thm62", "thm91"}) {
      Section s;
      s.verdict = Verdict::NotDecidableFinite;
      s.reason  = "not probed on lazy families";
      r.sections[k] = s;
    }
    r.notes.push_back("analog of an infinite example; verdicts hold on the window only");
    for (auto const& n : l.notes()) {
      r.notes.push_back(n);
    }
    return r;
  }

}  // namespace actlab

#endif  // ACTLAB_LAZY_HPP_

#ifndef ACTLAB_FORMULA_HPP_
#define ACTLAB_FORMULA_HPP_

#include <cctype>
#include <concepts>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"

namespace actlab::fo {

  class FormulaError : public Error {
   public:
    using Error::Error;
  };
  class UnboundVariable : public FormulaError {
   public:
    explicit UnboundVariable(std::string const& v)
        : FormulaError("unbound variable " + v), name(v) {}
    std::string name;
  };
  class ArityMismatch : public FormulaError {
   public:
    using FormulaError::FormulaError;
  };
  class ParseError : public FormulaError {
   public:
    ParseError(std::string const& msg, std::size_t col)
        : FormulaError("formula column " + std::to_string(col + 1) + ": " + msg), column(col) {}
    std::size_t column;
  };

  // Anything with points, an operator alphabet and an action.
  template <typename A>
  concept ActLike = requires(A const& a, Elem s, Point x) {
    { a.size() } -> std::convertible_to<std::size_t>;
    { a.alphabet_size() } -> std::convertible_to<std::size_t>;
    { a.act(s, x) } -> std::convertible_to<Point>;
  };

  // [s]x, [s]#c, x or #c
  struct Term {
    std::optional<Elem> by;
    bool                is_const = false;
    std::string         var;
    Point               constant = 0;

    static Term variable(std::string v, std::optional<Elem> s = std::nullopt) {
      return Term{s, false, std::move(v), 0};
    }
    static Term point(Point c, std::optional<Elem> s = std::nullopt) {
      return Term{s, true, {}, c};
    }
  };

  enum class Kind { Eq, Not, And, Or, Implies, Exists, ForAll, ExistsExactly, ExistsAtLeast };

  class Formula {
   public:
    struct Node {
      Kind                 kind;
      Term                 lhs, rhs;
      std::vector<Formula> kids;
      std::string          var;
      std::size_t          count = 0;
    };

    static Formula eq(Term l, Term r) {
      return Formula(Node{Kind::Eq, std::move(l), std::move(r), {}, {}, 0});
    }
    static Formula negation(Formula f) { return unary(Kind::Not, std::move(f)); }
    static Formula conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
    static Formula disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
    static Formula implies(Formula a, Formula b) {
      return binary(Kind::Implies, std::move(a), std::move(b));
    }
    static Formula exists(std::string v, Formula f) { return quant(Kind::Exists, std::move(v), 0, std::move(f)); }
    static Formula forall(std::string v, Formula f) { return quant(Kind::ForAll, std::move(v), 0, std::move(f)); }
    static Formula exists_exactly(std::size_t n, std::string v, Formula f) {
      return quant(Kind::ExistsExactly, std::move(v), n, std::move(f));
    }
    static Formula exists_at_least(std::size_t n, std::string v, Formula f) {
      return quant(Kind::ExistsAtLeast, std::move(v), n, std::move(f));
    }

    Node const& node() const { return *node_; }

    std::set<std::string> free_variables() const {
      std::set<std::string> out;
      collect_free(*this, {}, out);
      return out;
    }

    std::string to_string() const {
      auto const& n = *node_;
      auto term = [](Term const& t) {
        std::string out = t.by ? "[" + std::to_string(*t.by) + "]" : "";
        return out + (t.is_const ? "#" + std::to_string(t.constant) : t.var);
      };
      switch (n.kind) {
        case Kind::Eq:
          return term(n.lhs) + " = " + term(n.rhs);
        case Kind::Not:
          return "~(" + n.kids[0].to_string() + ")";
        case Kind::And:
          return "(" + n.kids[0].to_string() + " & " + n.kids[1].to_string() + ")";
        case Kind::Or:
          return "(" + n.kids[0].to_string() + " | " + n.kids[1].to_string() + ")";
        case Kind::Implies:
          return "(" + n.kids[0].to_string() + " -> " + n.kids[1].to_string() + ")";
        case Kind::Exists:
          return "E " + n.var + " (" + n.kids[0].to_string() + ")";
        case Kind::ForAll:
          return "A " + n.var + " (" + n.kids[0].to_string() + ")";
        case Kind::ExistsExactly:
          return "E{=" + std::to_string(n.count) + "} " + n.var + " (" + n.kids[0].to_string() + ")";
        case Kind::ExistsAtLeast:
          return "E{>=" + std::to_string(n.count) + "} " + n.var + " (" + n.kids[0].to_string()
                 + ")";
      }
      return "?";
    }

   private:
    explicit Formula(Node n) : node_(std::make_shared<Node const>(std::move(n))) {}

    static Formula unary(Kind k, Formula f) {
      return Formula(Node{k, {}, {}, {std::move(f)}, {}, 0});
    }
    static Formula binary(Kind k, Formula a, Formula b) {
      return Formula(Node{k, {}, {}, {std::move(a), std::move(b)}, {}, 0});
    }
    static Formula quant(Kind k, std::string v, std::size_t n, Formula f) {
      return Formula(Node{k, {}, {}, {std::move(f)}, std::move(v), n});
    }

    static void collect_free(Formula const& f, std::set<std::string> bound, std::set<std::string>& out) {
      auto const& n = f.node();
      if (n.kind == Kind::Eq) {
        for (auto const* t : {&n.lhs, &n.rhs}) {
          if (!t->is_const && !bound.count(t->var)) {
            out.insert(t->var);
          }
        }
        return;
      }
      if (!n.var.empty()) {
        bound.insert(n.var);
      }
      for (auto const& k : n.kids) {
        collect_free(k, bound, out);
      }
    }

    std::shared_ptr<Node const> node_;
  };

  using Valuation = std::map<std::string, Point>;

  namespace detail {
    class Parser {
     public:
      explicit Parser(std::string_view src) : src_(src) {}

      Formula parse() {
        auto f = implication();
        skip();
        if (pos_ != src_.size()) {
          fail("unexpected trailing input");
        }
        return f;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) { throw ParseError(msg, pos_); }

      void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
          ++pos_;
        }
      }
      bool eat(std::string_view tok) {
        skip();
        if (src_.substr(pos_, tok.size()) == tok) {
          pos_ += tok.size();
          return true;
        }
        return false;
      }
      void expect(std::string_view tok) {
        if (!eat(tok)) {
          fail("expected '" + std::string(tok) + "'");
        }
      }
      std::size_t number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          ++pos_;
        }
        if (start == pos_) {
          fail("expected a number");
        }
        return std::stoul(std::string(src_.substr(start, pos_ - start)));
      }
      std::string identifier() {
        skip();
        std::size_t start = pos_;
        if (pos_ < src_.size() && std::islower(static_cast<unsigned char>(src_[pos_]))) {
          ++pos_;
          while (pos_ < src_.size()
                 && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
          }
        }
        if (start == pos_) {
          fail("expected a variable");
        }
        return std::string(src_.substr(start, pos_ - start));
      }

      Formula implication() {
        auto lhs = disjunction();
        if (eat("->")) {
          return Formula::implies(lhs, implication());
        }
        return lhs;
      }
      Formula disjunction() {
        auto f = conjunction();
        while (eat("|")) {
          f = Formula::disj(f, conjunction());
        }
        return f;
      }
      Formula conjunction() {
        auto f = unary();
        while (eat("&")) {
          f = Formula::conj(f, unary());
        }
        return f;
      }
      Formula unary() {
        skip();
        if (eat("~") || eat("!")) {
          return Formula::negation(unary());
        }
        if (pos_ < src_.size() && (src_[pos_] == 'E' || src_[pos_] == 'A')) {
          return quantifier();
        }
        if (eat("(")) {
          auto f = implication();
          expect(")");
          return f;
        }
        return atom();
      }
      Formula quantifier() {
        char q = src_[pos_++];
        if (q == 'A') {
          auto v = identifier();
          return Formula::forall(v, implication());
        }
        if (eat("{")) {
          bool at_least = eat(">=");
          if (!at_least) {
            expect("=");
          }
          auto n = number();
          expect("}");
          auto v = identifier();
          auto body = implication();
          return at_least ? Formula::exists_at_least(n, v, body)
                          : Formula::exists_exactly(n, v, body);
        }
        auto v = identifier();
        return Formula::exists(v, implication());
      }
      Term term() {
        std::optional<Elem> by;
        if (eat("[")) {
          by = static_cast<Elem>(number());
          expect("]");
        }
        if (eat("#")) {
          return Term::point(static_cast<Point>(number()), by);
        }
        return Term::variable(identifier(), by);
      }
      Formula atom() {
        auto l = term();
        if (eat("!=")) {
          return Formula::negation(Formula::eq(l, term()));
        }
        expect("=");
        return Formula::eq(l, term());
      }

      std::string_view src_;
      std::size_t      pos_ = 0;
    };

    template <ActLike A>
    class Evaluator {
     public:
      explicit Evaluator(A const& a) : a_(a) {}

      void bind(std::string const& v, Point x) { env_.emplace_back(v, x); }

      bool eval(Formula const& f) {
        auto const& n = f.node();
        switch (n.kind) {
          case Kind::Eq:
            return value(n.lhs) == value(n.rhs);
          case Kind::Not:
            return !eval(n.kids[0]);
          case Kind::And:
            return eval(n.kids[0]) && eval(n.kids[1]);
          case Kind::Or:
            return eval(n.kids[0]) || eval(n.kids[1]);
          case Kind::Implies:
            return !eval(n.kids[0]) || eval(n.kids[1]);
          case Kind::Exists:
            return count(n, 1) >= 1;
          case Kind::ForAll: {
            for (Point x = 0; x < a_.size(); ++x) {
              env_.emplace_back(n.var, x);
              bool ok = eval(n.kids[0]);
              env_.pop_back();
              if (!ok) {
                return false;
              }
            }
            return true;
          }
          case Kind::ExistsExactly:
            return count(n, n.count + 1) == n.count;
          case Kind::ExistsAtLeast:
            return count(n, n.count) >= n.count;
        }
        return false;
      }

      // Witnesses for the bound variable, stopping once `limit` are found.
      std::size_t count(Formula::Node const& n, std::size_t limit) {
        std::size_t c = 0;
        for (Point x = 0; x < a_.size() && c < limit; ++x) {
          env_.emplace_back(n.var, x);
          if (eval(n.kids[0])) {
            ++c;
          }
          env_.pop_back();
        }
        return c;
      }

     private:
      Point value(Term const& t) const {
        Point x = 0;
        if (t.is_const) {
          if (t.constant >= a_.size()) {
            throw ArityMismatch("constant #" + std::to_string(t.constant) + " out of range");
          }
          x = t.constant;
        } else {
          auto it = std::find_if(env_.rbegin(), env_.rend(),
                                 [&t](auto const& p) { return p.first == t.var; });
          if (it == env_.rend()) {
            throw UnboundVariable(t.var);
          }
          x = it->second;
        }
        if (t.by) {
          if (*t.by >= a_.alphabet_size()) {
            throw ArityMismatch("element [" + std::to_string(*t.by) + "] out of range");
          }
          x = a_.act(*t.by, x);
        }
        return x;
      }

      A const&                                  a_;
      std::vector<std::pair<std::string, Point>> env_;
    };
  }  // namespace detail

  inline Formula parse(std::string_view text) {
    return detail::Parser(text).parse();
  }

  template <ActLike A>
  bool eval(A const& a, Formula const& f, Valuation const& val = {}) {
    for (auto const& v : f.free_variables()) {
      if (!val.count(v)) {
        throw UnboundVariable(v);
      }
    }
    detail::Evaluator<A> ev(a);
    for (auto const& [v, x] : val) {
      if (x >= a.size()) {
        throw ArityMismatch("valuation of " + v + " out of range");
      }
      ev.bind(v, x);
    }
    return ev.eval(f);
  }

  // |{x : A ⊨ f(x)}| for the single free variable `var`.
  template <ActLike A>
  std::size_t count_witnesses(A const& a, Formula const& f, std::string const& var) {
    auto fv = f.free_variables();
    if (fv.size() != 1 || *fv.begin() != var) {
      throw ArityMismatch("count_witnesses needs exactly the free variable " + var);
    }
    std::size_t c = 0;
    for (Point x = 0; x < a.size(); ++x) {
      if (eval(a, f, {{var, x}})) {
        ++c;
      }
    }
    return c;
  }

}  // namespace actlab::fo

#endif  // ACTLAB_FORMULA_HPP_

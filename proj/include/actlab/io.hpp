#ifndef ACTLAB_IO_HPP_
#define ACTLAB_IO_HPP_

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "act.hpp"
#include "core.hpp"
#include "monoid.hpp"

namespace actlab {

  class TextParseError : public Error {
   public:
    TextParseError(std::string const& msg, std::size_t line, std::size_t col)
        : TextParseError("", msg, line, col) {}
    TextParseError(std::string const& file, std::string const& msg, std::size_t line, std::size_t col)
        : Error((file.empty() ? "" : file + ":") + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          detail(msg), line(line), col(col) {}
    std::string detail;
    std::size_t line, col;
  };

  namespace io_detail {
    struct Token {
      std::string text;
      std::size_t col;
    };

    struct Line {
      std::size_t        number;
      std::vector<Token> tokens;
    };

    // Non-empty lines split on whitespace; '#' starts a comment.
    inline std::vector<Line> lines_of(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++number;
        auto raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
          raw = raw.substr(0, hash);
        }
        Line        ln{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
          while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
            ++i;
          }
          std::size_t start = i;
          while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) {
            ++i;
          }
          if (i > start) {
            ln.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
          }
        }
        if (!ln.tokens.empty()) {
          out.push_back(std::move(ln));
        }
        if (end == text.size()) {
          break;
        }
        pos = end + 1;
      }
      return out;
    }

    inline std::uint32_t number(Token const& t, std::size_t line, std::uint64_t bound) {
      std::uint64_t v   = 0;
      auto [ptr, ec]    = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw TextParseError("expected a non-negative integer, got '" + t.text + "'", line, t.col);
      }
      if (v >= bound) {
        throw TextParseError("index " + t.text + " out of range (< " + std::to_string(bound) + ")", line, t.col);
      }
      return static_cast<std::uint32_t>(v);
    }

    inline std::size_t last_line(std::string_view text) {
      return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
    }

    inline std::string read_file(std::filesystem::path const& p) {
      std::ifstream in(p, std::ios::binary);
      if (!in) {
        throw Error("cannot open " + p.string());
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    // "label <idx> <name...>" / "name <idx> <name...>" trailers
    inline void read_name(Line const& ln, std::vector<std::string>& names, std::size_t bound) {
      if (ln.tokens.size() < 3) {
        throw TextParseError("expected '" + ln.tokens[0].text + " <index> <text>'", ln.number, ln.tokens[0].col);
      }
      auto        idx = number(ln.tokens[1], ln.number, bound);
      std::string name;
      for (std::size_t k = 2; k < ln.tokens.size(); ++k) {
        name += (k > 2 ? " " : "") + ln.tokens[k].text;
      }
      names[idx] = name;
    }
  }  // namespace io_detail

  struct MonoidFile {
    FiniteMonoid             monoid;
    std::vector<std::string> names;
  };

  inline MonoidFile parse_monoid(std::string_view text) {
    using namespace io_detail;
    auto lines = lines_of(text);
    if (lines.empty()) {
      throw TextParseError("empty monoid file", 1, 1);
    }
    auto const& head = lines[0];
    if (head.tokens.size() != 1) {
      throw TextParseError("first line must hold only the order", head.number, head.tokens[1].col);
    }
    auto n = number(head.tokens[0], head.number, 1u << 16);
    if (n == 0) {
      throw TextParseError("order must be positive", head.number, head.tokens[0].col);
    }
    if (lines.size() < n + 1) {
      throw TextParseError("expected " + std::to_string(n) + " table rows", last_line(text), 1);
    }
    std::vector<Elem> table;
    table.reserve(std::size_t(n) * n);
    for (std::size_t r = 1; r <= n; ++r) {
      auto const& ln = lines[r];
      if (ln.tokens.size() != n) {
        auto col = ln.tokens.size() > n ? ln.tokens[n].col : ln.tokens.back().col + ln.tokens.back().text.size();
        throw TextParseError("row " + std::to_string(r - 1) + " needs " + std::to_string(n) + " entries, has "
                                 + std::to_string(ln.tokens.size()),
                             ln.number, col);
      }
      for (auto const& t : ln.tokens) {
        table.push_back(number(t, ln.number, n));
      }
    }
    std::optional<Elem>      identity;
    std::vector<std::string> names(n);
    for (std::size_t k = n + 1; k < lines.size(); ++k) {
      auto const& ln = lines[k];
      auto const& t0 = ln.tokens[0].text;
      if (t0.rfind("identity=", 0) == 0 && ln.tokens.size() == 1) {
        Token v{t0.substr(9), ln.tokens[0].col + 9};
        identity = number(v, ln.number, n);
      } else if (t0 == "name") {
        read_name(ln, names, n);
      } else {
        throw TextParseError("unexpected trailer '" + t0 + "'", ln.number, ln.tokens[0].col);
      }
    }
    for (Elem x = 0; x < n; ++x) {
      if (names[x].empty()) {
        names[x] = std::to_string(x);
      }
    }
    try {
      return MonoidFile{FiniteMonoid::make(n, std::move(table), identity), std::move(names)};
    } catch (NonAssociative const& e) {
      throw TextParseError(e.what(), head.number, 1);
    } catch (NoIdentity const& e) {
      throw TextParseError(e.what(), head.number, 1);
    }
  }

  inline MonoidFile read_monoid(std::filesystem::path const& p) {
    try {
      return parse_monoid(io_detail::read_file(p));
    } catch (TextParseError const& e) {
      throw TextParseError(p.filename().string(), e.detail, e.line, e.col);
    }
  }

  inline std::string write_monoid(FiniteMonoid const& m, std::vector<std::string> const& names = {}) {
    std::ostringstream out;
    out << m.order() << "\n";
    for (Elem s = 0; s < m.order(); ++s) {
      for (Elem t = 0; t < m.order(); ++t) {
        out << (t ? " " : "") << m.mul(s, t);
      }
      out << "\n";
    }
    out << "identity=" << m.identity() << "\n";
    for (std::size_t x = 0; x < names.size(); ++x) {
      if (names[x] != std::to_string(x)) {
        out << "name " << x << " " << names[x] << "\n";
      }
    }
    return out.str();
  }

  struct ActFile {
    FiniteAct                act;
    std::filesystem::path    monoid_path;
    std::vector<std::string> monoid_names;
  };

  // The monoid path is resolved against `base`.
  inline ActFile parse_act(std::string_view text, std::filesystem::path const& base = ".") {
    using namespace io_detail;
    auto lines = lines_of(text);
    if (lines.empty()) {
      throw TextParseError("empty act file", 1, 1);
    }
    auto const& head = lines[0];
    if (head.tokens.size() != 2 || head.tokens[0].text != "monoid") {
      throw TextParseError("first line must be 'monoid <file>'", head.number, head.tokens[0].col);
    }
    std::filesystem::path mp = head.tokens[1].text;
    if (mp.is_relative()) {
      mp = base / mp;
    }
    auto mf = read_monoid(mp);
    if (lines.size() < 2) {
      throw TextParseError("missing carrier size", last_line(text), 1);
    }
    auto const& sz = lines[1];
    if (sz.tokens.size() != 1) {
      throw TextParseError("second line must hold only the carrier size", sz.number, sz.tokens.back().col);
    }
    auto pts = number(sz.tokens[0], sz.number, 1u << 20);
    auto n   = mf.monoid.order();
    if (lines.size() < n + 2) {
      throw TextParseError("expected " + std::to_string(n) + " action rows", last_line(text), 1);
    }
    std::vector<Point> table;
    for (std::size_t r = 2; r < n + 2; ++r) {
      auto const& ln = lines[r];
      if (ln.tokens.size() != pts) {
        throw TextParseError("row " + std::to_string(r - 2) + " needs " + std::to_string(pts) + " entries",
                             ln.number, ln.tokens.back().col);
      }
      for (auto const& t : ln.tokens) {
        table.push_back(number(t, ln.number, pts));
      }
    }
    std::vector<std::string> labels(pts);
    for (std::size_t k = n + 2; k < lines.size(); ++k) {
      auto const& ln = lines[k];
      if (ln.tokens[0].text != "label") {
        throw TextParseError("unexpected trailer '" + ln.tokens[0].text + "'", ln.number, ln.tokens[0].col);
      }
      read_name(ln, labels, pts);
    }
    for (Point x = 0; x < pts; ++x) {
      if (labels[x].empty()) {
        labels[x] = std::to_string(x);
      }
    }
    try {
      auto act = FiniteAct::make(share(std::move(mf.monoid)), pts, std::move(table), std::move(labels));
      return ActFile{std::move(act), mp, std::move(mf.names)};
    } catch (IdentityLawViolated const& e) {
      throw TextParseError(e.what(), sz.number, 1);
    } catch (ActionLawViolated const& e) {
      throw TextParseError(e.what(), sz.number, 1);
    }
  }

  inline ActFile read_act(std::filesystem::path const& p) {
    try {
      return parse_act(io_detail::read_file(p), p.parent_path().empty() ? "." : p.parent_path());
    } catch (TextParseError const& e) {
      throw TextParseError(p.filename().string(), e.detail, e.line, e.col);
    }
  }

  inline std::string write_act(FiniteAct const& a, std::string const& monoid_ref) {
    std::ostringstream out;
    out << "monoid " << monoid_ref << "\n" << a.size() << "\n";
    for (Elem s = 0; s < a.alphabet_size(); ++s) {
      for (Point x = 0; x < a.size(); ++x) {
        out << (x ? " " : "") << a.act(s, x);
      }
      out << "\n";
    }
    for (Point x = 0; x < a.size(); ++x) {
      if (a.label(x) != std::to_string(x)) {
        out << "label " << x << " " << a.label(x) << "\n";
      }
    }
    return out.str();
  }

  // Action graph; identity loops are left out.
  inline std::string act_dot(FiniteAct const& a, std::vector<std::string> const& elem_names = {}) {
    auto quote = [](std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    };
    std::ostringstream out;
    out << "digraph act {\n";
    for (Point x = 0; x < a.size(); ++x) {
      out << "  p" << x << " [label=" << quote(a.label(x)) << "];\n";
    }
    Elem one = a.monoid().identity();
    for (Elem s = 0; s < a.alphabet_size(); ++s) {
      if (s == one) {
        continue;
      }
      auto name = s < elem_names.size() ? elem_names[s] : std::to_string(s);
      for (Point x = 0; x < a.size(); ++x) {
        out << "  p" << x << " -> p" << a.act(s, x) << " [label=" << quote(name) << "];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace actlab

#endif  // ACTLAB_IO_HPP_

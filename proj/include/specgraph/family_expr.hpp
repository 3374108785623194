#pragma once

#include <cctype>
#include <memory>
#include <string>

#include "specgraph/canonical.hpp"

namespace specgraph {

/// Parse failure with the byte offset of the offending input.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

/// AST for the concrete family syntax:
///   expr   := term { "+" term }
///   term   := factor { "v" factor }
///   factor := [ int "*" ] atom
///   atom   := base [ "-e" ] | "(" expr ")"
///   base   := "K" int { "," int } | "P" int | "C" int | "E" int
/// "+" is disjoint union, "v" is join (binds tighter), "t*" repeats a
/// disjoint union t times, "-e" deletes one edge of a complete atom.
struct FamilyExpr {
  enum class Kind { Atom, Copies, Union, Join };
  enum class AtomKind { Complete, Path, Cycle, Empty };

  Kind kind;
  // Atom
  AtomKind atom_kind = AtomKind::Complete;
  std::vector<int> parts;  // K: part sizes; P/C/E: single entry
  bool minus_edge = false;
  // Copies
  int copies = 1;
  // children
  std::unique_ptr<FamilyExpr> left, right;
};

namespace detail {

class FamilyParser {
public:
  explicit FamilyParser(const std::string& text) : text_(text) {}

  std::unique_ptr<FamilyExpr> parse() {
    auto e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  int parse_int() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxOrder) fail("size exceeds supported order");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  std::unique_ptr<FamilyExpr> parse_expr() {
    auto e = parse_term();
    while (consume('+')) {
      auto node = std::make_unique<FamilyExpr>();
      node->kind = FamilyExpr::Kind::Union;
      node->left = std::move(e);
      node->right = parse_term();
      e = std::move(node);
    }
    return e;
  }

  std::unique_ptr<FamilyExpr> parse_term() {
    auto e = parse_factor();
    while (consume('v')) {
      auto node = std::make_unique<FamilyExpr>();
      node->kind = FamilyExpr::Kind::Join;
      node->left = std::move(e);
      node->right = parse_factor();
      e = std::move(node);
    }
    return e;
  }

  std::unique_ptr<FamilyExpr> parse_factor() {
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int t = parse_int();
      if (!consume('*')) fail("expected '*' after copy count");
      auto node = std::make_unique<FamilyExpr>();
      node->kind = FamilyExpr::Kind::Copies;
      node->copies = t;
      node->left = parse_atom();
      return node;
    }
    return parse_atom();
  }

  std::unique_ptr<FamilyExpr> parse_atom() {
    skip_ws();
    if (consume('(')) {
      auto e = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    if (pos_ >= text_.size()) fail("expected atom");
    const char c = text_[pos_];
    auto node = std::make_unique<FamilyExpr>();
    node->kind = FamilyExpr::Kind::Atom;
    switch (c) {
      case 'K': node->atom_kind = FamilyExpr::AtomKind::Complete; break;
      case 'P': node->atom_kind = FamilyExpr::AtomKind::Path; break;
      case 'C': node->atom_kind = FamilyExpr::AtomKind::Cycle; break;
      case 'E': node->atom_kind = FamilyExpr::AtomKind::Empty; break;
      default: fail("unknown atom letter");
    }
    ++pos_;
    const std::size_t size_pos = pos_;
    node->parts.push_back(parse_int());
    if (node->parts[0] < 1) {
      pos_ = size_pos;
      fail("atom size must be >= 1");
    }
    if (node->atom_kind == FamilyExpr::AtomKind::Complete) {
      while (consume(',')) {
        const std::size_t part_pos = pos_;
        node->parts.push_back(parse_int());
        if (node->parts.back() < 1) {
          pos_ = part_pos;
          fail("part size must be >= 1");
        }
      }
    }
    // postfix "-e": one deleted edge, complete atoms with one part only
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == 'e') {
      if (node->atom_kind != FamilyExpr::AtomKind::Complete || node->parts.size() != 1 ||
          node->parts[0] < 2)
        fail("'-e' requires a complete atom K n with n >= 2");
      node->minus_edge = true;
      pos_ += 2;
    }
    return node;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::unique_ptr<FamilyExpr> parse_family(const std::string& text) {
  return detail::FamilyParser(text).parse();
}

inline Graph evaluate(const FamilyExpr& e) {
  switch (e.kind) {
    case FamilyExpr::Kind::Atom:
      switch (e.atom_kind) {
        case FamilyExpr::AtomKind::Complete: {
          Graph g = e.parts.size() == 1 ? complete(e.parts[0])
                                        : complete_multipartite(e.parts);
          if (e.minus_edge) g = delete_edge(g, 0, 1);
          return g;
        }
        case FamilyExpr::AtomKind::Path: return path(e.parts[0]);
        case FamilyExpr::AtomKind::Cycle: return cycle(e.parts[0]);
        case FamilyExpr::AtomKind::Empty: return Graph(e.parts[0]);
      }
      break;
    case FamilyExpr::Kind::Copies:
      return union_copies(e.copies, evaluate(*e.left));
    case FamilyExpr::Kind::Union:
      return disjoint_union(evaluate(*e.left), evaluate(*e.right));
    case FamilyExpr::Kind::Join:
      return join(evaluate(*e.left), evaluate(*e.right));
  }
  throw std::logic_error("evaluate: bad node");
}

inline Graph parse_family_graph(const std::string& text) {
  return evaluate(*parse_family(text));
}

inline std::string to_string(const FamilyExpr& e) {
  switch (e.kind) {
    case FamilyExpr::Kind::Atom: {
      std::string s;
      switch (e.atom_kind) {
        case FamilyExpr::AtomKind::Complete: s = "K"; break;
        case FamilyExpr::AtomKind::Path: s = "P"; break;
        case FamilyExpr::AtomKind::Cycle: s = "C"; break;
        case FamilyExpr::AtomKind::Empty: s = "E"; break;
      }
      for (std::size_t i = 0; i < e.parts.size(); ++i)
        s += (i ? "," : "") + std::to_string(e.parts[i]);
      if (e.minus_edge) s += "-e";
      return s;
    }
    case FamilyExpr::Kind::Copies:
      return std::to_string(e.copies) + "*" + to_string(*e.left);
    case FamilyExpr::Kind::Union:
      return to_string(*e.left) + "+" + to_string(*e.right);
    case FamilyExpr::Kind::Join: {
      auto wrap = [](const FamilyExpr& c) {
        const std::string s = to_string(c);
        return c.kind == FamilyExpr::Kind::Union ? "(" + s + ")" : s;
      };
      return wrap(*e.left) + "v" + wrap(*e.right);
    }
  }
  throw std::logic_error("to_string: bad node");
}

// ---------------------------------------------------------------------------
// Best-effort family recognition, used to label cs minimizers.

namespace detail {

/// Label a connected graph if it matches a known family, else empty.
inline std::string describe_connected(const Graph& g) {
  const int n = g.order();
  if (n == 1) return "K1";
  if (is_complete_graph(g)) return "K" + std::to_string(n);
  // paths and cycles before their multipartite aliases (P3 = K1,2, C4 = K2,2)
  int deg1 = 0, deg2 = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 1) ++deg1;
    if (g.degree(v) == 2) ++deg2;
  }
  if (deg1 == 2 && deg2 == n - 2) return "P" + std::to_string(n);
  if (deg2 == n && n >= 3) return "C" + std::to_string(n);
  if (auto shape = is_complete_multipartite_plus_isolated(g); shape && shape->isolated == 0) {
    const auto& p = shape->parts;
    // K_{1,...,1,2} is K_k minus one edge
    if (p.size() >= 2 && p.back() == 2 && p[p.size() - 2] == 1)
      return "K" + std::to_string(n) + "-e";
    std::string s = "K";
    for (std::size_t i = 0; i < p.size(); ++i)
      s += (i ? "," : "") + std::to_string(p[i]);
    return s;
  }
  return {};
}

}  // namespace detail

/// Human-readable family description of g in the expression syntax, or empty
/// when no component matches a known family. Round-trips through
/// parse_family_graph up to isomorphism.
inline std::string describe_graph(const Graph& g) {
  if (g.order() == 0) return {};
  std::vector<std::pair<int, std::string>> labels;  // (component order, label)
  for (const auto& comp : connected_components(g)) {
    std::string label = detail::describe_connected(g.induced(comp));
    if (label.empty()) return {};
    labels.emplace_back(static_cast<int>(comp.size()), std::move(label));
  }
  // larger components first, isolated vertices last
  std::sort(labels.begin(), labels.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::string out;
  for (std::size_t i = 0; i < labels.size();) {
    std::size_t j = i;
    while (j < labels.size() && labels[j] == labels[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i) + "*";
    out += labels[i].second;
    i = j;
  }
  return out;
}

}  // namespace specgraph

#include "gsg/repl.hpp"

#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <variant>

#include "gsg/canonical.hpp"
#include "gsg/order.hpp"
#include "gsg/pickends.hpp"
#include "gsg/stops.hpp"
#include "text_parser.hpp"

namespace gsg {

void Session::bind(std::string name, Game value) {
  for (auto& [n, v] : items_) {
    if (n == name) {
      v = value;
      return;
    }
  }
  items_.emplace_back(std::move(name), value);
}

const Game* Session::find(std::string_view name) const {
  for (const auto& [n, v] : items_) {
    if (n == name) return &v;
  }
  return nullptr;
}

namespace {

using detail_text::Cursor;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string parse_ident(Cursor& cur) {
  cur.skip_ws();
  if (cur.pos >= cur.text.size() || !ident_start(cur.text[cur.pos])) cur.fail("expected a name");
  std::size_t start = cur.pos;
  while (cur.pos < cur.text.size() && ident_char(cur.text[cur.pos])) ++cur.pos;
  return std::string(cur.text.substr(start, cur.pos - start));
}

bool reserved_word(std::string_view name) {
  return name == "hat" || name == "conj" || name == "canon" || name == "pickends";
}

struct Expr {
  using Ptr = std::unique_ptr<Expr>;
  struct Literal {
    Game value;
  };
  struct NameRef {
    std::string name;
  };
  struct SumNode {
    Ptr lhs, rhs;
  };
  struct ConjNode {
    Ptr inner;
  };
  struct CanonNode {
    Ptr inner;
  };
  struct HatNode {
    int count;
  };
  struct PickEndsNode {
    std::vector<Score> pieces;
  };
  std::variant<Literal, NameRef, SumNode, ConjNode, CanonNode, HatNode, PickEndsNode> node;
};

Expr::Ptr parse_expr(Engine& engine, Cursor& cur);

Expr::Ptr parse_term(Engine& engine, Cursor& cur) {
  char c = cur.peek();
  auto wrap = [](auto&& n) { return std::make_unique<Expr>(Expr{std::forward<decltype(n)>(n)}); };
  if (c == '<' || detail_text::starts_score(c)) {
    return wrap(Expr::Literal{detail_text::parse_game_value(engine, cur)});
  }
  if (c == '(') {
    ++cur.pos;
    auto e = parse_expr(engine, cur);
    cur.expect(')', "')'");
    return e;
  }
  std::string name = parse_ident(cur);
  if (name == "hat") {
    cur.expect('(', "'('");
    long long n = detail_text::parse_integer(cur);
    cur.expect(')', "')'");
    // stop evaluation recurses along the chain; keep it stack-friendly
    if (n > 4096) cur.fail("waiting-move index too large (max 4096)");
    return wrap(Expr::HatNode{static_cast<int>(n)});
  }
  if (name == "conj" || name == "canon") {
    cur.expect('(', "'('");
    auto inner = parse_expr(engine, cur);
    cur.expect(')', "')'");
    if (name == "conj") return wrap(Expr::ConjNode{std::move(inner)});
    return wrap(Expr::CanonNode{std::move(inner)});
  }
  if (name == "pickends") {
    cur.expect('[', "'['");
    std::vector<Score> pieces;
    if (cur.peek() != ']') {
      pieces.push_back(detail_text::parse_score(cur));
      while (cur.eat(',')) pieces.push_back(detail_text::parse_score(cur));
    }
    cur.expect(']', "']'");
    return wrap(Expr::PickEndsNode{std::move(pieces)});
  }
  return wrap(Expr::NameRef{std::move(name)});
}

Expr::Ptr parse_expr(Engine& engine, Cursor& cur) {
  auto lhs = parse_term(engine, cur);
  while (cur.eat('+')) {
    auto rhs = parse_term(engine, cur);
    lhs = std::make_unique<Expr>(Expr{Expr::SumNode{std::move(lhs), std::move(rhs)}});
  }
  return lhs;
}

Game eval(Engine& engine, const Session& session, const Expr& e) {
  return std::visit(
      [&](const auto& n) -> Game {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Literal>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Expr::NameRef>) {
          const Game* g = session.find(n.name);
          if (g == nullptr) throw std::invalid_argument("unbound name '" + n.name + "'");
          return *g;
        } else if constexpr (std::is_same_v<T, Expr::SumNode>) {
          return engine.sum(eval(engine, session, *n.lhs), eval(engine, session, *n.rhs));
        } else if constexpr (std::is_same_v<T, Expr::ConjNode>) {
          return engine.conjugate(eval(engine, session, *n.inner));
        } else if constexpr (std::is_same_v<T, Expr::CanonNode>) {
          return canonical_form(eval(engine, session, *n.inner));
        } else if constexpr (std::is_same_v<T, Expr::HatNode>) {
          return engine.hat(n.count);
        } else {
          return pickends::to_game(engine, pickends::Position{n.pieces, Score(0)});
        }
      },
      e.node);
}

Game eval_full(Engine& engine, const Session& session, Cursor& cur) {
  auto e = parse_expr(engine, cur);
  if (!cur.done()) cur.fail("unexpected trailing input");
  return eval(engine, session, *e);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Game evaluate_expression(Engine& engine, const Session& session, std::string_view text) {
  Cursor cur{text};
  return eval_full(engine, session, cur);
}

void save_session(const Session& session, std::ostream& out) {
  for (const auto& [name, value] : session.bindings()) {
    out << name << " = " << format_game(value, FormatStyle::Literal) << "\n";
  }
}

std::size_t load_session(Engine& engine, Session& session, std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    try {
      Cursor cur{t};
      std::string name = parse_ident(cur);
      cur.expect('=', "'='");
      Game g = detail_text::parse_game_value(engine, cur);
      if (!cur.done()) cur.fail("unexpected trailing input");
      session.bind(std::move(name), g);
      ++count;
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return count;
}

CommandResult run_command(Engine& engine, Session& session, std::string_view line, FormatStyle style) {
  std::string text = trim(line);
  if (text.empty() || text[0] == '#') return {};

  try {
    Cursor cur{text};
    std::string verb = parse_ident(cur);

    if (verb == "quit") {
      if (!cur.done()) cur.fail("unexpected trailing input");
      return {"", true, true};
    }
    if (verb == "let") {
      std::string name = parse_ident(cur);
      if (reserved_word(name)) cur.fail("'" + name + "' is reserved");
      cur.expect('=', "'='");
      Game value = eval_full(engine, session, cur);
      session.bind(std::move(name), value);
      return {};
    }
    if (verb == "show") {
      Game g = eval_full(engine, session, cur);
      return {format_game(g, style)};
    }
    if (verb == "canon") {
      Game g = eval_full(engine, session, cur);
      return {format_game(canonical_form(g), style)};
    }
    if (verb == "cmp") {
      auto lhs = parse_expr(engine, cur);
      cur.expect(',', "','");
      auto rhs = parse_expr(engine, cur);
      if (!cur.done()) cur.fail("unexpected trailing input");
      Comparison c = compare(eval(engine, session, *lhs), eval(engine, session, *rhs));
      switch (c.order()) {
        case Order::Equivalent: return {"=="};
        case Order::GreaterEq: return {">="};
        case Order::LessEq: return {"<="};
        case Order::Incomparable: return {"||"};
      }
      return {"||"};
    }
    if (verb == "stops") {
      Game g = eval_full(engine, session, cur);
      std::ostringstream out;
      out << "Ls=" << left_stop(g).to_string() << " Rs=" << right_stop(g).to_string()
          << " uLs=" << under_left_stop(g).to_string() << " oLs=" << over_left_stop(g).to_string()
          << " uRs=" << under_right_stop(g).to_string() << " oRs=" << over_right_stop(g).to_string();
      return {out.str()};
    }
    if (verb == "guaranteed") {
      Game g = eval_full(engine, session, cur);
      return {is_guaranteed(g) ? "true" : "false"};
    }
    if (verb == "invertible") {
      Game g = eval_full(engine, session, cur);
      return {invertible(g) ? "true" : "false"};
    }
    if (verb == "birthday") {
      Game g = eval_full(engine, session, cur);
      return {std::to_string(birthday(g))};
    }
    if (verb == "save" || verb == "load") {
      std::string path = trim(text.substr(cur.pos));
      if (path.empty()) return {"error: " + verb + " needs a file path", false};
      if (verb == "save") {
        std::ofstream out(path, std::ios::binary);
        if (!out) return {"error: cannot open '" + path + "' for writing", false};
        save_session(session, out);
        return {"saved " + std::to_string(session.bindings().size()) + " bindings to " + path};
      }
      std::ifstream in(path, std::ios::binary);
      if (!in) return {"error: cannot open '" + path + "' for reading", false};
      std::size_t n = load_session(engine, session, in);
      return {"loaded " + std::to_string(n) + " bindings from " + path};
    }
    return {"error: unknown command '" + verb + "'", false};
  } catch (const parse_error& e) {
    return {"error: parse error at " + std::to_string(e.position()) + ": " + e.what(), false};
  } catch (const std::exception& e) {
    return {std::string("error: ") + e.what(), false};
  }
}

}  // namespace gsg

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsg/game.hpp"
#include "gsg/text.hpp"

namespace gsg {

// Named bindings in first-binding order; rebinding a name keeps its slot.
class Session {
public:
  void bind(std::string name, Game value);
  const Game* find(std::string_view name) const;
  const std::vector<std::pair<std::string, Game>>& bindings() const { return items_; }
  void clear() { items_.clear(); }

private:
  std::vector<std::pair<std::string, Game>> items_;
};

// Expression language accepted wherever a command takes an EXPR:
//
//   expr := term ('+' term)*
//   term := game-literal | score | NAME | hat(n) | conj(expr) | canon(expr)
//         | pickends [s1, ..., sk] | '(' expr ')'
//
// Throws parse_error on bad syntax and std::invalid_argument for unbound
// names; engine preconditions (e.g. order operations on non-guaranteed
// values) surface as their usual exceptions.
Game evaluate_expression(Engine& engine, const Session& session, std::string_view text);

struct CommandResult {
  std::string output;  // on failure, the error message
  bool ok = true;
  bool quit = false;
};

// One line of the command language:
//
//   let NAME = EXPR        bind a name
//   show EXPR              print the value
//   canon EXPR             print the canonical form
//   cmp EXPR, EXPR         print ">=", "<=", "==" or "||"
//   stops EXPR             print the stops and all four pass-allowed stops
//   guaranteed EXPR        print true/false
//   invertible EXPR        print true/false
//   birthday EXPR          print the birthday
//   save PATH | load PATH  store/fetch the session ("name = literal" lines)
//   quit                   stop the session
//
// Blank lines and lines starting with '#' produce no output. Errors never
// throw; they come back with ok == false and the message in `output`.
CommandResult run_command(Engine& engine, Session& session, std::string_view line,
                          FormatStyle style = FormatStyle::Literal);

// Session file format: one "name = literal-game" per line, UTF-8, LF.
void save_session(const Session& session, std::ostream& out);

// Merges the stored bindings into `session` and returns how many lines were
// read. Throws parse_error (with the 1-based line number as position) on
// malformed input.
std::size_t load_session(Engine& engine, Session& session, std::istream& in);

}  // namespace gsg

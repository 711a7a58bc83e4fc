#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gsg/game.hpp"
#include "gsg/rational.hpp"

namespace gsg {

// Reported with the byte offset of the offending input position.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// Game value grammar (whitespace between tokens is insignificant):
//
//   game  := score | '<' side '|' side '>'
//   side  := 'E' score | game (',' game)*
//   score := ['-'] integer [('/' positive-integer) | ('.' digits)]
//
// 'E' marks an ended side: "E3" is the atom with score 3. A bare score
// parses as the number game. Decimal scores are converted exactly.
Game parse_game(Engine& engine, std::string_view text);

enum class FormatStyle { Literal, Pretty };

// Literal style emits exactly the grammar above with options in canonical
// order, so parse_game(format_game(g)) returns g. Pretty style additionally
// renders recognized shapes: numbers, waiting moves "^n", and translated
// waiting moves "s+^n" / "s-^n".
std::string format_game(Game g, FormatStyle style = FormatStyle::Literal);

// Full-string score parse, same score syntax as the grammar.
Score parse_score(std::string_view text);

std::string format_score(const Score& s);

}  // namespace gsg

#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

#include "gsg/game.hpp"
#include "gsg/rational.hpp"
#include "gsg/text.hpp"

// Shared recursive-descent machinery for the value grammar; the expression
// evaluator extends the same cursor.
namespace gsg::detail_text {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, pos); }
};

inline long long parse_integer(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) ++cur.pos;
  if (cur.pos == start) cur.fail("expected a number");
  long long value = 0;
  auto res = std::from_chars(cur.text.data() + start, cur.text.data() + cur.pos, value);
  if (res.ec != std::errc()) throw parse_error("number out of range", start);
  return value;
}

// score := ['-'] integer [('/' positive-integer) | ('.' digits)]
inline Score parse_score(Cursor& cur) {
  cur.skip_ws();
  bool negative = cur.eat('-');
  long long whole = parse_integer(cur);
  Score value(whole);
  if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
    ++cur.pos;
    std::size_t at = cur.pos;
    long long den = parse_integer(cur);
    if (den == 0) throw parse_error("zero denominator", at);
    value = Score(whole, den);
  } else if (cur.pos < cur.text.size() && cur.text[cur.pos] == '.') {
    ++cur.pos;
    std::size_t start = cur.pos;
    long long frac = parse_integer(cur);
    Score scale(1);
    for (std::size_t i = start; i < cur.pos; ++i) scale *= Score(10);
    value = Score(whole) + Score(frac) / scale;
  }
  return negative ? -value : value;
}

inline bool starts_score(char c) { return c == '-' || std::isdigit(static_cast<unsigned char>(c)); }

Game parse_game_value(Engine& engine, Cursor& cur);

inline Side parse_side(Engine& engine, Cursor& cur) {
  if (cur.eat('E')) {
    Score s = parse_score(cur);
    if (cur.peek() == ',') cur.fail("an ended side holds a single atom, not options");
    return Side::atom(std::move(s));
  }
  std::vector<Game> games;
  games.push_back(parse_game_value(engine, cur));
  while (cur.eat(',')) games.push_back(parse_game_value(engine, cur));
  return Side::options(std::move(games));
}

// game := score | '<' side '|' side '>'
inline Game parse_game_value(Engine& engine, Cursor& cur) {
  char c = cur.peek();
  if (c == '<') {
    ++cur.pos;
    Side left = parse_side(engine, cur);
    cur.expect('|', "'|'");
    Side right = parse_side(engine, cur);
    cur.expect('>', "'>'");
    return engine.make(left, right);
  }
  if (starts_score(c)) return engine.number(parse_score(cur));
  cur.fail("expected a game value");
}

}  // namespace gsg::detail_text

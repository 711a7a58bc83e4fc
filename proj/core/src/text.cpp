#include "gsg/text.hpp"

#include <optional>
#include <utility>

#include "text_parser.hpp"

namespace gsg {

Game parse_game(Engine& engine, std::string_view text) {
  detail_text::Cursor cur{text};
  Game g = detail_text::parse_game_value(engine, cur);
  if (!cur.done()) cur.fail("unexpected trailing input");
  return g;
}

Score parse_score(std::string_view text) {
  detail_text::Cursor cur{text};
  Score s = detail_text::parse_score(cur);
  if (!cur.done()) cur.fail("unexpected trailing input");
  return s;
}

std::string format_score(const Score& s) { return s.to_string(); }

namespace {

bool is_number(Game g) {
  return g.is_purely_atomic() && g.left_atom() == g.right_atom();
}

// Matches s + hat(k) for k >= 1: a chain of lone Left options ending in the
// number s, with the atom s on the Right at every link.
std::optional<std::pair<Score, int>> match_plus_hat(Game g) {
  if (!g.right_is_atom()) return std::nullopt;
  Score s = g.right_atom();
  int k = 0;
  Game cur = g;
  while (true) {
    if (is_number(cur)) {
      if (cur.left_atom() != s || k == 0) return std::nullopt;
      return std::make_pair(s, k);
    }
    if (!cur.right_is_atom() || cur.right_atom() != s) return std::nullopt;
    if (cur.left_count() != 1) return std::nullopt;
    cur = cur.left_option(0);
    ++k;
  }
}

std::optional<std::pair<Score, int>> match_minus_hat(Game g) {
  if (!g.left_is_atom()) return std::nullopt;
  Score s = g.left_atom();
  int k = 0;
  Game cur = g;
  while (true) {
    if (is_number(cur)) {
      if (cur.right_atom() != s || k == 0) return std::nullopt;
      return std::make_pair(s, k);
    }
    if (!cur.left_is_atom() || cur.left_atom() != s) return std::nullopt;
    if (cur.right_count() != 1) return std::nullopt;
    cur = cur.right_option(0);
    ++k;
  }
}

void format_rec(Game g, FormatStyle style, std::string& out) {
  if (is_number(g)) {
    out += g.left_atom().to_string();
    return;
  }
  if (style == FormatStyle::Pretty) {
    if (auto plus = match_plus_hat(g)) {
      if (!plus->first.is_zero()) out += plus->first.to_string() + "+";
      out += "^" + std::to_string(plus->second);
      return;
    }
    if (auto minus = match_minus_hat(g)) {
      if (!minus->first.is_zero()) out += minus->first.to_string();
      out += "-^" + std::to_string(minus->second);
      return;
    }
  }
  out += '<';
  auto side = [&](bool atom, Score s, const std::vector<Game>& opts) {
    if (atom) {
      out += 'E';
      out += s.to_string();
      return;
    }
    for (std::size_t i = 0; i < opts.size(); ++i) {
      if (i > 0) out += ", ";
      format_rec(opts[i], style, out);
    }
  };
  side(g.left_is_atom(), g.left_is_atom() ? g.left_atom() : Score{}, g.left_options());
  out += '|';
  side(g.right_is_atom(), g.right_is_atom() ? g.right_atom() : Score{}, g.right_options());
  out += '>';
}

}  // namespace

std::string format_game(Game g, FormatStyle style) {
  std::string out;
  format_rec(g, style, out);
  return out;
}

}  // namespace gsg

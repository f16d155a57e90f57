#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/numeric.hpp"

namespace cgt {

// Outcome class under optimal play.
enum class Status { zero, positive, negative, fuzzy };

std::string to_string(Status s);

// Handle to an immutable, hash-consed short game {L | R}. Structurally
// identical games share one stored node, so operator== is node identity.
class Game {
public:
    Game();  // the game 0 = { | }

    std::uint32_t id() const { return id_; }
    std::span<const Game> left_options() const;
    std::span<const Game> right_options() const;

    bool operator==(const Game&) const = default;

private:
    explicit Game(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
    friend class GamePool;
};

// Interns {L | R}; option lists are deduplicated and order-normalized.
Game make_game(std::vector<Game> left, std::vector<Game> right);

Game zero_game();
Game star();  // {0|0}
Game up();    // {0|*}
Game down();  // -up

Game neg(Game g);
Game add(Game g, Game h);
inline Game operator-(Game g) { return neg(g); }
inline Game operator+(Game g, Game h) { return add(g, h); }
inline Game operator-(Game g, Game h) { return add(g, neg(h)); }

// n copies in parallel; negative n plays -G. Returns a canonical form.
Game nmul(const BigInt& n, Game g);

bool le(Game g, Game h);
inline bool ge(Game g, Game h) { return le(h, g); }
inline bool eq(Game g, Game h) { return le(g, h) && le(h, g); }
inline bool lt(Game g, Game h) { return le(g, h) && !le(h, g); }
inline bool gt(Game g, Game h) { return lt(h, g); }
inline bool confused(Game g, Game h) { return !le(g, h) && !le(h, g); }

Status status(Game g);

// Independent oracle: exhaustive alternating play-out on the raw game tree.
// Throws SearchBudgetExceeded past `position_budget` visited (node, mover) pairs.
Status status_bruteforce(Game g, std::size_t position_budget = 1u << 22);

// Unique simplest game equal to g: dominated options deleted, reversible
// options bypassed, to fixpoint. Equal games share one canonical node.
Game canonical(Game g);

bool is_number(Game g);
DyadicRational game_to_number(Game g);  // throws NotANumber
Game number_to_game(const DyadicRational& x);
Game integer_game(const BigInt& n);

DyadicRational left_stop(Game g);
DyadicRational right_stop(Game g);

// Both stops zero: -2^-m <= g <= 2^-m for every m (and hence strongly
// infinitesimal, since g is short).
bool is_infinitesimal(Game g);

// Game DSL:
//   gexpr := gterm (('+'|'-') gterm)*
//   gterm := '-' gterm | gatom
//   gatom := dyadic | '*' | '^' | 'v' | 'mul' '(' integer ',' gexpr ')'
//          | '{' glist '|' glist '}' | '(' gexpr ')'
//   glist := (gexpr (',' gexpr)*)? ; dyadic := integer | integer '/' power-of-two
// Throws ParseError; NonDyadicNumber for fractions whose denominator is not
// a power of two.
Game parse_game(std::string_view text);

// Canonical form in brace notation, abbreviating numbers, *, ^ and v.
std::string format_game(Game g);

}  // namespace cgt

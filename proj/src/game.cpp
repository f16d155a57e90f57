#include "cgt/game.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "cgt/errors.hpp"

namespace cgt {

std::string to_string(Status s) {
    switch (s) {
        case Status::zero: return "Zero";
        case Status::positive: return "Positive";
        case Status::negative: return "Negative";
        case Status::fuzzy: return "Fuzzy";
    }
    return "?";
}

namespace {

using Id = std::uint32_t;
constexpr Id kNone = 0xffffffffu;

inline std::uint64_t pair_key(Id a, Id b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct Node {
    std::vector<Game> left;
    std::vector<Game> right;
};

struct NodeKeyHash {
    std::size_t operator()(const std::pair<std::vector<Id>, std::vector<Id>>& key) const {
        std::size_t h = 0xcbf29ce484222325ull;
        auto mix = [&h](Id v) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        for (Id v : key.first) mix(v);
        mix(kNone);
        for (Id v : key.second) mix(v);
        return h;
    }
};

// Global interning arena plus memo tables. Single-threaded baseline contract;
// every cached value is a deterministic function of its key.
class GamePool {
public:
    static GamePool& instance() {
        static GamePool pool;
        return pool;
    }

    Game intern(std::vector<Game> left, std::vector<Game> right) {
        auto norm = [](std::vector<Game>& v) {
            std::sort(v.begin(), v.end(), [](Game a, Game b) { return a.id() < b.id(); });
            v.erase(std::unique(v.begin(), v.end()), v.end());
        };
        norm(left);
        norm(right);
        std::pair<std::vector<Id>, std::vector<Id>> key;
        key.first.reserve(left.size());
        key.second.reserve(right.size());
        for (Game g : left) key.first.push_back(g.id());
        for (Game g : right) key.second.push_back(g.id());
        auto it = intern_.find(key);
        if (it != intern_.end()) return Game(it->second);
        Id id = static_cast<Id>(nodes_.size());
        nodes_.push_back(Node{std::move(left), std::move(right)});
        intern_.emplace(std::move(key), id);
        return Game(id);
    }

    const Node& node(Id id) const { return nodes_[id]; }

    Game make(Id id) const { return Game(id); }

    std::unordered_map<Id, Id> neg_memo;
    std::unordered_map<std::uint64_t, Id> add_memo;
    std::unordered_map<std::uint64_t, bool> le_memo;
    std::unordered_map<Id, Id> canonical_memo;
    std::unordered_map<Id, bool> number_memo;
    std::unordered_map<Id, DyadicRational> value_memo;
    std::unordered_map<Id, std::pair<DyadicRational, DyadicRational>> stops_memo;

private:
    GamePool() { intern({}, {}); }  // id 0 is the game 0
    std::vector<Node> nodes_;
    std::unordered_map<std::pair<std::vector<Id>, std::vector<Id>>, Id, NodeKeyHash> intern_;
};

inline GamePool& pool() { return GamePool::instance(); }

}  // namespace

Game::Game() : id_(0) { pool(); }

std::span<const Game> Game::left_options() const {
    const auto& n = pool().node(id_);
    return {n.left.data(), n.left.size()};
}

std::span<const Game> Game::right_options() const {
    const auto& n = pool().node(id_);
    return {n.right.data(), n.right.size()};
}

Game make_game(std::vector<Game> left, std::vector<Game> right) {
    return pool().intern(std::move(left), std::move(right));
}

Game zero_game() { return Game(); }

Game star() {
    Game z = zero_game();
    return make_game({z}, {z});
}

Game up() { return make_game({zero_game()}, {star()}); }

Game down() { return neg(up()); }

Game neg(Game g) {
    auto& memo = pool().neg_memo;
    if (auto it = memo.find(g.id()); it != memo.end()) return pool().make(it->second);
    std::vector<Game> left, right;
    for (Game gr : g.right_options()) left.push_back(neg(gr));
    for (Game gl : g.left_options()) right.push_back(neg(gl));
    Game r = make_game(std::move(left), std::move(right));
    memo.emplace(g.id(), r.id());
    memo.emplace(r.id(), g.id());
    return r;
}

Game add(Game g, Game h) {
    if (g.left_options().empty() && g.right_options().empty()) return h;
    if (h.left_options().empty() && h.right_options().empty()) return g;
    // The recursion is symmetric in its arguments, so the memo key is ordered.
    if (h.id() < g.id()) std::swap(g, h);
    auto& memo = pool().add_memo;
    std::uint64_t key = pair_key(g.id(), h.id());
    if (auto it = memo.find(key); it != memo.end()) return pool().make(it->second);
    std::vector<Game> left, right;
    for (Game gl : g.left_options()) left.push_back(add(gl, h));
    for (Game hl : h.left_options()) left.push_back(add(g, hl));
    for (Game gr : g.right_options()) right.push_back(add(gr, h));
    for (Game hr : h.right_options()) right.push_back(add(g, hr));
    Game r = make_game(std::move(left), std::move(right));
    memo.emplace(key, r.id());
    return r;
}

Game nmul(const BigInt& n, Game g) {
    BigInt count = n;
    if (count < 0) {
        count = -count;
        g = neg(g);
    }
    Game acc = zero_game();
    Game base = canonical(g);
    while (count > 0) {
        if ((count & 1) != 0) acc = canonical(add(acc, base));
        count >>= 1;
        if (count > 0) base = canonical(add(base, base));
    }
    return acc;
}

bool le(Game g, Game h) {
    auto& memo = pool().le_memo;
    std::uint64_t key = pair_key(g.id(), h.id());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    // g <= h unless a left option of g reaches h, or a right option of h reaches g.
    bool result = true;
    for (Game gl : g.left_options()) {
        if (le(h, gl)) {
            result = false;
            break;
        }
    }
    if (result) {
        for (Game hr : h.right_options()) {
            if (le(hr, g)) {
                result = false;
                break;
            }
        }
    }
    memo.emplace(key, result);
    return result;
}

Status status(Game g) {
    Game z = zero_game();
    bool ge0 = le(z, g), le0 = le(g, z);
    if (ge0 && le0) return Status::zero;
    if (ge0) return Status::positive;
    if (le0) return Status::negative;
    return Status::fuzzy;
}

namespace {

class BruteForce {
public:
    explicit BruteForce(std::size_t budget) : budget_(budget) {}

    // True when the player to move wins under optimal play.
    bool wins(Game g, bool left_to_move) {
        std::uint64_t key = (static_cast<std::uint64_t>(g.id()) << 1) | (left_to_move ? 1 : 0);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (memo_.size() >= budget_)
            throw SearchBudgetExceeded("status_bruteforce: position budget exceeded");
        bool result = false;
        auto options = left_to_move ? g.left_options() : g.right_options();
        for (Game opt : options) {
            if (!wins(opt, !left_to_move)) {
                result = true;
                break;
            }
        }
        memo_.emplace(key, result);
        return result;
    }

private:
    std::size_t budget_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

Status status_bruteforce(Game g, std::size_t position_budget) {
    BruteForce search(position_budget);
    bool left_first = search.wins(g, true);
    bool right_first = search.wins(g, false);
    if (left_first && right_first) return Status::fuzzy;
    if (left_first) return Status::positive;
    if (right_first) return Status::negative;
    return Status::zero;
}

Game canonical(Game g) {
    auto& memo = pool().canonical_memo;
    if (auto it = memo.find(g.id()); it != memo.end()) return pool().make(it->second);

    std::vector<Game> left, right;
    for (Game gl : g.left_options()) left.push_back(canonical(gl));
    for (Game gr : g.right_options()) right.push_back(canonical(gr));

    // Distinct canonical games are never equal, so x <= y means strict
    // domination once duplicates are interned away.
    auto drop_dominated = [](std::vector<Game>& opts, bool left_side) {
        std::vector<Game> kept;
        for (Game x : opts) {
            bool dominated = false;
            for (Game y : opts) {
                if (x == y) continue;
                bool covered = left_side ? le(x, y) : le(y, x);
                if (covered && !(left_side ? le(y, x) : le(x, y))) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) kept.push_back(x);
        }
        opts = std::move(kept);
    };

    for (;;) {
        Game current = make_game(left, right);
        left.assign(current.left_options().begin(), current.left_options().end());
        right.assign(current.right_options().begin(), current.right_options().end());
        drop_dominated(left, true);
        drop_dominated(right, false);
        current = make_game(left, right);
        left.assign(current.left_options().begin(), current.left_options().end());
        right.assign(current.right_options().begin(), current.right_options().end());

        bool changed = false;
        // Bypass reversible left options: gl with some gl^R <= current.
        std::vector<Game> new_left;
        for (Game gl : left) {
            std::optional<Game> through;
            for (Game glr : gl.right_options()) {
                if (le(glr, current)) {
                    through = glr;
                    break;
                }
            }
            if (through) {
                for (Game repl : through->left_options()) new_left.push_back(repl);
                changed = true;
            } else {
                new_left.push_back(gl);
            }
        }
        std::vector<Game> new_right;
        for (Game gr : right) {
            std::optional<Game> through;
            for (Game grl : gr.left_options()) {
                if (le(current, grl)) {
                    through = grl;
                    break;
                }
            }
            if (through) {
                for (Game repl : through->right_options()) new_right.push_back(repl);
                changed = true;
            } else {
                new_right.push_back(gr);
            }
        }
        left = std::move(new_left);
        right = std::move(new_right);
        if (!changed) break;
    }

    Game result = make_game(std::move(left), std::move(right));
    memo.emplace(g.id(), result.id());
    memo.emplace(result.id(), result.id());
    return result;
}

namespace {

bool is_number_canonical(Game c) {
    auto& memo = pool().number_memo;
    if (auto it = memo.find(c.id()); it != memo.end()) return it->second;
    bool result = true;
    for (Game gl : c.left_options())
        if (!is_number_canonical(gl)) result = false;
    if (result)
        for (Game gr : c.right_options())
            if (!is_number_canonical(gr)) result = false;
    if (result) {
        for (Game gl : c.left_options())
            for (Game gr : c.right_options())
                if (!lt(gl, gr)) result = false;
    }
    memo.emplace(c.id(), result);
    return result;
}

DyadicRational number_value(Game c) {
    auto& memo = pool().value_memo;
    if (auto it = memo.find(c.id()); it != memo.end()) return it->second;
    std::optional<DyadicRational> lo, hi;
    for (Game gl : c.left_options()) {
        DyadicRational v = number_value(gl);
        if (!lo || v > *lo) lo = v;
    }
    for (Game gr : c.right_options()) {
        DyadicRational v = number_value(gr);
        if (!hi || v < *hi) hi = v;
    }
    DyadicRational v = simplest_between(lo, hi);
    memo.emplace(c.id(), v);
    return v;
}

std::pair<DyadicRational, DyadicRational> stops_canonical(Game c) {
    auto& memo = pool().stops_memo;
    if (auto it = memo.find(c.id()); it != memo.end()) return it->second;
    std::pair<DyadicRational, DyadicRational> result;
    if (is_number_canonical(c)) {
        DyadicRational v = number_value(c);
        result = {v, v};
    } else {
        // A canonical game with an empty side is an integer, hence a number,
        // so both sides are nonempty here.
        std::optional<DyadicRational> ls, rs;
        for (Game gl : c.left_options()) {
            DyadicRational v = stops_canonical(gl).second;
            if (!ls || v > *ls) ls = v;
        }
        for (Game gr : c.right_options()) {
            DyadicRational v = stops_canonical(gr).first;
            if (!rs || v < *rs) rs = v;
        }
        if (!ls || !rs) throw std::logic_error("stops: canonical non-number with empty side");
        result = {*ls, *rs};
    }
    memo.emplace(c.id(), result);
    return result;
}

}  // namespace

bool is_number(Game g) { return is_number_canonical(canonical(g)); }

DyadicRational game_to_number(Game g) {
    Game c = canonical(g);
    if (!is_number_canonical(c)) throw NotANumber();
    return number_value(c);
}

Game number_to_game(const DyadicRational& x) {
    if (x.is_integer()) {
        if (x.sign() < 0) return neg(number_to_game(-x));
        Game g = zero_game();
        for (BigInt i = 0; i < x.numerator(); ++i) g = make_game({g}, {});
        return g;
    }
    DyadicRational step(BigInt(1), x.exponent());
    return make_game({number_to_game(x - step)}, {number_to_game(x + step)});
}

Game integer_game(const BigInt& n) { return number_to_game(DyadicRational(n, 0)); }

DyadicRational left_stop(Game g) { return stops_canonical(canonical(g)).first; }

DyadicRational right_stop(Game g) { return stops_canonical(canonical(g)).second; }

bool is_infinitesimal(Game g) {
    auto [ls, rs] = stops_canonical(canonical(g));
    return ls.is_zero() && rs.is_zero();
}

namespace {

class GameParser {
public:
    explicit GameParser(std::string_view text) : text_(text) {}

    Game run() {
        Game g = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return g;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    BigInt integer() {
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", pos_);
        BigInt v(std::string(text_.substr(start, pos_ - start)));
        return negative ? -v : v;
    }

    Game expr() {
        Game g = term();
        for (;;) {
            if (eat('+')) g = add(g, term());
            else if (eat('-')) g = add(g, neg(term()));
            else return g;
        }
    }

    Game term() {
        if (eat('-')) return neg(term());
        return atom();
    }

    Game atom() {
        char c = peek();
        if (c == '*') {
            ++pos_;
            return star();
        }
        if (c == '^') {
            ++pos_;
            return up();
        }
        if (c == 'v') {
            ++pos_;
            return down();
        }
        if (c == 'm') {
            skip_ws();
            if (text_.substr(pos_, 3) != "mul") throw ParseError("expected 'mul'", pos_);
            pos_ += 3;
            expect('(');
            BigInt n = integer();
            expect(',');
            Game g = expr();
            expect(')');
            return nmul(n, g);
        }
        if (c == '{') {
            ++pos_;
            std::vector<Game> left = option_list();
            expect('|');
            std::vector<Game> right = option_list();
            expect('}');
            return make_game(std::move(left), std::move(right));
        }
        if (c == '(') {
            ++pos_;
            Game g = expr();
            expect(')');
            return g;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return dyadic();
        throw ParseError("expected game", pos_);
    }

    std::vector<Game> option_list() {
        std::vector<Game> options;
        if (peek() == '|' || peek() == '}') return options;
        options.push_back(expr());
        while (eat(',')) options.push_back(expr());
        return options;
    }

    Game dyadic() {
        std::size_t at = pos_;
        BigInt num = integer();
        if (!eat('/')) return number_to_game(DyadicRational(num, 0));
        std::size_t den_at = pos_;
        BigInt den = integer();
        if (den <= 0) throw NonDyadicNumber("denominator must be a positive power of two", den_at);
        BigInt d = den;
        unsigned exponent = 0;
        while ((d & 1) == 0) {
            d >>= 1;
            ++exponent;
        }
        if (d != 1)
            throw NonDyadicNumber("number " + num.str() + "/" + den.str() +
                                      " is not a dyadic fraction",
                                  at);
        return number_to_game(DyadicRational(num, exponent));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string format_canonical(Game c) {
    if (is_number_canonical(c)) return number_value(c).str();
    if (c == star()) return "*";
    if (c == up()) return "^";
    if (c == down()) return "v";
    std::string out = "{";
    bool first = true;
    for (Game gl : c.left_options()) {
        if (!first) out += ", ";
        out += format_canonical(gl);
        first = false;
    }
    out += " | ";
    first = true;
    for (Game gr : c.right_options()) {
        if (!first) out += ", ";
        out += format_canonical(gr);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace

Game parse_game(std::string_view text) { return GameParser(text).run(); }

std::string format_game(Game g) { return format_canonical(canonical(g)); }

}  // namespace cgt

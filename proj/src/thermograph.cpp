#include "cgt/thermograph.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

// Piecewise-linear function on [0, inf): linear between breakpoints, then a
// ray of slope `tail_slope` after the last one. Breakpoints start at t = 0.
struct Plf {
    std::vector<ThermoPoint> pts;
    Rational tail_slope;

    Rational slope_after(std::size_t i) const {
        if (i + 1 >= pts.size()) return tail_slope;
        return (pts[i + 1].value - pts[i].value) / (pts[i + 1].t - pts[i].t);
    }

    Rational eval(const Rational& t) const {
        std::size_t i = 0;
        while (i + 1 < pts.size() && pts[i + 1].t <= t) ++i;
        return pts[i].value + slope_after(i) * (t - pts[i].t);
    }

    // Drop interior breakpoints that do not change the slope.
    void simplify() {
        std::vector<ThermoPoint> out;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            while (out.size() >= 2) {
                const auto& a = out[out.size() - 2];
                const auto& b = out.back();
                Rational s1 = (b.value - a.value) / (b.t - a.t);
                Rational s2 = (pts[i].value - b.value) / (pts[i].t - b.t);
                if (s1 == s2) out.pop_back();
                else break;
            }
            out.push_back(pts[i]);
        }
        // The last interior point is redundant when it continues into the tail.
        while (out.size() >= 2) {
            const auto& a = out[out.size() - 2];
            const auto& b = out.back();
            if ((b.value - a.value) / (b.t - a.t) == tail_slope) out.pop_back();
            else break;
        }
        pts = std::move(out);
    }
};

Plf boundary_plf(const std::vector<ThermoPoint>& pts) { return Plf{pts, Rational(0)}; }

// f(t) + k*t for k in {-1, +1}.
Plf add_slope(Plf f, int k) {
    for (auto& p : f.pts) p.value += Rational(k) * p.t;
    f.tail_slope += k;
    return f;
}

Plf combine(const Plf& f, const Plf& g, bool take_max) {
    std::vector<Rational> ts;
    for (const auto& p : f.pts) ts.push_back(p.t);
    for (const auto& p : g.pts) ts.push_back(p.t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    // Insert interior crossings so the winner only changes at breakpoints.
    std::vector<Rational> full;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        full.push_back(ts[i]);
        Rational d0 = f.eval(ts[i]) - g.eval(ts[i]);
        Rational d1, span;
        if (i + 1 < ts.size()) {
            d1 = f.eval(ts[i + 1]) - g.eval(ts[i + 1]);
            span = ts[i + 1] - ts[i];
            if ((d0 > 0 && d1 < 0) || (d0 < 0 && d1 > 0)) {
                Rational cross = ts[i] + span * d0 / (d0 - d1);
                full.push_back(cross);
            }
        } else {
            // Tail rays: one crossing possible after the last breakpoint.
            Rational ds = f.tail_slope - g.tail_slope;
            if (!d0.is_zero() && !ds.is_zero()) {
                Rational delta = -d0 / ds;
                if (delta > 0) full.push_back(ts[i] + delta);
            }
        }
    }

    Plf out;
    for (const auto& t : full) {
        Rational fv = f.eval(t), gv = g.eval(t);
        out.pts.push_back({t, take_max == (fv >= gv) ? fv : gv});
    }
    // Winner past the last breakpoint decides the tail: by value, then slope.
    const Rational& t_end = full.back();
    Rational fv = f.eval(t_end), gv = g.eval(t_end);
    if (fv == gv)
        out.tail_slope = take_max ? std::max(f.tail_slope, g.tail_slope)
                                  : std::min(f.tail_slope, g.tail_slope);
    else
        out.tail_slope = take_max == (fv > gv) ? f.tail_slope : g.tail_slope;
    out.simplify();
    return out;
}

// Smallest t >= 0 with lambda(t) <= rho(t), plus the common value there.
std::pair<Rational, Rational> first_meet(const Plf& lambda, const Plf& rho) {
    std::vector<Rational> ts;
    for (const auto& p : lambda.pts) ts.push_back(p.t);
    for (const auto& p : rho.pts) ts.push_back(p.t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    Rational d_first = lambda.eval(ts.front()) - rho.eval(ts.front());
    if (d_first < 0) throw std::logic_error("thermograph: left scaffold below right at t=0");

    for (std::size_t i = 0; i < ts.size(); ++i) {
        Rational d0 = lambda.eval(ts[i]) - rho.eval(ts[i]);
        if (d0 <= 0) return {ts[i], lambda.eval(ts[i])};
        if (i + 1 < ts.size()) {
            Rational d1 = lambda.eval(ts[i + 1]) - rho.eval(ts[i + 1]);
            if (d1 < 0) {
                Rational cross = ts[i] + (ts[i + 1] - ts[i]) * d0 / (d0 - d1);
                return {cross, lambda.eval(cross)};
            }
        } else {
            // Tails diverge: lambda falls at -1 while rho rises at +1.
            Rational ds = rho.tail_slope - lambda.tail_slope;
            if (ds <= 0) throw std::logic_error("thermograph: scaffolds never meet");
            Rational cross = ts[i] + d0 / ds;
            return {cross, lambda.eval(cross)};
        }
    }
    throw std::logic_error("thermograph: unreachable");
}

std::vector<ThermoPoint> truncate(const Plf& f, const Rational& t_star) {
    std::vector<ThermoPoint> out;
    for (const auto& p : f.pts) {
        if (p.t < t_star) out.push_back(p);
    }
    out.push_back({t_star, f.eval(t_star)});
    return out;
}

Thermograph compute(Game c) {
    if (is_number(c)) {
        Rational x = game_to_number(c).to_rational();
        return Thermograph{{{Rational(0), x}}, {{Rational(0), x}}, x, Rational(0)};
    }
    std::optional<Plf> lambda, rho;
    for (Game gl : c.left_options()) {
        Plf f = add_slope(boundary_plf(thermograph(gl).right), -1);
        lambda = lambda ? combine(*lambda, f, true) : f;
    }
    for (Game gr : c.right_options()) {
        Plf f = add_slope(boundary_plf(thermograph(gr).left), +1);
        rho = rho ? combine(*rho, f, false) : f;
    }
    if (!lambda || !rho)
        throw std::logic_error("thermograph: canonical non-number with empty side");
    auto [t_star, mast] = first_meet(*lambda, *rho);
    return Thermograph{truncate(*lambda, t_star), truncate(*rho, t_star), mast, t_star};
}

}  // namespace

const Thermograph& thermograph(Game g) {
    static std::unordered_map<std::uint32_t, Thermograph> memo;
    Game c = canonical(g);
    if (auto it = memo.find(c.id()); it != memo.end()) return it->second;
    Thermograph tg = compute(c);
    return memo.emplace(c.id(), std::move(tg)).first->second;
}

Rational mean(Game g) { return thermograph(g).mast; }

Rational temperature(Game g) { return thermograph(g).temperature; }

bool mean_bound_check(Game g, unsigned n, const Rational& m) {
    Rational center = Rational(n) * mean(g);
    auto lo = DyadicRational::from_rational(center - m);
    auto hi = DyadicRational::from_rational(center + m);
    if (!lo || !hi)
        throw NonDyadicBound("bound endpoints " + rational_str(center - m) + ", " +
                             rational_str(center + m) + " are not dyadic");
    Game multiple = nmul(BigInt(n), g);
    return le(number_to_game(*lo), multiple) && le(multiple, number_to_game(*hi));
}

}  // namespace cgt

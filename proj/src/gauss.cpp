#include "ramlift/gauss.hpp"

#include <algorithm>

namespace ramlift {

Rat gauss_valuation(const LPoly& F, const Rat& r) {
    std::optional<Rat> best;
    Rat unknown_floor;  // min over zero-to-precision coefficients of bound + j r
    bool have_unknown = false;
    for (const auto& [j, c] : F.terms()) {
        Rat jr = Rat(j) * r;
        auto v = c.valuation_opt();
        if (v) {
            Rat cand = *v + jr;
            if (!best || cand < *best) best = cand;
        } else {
            Rat bound = Rat(c.prec(), c.field()->e()) + jr;
            if (!have_unknown || bound < unknown_floor) unknown_floor = bound;
            have_unknown = true;
        }
    }
    if (!best) {
        if (have_unknown)
            throw precision_error("gauss_valuation: all coefficients zero to precision");
        throw bad_input("gauss_valuation of zero polynomial");
    }
    if (have_unknown && unknown_floor <= *best)
        throw precision_error("gauss_valuation: below-precision coefficient could attain the minimum");
    return *best;
}

FFPoly residue(const LPoly& F, const Rat& r) {
    Rat vr = gauss_valuation(F, r);
    const LFPtr& K = F.terms().begin()->second.field();
    long e = K->e();
    Rat er = Rat(e) * r;
    Rat evr = Rat(e) * vr;
    if (rat_den(er) != 1 || rat_den(evr) != 1)
        throw bad_input("residue: e*r or e*v_r(F) not integral; extend the field");
    long er_l = long(rat_num(er));
    long evr_l = long(rat_num(evr));
    FFPoly out(Var::t);
    const auto& k = K->residue_field();
    for (const auto& [j, c] : F.terms()) {
        if (c.is_zero()) continue;
        // coefficient of t^j in [F]_r is res(c * pi^{e(j r - v_r)})
        long shift = long(j) * er_l - evr_l;
        LocalElement scaled = c.shift_pi(shift);
        auto v = scaled.val_pi();
        if (v && *v == 0) out.add_term(j, scaled.residue_unit());
        else if (v && *v < 0) throw std::logic_error("residue: negative valuation after rescale");
    }
    (void)k;
    return out;
}

std::vector<std::pair<Int, Rat>> lower_hull(std::vector<std::pair<Int, Rat>> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<Int, Rat>> hull;
    for (const auto& pt : pts) {
        if (!hull.empty() && hull.back().first == pt.first) {
            if (pt.second < hull.back().second) hull.back().second = pt.second;
            else continue;
        } else {
            hull.push_back(pt);
        }
        while (hull.size() >= 3) {
            auto& a = hull[hull.size() - 3];
            auto& b = hull[hull.size() - 2];
            auto& c = hull[hull.size() - 1];
            // drop b if above or on segment a..c (keep leftmost-lowest vertices)
            if ((b.second - a.second) * Rat(c.first - a.first) >=
                (c.second - a.second) * Rat(b.first - a.first))
                hull.erase(hull.end() - 2);
            else
                break;
        }
    }
    return hull;
}

NewtonPolygon newton_polygon(const LPoly& F) {
    NewtonPolygon np;
    for (const auto& [j, c] : F.terms()) {
        Int k = -j;  // pole order
        auto v = c.valuation_opt();
        if (v) {
            np.points.emplace_back(k, *v);
        } else {
            // zero to precision: exclude, but make sure it cannot dip below the
            // hull later: callers treat tracked precision as a floor. The check
            // happens here against the final hull.
        }
    }
    std::sort(np.points.begin(), np.points.end());
    np.hull = lower_hull(np.points);
    for (size_t i = 0; i + 1 < np.hull.size(); ++i) {
        const auto& [k1, v1] = np.hull[i];
        const auto& [k2, v2] = np.hull[i + 1];
        np.segments.emplace_back(Rat(v2 - v1) / Rat(k2 - k1), k2 - k1);
    }
    // precision soundness: every dropped coefficient's floor must lie on/above the hull
    for (const auto& [j, c] : F.terms()) {
        if (c.valuation_opt()) continue;
        Rat k(-j);
        Rat floor = Rat(c.prec(), c.field()->e());
        // hull value at k (only matters inside the hull's k-range)
        if (np.hull.empty()) continue;
        if (k < Rat(np.hull.front().first) || k > Rat(np.hull.back().first)) continue;
        for (size_t i = 0; i + 1 < np.hull.size(); ++i) {
            Rat k1(np.hull[i].first), k2(np.hull[i + 1].first);
            if (k < k1 || k > k2) continue;
            Rat hv = np.hull[i].second +
                     (np.hull[i + 1].second - np.hull[i].second) * (k - k1) / (k2 - k1);
            if (floor < hv)
                throw precision_error("newton_polygon: below-precision coefficient on the hull");
        }
    }
    return np;
}

Rat PiecewiseLinear::eval(const Rat& r) const {
    if (breakpoints.empty()) throw bad_input("empty piecewise linear function");
    if (r <= breakpoints.front()) {
        if (breakpoints.size() == 1) return values.front();
        Rat s = (values[1] - values[0]) / (breakpoints[1] - breakpoints[0]);
        return values[0] + s * (r - breakpoints[0]);
    }
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (r <= breakpoints[i + 1]) {
            Rat s = (values[i + 1] - values[i]) / (breakpoints[i + 1] - breakpoints[i]);
            return values[i] + s * (r - breakpoints[i]);
        }
    }
    Rat s = (values[values.size() - 1] - values[values.size() - 2]) /
            (breakpoints[breakpoints.size() - 1] - breakpoints[breakpoints.size() - 2]);
    return values.back() + s * (r - breakpoints.back());
}

std::vector<Rat> PiecewiseLinear::slopes() const {
    std::vector<Rat> s;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
        s.push_back((values[i + 1] - values[i]) / (breakpoints[i + 1] - breakpoints[i]));
    return s;
}

std::vector<Rat> PiecewiseLinear::kinks() const {
    std::vector<Rat> out;
    auto s = slopes();
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] != s[i + 1]) out.push_back(breakpoints[i + 1]);
    return out;
}

bool PiecewiseLinear::convex() const {
    auto s = slopes();
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] > s[i + 1]) return false;
    return true;
}

PiecewiseLinear delta_from_table(const std::vector<std::pair<Int, Rat>>& table, long p,
                                 const Rat& lo, const Rat& hi) {
    if (table.empty()) {
        PiecewiseLinear f;
        f.breakpoints = {lo, hi};
        f.values = {0, 0};
        return f;
    }
    // delta(r) = max_k (p/(p-1) - v_k + k r): upper envelope of affine maps;
    // breakpoints are hull slopes of the (k, v_k) cloud within (lo, hi]
    auto hull = lower_hull(table);
    Rat c0 = Rat(p, p - 1);
    std::vector<Rat> brk{lo};
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        Rat s = Rat(hull[i + 1].second - hull[i].second) / Rat(hull[i + 1].first - hull[i].first);
        if (s > lo && s < hi) brk.push_back(s);
    }
    brk.push_back(hi);
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
    PiecewiseLinear f;
    for (const Rat& r : brk) {
        Rat best;
        bool have = false;
        for (const auto& [k, v] : hull) {
            Rat cand = c0 - v + Rat(k) * r;
            if (!have || cand > best) {
                best = cand;
                have = true;
            }
        }
        f.breakpoints.push_back(r);
        f.values.push_back(best);
    }
    return f;
}

}  // namespace ramlift

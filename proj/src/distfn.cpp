#include "pmseq/distfn.hpp"

#include <algorithm>
#include <sstream>

namespace pmseq {

StepDistFn StepDistFn::from_jumps(std::vector<Jump> jumps, bool distance) {
    StepDistFn f;
    f.distance_ = distance;
    Rat prev_val(0);
    std::optional<ExtReal> prev_loc;
    for (auto& j : jumps) {
        if (j.loc.is_pos_inf()) {
            // A jump at +inf is vacuous: the value at +inf is 1 regardless.
            continue;
        }
        if (prev_loc && !(*prev_loc < j.loc)) {
            throw std::invalid_argument("StepDistFn: jump locations must be strictly increasing");
        }
        prev_loc = j.loc;
        if (j.val < 0 || j.val > 1) {
            throw std::invalid_argument("StepDistFn: values must lie in [0,1]");
        }
        if (j.val < prev_val) {
            throw std::invalid_argument("StepDistFn: values must be nondecreasing");
        }
        if (j.val == prev_val) continue;  // zero-size jump
        prev_val = j.val;
        f.jumps_.push_back(std::move(j));
    }
    if (distance) {
        for (const auto& j : f.jumps_) {
            if (!j.loc.is_finite() || j.loc.value() < 0) {
                throw std::invalid_argument(
                    "StepDistFn: distance distribution functions need support in [0,inf]");
            }
        }
    }
    return f;
}

StepDistFn StepDistFn::unit_step(const ExtReal& q) {
    if (q.is_pos_inf()) {
        return from_jumps({}, false);
    }
    bool dist = q.is_finite() && q.value() >= 0;
    return from_jumps({Jump{q, Rat(1)}}, dist);
}

Rat StepDistFn::eval(const ExtReal& x) const {
    if (x.is_pos_inf()) return Rat(1);
    if (x.is_neg_inf()) return Rat(0);
    // Value of the last jump strictly below x.
    Rat v(0);
    std::size_t lo = 0, hi = jumps_.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (jumps_[mid].loc < x) {
            v = jumps_[mid].val;
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return v;
}

bool StepDistFn::is_distance_shaped() const {
    for (const auto& j : jumps_) {
        if (!j.loc.is_finite() || j.loc.value() < 0) return false;
    }
    return true;
}

bool StepDistFn::operator==(const StepDistFn& o) const {
    if (jumps_.size() != o.jumps_.size()) return false;
    for (std::size_t i = 0; i < jumps_.size(); ++i) {
        if (jumps_[i].loc != o.jumps_[i].loc || jumps_[i].val != o.jumps_[i].val) return false;
    }
    return true;
}

std::string StepDistFn::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < jumps_.size(); ++i) {
        if (i) os << ", ";
        os << "(" << jumps_[i].loc.str() << ", " << rat_str(jumps_[i].val) << ")";
    }
    os << "}";
    return os.str();
}

bool pointwise_leq(const StepDistFn& f, const StepDistFn& g) {
    // g <= f iff the value-after comparison holds at every merged jump
    // location (both functions are constant on the pieces in between, and
    // both are 0 before the first jump and at -inf).
    const auto& a = f.jumps();
    const auto& b = g.jumps();
    std::size_t i = 0, j = 0;
    Rat fv(0), gv(0);
    while (i < a.size() || j < b.size()) {
        if (j >= b.size() || (i < a.size() && a[i].loc < b[j].loc)) {
            fv = a[i].val;
            ++i;
        } else if (i >= a.size() || b[j].loc < a[i].loc) {
            gv = b[j].val;
            ++j;
        } else {
            fv = a[i].val;
            gv = b[j].val;
            ++i;
            ++j;
        }
        if (gv > fv) return false;
    }
    return true;
}

StepDistFn pointwise_max(const StepDistFn& f, const StepDistFn& g) {
    const auto& a = f.jumps();
    const auto& b = g.jumps();
    std::vector<Jump> out;
    std::size_t i = 0, j = 0;
    Rat fv(0), gv(0);
    while (i < a.size() || j < b.size()) {
        ExtReal loc(0);
        if (j >= b.size() || (i < a.size() && a[i].loc < b[j].loc)) {
            loc = a[i].loc;
            fv = a[i].val;
            ++i;
        } else if (i >= a.size() || b[j].loc < a[i].loc) {
            loc = b[j].loc;
            gv = b[j].val;
            ++j;
        } else {
            loc = a[i].loc;
            fv = a[i].val;
            gv = b[j].val;
            ++i;
            ++j;
        }
        out.push_back(Jump{loc, fv > gv ? fv : gv});
    }
    return StepDistFn::from_jumps(std::move(out),
                                  f.distance_flag() && g.distance_flag());
}

namespace {

// One inequality bundle at a fixed x: the four Def-style conditions.
bool conditions_hold_at(const StepDistFn& f, const StepDistFn& g, const Rat& w, const Rat& x) {
    Rat fxm = f.eval(ExtReal(x - w));
    Rat fxp = f.eval(ExtReal(x + w));
    Rat gxm = g.eval(ExtReal(x - w));
    Rat gxp = g.eval(ExtReal(x + w));
    Rat fx = f.eval(ExtReal(x));
    Rat gx = g.eval(ExtReal(x));
    if (fxm - w > gx) return false;
    if (gx > fxp + w) return false;
    if (gxm - w > fx) return false;
    if (fx > gxp + w) return false;
    return true;
}

bool feasible(const StepDistFn& f, const StepDistFn& g, const Rat& w) {
    Rat L = Rat(1) / w;
    // Partition points of the four shifted functions inside (-L, L).
    std::vector<Rat> pts;
    auto add = [&](const ExtReal& loc, int shift) {
        if (!loc.is_finite()) return;
        Rat x = loc.value() + Rat(shift) * w;
        if (x > -L && x < L) pts.push_back(std::move(x));
    };
    for (const auto& j : f.jumps()) {
        add(j.loc, -1);
        add(j.loc, 0);
        add(j.loc, 1);
    }
    for (const auto& j : g.jumps()) {
        add(j.loc, -1);
        add(j.loc, 0);
        add(j.loc, 1);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // Check at every interior partition point and at a midpoint of every
    // piece (pieces are delimited by the partition points and the window
    // endpoints; all functions are constant on each open piece).
    Rat prev = -L;
    for (const auto& p : pts) {
        if (!conditions_hold_at(f, g, w, (prev + p) / 2)) return false;
        if (!conditions_hold_at(f, g, w, p)) return false;
        prev = p;
    }
    if (!conditions_hold_at(f, g, w, (prev + L) / 2)) return false;
    return true;
}

}  // namespace

LevyDistance levy_distance(const StepDistFn& f, const StepDistFn& g, double tol) {
    if (!(tol > 0.0) || tol > kDefaultLevyTol) {
        throw std::invalid_argument("levy_distance: tol must satisfy 0 < tol <= 1e-6");
    }
    if (f == g) return LevyDistance{0.0, 0.0};
    Rat lo(0), hi(1);
    const Rat width_goal = rat_from_double(tol) * 2;
    // w = 1 is always feasible (the +-w slack covers [0,1]-valued functions),
    // so the bracket [lo, hi] always has an infeasible left end and a
    // feasible right end.
    while (hi - lo > width_goal) {
        Rat mid = (lo + hi) / 2;
        if (feasible(f, g, mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return LevyDistance{to_double((lo + hi) / 2), to_double((hi - lo) / 2)};
}

bool near_zero_step(const StepDistFn& h, const Rat& t) {
    if (!h.is_distance_shaped()) {
        throw std::invalid_argument("near_zero_step: not a distance distribution function");
    }
    if (!(t > 0)) throw std::invalid_argument("near_zero_step: t must be positive");
    return h.eval(ExtReal(t)) > Rat(1) - t;
}

Rat exact_levy_to_zero_step(const StepDistFn& h) {
    if (!h.is_distance_shaped()) {
        throw std::invalid_argument("exact_levy_to_zero_step: not a distance distribution function");
    }
    // The set {t > 0 : h(t) > 1 - t} is upward closed; walk the pieces of h
    // over (0, inf) in order and return the left end of the first piece that
    // meets it. The piece after the last jump always does, and the result
    // never exceeds 1 because every piece value is >= 0.
    const auto& js = h.jumps();
    Rat piece_lo(0);
    Rat val = (!js.empty() && js.front().loc.value() == 0) ? js.front().val : Rat(0);
    std::size_t i = (!js.empty() && js.front().loc.value() == 0) ? 1 : 0;
    for (; i <= js.size(); ++i) {
        bool last = (i == js.size());
        Rat need = Rat(1) - val;  // condition: t > 1 - val within the piece
        Rat lo = piece_lo > need ? piece_lo : need;
        if (last) return lo > 1 ? Rat(1) : lo;
        const Rat& piece_hi = js[i].loc.value();
        if (lo < piece_hi) return lo > 1 ? Rat(1) : lo;
        piece_lo = piece_hi;
        val = js[i].val;
    }
    return Rat(1);  // unreachable
}

}  // namespace pmseq

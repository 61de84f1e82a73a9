#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmseq/rat.hpp"

namespace pmseq {

/// One jump of a step function: the function takes value `val` immediately
/// to the right of `loc`.
struct Jump {
    ExtReal loc;
    Rat val;
};

/// A left-continuous nondecreasing step function on [-inf, inf] into [0, 1]
/// with finitely many jumps, value 0 at -inf and 1 at +inf. This is the
/// working representation of distribution functions; the `distance` flag
/// marks membership in the distance distribution functions (support in
/// [0, inf], h(0) = 0).
///
/// Canonical form: jump locations strictly increasing (a location of -inf is
/// allowed, +inf is not), values strictly increasing within (0, 1]. Zero-size
/// jumps are dropped on construction. Evaluation at any finite x returns the
/// value of the last jump strictly below x (left continuity), 0 if there is
/// none; the value at +inf is 1 for every function.
class StepDistFn {
public:
    /// Validates invariants and canonicalizes; throws std::invalid_argument
    /// on nondecreasing-order, range, or distance-shape violations.
    static StepDistFn from_jumps(std::vector<Jump> jumps, bool distance = false);

    /// The unit step at q: 0 on [-inf, q], 1 on (q, inf]. For q = +inf the
    /// function is 0 everywhere except at +inf itself.
    static StepDistFn unit_step(const ExtReal& q);

    /// Left-continuous evaluation.
    Rat eval(const ExtReal& x) const;
    Rat operator()(const ExtReal& x) const { return eval(x); }

    /// Limit value as x -> +inf from below (last jump value; 0 if no jumps).
    Rat sup_finite() const { return jumps_.empty() ? Rat(0) : jumps_.back().val; }

    const std::vector<Jump>& jumps() const { return jumps_; }

    /// The flag carried in the JSON form.
    bool distance_flag() const { return distance_; }

    /// Structural membership in the distance distribution functions:
    /// all jump locations finite and >= 0 (hence h(0) = 0).
    bool is_distance_shaped() const;

    bool operator==(const StepDistFn& o) const;
    bool operator!=(const StepDistFn& o) const { return !(*this == o); }

    std::string str() const;

private:
    StepDistFn() = default;
    std::vector<Jump> jumps_;
    bool distance_ = false;
};

/// Truth of g <= f in the pointwise partial order on distribution functions
/// (g(x) <= f(x) for every x; for step functions this is decided exactly on
/// the merged jump grid).
bool pointwise_leq(const StepDistFn& f, const StepDistFn& g);

/// Pointwise maximum of two step functions (used to build comparable pairs).
StepDistFn pointwise_max(const StepDistFn& f, const StepDistFn& g);

struct LevyDistance {
    double value = 0.0;      ///< midpoint of the final bisection bracket, in [0, 1]
    double tolerance = 0.0;  ///< half-width of that bracket
};

inline constexpr double kDefaultLevyTol = 1e-6;

/// The modified Levy distance between two distribution functions: the
/// infimum of all w in (0, 1] such that
///   f(x-w)-w <= g(x) <= f(x+w)+w   and   g(x-w)-w <= f(x) <= g(x+w)+w
/// for every x in (-1/w, 1/w). Computed by bisection on w; the feasibility
/// predicate is monotone in w and is decided exactly (rational arithmetic)
/// on the finite set of one-sided limits at jump points shifted by +-w plus
/// the window endpoints approached from inside. w = 1 is always feasible.
///
/// tol must satisfy 0 < tol <= 1e-6; std::invalid_argument otherwise.
LevyDistance levy_distance(const StepDistFn& f, const StepDistFn& g,
                           double tol = kDefaultLevyTol);

/// Whether h lies within Levy radius t of the unit step at 0, decided by the
/// exact criterion h(t) > 1 - t. Requires a distance-shaped h and t > 0.
bool near_zero_step(const StepDistFn& h, const Rat& t);

/// Exact Levy distance from a distance-shaped h to the unit step at 0:
/// the infimum of t > 0 with h(t) > 1 - t, computed in closed form as the
/// first feasible crossing over the pieces of h. Always in [0, 1].
Rat exact_levy_to_zero_step(const StepDistFn& h);

}  // namespace pmseq

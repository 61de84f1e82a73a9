#pragma once

#include <cstdint>
#include <string>

#include "pmseq/distfn.hpp"

namespace pmseq {

/// The three continuous t-norms shipped with the library.
enum class TNorm { Min, Product, Lukasiewicz };

Rat tnorm_apply(TNorm t, const Rat& a, const Rat& b);
std::string tnorm_name(TNorm t);                 // "min" | "prod" | "luk"
TNorm tnorm_from_name(const std::string& name);  // throws on unknown name

/// Triangle function induced by a t-norm T:
///   tau(F, G)(x) = sup over u + v = x of T(F(u), G(v)).
/// For step inputs the sup is attained on pairs of jump locations, so the
/// result is an exact step function with jumps among sums of input jumps.
class TriangleFn {
public:
    explicit TriangleFn(TNorm t) : tnorm_(t) {}

    TNorm tnorm() const { return tnorm_; }
    std::string name() const { return tnorm_name(tnorm_); }

    /// Both arguments must be distance-shaped; std::invalid_argument otherwise.
    StepDistFn operator()(const StepDistFn& f, const StepDistFn& g) const;

    bool operator==(const TriangleFn& o) const { return tnorm_ == o.tnorm_; }

private:
    TNorm tnorm_;
};

inline StepDistFn apply_tau(const TriangleFn& tau, const StepDistFn& f, const StepDistFn& g) {
    return tau(f, g);
}

/// Outcome of the algebraic-law check on random samples.
struct LawReport {
    int samples = 0;
    bool commutative = true;
    bool associative = true;
    bool monotone = true;
    bool identity = true;
    std::string counterexample;  // first failure, empty when all laws pass

    bool pass() const { return commutative && associative && monotone && identity; }
};

/// Checks commutativity, associativity, monotonicity (f <= f' implies
/// tau(f,g) <= tau(f',g)) and the unit-step-at-0 identity on `samples`
/// random triples of distance distribution functions. Comparisons are exact.
LawReport verify_triangle_laws(const TriangleFn& tau, int samples, std::uint64_t seed = 1);

}  // namespace pmseq

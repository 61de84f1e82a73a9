#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pmseq/rat.hpp"

namespace pmseq {

using Index = std::uint64_t;

struct IndexInterval {
    Index lo = 1, hi = 0;  // empty when hi < lo
    Index length() const { return hi < lo ? 0 : hi - lo + 1; }
};

/// A window-generating sequence: nondecreasing positive integers with
/// lambda(1) = 1, lambda(n+1) <= lambda(n) + 1, tending to infinity.
/// Built-in families are identity (lambda_n = n), ceil-sqrt and half
/// (floor(n/2) + 1); custom integer tables are validated on construction.
class LambdaSeq {
public:
    enum class Family { Identity, CeilSqrt, Half, Custom };

    static LambdaSeq identity();
    static LambdaSeq ceil_sqrt();
    static LambdaSeq half();
    /// Throws std::invalid_argument naming the violated condition and the
    /// witness index when the table is not admissible.
    static LambdaSeq custom(std::vector<Index> table);
    static LambdaSeq from_name(const std::string& name);  // "identity"|"ceil-sqrt"|"half"

    Index operator()(Index n) const;
    Family family() const { return family_; }
    const std::string& name() const { return name_; }
    const std::vector<Index>& table() const { return table_; }

    /// The window [n - lambda_n + 1, n]; its length is lambda_n.
    IndexInterval window(Index n) const;

private:
    LambdaSeq(Family f, std::string name) : family_(f), name_(std::move(name)) {}
    Family family_;
    std::string name_;
    std::vector<Index> table_;  // Custom only
};

struct LambdaViolation {
    std::string condition;
    Index n = 0;
    std::string detail;
};

/// Checks the admissibility conditions for an arbitrary evaluator up to
/// `horizon` (the tending-to-infinity condition is a finite-horizon
/// surrogate: the sequence must still grow over the top half of the range).
std::optional<LambdaViolation> check_lambda_conditions(
    const std::function<Index(Index)>& lambda, Index horizon);

/// Validates a named family or custom table and returns the sequence, or
/// the first violated condition with a witness index.
struct LambdaValidation {
    std::optional<LambdaSeq> seq;
    std::optional<LambdaViolation> violation;
};
LambdaValidation validate_lambda(const std::function<Index(Index)>& lambda, Index horizon,
                                 const std::string& name = "custom");

/// Symbolic description of a decidable subset of the positive integers.
/// Immutable, shareable; the factory functions simplify trivial algebra
/// (intersections with the empty or full set, double complements, unions of
/// finite sets) so that planted index sets collapse to their core shape.
class SetDescription {
public:
    enum class Kind { Finite, AP, Squares, Interval, Windows, Union, Inter, Compl };

    /// Geometric center family base^j for j >= first_exp, or an explicit list.
    struct Centers {
        std::vector<Index> list;                  // used when base == 0
        Index base = 0, first_exp = 1;
        bool geometric() const { return base != 0; }
    };

    static SetDescription finite(std::vector<Index> members);
    static SetDescription empty_set();
    static SetDescription all();  // complement of the empty set
    static SetDescription ap(Index first, Index step);  // {first + k*step : k >= 0}
    static SetDescription squares();                    // {1, 4, 9, ...}
    static SetDescription interval(Index lo, std::optional<Index> hi);
    static SetDescription windows(LambdaSeq lambda, Centers centers);
    static SetDescription union_of(SetDescription a, SetDescription b);
    static SetDescription inter_of(SetDescription a, SetDescription b);
    static SetDescription compl_of(SetDescription a);

    Kind kind() const;
    bool contains(Index k) const;
    /// Exact number of members in [lo, hi].
    Index count(Index lo, Index hi) const;
    bool is_empty_syntactic() const;
    bool is_all_syntactic() const;

    /// Smallest member in [lo, hi], if any (linear probe bounded by the
    /// range; intended for sparse or periodic sets).
    std::optional<Index> first_member(Index lo, Index hi) const;

    // Accessors for serialization (valid for the matching kind only).
    const std::vector<Index>& finite_members() const;
    Index ap_first() const;
    Index ap_step() const;
    const IndexInterval& interval_bounds() const;  // hi == max Index means unbounded
    bool interval_unbounded() const;
    const LambdaSeq& windows_lambda() const;
    const Centers& windows_centers() const;
    SetDescription left() const;
    SetDescription right() const;
    SetDescription inner() const;

    std::string str() const;

private:
    struct Node;
    explicit SetDescription(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct DensityCheckpoint {
    Index n = 0;
    Index count = 0;
    Index lambda_n = 0;
    double ratio = 0.0;
};

/// Checkpoint indices used for empirical density evidence: powers of two up
/// to the horizon plus the horizon itself.
std::vector<Index> density_checkpoints(Index horizon);

/// Verdict of a density computation. Exact verdicts carry the value;
/// empirical verdicts carry sup/inf estimates over the top decade of the
/// horizon. Null / Positive / Oscillating are the classification verdicts.
struct DensityVerdict {
    enum class Kind { Exact, Empirical, Null, Positive, Oscillating };
    Kind kind = Kind::Empirical;
    std::optional<Rat> exact_value;
    double limsup_estimate = -1.0;
    double liminf_estimate = -1.0;
    std::vector<DensityCheckpoint> evidence;

    bool is_null() const {
        return kind == Kind::Null || (kind == Kind::Exact && exact_value && *exact_value == 0);
    }
    std::string kind_name() const;
};

/// |M intersect window(n)| / lambda_n, exact counting.
DensityCheckpoint empirical_density(const SetDescription& m, const LambdaSeq& lambda, Index n);

/// Density of M under lambda. Exact on the closed symbolic algebra (finite
/// sets and squares are null, arithmetic progressions have density 1/step
/// for every admissible lambda, complement and null-union rules); falls back
/// to checkpoint estimates otherwise and reports Oscillating when the top
/// decade separates.
DensityVerdict exact_density(const SetDescription& m, const LambdaSeq& lambda,
                             Index horizon = 1'000'000);

/// Finite-horizon classification of "M has lambda-density zero": Null when
/// every top-decade checkpoint ratio is <= eps, Positive when every one is
/// >= max(0.1, 2 eps), Oscillating otherwise. Exact symbolic values short-
/// circuit the checkpoints. horizon >= 1000 required.
DensityVerdict classify_null(const SetDescription& m, const LambdaSeq& lambda, Index horizon,
                             double eps);

}  // namespace pmseq

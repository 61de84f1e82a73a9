#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pmseq/sequence.hpp"

namespace pmseq {

/// Analysis defaults shared by the analyzers and the CLI.
inline constexpr Index kDefaultHorizon = 1'000'000;
inline constexpr double kDefaultEps = 0.02;

/// Per-threshold evidence for a convergence check: the exception index set
/// {j : dist(x_j, L)(t) <= 1 - t} and its nullity classification. The same
/// set re-derived through the Levy-distance form (separation >= t) must
/// coincide; dl_form_agrees records that cross-check.
struct ThresholdEvidence {
    Rat t;
    SetDescription exception_set = SetDescription::empty_set();
    DensityVerdict verdict;
    bool dl_form_agrees = true;
};

struct ConvergenceReport {
    enum class Verdict { Converges, Diverges, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    std::string candidate;
    std::string lambda_name;
    Index horizon = 0;
    double eps = 0.0;
    std::vector<ThresholdEvidence> per_t;

    bool converges() const { return verdict == Verdict::Converges; }
    std::string verdict_name() const;
};

/// Convergence of the sequence to candidate L: for every grid threshold the
/// exception set must have lambda-density zero. Thresholds come from the
/// space's grid, which decides the full quantifier on finite spaces.
ConvergenceReport check_convergence(const SymbolicSequence& seq, const std::string& candidate,
                                    const LambdaSeq& lambda, Index horizon = kDefaultHorizon,
                                    double eps = kDefaultEps);

/// Tries every point as a candidate; returns the unique convergent one.
/// Throws std::logic_error if two candidates pass (limit uniqueness would be
/// falsified; that is a bug, never swallowed).
std::optional<std::string> find_limit(const SymbolicSequence& seq, const LambdaSeq& lambda,
                                      Index horizon = kDefaultHorizon, double eps = kDefaultEps);

struct CauchyThresholdEvidence {
    Rat t;
    std::optional<Index> witness_index;  // N0 whose exception set is null
    std::string witness_label;
    SetDescription exception_set = SetDescription::empty_set();
    DensityVerdict verdict;
};

struct CauchyReport {
    bool cauchy = false;
    std::string lambda_name;
    Index horizon = 0;
    double eps = 0.0;
    std::vector<CauchyThresholdEvidence> per_t;
};

/// Cauchyness: for every grid threshold some anchor index N0 makes
/// {k : dist(x_k, x_N0)(t) <= 1 - t} lambda-null. Anchors are searched among
/// the first indices outside the exception set, then geometric probes.
CauchyReport check_cauchy(const SymbolicSequence& seq, const LambdaSeq& lambda,
                          Index horizon = kDefaultHorizon, double eps = kDefaultEps);

/// Null pair-exclusion sets for a Cauchy sequence: for every grid threshold
/// t a null H_t such that all pairs outside H_t are within t, plus the
/// complementary full-density G_t. Verified on sampled pairs; throws
/// std::runtime_error if a sampled pair violates the bound and
/// std::invalid_argument when the sequence is not Cauchy.
struct PairOffEntry {
    Rat t;
    Rat eta;        // composition threshold used to build H_t
    Index anchor;   // N0
    SetDescription h_t = SetDescription::empty_set();
    SetDescription g_t = SetDescription::empty_set();
    DensityVerdict h_verdict;
    Index pairs_checked = 0;
};

struct PairOffReport {
    std::vector<PairOffEntry> entries;
};

PairOffReport pair_off_null_set(const SymbolicSequence& seq, const LambdaSeq& lambda,
                                Index horizon = kDefaultHorizon, double eps = kDefaultEps,
                                Index pair_samples = 10'000, std::uint64_t sample_seed = 1);

/// Full-density index set along which the sequence converges in the strong
/// sense, built stage by stage: stage sets G_t = {q : separation(x_q, L) <
/// 1/t}, certified entry points u_t (least index from which the window
/// density of G_t exceeds (t-1)/t up to the horizon), and
/// G = [1,u_1] u union of ([u_t, u_{t+1}] intersect G_t), capped at stage 16.
struct ExtractionReport {
    SetDescription g = SetDescription::empty_set();
    std::vector<std::pair<int, Index>> stage_entry;  // (t, u_t)
    std::vector<DensityCheckpoint> density;          // window densities of G
    struct NeighborhoodCheck {
        Rat t;
        int stage;        // stage l with 1/l < t used for the tail bound
        Index from;       // u_l
        bool ok;
        Index checked;
    };
    std::vector<NeighborhoodCheck> neighborhood;     // tail of G lies in N_L(t)
};

inline constexpr int kMaxExtractionStage = 16;

ExtractionReport extract_full_density_subsequence(const SymbolicSequence& seq,
                                                  const std::string& candidate,
                                                  const LambdaSeq& lambda,
                                                  Index horizon = kDefaultHorizon);

/// The three point sets of a sequence. On a finite space a subsequence
/// converges strongly to y exactly when it is eventually constant at y, so
/// strong limit points are the labels with unboundedly recurring fibers,
/// statistical limit points the labels with non-null fibers, and cluster
/// points the labels whose threshold neighborhoods are hit non-null often.
struct PointSets {
    std::vector<std::string> strong_limit_points;   // L
    std::vector<std::string> stat_limit_points;     // Lambda
    std::vector<std::string> stat_cluster_points;   // Gamma
};

/// Asserts the chain stat_limit subset of stat_cluster subset of strong_limit
/// (std::logic_error on violation — that would falsify the containment
/// theorem and is treated as a bug).
PointSets point_sets(const SymbolicSequence& seq, const LambdaSeq& lambda,
                     Index horizon = kDefaultHorizon, double eps = kDefaultEps);

/// A sequence taking finitely many values in a metric space, each value on a
/// symbolic index fiber. dist_at_least(i, j, eta) decides rho(v_i, v_j) >= eta.
struct FiniteValuedMetricSeq {
    std::vector<std::string> value_names;
    std::vector<SetDescription> fibers;  // disjoint, covering the positive integers
    std::function<bool(int, int, const Rat&)> dist_at_least;
};

/// The distance sequence k -> dist(x_k, g_k) of two sequences over the same
/// space, as a finite-valued sequence in the Levy metric, plus its
/// Cauchyness verdict there. Throws std::invalid_argument on mismatched
/// spaces.
struct DistanceSeqReport {
    FiniteValuedMetricSeq seq;
    bool cauchy = false;
    struct EtaEvidence {
        Rat eta;
        std::optional<Index> anchor;
        DensityVerdict verdict;
    };
    std::vector<EtaEvidence> per_eta;
};

DistanceSeqReport pairwise_distance_sequence(const SymbolicSequence& x, const SymbolicSequence& g,
                                             const LambdaSeq& lambda,
                                             Index horizon = kDefaultHorizon,
                                             double eps = kDefaultEps);

/// Cauchyness in a plain metric space (anchor form): for every grid eta some
/// anchor value's far-set is null.
bool metric_cauchy(const FiniteValuedMetricSeq& seq, const LambdaSeq& lambda,
                   const std::vector<Rat>& eta_grid, Index horizon, double eps,
                   std::vector<DistanceSeqReport::EtaEvidence>* evidence = nullptr);

/// The three equivalent Cauchy characterizations in a metric space, checked
/// per grid eta: (1) an anchor with null far-set exists, (2) a null excluded
/// set G exists with all pairs outside G within eta, (3) indices whose
/// far-sets are non-null form a null set. Verdicts must agree at every eta.
struct TriEquivalenceReport {
    struct Entry {
        Rat eta;
        bool anchor_form = false;
        bool pair_form = false;
        bool nested_form = false;
        bool agree() const { return anchor_form == pair_form && pair_form == nested_form; }
    };
    std::vector<Entry> per_eta;
    bool all_agree = true;
    bool cauchy = false;  // the common verdict when all agree
};

TriEquivalenceReport check_cauchy_equivalences(const FiniteValuedMetricSeq& seq,
                                               const LambdaSeq& lambda,
                                               const std::vector<Rat>& eta_grid, Index horizon,
                                               double eps);

/// Finite-valued sequence over the rationals with the absolute-value metric.
FiniteValuedMetricSeq rational_metric_seq(std::vector<Rat> values,
                                          std::vector<SetDescription> fibers);

}  // namespace pmseq

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmseq/distfn.hpp"
#include "pmseq/triangle.hpp"

namespace pmseq {

/// Result of checking the four probabilistic-metric axioms.
struct AxiomReport {
    bool pass = true;
    int failed_axiom = 0;               // 1..4, 0 when pass
    std::vector<std::string> witness;   // points involved in the first violation
    std::string detail;
};

/// A finite probabilistic metric space: points, a symmetric table of
/// distance distribution functions, and a triangle function. Construction
/// validates shape only (labels distinct, entries distance-shaped); the
/// axioms are checked separately by verify_axioms so that deliberately
/// broken tables remain representable for negative tests. The named
/// builders below do enforce the axioms.
///
/// Immutable after construction; all queries are pure.
class PMSpace {
public:
    using DistTable = std::map<std::pair<std::string, std::string>, StepDistFn>;

    /// `table` holds off-diagonal entries; missing (q,p) is filled from
    /// (p,q). Diagonal entries default to the unit step at 0 but may be
    /// overridden (for corrupted test instances).
    PMSpace(std::vector<std::string> points, const DistTable& table, TriangleFn tau);

    std::size_t size() const { return points_.size(); }
    const std::vector<std::string>& points() const { return points_; }
    int index_of(const std::string& label) const;  // throws on unknown point
    bool has_point(const std::string& label) const;

    const StepDistFn& dist(int i, int j) const { return dist_[i][j]; }
    const StepDistFn& dist(const std::string& p, const std::string& q) const;
    const TriangleFn& tau() const { return tau_; }

    /// Exact Levy distance from dist(i,j) to the unit step at 0.
    const Rat& separation(int i, int j) const { return sep_[i][j]; }

    /// Minimum off-diagonal separation (1 for a single-point space). This is
    /// the scale below which strong neighborhoods are singletons.
    const Rat& min_separation() const { return min_sep_; }

    /// Shared evaluation grid {t*/2, t*, 2 t*, ...} capped at 2, where t* is
    /// min_separation(). Membership predicates quantified over all t > 0 are
    /// monotone in t and constant below t*, so this grid decides them.
    const std::vector<Rat>& threshold_grid() const { return grid_; }

    bool operator==(const PMSpace& o) const;

private:
    std::vector<std::string> points_;
    std::vector<std::vector<StepDistFn>> dist_;
    std::vector<std::vector<Rat>> sep_;
    TriangleFn tau_;
    Rat min_sep_;
    std::vector<Rat> grid_;
};

/// Checks the four axioms exhaustively over all pairs and triples; returns
/// the first violation found (axiom order 1,2,3,4).
AxiomReport verify_axioms(const PMSpace& space);

/// All distinct points at the same distance profile F0 from one another.
/// Throws std::invalid_argument with the axiom report when the result would
/// not be a PM space.
PMSpace build_equilateral(const std::vector<std::string>& points, const StepDistFn& f0,
                          TriangleFn tau);

/// Distance profile from an ordinary metric rho: dist(p,q)(x) = g(x / rho(p,q)),
/// realized exactly by scaling g's jump locations. rho is validated as a
/// metric (symmetry, positivity, triangle inequality); the result is checked
/// against the axioms.
PMSpace build_simple(const std::vector<std::string>& points,
                     const std::vector<std::vector<Rat>>& rho, const StepDistFn& g,
                     TriangleFn tau);

/// {y : dist(x,y)(r) > 1 - r}, exact. Contains x for every r > 0.
std::vector<std::string> strong_neighborhood(const PMSpace& space, const std::string& x, const Rat& r);

/// Strong closure of a nonempty subset: points a such that for every t > 0
/// some b in A has dist(a,b)(t) > 1 - t. Decided on the threshold grid
/// (membership is monotone in t and constant below the minimum separation).
std::vector<std::string> strong_closure(const PMSpace& space, const std::vector<std::string>& a);

/// The strong r-vicinity: the set of pairs within radius r.
struct Vicinity {
    Rat r;
    std::vector<std::pair<std::string, std::string>> pairs;  // all ordered pairs in the relation
    std::vector<std::vector<bool>> member;                    // adjacency by point index
};

Vicinity vicinity(const PMSpace& space, const Rat& r);

/// Largest eta in `grid` (tried in descending order) whose vicinity composes
/// into the r-vicinity: V(eta) o V(eta) subset of V(r), verified by triple
/// enumeration. Returns nullopt when no grid element works (grid too coarse).
std::optional<Rat> find_eta(const PMSpace& space, const Rat& r, std::vector<Rat> grid);

}  // namespace pmseq

#include "pmseq/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pmseq/rng.hpp"

namespace pmseq {

namespace {

double positive_floor(double eps) { return std::max(0.1, 2.0 * eps); }

// Unboundedness of a symbolic index set, structurally where the shape
// decides it and by probing [horizon/2, 2*horizon] otherwise (window unions
// may have their next block just past the horizon).
bool unbounded_heuristic(const SetDescription& s, Index horizon) {
    using K = SetDescription::Kind;
    switch (s.kind()) {
        case K::Finite:
            return false;
        case K::AP:
        case K::Squares:
            return true;
        case K::Interval:
            return s.interval_unbounded();
        case K::Windows:
            return s.windows_centers().geometric() || s.first_member(horizon / 2, 2 * horizon).has_value();
        case K::Union:
            return unbounded_heuristic(s.left(), horizon) || unbounded_heuristic(s.right(), horizon);
        case K::Inter:
        case K::Compl:
            return s.first_member(horizon / 2, 2 * horizon).has_value();
    }
    return false;
}

// {y : dist(y, anchor)(t) <= 1 - t}, as a predicate over point indices.
std::vector<bool> far_mask(const PMSpace& space, int anchor, const Rat& t) {
    std::vector<bool> mask(space.size());
    for (std::size_t y = 0; y < space.size(); ++y) {
        mask[y] = !(space.dist(static_cast<int>(y), anchor).eval(ExtReal(t)) > Rat(1) - t);
    }
    return mask;
}

bool decides_divergence(const DensityVerdict& v, double eps) {
    if (v.kind == DensityVerdict::Kind::Positive) return true;
    return v.kind == DensityVerdict::Kind::Oscillating && v.limsup_estimate >= positive_floor(eps);
}

}  // namespace

std::string ConvergenceReport::verdict_name() const {
    switch (verdict) {
        case Verdict::Converges: return "converges";
        case Verdict::Diverges: return "diverges";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

ConvergenceReport check_convergence(const SymbolicSequence& seq, const std::string& candidate,
                                    const LambdaSeq& lambda, Index horizon, double eps) {
    if (horizon < 1000) throw std::invalid_argument("check_convergence: horizon must be >= 1000");
    const PMSpace& space = seq.space();
    const int li = space.index_of(candidate);
    ConvergenceReport rep;
    rep.candidate = candidate;
    rep.lambda_name = lambda.name();
    rep.horizon = horizon;
    rep.eps = eps;
    bool all_null = true, any_positive = false;
    for (const Rat& t : space.threshold_grid()) {
        ThresholdEvidence ev;
        ev.t = t;
        std::vector<bool> mask = far_mask(space, li, t);
        // Levy-distance form of the same set: separation(y, L) >= t.
        bool agree = true;
        for (std::size_t y = 0; y < space.size(); ++y) {
            bool dl_mask = space.separation(static_cast<int>(y), li) >= t;
            if (dl_mask != mask[y]) agree = false;
        }
        ev.dl_form_agrees = agree;
        ev.exception_set = seq.index_set_where(mask);
        ev.verdict = classify_null(ev.exception_set, lambda, horizon, eps);
        all_null = all_null && ev.verdict.is_null();
        any_positive = any_positive || decides_divergence(ev.verdict, eps);
        rep.per_t.push_back(std::move(ev));
    }
    rep.verdict = all_null        ? ConvergenceReport::Verdict::Converges
                  : any_positive  ? ConvergenceReport::Verdict::Diverges
                                  : ConvergenceReport::Verdict::Inconclusive;
    return rep;
}

std::optional<std::string> find_limit(const SymbolicSequence& seq, const LambdaSeq& lambda,
                                      Index horizon, double eps) {
    std::vector<std::string> passing;
    for (const auto& candidate : seq.space().points()) {
        if (check_convergence(seq, candidate, lambda, horizon, eps).converges()) {
            passing.push_back(candidate);
        }
    }
    if (passing.size() > 1) {
        std::ostringstream os;
        os << "find_limit: two distinct limits passed (";
        for (std::size_t i = 0; i < passing.size(); ++i) os << (i ? "," : "") << passing[i];
        os << ") — limit uniqueness violated, this is a bug";
        throw std::logic_error(os.str());
    }
    if (passing.empty()) return std::nullopt;
    return passing.front();
}

namespace {

std::vector<Index> anchor_pool(const SymbolicSequence& seq, Index horizon) {
    std::vector<Index> pool;
    for (Index k = 1; k <= horizon && pool.size() < 100; ++k) {
        if (!seq.exceptions().contains(k)) pool.push_back(k);
    }
    std::set<Index> seen(pool.begin(), pool.end());
    for (Index k = 2; k <= horizon; k *= 2) {
        if (seen.insert(k).second) pool.push_back(k);
    }
    return pool;
}

struct AnchorSearch {
    std::optional<Index> anchor;
    std::string label;
    SetDescription exception_set = SetDescription::empty_set();
    DensityVerdict verdict;
};

AnchorSearch search_anchor(const SymbolicSequence& seq, const std::vector<Index>& pool,
                           const Rat& t, const LambdaSeq& lambda, Index horizon, double eps) {
    const PMSpace& space = seq.space();
    std::map<int, std::pair<SetDescription, DensityVerdict>> memo;
    AnchorSearch out;
    bool first = true;
    for (Index n0 : pool) {
        int l = seq.term_index(n0);
        auto it = memo.find(l);
        if (it == memo.end()) {
            SetDescription e = seq.index_set_where(far_mask(space, l, t));
            DensityVerdict v = classify_null(e, lambda, horizon, eps);
            it = memo.emplace(l, std::make_pair(std::move(e), std::move(v))).first;
        }
        if (first) {
            out.exception_set = it->second.first;
            out.verdict = it->second.second;
            out.label = space.points()[l];
            first = false;
        }
        if (it->second.second.is_null()) {
            out.anchor = n0;
            out.label = space.points()[l];
            out.exception_set = it->second.first;
            out.verdict = it->second.second;
            return out;
        }
    }
    return out;
}

}  // namespace

CauchyReport check_cauchy(const SymbolicSequence& seq, const LambdaSeq& lambda, Index horizon,
                          double eps) {
    if (horizon < 1000) throw std::invalid_argument("check_cauchy: horizon must be >= 1000");
    CauchyReport rep;
    rep.lambda_name = lambda.name();
    rep.horizon = horizon;
    rep.eps = eps;
    rep.cauchy = true;
    std::vector<Index> pool = anchor_pool(seq, horizon);
    for (const Rat& t : seq.space().threshold_grid()) {
        AnchorSearch found = search_anchor(seq, pool, t, lambda, horizon, eps);
        CauchyThresholdEvidence ev;
        ev.t = t;
        ev.witness_index = found.anchor;
        ev.witness_label = found.label;
        ev.exception_set = found.exception_set;
        ev.verdict = found.verdict;
        rep.cauchy = rep.cauchy && found.anchor.has_value();
        rep.per_t.push_back(std::move(ev));
    }
    return rep;
}

PairOffReport pair_off_null_set(const SymbolicSequence& seq, const LambdaSeq& lambda,
                                Index horizon, double eps, Index pair_samples,
                                std::uint64_t sample_seed) {
    CauchyReport cauchy = check_cauchy(seq, lambda, horizon, eps);
    if (!cauchy.cauchy) {
        throw std::invalid_argument("pair_off_null_set: sequence is not Cauchy at this horizon");
    }
    const PMSpace& space = seq.space();
    std::vector<Index> pool = anchor_pool(seq, horizon);
    PairOffReport rep;
    std::size_t t_index = 0;
    for (const Rat& t : space.threshold_grid()) {
        std::vector<Rat> eta_grid = space.threshold_grid();
        eta_grid.push_back(t);
        Rat eta = find_eta(space, t, eta_grid).value();  // t*/2 always works
        AnchorSearch found = search_anchor(seq, pool, eta, lambda, horizon, eps);
        if (!found.anchor) {
            throw std::runtime_error("pair_off_null_set: no anchor at the composition threshold");
        }
        PairOffEntry entry;
        entry.t = t;
        entry.eta = eta;
        entry.anchor = *found.anchor;
        entry.h_t = found.exception_set;
        entry.g_t = SetDescription::compl_of(found.exception_set);
        entry.h_verdict = found.verdict;
        Rng rng(derive_seed(sample_seed, t_index++));
        Index checked = 0, attempts = 0;
        const Rat bound = Rat(1) - t;
        while (checked < pair_samples && attempts < 8 * pair_samples) {
            ++attempts;
            Index k = 1 + rng.below(horizon);
            Index j = 1 + rng.below(horizon);
            if (entry.h_t.contains(k) || entry.h_t.contains(j)) continue;
            if (!(space.dist(seq.term_index(k), seq.term_index(j)).eval(ExtReal(t)) > bound)) {
                std::ostringstream os;
                os << "pair_off_null_set: pair (" << k << "," << j
                   << ") outside the null set violates the bound at t=" << rat_str(t);
                throw std::runtime_error(os.str());
            }
            ++checked;
        }
        entry.pairs_checked = checked;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

ExtractionReport extract_full_density_subsequence(const SymbolicSequence& seq,
                                                  const std::string& candidate,
                                                  const LambdaSeq& lambda, Index horizon) {
    ConvergenceReport conv = check_convergence(seq, candidate, lambda, horizon, kDefaultEps);
    if (!conv.converges()) {
        throw std::invalid_argument("extract_full_density_subsequence: sequence does not converge to " +
                                    candidate);
    }
    const PMSpace& space = seq.space();
    const int li = space.index_of(candidate);
    const int n_pts = static_cast<int>(space.size());

    // Stage masks: good at stage t means separation below 1/t. Masks are
    // nested (shrink as t grows); stages sharing a mask share one scan.
    std::vector<std::vector<bool>> masks(kMaxExtractionStage + 1);
    for (int t = 1; t <= kMaxExtractionStage; ++t) {
        masks[t].resize(n_pts);
        for (int y = 0; y < n_pts; ++y) {
            masks[t][y] = space.separation(y, li) < Rat(1, t);
        }
    }
    std::map<std::vector<bool>, std::vector<int>> groups;
    for (int t = 1; t <= kMaxExtractionStage; ++t) groups[masks[t]].push_back(t);

    // For every stage, the largest window index violating the density bound
    // count * t > lambda_n * (t - 1).
    std::vector<Index> last_violation(kMaxExtractionStage + 1, 0);
    for (const auto& [mask, stages] : groups) {
        SetDescription g_mask = seq.index_set_where(mask);
        Index cnt = g_mask.contains(1) ? 1 : 0;
        Index lam_prev = lambda(1);
        for (int t : stages) {
            if (cnt * static_cast<Index>(t) <= lam_prev * static_cast<Index>(t - 1)) {
                last_violation[t] = 1;
            }
        }
        for (Index n = 2; n <= horizon; ++n) {
            Index lam = lambda(n);
            cnt += g_mask.contains(n) ? 1 : 0;
            if (lam == lam_prev) {
                Index dropped = n - lam;  // previous window low end
                cnt -= g_mask.contains(dropped) ? 1 : 0;
            }
            lam_prev = lam;
            for (int t : stages) {
                if (cnt * static_cast<Index>(t) <= lam * static_cast<Index>(t - 1)) {
                    last_violation[t] = n;
                }
            }
        }
    }

    ExtractionReport rep;
    std::vector<Index> entry(kMaxExtractionStage + 1, 0);
    Index prev = 0;
    for (int t = 1; t <= kMaxExtractionStage; ++t) {
        Index start = std::max(last_violation[t], prev) + 1;
        std::optional<Index> u;
        for (Index k = start; k <= horizon; ++k) {
            if (masks[t][seq.term_index(k)]) {
                u = k;
                break;
            }
        }
        if (!u) {
            throw std::runtime_error(
                "extract_full_density_subsequence: horizon too small to certify stage t=" +
                std::to_string(t));
        }
        entry[t] = *u;
        rep.stage_entry.emplace_back(t, *u);
        prev = *u;
    }

    // G = [1, u_1] plus disjoint half-open stage segments.
    SetDescription g = SetDescription::interval(1, entry[1]);
    for (int t = 1; t < kMaxExtractionStage; ++t) {
        if (entry[t] + 1 > entry[t + 1]) continue;
        g = SetDescription::union_of(
            g, SetDescription::inter_of(SetDescription::interval(entry[t] + 1, entry[t + 1]),
                                        seq.index_set_where(masks[t])));
    }
    g = SetDescription::union_of(
        g, SetDescription::inter_of(
               SetDescription::interval(entry[kMaxExtractionStage] + 1, std::nullopt),
               seq.index_set_where(masks[kMaxExtractionStage])));
    rep.g = g;

    // Window densities of G along one incremental pass (counting through
    // the union tree would be quadratic in the stage segments).
    auto in_g = [&](Index k) -> bool {
        if (k <= entry[1]) return true;
        int t = static_cast<int>(std::upper_bound(entry.begin() + 1, entry.end(), k - 1) -
                                 (entry.begin() + 1));
        if (t > kMaxExtractionStage) t = kMaxExtractionStage;
        return masks[t][seq.term_index(k)];
    };
    {
        std::vector<Index> cps = density_checkpoints(horizon);
        std::size_t next_cp = 0;
        Index cnt = in_g(1) ? 1 : 0;
        Index lam_prev = lambda(1);
        for (Index n = 1; n <= horizon && next_cp < cps.size(); ++n) {
            if (n > 1) {
                Index lam = lambda(n);
                cnt += in_g(n) ? 1 : 0;
                if (lam == lam_prev) cnt -= in_g(n - lam) ? 1 : 0;
                lam_prev = lam;
            }
            if (n == cps[next_cp]) {
                rep.density.push_back(DensityCheckpoint{
                    n, cnt, lam_prev, static_cast<double>(cnt) / static_cast<double>(lam_prev)});
                ++next_cp;
            }
        }
    }

    // Tail containment: beyond the certified stage entry u_l with 1/l < t,
    // every member of G stays within threshold t of the candidate.
    for (const Rat& t : space.threshold_grid()) {
        Rat inv = 1 / t;
        Index l = (numerator(inv) / denominator(inv)).convert_to<Index>() + 1;
        if (l > static_cast<Index>(kMaxExtractionStage)) continue;
        ExtractionReport::NeighborhoodCheck chk;
        chk.t = t;
        chk.stage = static_cast<int>(l);
        chk.from = entry[l];
        chk.ok = true;
        chk.checked = 0;
        auto verify = [&](Index k) {
            if (!in_g(k)) return;
            ++chk.checked;
            if (!(space.separation(seq.term_index(k), li) < t)) chk.ok = false;
        };
        for (Index k = entry[l]; k <= std::min(horizon, entry[l] + 2000); ++k) verify(k);
        for (Index k = entry[l] + 1; k <= horizon && chk.ok; k *= 2) verify(k);
        rep.neighborhood.push_back(chk);
    }
    return rep;
}

PointSets point_sets(const SymbolicSequence& seq, const LambdaSeq& lambda, Index horizon,
                     double eps) {
    const PMSpace& space = seq.space();
    PointSets out;
    std::vector<bool> in_l(space.size()), in_lambda(space.size()), in_gamma(space.size());
    for (std::size_t y = 0; y < space.size(); ++y) {
        const std::string& label = space.points()[y];
        SetDescription fib = seq.fiber(label);
        // Recurring-fiber surrogate for "has a strongly convergent
        // subsequence": on a finite space that means eventually-constant,
        // i.e. the fiber is unbounded.
        in_l[y] = unbounded_heuristic(fib, horizon);
        in_lambda[y] = !classify_null(fib, lambda, horizon, eps).is_null();
        bool cluster = true;
        for (const Rat& t : space.threshold_grid()) {
            std::vector<bool> near(space.size());
            for (std::size_t z = 0; z < space.size(); ++z) {
                near[z] = space.separation(static_cast<int>(z), static_cast<int>(y)) < t;
            }
            SetDescription near_set = seq.index_set_where(near);
            if (classify_null(near_set, lambda, horizon, eps).is_null()) {
                cluster = false;
                break;
            }
        }
        in_gamma[y] = cluster;
    }
    for (std::size_t y = 0; y < space.size(); ++y) {
        const std::string& label = space.points()[y];
        if (in_l[y]) out.strong_limit_points.push_back(label);
        if (in_lambda[y]) out.stat_limit_points.push_back(label);
        if (in_gamma[y]) out.stat_cluster_points.push_back(label);
        if ((in_lambda[y] && !in_gamma[y]) || (in_gamma[y] && !in_l[y])) {
            throw std::logic_error("point_sets: containment chain violated at " + label +
                                   " — this falsifies the limit/cluster inclusion and is a bug");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Finite-valued sequences in a metric space

FiniteValuedMetricSeq rational_metric_seq(std::vector<Rat> values,
                                          std::vector<SetDescription> fibers) {
    if (values.size() != fibers.size()) {
        throw std::invalid_argument("rational_metric_seq: values/fibers size mismatch");
    }
    FiniteValuedMetricSeq seq;
    for (const Rat& v : values) seq.value_names.push_back(rat_str(v));
    seq.fibers = std::move(fibers);
    auto vals = std::make_shared<std::vector<Rat>>(std::move(values));
    seq.dist_at_least = [vals](int i, int j, const Rat& eta) {
        Rat d = (*vals)[i] > (*vals)[j] ? (*vals)[i] - (*vals)[j] : (*vals)[j] - (*vals)[i];
        return d >= eta;
    };
    return seq;
}

namespace {

std::optional<int> anchor_value(const FiniteValuedMetricSeq& seq, const LambdaSeq& lambda,
                                const Rat& eta, Index horizon, double eps,
                                DensityVerdict* verdict_out) {
    for (int i = 0; i < static_cast<int>(seq.fibers.size()); ++i) {
        if (seq.fibers[i].is_empty_syntactic()) continue;
        SetDescription bad = SetDescription::empty_set();
        for (int j = 0; j < static_cast<int>(seq.fibers.size()); ++j) {
            if (seq.dist_at_least(j, i, eta)) {
                bad = SetDescription::union_of(bad, seq.fibers[j]);
            }
        }
        DensityVerdict v = classify_null(bad, lambda, horizon, eps);
        if (v.is_null()) {
            if (verdict_out) *verdict_out = v;
            return i;
        }
        if (verdict_out && i == 0) *verdict_out = v;
    }
    return std::nullopt;
}

}  // namespace

bool metric_cauchy(const FiniteValuedMetricSeq& seq, const LambdaSeq& lambda,
                   const std::vector<Rat>& eta_grid, Index horizon, double eps,
                   std::vector<DistanceSeqReport::EtaEvidence>* evidence) {
    bool cauchy = true;
    for (const Rat& eta : eta_grid) {
        DistanceSeqReport::EtaEvidence ev;
        ev.eta = eta;
        DensityVerdict v;
        std::optional<int> i = anchor_value(seq, lambda, eta, horizon, eps, &v);
        ev.verdict = v;
        if (i) {
            ev.anchor = seq.fibers[*i].first_member(1, horizon);
        } else {
            cauchy = false;
        }
        if (evidence) evidence->push_back(std::move(ev));
    }
    return cauchy;
}

DistanceSeqReport pairwise_distance_sequence(const SymbolicSequence& x, const SymbolicSequence& g,
                                             const LambdaSeq& lambda, Index horizon, double eps) {
    if (!(x.space() == g.space())) {
        throw std::invalid_argument("pairwise_distance_sequence: sequences live in different spaces");
    }
    const PMSpace& space = x.space();

    // Index fibers of the label-pair process (x_k, g_k): split by exception
    // membership in both sequences, then by the residue class of the joint
    // pattern period.
    std::map<std::pair<int, int>, SetDescription> pair_fibers;
    auto add_region = [&](const SetDescription& region, const Pattern& px, const Pattern& pg) {
        if (region.is_empty_syntactic()) return;
        Index p = std::lcm(px.period(), pg.period());
        for (Index r = 0; r < p; ++r) {
            std::pair<int, int> key{space.index_of(px.at(r + 1)), space.index_of(pg.at(r + 1))};
            SetDescription part =
                SetDescription::inter_of(region, p == 1 ? SetDescription::all()
                                                        : SetDescription::ap(r + 1, p));
            auto it = pair_fibers.find(key);
            if (it == pair_fibers.end()) {
                pair_fibers.emplace(key, part);
            } else {
                it->second = SetDescription::union_of(it->second, part);
            }
        }
    };
    const SetDescription& ex = x.exceptions();
    const SetDescription& eg = g.exceptions();
    add_region(SetDescription::inter_of(ex, eg), x.exception_values(), g.exception_values());
    add_region(SetDescription::inter_of(ex, SetDescription::compl_of(eg)), x.exception_values(),
               g.base());
    add_region(SetDescription::inter_of(SetDescription::compl_of(ex), eg), x.base(),
               g.exception_values());
    add_region(SetDescription::inter_of(SetDescription::compl_of(ex), SetDescription::compl_of(eg)),
               x.base(), g.base());

    // Merge label pairs sharing the same distance profile.
    DistanceSeqReport rep;
    std::vector<StepDistFn> values;
    for (const auto& [key, fib] : pair_fibers) {
        const StepDistFn& fn = space.dist(key.first, key.second);
        int found = -1;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] == fn) {
                found = static_cast<int>(i);
                break;
            }
        }
        if (found < 0) {
            values.push_back(fn);
            rep.seq.value_names.push_back("dist(" + space.points()[key.first] + "," +
                                          space.points()[key.second] + ")");
            rep.seq.fibers.push_back(fib);
        } else {
            rep.seq.fibers[found] = SetDescription::union_of(rep.seq.fibers[found], fib);
        }
    }

    // Levy distances between the finitely many profile values.
    auto n = values.size();
    auto dl = std::make_shared<std::vector<std::vector<double>>>(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            (*dl)[i][j] = (*dl)[j][i] = levy_distance(values[i], values[j], 1e-9).value;
        }
    }
    rep.seq.dist_at_least = [dl](int i, int j, const Rat& eta) {
        return (*dl)[i][j] >= to_double(eta);
    };

    rep.cauchy = metric_cauchy(rep.seq, lambda, space.threshold_grid(), horizon, eps, &rep.per_eta);
    return rep;
}

TriEquivalenceReport check_cauchy_equivalences(const FiniteValuedMetricSeq& seq,
                                               const LambdaSeq& lambda,
                                               const std::vector<Rat>& eta_grid, Index horizon,
                                               double eps) {
    TriEquivalenceReport rep;
    const int m = static_cast<int>(seq.fibers.size());
    std::vector<bool> fiber_null(m);
    for (int i = 0; i < m; ++i) {
        fiber_null[i] = classify_null(seq.fibers[i], lambda, horizon, eps).is_null();
    }
    for (const Rat& eta : eta_grid) {
        TriEquivalenceReport::Entry e;
        e.eta = eta;

        e.anchor_form = anchor_value(seq, lambda, eta, horizon, eps, nullptr).has_value();

        // Pair form: drop the null fibers; all surviving values must be
        // pairwise within eta, and the dropped set must itself be null.
        bool pairwise_ok = true;
        SetDescription dropped = SetDescription::empty_set();
        for (int i = 0; i < m; ++i) {
            if (fiber_null[i]) {
                dropped = SetDescription::union_of(dropped, seq.fibers[i]);
                continue;
            }
            for (int j = i; j < m; ++j) {
                if (fiber_null[j]) continue;
                if (seq.dist_at_least(i, j, eta)) pairwise_ok = false;
            }
        }
        e.pair_form = pairwise_ok && classify_null(dropped, lambda, horizon, eps).is_null();

        // Nested form: indices whose far-set is non-null must form a null set.
        SetDescription bad_indices = SetDescription::empty_set();
        for (int j = 0; j < m; ++j) {
            SetDescription far = SetDescription::empty_set();
            for (int k = 0; k < m; ++k) {
                if (seq.dist_at_least(k, j, eta)) {
                    far = SetDescription::union_of(far, seq.fibers[k]);
                }
            }
            if (!classify_null(far, lambda, horizon, eps).is_null()) {
                bad_indices = SetDescription::union_of(bad_indices, seq.fibers[j]);
            }
        }
        e.nested_form = classify_null(bad_indices, lambda, horizon, eps).is_null();

        rep.all_agree = rep.all_agree && e.agree();
        rep.per_eta.push_back(e);
    }
    rep.cauchy = rep.all_agree && !rep.per_eta.empty() &&
                 std::all_of(rep.per_eta.begin(), rep.per_eta.end(),
                             [](const auto& e) { return e.anchor_form; });
    return rep;
}

}  // namespace pmseq

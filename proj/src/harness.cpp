#include "pmseq/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

#include "pmseq/generate.hpp"
#include "pmseq/rng.hpp"

namespace pmseq {

PlantSpec plant_spec_from_json(const Json& j) {
    PlantSpec spec;
    spec.space = pmspace_from_json(j.at("space"));
    std::string limit = j.value("limit", std::string("none"));
    spec.limit = (limit == "none") ? "" : limit;
    if (j.contains("base")) spec.base = pattern_from_json(j.at("base"));
    spec.exceptions = set_description_from_json(j.at("exceptions"));
    spec.exception_values = pattern_from_json(j.at("exception_values"));
    if (j.contains("lambda")) {
        spec.lambda_name = j.at("lambda").is_string() ? j.at("lambda").get<std::string>() : "custom";
    }
    spec.horizon = j.value("horizon", kDefaultHorizon);
    spec.eps = j.value("eps", kDefaultEps);
    spec.seed = j.value("seed", std::uint64_t(42));
    return spec;
}

Json to_json(const PlantSpec& spec) {
    Json out;
    out["space"] = to_json(*spec.space);
    out["limit"] = spec.limit.empty() ? Json("none") : Json(spec.limit);
    if (spec.base) out["base"] = to_json(*spec.base);
    out["exceptions"] = to_json(spec.exceptions);
    out["exception_values"] = to_json(spec.exception_values);
    out["lambda"] = spec.lambda_name;
    out["horizon"] = spec.horizon;
    out["eps"] = spec.eps;
    out["seed"] = spec.seed;
    return out;
}

SymbolicSequence generate(const PlantSpec& spec) {
    if (!spec.space) throw std::invalid_argument("generate: missing space");
    if (spec.horizon < 1000) throw std::invalid_argument("generate: horizon must be >= 1000");
    if (!(spec.eps > 0.0) || spec.eps > 0.1) {
        throw std::invalid_argument("generate: eps must lie in (0, 0.1]");
    }
    if (!spec.limit.empty()) {
        spec.space->index_of(spec.limit);
        for (const auto& l : spec.exception_values.labels()) {
            if (l == spec.limit) {
                throw std::invalid_argument(
                    "generate: exception value equals the planted limit — the exception set "
                    "would not be the full difference set");
            }
        }
        return SymbolicSequence(spec.space, Pattern::constant(spec.limit), spec.exceptions,
                                spec.exception_values);
    }
    if (!spec.base) throw std::invalid_argument("generate: need a base pattern when limit is none");
    return SymbolicSequence(spec.space, *spec.base, spec.exceptions, spec.exception_values);
}

// ---------------------------------------------------------------------------
// Seeded instance toolkit

namespace {

std::vector<std::string> point_labels(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return labels;
}

TriangleFn random_tau(Rng& rng) {
    switch (rng.below(3)) {
        case 0: return TriangleFn(TNorm::Min);
        case 1: return TriangleFn(TNorm::Product);
        default: return TriangleFn(TNorm::Lukasiewicz);
    }
}

std::shared_ptr<const PMSpace> random_space(Rng& rng, int min_pts = 2, int max_pts = 5) {
    int n = static_cast<int>(rng.range(min_pts, max_pts));
    auto labels = point_labels(n);
    TriangleFn tau = random_tau(rng);
    if (n >= 3 && rng.coin()) {
        return std::make_shared<PMSpace>(
            build_simple(labels, random_metric(rng, n), random_distance_fn_nonzero(rng), tau));
    }
    return std::make_shared<PMSpace>(build_equilateral(labels, random_distance_fn_nonzero(rng), tau));
}

LambdaSeq random_lambda(Rng& rng) {
    switch (rng.below(3)) {
        case 0: return LambdaSeq::identity();
        case 1: return LambdaSeq::ceil_sqrt();
        default: return LambdaSeq::half();
    }
}

SetDescription random_finite_set(Rng& rng) {
    std::vector<Index> members;
    Index count = rng.range(1, 20);
    for (Index i = 0; i < count; ++i) members.push_back(rng.range(1, 5000));
    return SetDescription::finite(std::move(members));
}

SetDescription geometric_windows(Index base) {
    SetDescription::Centers centers;
    centers.base = base;
    centers.first_exp = 1;
    return SetDescription::windows(LambdaSeq::ceil_sqrt(), centers);
}

/// An exception set that is lambda-null for the given family. Window unions
/// along 4^j are null under identity and half but not under ceil-sqrt.
SetDescription random_null_exceptions(Rng& rng, const LambdaSeq& lambda) {
    bool allow_windows = lambda.family() != LambdaSeq::Family::CeilSqrt;
    switch (rng.below(allow_windows ? 3 : 2)) {
        case 0: return random_finite_set(rng);
        case 1: return SetDescription::squares();
        default: return geometric_windows(4);
    }
}

/// Exception sets that are exactly null in the symbolic algebra,
/// independent of lambda.
SetDescription random_exact_null_exceptions(Rng& rng) {
    return rng.coin() ? random_finite_set(rng) : SetDescription::squares();
}

Pattern random_pattern(Rng& rng, const std::vector<std::string>& labels, int max_period) {
    int p = static_cast<int>(rng.range(1, std::max(1, max_period)));
    std::vector<std::string> out;
    for (int i = 0; i < p; ++i) out.push_back(labels[rng.below(labels.size())]);
    return Pattern::periodic(std::move(out));
}

Pattern random_pattern_excluding(Rng& rng, const std::vector<std::string>& labels,
                                 const std::string& excluded, int max_period) {
    std::vector<std::string> pool;
    for (const auto& l : labels) {
        if (l != excluded) pool.push_back(l);
    }
    return random_pattern(rng, pool, max_period);
}

struct PlantedInstance {
    std::shared_ptr<const PMSpace> space;
    std::string limit;
    LambdaSeq lambda = LambdaSeq::identity();
    SetDescription exceptions = SetDescription::empty_set();
    SymbolicSequence seq;
};

PlantedInstance make_planted(Rng& rng, bool exact_null_only = false) {
    auto space = random_space(rng);
    const auto& labels = space->points();
    std::string limit = labels[rng.below(labels.size())];
    LambdaSeq lambda = random_lambda(rng);
    SetDescription exc = exact_null_only ? random_exact_null_exceptions(rng)
                                         : random_null_exceptions(rng, lambda);
    Pattern values = space->size() > 1 ? random_pattern_excluding(rng, labels, limit, 2)
                                       : Pattern::constant(limit);
    if (space->size() == 1) exc = SetDescription::empty_set();
    return PlantedInstance{space, limit, lambda, exc,
                           SymbolicSequence(space, Pattern::constant(limit), exc, values)};
}

// ---------------------------------------------------------------------------
// Suite entries. Each returns nullopt on pass or witness JSON on failure.

using EntryFn = std::function<std::optional<Json>(std::uint64_t, const SuiteConfig&)>;

struct EntryDef {
    std::string id;
    EntryFn fn;
};

std::optional<Json> fail_json(const std::string& what, Json detail = Json::object()) {
    detail["reason"] = what;
    return detail;
}

std::optional<Json> entry_limit_uniqueness(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    PlantedInstance inst = make_planted(rng);
    auto lim = find_limit(inst.seq, inst.lambda, cfg.horizon, cfg.eps);
    if (!lim || *lim != inst.limit) {
        return fail_json("planted limit not recovered",
                         Json{{"expected", inst.limit},
                              {"got", lim ? *lim : "none"},
                              {"sequence", to_json(inst.seq)},
                              {"lambda", inst.lambda.name()}});
    }
    return std::nullopt;
}

std::optional<Json> entry_strong_implies_stat(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    auto space = random_space(rng);
    const auto& labels = space->points();
    std::string limit = labels[rng.below(labels.size())];
    Pattern values = space->size() > 1 ? random_pattern_excluding(rng, labels, limit, 2)
                                       : Pattern::constant(limit);
    SetDescription exc =
        space->size() > 1 ? random_finite_set(rng) : SetDescription::empty_set();
    SymbolicSequence seq(space, Pattern::constant(limit), exc, values);
    for (const LambdaSeq& lambda :
         {LambdaSeq::identity(), LambdaSeq::ceil_sqrt(), LambdaSeq::half()}) {
        auto rep = check_convergence(seq, limit, lambda, cfg.horizon, cfg.eps);
        if (!rep.converges()) {
            return fail_json("eventually-constant sequence not statistically convergent",
                             Json{{"lambda", lambda.name()}, {"report", to_json(rep)}});
        }
    }
    return std::nullopt;
}

std::optional<Json> entry_fdss_forward(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    PlantedInstance inst = make_planted(rng);
    ExtractionReport rep =
        extract_full_density_subsequence(inst.seq, inst.limit, inst.lambda, cfg.horizon);
    for (const auto& cp : rep.density) {
        if (cp.n * 10 >= cfg.horizon && cp.ratio < 0.9) {
            return fail_json("extracted index set is not asymptotically full",
                             Json{{"report", to_json(rep)}, {"lambda", inst.lambda.name()}});
        }
    }
    for (const auto& chk : rep.neighborhood) {
        if (!chk.ok) {
            return fail_json("extracted subsequence leaves the limit neighborhood",
                             Json{{"report", to_json(rep)}});
        }
    }
    return std::nullopt;
}

std::optional<Json> entry_fdss_backward(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    // Sequence equal to the limit on a full-density G and arbitrary off it:
    // the G-subsequence converges strongly by construction, so the whole
    // sequence must be statistically convergent.
    PlantedInstance inst = make_planted(rng);
    SetDescription g = SetDescription::compl_of(inst.exceptions);
    DensityVerdict gv = classify_null(SetDescription::compl_of(g), inst.lambda, cfg.horizon, cfg.eps);
    if (!gv.is_null()) {
        return fail_json("generator bug: planted exception set is not null",
                         Json{{"verdict", to_json(gv)}});
    }
    auto rep = check_convergence(inst.seq, inst.limit, inst.lambda, cfg.horizon, cfg.eps);
    if (!rep.converges()) {
        return fail_json("full-density convergent subsequence did not carry over",
                         Json{{"report", to_json(rep)}});
    }
    return std::nullopt;
}

std::optional<Json> entry_agree_almost_everywhere(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    auto space = random_space(rng);
    const auto& labels = space->points();
    if (space->size() < 2) return std::nullopt;
    std::string limit = labels[rng.below(labels.size())];
    LambdaSeq lambda = random_lambda(rng);
    Pattern values = random_pattern_excluding(rng, labels, limit, 2);
    // g: strongly convergent (finite exceptions); x agrees with g off a null set.
    SetDescription finite_part = random_finite_set(rng);
    SetDescription null_part = random_null_exceptions(rng, lambda);
    SymbolicSequence g(space, Pattern::constant(limit), finite_part, values);
    SymbolicSequence x(space, Pattern::constant(limit),
                       SetDescription::union_of(finite_part, null_part), values);
    auto rep = check_convergence(x, limit, lambda, cfg.horizon, cfg.eps);
    if (!rep.converges()) {
        return fail_json("agreement almost everywhere did not transfer the limit",
                         Json{{"report", to_json(rep)}, {"g", to_json(g)}});
    }
    return std::nullopt;
}

std::optional<Json> entry_convergent_implies_cauchy(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    PlantedInstance inst = make_planted(rng);
    CauchyReport rep = check_cauchy(inst.seq, inst.lambda, cfg.horizon, cfg.eps);
    if (!rep.cauchy) {
        return fail_json("convergent instance not Cauchy", Json{{"report", to_json(rep)}});
    }
    return std::nullopt;
}

std::optional<Json> entry_pairwise_off_null(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    PlantedInstance inst = make_planted(rng);
    PairOffReport rep = pair_off_null_set(inst.seq, inst.lambda, cfg.horizon, cfg.eps, 10'000,
                                          derive_seed(seed, 7));
    for (const auto& e : rep.entries) {
        if (!e.h_verdict.is_null()) {
            return fail_json("excluded pair set is not null",
                             Json{{"t", to_double(e.t)}, {"verdict", to_json(e.h_verdict)}});
        }
        if (e.pairs_checked == 0) {
            return fail_json("no pairs could be sampled outside the null set",
                             Json{{"t", to_double(e.t)}});
        }
    }
    return std::nullopt;
}

std::optional<Json> entry_distance_seq_cauchy(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    auto space = random_space(rng);
    const auto& labels = space->points();
    LambdaSeq lambda = random_lambda(rng);
    auto planted_on = [&](const std::string& limit) {
        SetDescription exc = space->size() > 1 ? random_null_exceptions(rng, lambda)
                                               : SetDescription::empty_set();
        Pattern values = space->size() > 1 ? random_pattern_excluding(rng, labels, limit, 2)
                                           : Pattern::constant(limit);
        return SymbolicSequence(space, Pattern::constant(limit), exc, values);
    };
    SymbolicSequence x = planted_on(labels[rng.below(labels.size())]);
    SymbolicSequence g = planted_on(labels[rng.below(labels.size())]);
    DistanceSeqReport rep = pairwise_distance_sequence(x, g, lambda, cfg.horizon, cfg.eps);
    if (!rep.cauchy) {
        return fail_json("distance sequence of two Cauchy sequences is not Cauchy",
                         Json{{"x", to_json(x)}, {"g", to_json(g)}, {"lambda", lambda.name()}});
    }
    return std::nullopt;
}

std::optional<Json> entry_metric_cauchy_equivalences(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    LambdaSeq lambda = random_lambda(rng);
    std::vector<Rat> grid{Rat(1, 8), Rat(1, 2), Rat(1), Rat(2)};
    FiniteValuedMetricSeq seq;
    bool expect_cauchy = true;
    switch (rng.below(4)) {
        case 0:
            seq = rational_metric_seq({Rat(rng.range(0, 8), 4)}, {SetDescription::all()});
            break;
        case 1: {
            SetDescription e = random_exact_null_exceptions(rng);
            seq = rational_metric_seq({Rat(0), Rat(rng.range(1, 12), 4)},
                                      {SetDescription::compl_of(e), e});
            break;
        }
        case 2:
            seq = rational_metric_seq({Rat(0), Rat(1)},
                                      {SetDescription::ap(1, 2), SetDescription::ap(2, 2)});
            expect_cauchy = false;
            break;
        default: {
            auto space = random_space(rng);
            const auto& labels = space->points();
            auto planted_on = [&](const std::string& limit) {
                SetDescription exc = space->size() > 1 ? random_exact_null_exceptions(rng)
                                                       : SetDescription::empty_set();
                Pattern values = space->size() > 1
                                     ? random_pattern_excluding(rng, labels, limit, 2)
                                     : Pattern::constant(limit);
                return SymbolicSequence(space, Pattern::constant(limit), exc, values);
            };
            SymbolicSequence x = planted_on(labels[rng.below(labels.size())]);
            SymbolicSequence g = planted_on(labels[rng.below(labels.size())]);
            seq = pairwise_distance_sequence(x, g, lambda, cfg.horizon, cfg.eps).seq;
            grid = space->threshold_grid();
            break;
        }
    }
    TriEquivalenceReport rep = check_cauchy_equivalences(seq, lambda, grid, cfg.horizon, cfg.eps);
    if (!rep.all_agree) {
        return fail_json("the three Cauchy characterizations disagree", to_json(rep));
    }
    if (rep.cauchy != expect_cauchy) {
        return fail_json("unexpected Cauchy verdict",
                         Json{{"expected", expect_cauchy}, {"report", to_json(rep)}});
    }
    return std::nullopt;
}

SymbolicSequence random_wandering_sequence(Rng& rng, std::shared_ptr<const PMSpace> space,
                                           const LambdaSeq& lambda) {
    const auto& labels = space->points();
    Pattern base = random_pattern(rng, labels, 3);
    SetDescription exc = SetDescription::empty_set();
    switch (rng.below(4)) {
        case 0: exc = random_finite_set(rng); break;
        case 1: exc = SetDescription::squares(); break;
        case 2: exc = SetDescription::ap(rng.range(1, 20), rng.range(2, 7)); break;
        default:
            exc = lambda.family() == LambdaSeq::Family::CeilSqrt ? SetDescription::squares()
                                                                 : geometric_windows(4);
            break;
    }
    Pattern values = random_pattern(rng, labels, 2);
    return SymbolicSequence(std::move(space), base, exc, values);
}

std::optional<Json> entry_limit_cluster_chain(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    LambdaSeq lambda = random_lambda(rng);
    SymbolicSequence seq = random_wandering_sequence(rng, random_space(rng), lambda);
    PointSets ps = point_sets(seq, lambda, cfg.horizon, cfg.eps);  // asserts the chain
    (void)ps;
    return std::nullopt;
}

std::optional<Json> entry_convergent_point_sets(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    PlantedInstance inst = make_planted(rng);
    PointSets ps = point_sets(inst.seq, inst.lambda, cfg.horizon, cfg.eps);
    std::vector<std::string> expected{inst.limit};
    if (ps.stat_limit_points != expected || ps.stat_cluster_points != expected) {
        return fail_json("convergent sequence must have singleton limit/cluster sets",
                         Json{{"expected", inst.limit},
                              {"stat_limit", ps.stat_limit_points},
                              {"stat_cluster", ps.stat_cluster_points}});
    }
    return std::nullopt;
}

std::optional<Json> entry_null_difference_invariance(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    auto space = random_space(rng);
    LambdaSeq lambda = random_lambda(rng);
    const auto& labels = space->points();
    Pattern base = random_pattern(rng, labels, 3);
    Pattern values = random_pattern(rng, labels, 2);
    SetDescription e1 = random_exact_null_exceptions(rng);
    SetDescription e2 = random_exact_null_exceptions(rng);
    SymbolicSequence x(space, base, e1, values);
    SymbolicSequence y(space, base, SetDescription::union_of(e1, e2), values);
    PointSets px = point_sets(x, lambda, cfg.horizon, cfg.eps);
    PointSets py = point_sets(y, lambda, cfg.horizon, cfg.eps);
    if (px.stat_limit_points != py.stat_limit_points ||
        px.stat_cluster_points != py.stat_cluster_points) {
        return fail_json("sequences differing on a null set have different point sets",
                         Json{{"x_limit", px.stat_limit_points},
                              {"y_limit", py.stat_limit_points},
                              {"x_cluster", px.stat_cluster_points},
                              {"y_cluster", py.stat_cluster_points}});
    }
    return std::nullopt;
}

std::optional<Json> entry_cluster_set_closed(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    LambdaSeq lambda = random_lambda(rng);
    auto space = random_space(rng);
    SymbolicSequence seq = random_wandering_sequence(rng, space, lambda);
    PointSets ps = point_sets(seq, lambda, cfg.horizon, cfg.eps);
    if (ps.stat_cluster_points.empty()) {
        return fail_json("cluster set of a finite-space sequence cannot be empty", Json::object());
    }
    auto closure = strong_closure(*space, ps.stat_cluster_points);
    if (closure != ps.stat_cluster_points) {
        return fail_json("cluster set is not strongly closed",
                         Json{{"cluster", ps.stat_cluster_points}, {"closure", closure}});
    }
    return std::nullopt;
}

std::optional<Json> entry_compact_disjoint_null(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    LambdaSeq lambda = random_lambda(rng);
    auto space = random_space(rng);
    SymbolicSequence seq = random_wandering_sequence(rng, space, lambda);
    PointSets ps = point_sets(seq, lambda, cfg.horizon, cfg.eps);
    std::set<std::string> gamma(ps.stat_cluster_points.begin(), ps.stat_cluster_points.end());
    SetDescription visits = SetDescription::empty_set();
    std::vector<std::string> c;
    for (const auto& label : space->points()) {
        if (!gamma.count(label)) {
            c.push_back(label);
            visits = SetDescription::union_of(visits, seq.fiber(label));
        }
    }
    if (c.empty()) return std::nullopt;  // nothing disjoint from the cluster set
    DensityVerdict v = classify_null(visits, lambda, cfg.horizon, cfg.eps);
    if (!v.is_null()) {
        return fail_json("visits to a compact set disjoint from the cluster set are not null",
                         Json{{"c", c}, {"verdict", to_json(v)}});
    }
    return std::nullopt;
}

std::optional<Json> entry_nonthin_cluster_nonempty(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    LambdaSeq lambda = random_lambda(rng);
    auto space = random_space(rng);
    SymbolicSequence seq = random_wandering_sequence(rng, space, lambda);
    // The base pattern guarantees a nonthin subsequence inside the (compact)
    // ground set.
    PointSets ps = point_sets(seq, lambda, cfg.horizon, cfg.eps);
    if (ps.stat_cluster_points.empty()) {
        return fail_json("nonthin bounded subsequence but empty cluster set", Json::object());
    }
    auto closure = strong_closure(*space, ps.stat_cluster_points);
    if (closure != ps.stat_cluster_points) {
        return fail_json("cluster set is not strongly closed",
                         Json{{"cluster", ps.stat_cluster_points}, {"closure", closure}});
    }
    return std::nullopt;
}

std::optional<Json> entry_stat_bounded_cluster_compact(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    LambdaSeq lambda = random_lambda(rng);
    auto space = random_space(rng);
    const auto& labels = space->points();
    // C: the base labels; exceptions (null) may wander anywhere.
    Pattern base = random_pattern(rng, labels, 2);
    std::set<std::string> c_set(base.labels().begin(), base.labels().end());
    SetDescription exc = random_null_exceptions(rng, lambda);
    Pattern values = random_pattern(rng, labels, 2);
    SymbolicSequence seq(space, base, exc, values);
    DensityVerdict outside = classify_null(
        [&] {
            std::vector<bool> mask(space->size());
            for (std::size_t i = 0; i < space->size(); ++i) {
                mask[i] = !c_set.count(space->points()[i]);
            }
            return seq.index_set_where(mask);
        }(),
        lambda, cfg.horizon, cfg.eps);
    if (!outside.is_null()) {
        return fail_json("generator bug: sequence is not statistically bounded by C",
                         Json{{"verdict", to_json(outside)}});
    }
    PointSets ps = point_sets(seq, lambda, cfg.horizon, cfg.eps);
    if (ps.stat_cluster_points.empty()) {
        return fail_json("statistically bounded sequence with empty cluster set", Json::object());
    }
    for (const auto& label : ps.stat_cluster_points) {
        if (!c_set.count(label)) {
            return fail_json("cluster point escapes the bounding compact set",
                             Json{{"label", label}, {"cluster", ps.stat_cluster_points}});
        }
    }
    auto closure = strong_closure(*space, ps.stat_cluster_points);
    if (closure != ps.stat_cluster_points) {
        return fail_json("cluster set is not strongly closed", Json{{"closure", closure}});
    }
    return std::nullopt;
}

std::optional<Json> entry_space_axioms(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    auto space = random_space(rng, 2, 6);
    if (cfg.inject_fault == "axiom3" && space->size() >= 2) {
        // Rebuild with one asymmetric pair; the verifier must reject it, and
        // the suite reports that as an entry failure with a witness.
        PMSpace::DistTable table;
        const auto& pts = space->points();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = 0; j < pts.size(); ++j) {
                if (i != j) table.emplace(std::make_pair(pts[i], pts[j]), space->dist(i, j));
            }
        }
        table.insert_or_assign({pts[0], pts[1]}, StepDistFn::unit_step(ExtReal(Rat(1))));
        table.insert_or_assign({pts[1], pts[0]}, StepDistFn::unit_step(ExtReal(Rat(2))));
        PMSpace corrupted(pts, table, space->tau());
        AxiomReport rep = verify_axioms(corrupted);
        if (!rep.pass) {
            return fail_json("axiom check failed", to_json(rep));
        }
        return std::nullopt;
    }
    AxiomReport rep = verify_axioms(*space);
    if (!rep.pass) {
        return fail_json("generated space violates the axioms", to_json(rep));
    }
    return std::nullopt;
}

std::optional<Json> entry_density_calculus(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    LambdaSeq lambda = random_lambda(rng);
    Index step = rng.range(2, 9);
    Index first = rng.range(1, step);
    SetDescription prog = SetDescription::ap(first, step);
    DensityVerdict v = exact_density(prog, lambda, cfg.horizon);
    if (v.kind != DensityVerdict::Kind::Exact || *v.exact_value != Rat(1, step)) {
        return fail_json("progression density is not 1/step", to_json(v));
    }
    for (const auto& cp : v.evidence) {
        double err = std::abs(cp.ratio - 1.0 / static_cast<double>(step));
        if (err > static_cast<double>(step) / static_cast<double>(cp.lambda_n)) {
            return fail_json("window counts drift from the exact density",
                             Json{{"checkpoint", to_json(cp)}});
        }
    }
    DensityVerdict comp = exact_density(SetDescription::compl_of(prog), lambda, cfg.horizon);
    if (comp.kind != DensityVerdict::Kind::Exact ||
        *comp.exact_value != Rat(1) - Rat(1, step)) {
        return fail_json("complement rule failed", to_json(comp));
    }
    SetDescription n1 = random_exact_null_exceptions(rng);
    SetDescription n2 = random_exact_null_exceptions(rng);
    DensityVerdict un = exact_density(SetDescription::union_of(n1, n2), lambda, cfg.horizon);
    if (!un.is_null()) return fail_json("null union rule failed", to_json(un));
    DensityVerdict sub = exact_density(SetDescription::inter_of(n1, prog), lambda, cfg.horizon);
    if (!sub.is_null()) return fail_json("subset monotonicity failed", to_json(sub));
    // Identity lambda reduces to natural density.
    DensityCheckpoint nat = empirical_density(prog, LambdaSeq::identity(), 100000);
    Index expected = prog.count(1, 100000);
    if (nat.count != expected) {
        return fail_json("identity-lambda count mismatch", to_json(nat));
    }
    return std::nullopt;
}

std::optional<Json> entry_neighborhood_vicinity(std::uint64_t seed, const SuiteConfig& cfg) {
    (void)cfg;
    Rng rng(seed);
    auto space = random_space(rng, 2, 6);
    std::vector<std::string> prev;
    for (const Rat& r : space->threshold_grid()) {
        Vicinity v = vicinity(*space, r);
        std::vector<std::string> all_pts;
        for (std::size_t x = 0; x < space->size(); ++x) {
            const std::string& label = space->points()[x];
            auto nbhd = strong_neighborhood(*space, label, r);
            std::vector<std::string> via_vicinity;
            for (std::size_t y = 0; y < space->size(); ++y) {
                if (v.member[x][y]) via_vicinity.push_back(space->points()[y]);
            }
            if (nbhd != via_vicinity) {
                return fail_json("neighborhood and vicinity disagree",
                                 Json{{"point", label}, {"r", to_double(r)}});
            }
            if (r <= space->min_separation() && nbhd != std::vector<std::string>{label}) {
                return fail_json("neighborhood below the separation scale is not a singleton",
                                 Json{{"point", label}, {"r", to_double(r)}});
            }
        }
        (void)prev;
    }
    // Monotonicity in r and closure laws on a random subset.
    const auto& grid = space->threshold_grid();
    for (std::size_t x = 0; x < space->size(); ++x) {
        std::vector<std::string> last;
        for (std::size_t gi = 0; gi < grid.size(); ++gi) {
            auto cur = strong_neighborhood(*space, space->points()[x], grid[gi]);
            if (gi > 0) {
                for (const auto& l : last) {
                    if (std::find(cur.begin(), cur.end(), l) == cur.end()) {
                        return fail_json("neighborhood not monotone in r",
                                         Json{{"point", space->points()[x]}});
                    }
                }
            }
            last = cur;
        }
    }
    std::vector<std::string> subset;
    for (const auto& l : space->points()) {
        if (rng.coin()) subset.push_back(l);
    }
    if (subset.empty()) subset.push_back(space->points().front());
    auto k1 = strong_closure(*space, subset);
    auto k2 = strong_closure(*space, k1);
    for (const auto& l : subset) {
        if (std::find(k1.begin(), k1.end(), l) == k1.end()) {
            return fail_json("closure is not extensive", Json{{"label", l}});
        }
    }
    if (k1 != k2) return fail_json("closure is not idempotent", Json{{"k1", k1}, {"k2", k2}});
    return std::nullopt;
}

std::optional<Json> entry_triangle_laws(std::uint64_t seed, const SuiteConfig& cfg) {
    (void)cfg;
    Rng rng(seed);
    TriangleFn tau = random_tau(rng);
    LawReport rep = verify_triangle_laws(tau, 20, derive_seed(seed, 11));
    if (!rep.pass()) {
        return fail_json("triangle law violated", Json{{"tau", tau.name()}, {"report", to_json(rep)}});
    }
    return std::nullopt;
}

std::optional<Json> entry_levy_metric(std::uint64_t seed, const SuiteConfig& cfg) {
    (void)cfg;
    Rng rng(seed);
    const double tol = 1e-9;
    StepDistFn f = random_distance_fn(rng);
    StepDistFn g = random_distance_fn(rng);
    StepDistFn h = random_distance_fn(rng);
    LevyDistance fg = levy_distance(f, g, tol);
    LevyDistance gf = levy_distance(g, f, tol);
    if (fg.value != gf.value) {
        return fail_json("asymmetric distance", Json{{"fg", fg.value}, {"gf", gf.value}});
    }
    if (f != g && fg.value <= 3 * tol) {
        return fail_json("distinct functions at distance zero", Json{{"f", f.str()}, {"g", g.str()}});
    }
    LevyDistance fh = levy_distance(f, h, tol);
    LevyDistance gh = levy_distance(g, h, tol);
    if (fh.value > fg.value + gh.value + 3 * tol) {
        return fail_json("triangle inequality violated",
                         Json{{"fh", fh.value}, {"fg", fg.value}, {"gh", gh.value}});
    }
    // Threshold form against the bisection route.
    Rat theta = exact_levy_to_zero_step(f);
    double dl = levy_distance(f, StepDistFn::unit_step(ExtReal(0)), tol).value;
    if (std::abs(dl - to_double(theta)) > 2 * tol) {
        return fail_json("closed-form and bisection distances disagree",
                         Json{{"exact", to_double(theta)}, {"bisection", dl}});
    }
    for (int i = 1; i <= 19; ++i) {
        Rat t(i, 20);
        if (std::abs(to_double(t) - dl) <= 2 * tol) continue;  // boundary band
        bool near = near_zero_step(f, t);
        if (near != (dl < to_double(t))) {
            return fail_json("threshold criterion disagrees with the metric",
                             Json{{"t", to_double(t)}, {"dl", dl}, {"near", near}});
        }
    }
    return std::nullopt;
}

const std::vector<EntryDef>& suite_entries() {
    static const std::vector<EntryDef> entries{
        {"limit_uniqueness", entry_limit_uniqueness},
        {"strong_implies_stat", entry_strong_implies_stat},
        {"full_density_subsequence_forward", entry_fdss_forward},
        {"full_density_subsequence_backward", entry_fdss_backward},
        {"agree_almost_everywhere", entry_agree_almost_everywhere},
        {"convergent_implies_cauchy", entry_convergent_implies_cauchy},
        {"pairwise_off_null", entry_pairwise_off_null},
        {"distance_seq_cauchy", entry_distance_seq_cauchy},
        {"metric_cauchy_equivalences", entry_metric_cauchy_equivalences},
        {"limit_cluster_chain", entry_limit_cluster_chain},
        {"convergent_point_sets", entry_convergent_point_sets},
        {"null_difference_invariance", entry_null_difference_invariance},
        {"cluster_set_closed", entry_cluster_set_closed},
        {"compact_disjoint_null", entry_compact_disjoint_null},
        {"nonthin_cluster_nonempty", entry_nonthin_cluster_nonempty},
        {"stat_bounded_cluster_compact", entry_stat_bounded_cluster_compact},
        {"space_axioms", entry_space_axioms},
        {"density_calculus", entry_density_calculus},
        {"neighborhood_vicinity", entry_neighborhood_vicinity},
        {"triangle_laws", entry_triangle_laws},
        {"levy_metric", entry_levy_metric},
    };
    return entries;
}

}  // namespace

std::vector<std::string> suite_entry_ids() {
    std::vector<std::string> ids;
    for (const auto& e : suite_entries()) ids.push_back(e.id);
    return ids;
}

SuiteReport run_suite(const SuiteConfig& config) {
    std::vector<EntryDef> selected;
    if (config.ids.empty()) {
        selected = suite_entries();
    } else {
        for (const auto& id : config.ids) {
            auto it = std::find_if(suite_entries().begin(), suite_entries().end(),
                                   [&](const EntryDef& e) { return e.id == id; });
            if (it == suite_entries().end()) {
                throw std::invalid_argument("run_suite: unknown entry id " + id);
            }
            selected.push_back(*it);
        }
    }
    SuiteReport report;
    report.seed = config.seed;
    report.horizon = config.horizon;
    report.eps = config.eps;
    report.instances = config.instances;
    for (std::size_t ei = 0; ei < selected.size(); ++ei) {
        const EntryDef& entry = selected[ei];
        SuiteEntryResult res;
        res.id = entry.id;
        res.instances = config.instances;
        for (int inst = 0; inst < config.instances; ++inst) {
            std::uint64_t inst_seed = derive_seed(config.seed, ei + 1, inst);
            std::optional<Json> witness;
            try {
                witness = entry.fn(inst_seed, config);
            } catch (const std::exception& e) {
                witness = Json{{"reason", "exception"}, {"what", e.what()}};
            }
            if (!witness) {
                ++res.passed;
                continue;
            }
            if (res.first_counterexample.empty()) {
                res.first_counterexample = witness->value("reason", "failure");
                if (!config.witness_dir.empty()) {
                    Json file{{"entry", entry.id},
                              {"instance", inst},
                              {"instance_seed", inst_seed},
                              {"witness", *witness}};
                    std::filesystem::create_directories(config.witness_dir);
                    write_file(config.witness_dir + "/witness_" + entry.id + ".json",
                               file.dump(2) + "\n");
                }
            }
        }
        res.pass = res.passed == res.instances;
        report.overall_pass = report.overall_pass && res.pass;
        report.entries.push_back(std::move(res));
    }
    return report;
}

Json to_json(const SuiteReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        entries.push_back(Json{{"id", e.id},
                               {"instances", e.instances},
                               {"passed", e.passed},
                               {"pass", e.pass},
                               {"first_counterexample", e.first_counterexample}});
    }
    return Json{{"seed", report.seed},
                {"horizon", report.horizon},
                {"eps", report.eps},
                {"instances", report.instances},
                {"entries", entries},
                {"overall_pass", report.overall_pass}};
}

}  // namespace pmseq

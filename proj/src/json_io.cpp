#include "pmseq/json_io.hpp"

#include <fstream>
#include <sstream>

namespace pmseq {

Json ext_real_to_json(const ExtReal& x) {
    if (x.is_neg_inf()) return Json("-inf");
    if (x.is_pos_inf()) return Json("inf");
    return Json(to_double(x.value()));
}

ExtReal ext_real_from_json(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf") return ExtReal::pos_inf();
        if (s == "-inf") return ExtReal::neg_inf();
        throw std::invalid_argument("extended real: expected number, \"inf\" or \"-inf\"");
    }
    return ExtReal(rat_from_double(j.get<double>()));
}

Json to_json(const StepDistFn& f) {
    Json jumps = Json::array();
    for (const auto& jm : f.jumps()) {
        jumps.push_back(Json::array({ext_real_to_json(jm.loc), to_double(jm.val)}));
    }
    return Json{{"jumps", jumps}, {"distance", f.distance_flag()}};
}

StepDistFn step_dist_fn_from_json(const Json& j) {
    std::vector<Jump> jumps;
    for (const auto& e : j.at("jumps")) {
        jumps.push_back(Jump{ext_real_from_json(e.at(0)), rat_from_double(e.at(1).get<double>())});
    }
    bool distance = j.value("distance", false);
    return StepDistFn::from_jumps(std::move(jumps), distance);
}

Json to_json(const PMSpace& space) {
    Json dist = Json::array();
    for (std::size_t i = 0; i < space.size(); ++i) {
        for (std::size_t j = i + 1; j < space.size(); ++j) {
            dist.push_back(Json::array({space.points()[i], space.points()[j],
                                        to_json(space.dist(static_cast<int>(i), static_cast<int>(j)))}));
        }
    }
    return Json{{"points", space.points()}, {"tau", space.tau().name()}, {"dist", dist}};
}

std::shared_ptr<const PMSpace> pmspace_from_json(const Json& j) {
    std::vector<std::string> points = j.at("points").get<std::vector<std::string>>();
    TriangleFn tau(tnorm_from_name(j.at("tau").get<std::string>()));
    PMSpace::DistTable table;
    for (const auto& e : j.at("dist")) {
        table.emplace(std::make_pair(e.at(0).get<std::string>(), e.at(1).get<std::string>()),
                      step_dist_fn_from_json(e.at(2)));
    }
    return std::make_shared<PMSpace>(std::move(points), table, tau);
}

Json to_json(const SetDescription& s) {
    using K = SetDescription::Kind;
    switch (s.kind()) {
        case K::Finite:
            return Json{{"kind", "finite"}, {"members", s.finite_members()}};
        case K::AP:
            return Json{{"kind", "ap"}, {"first", s.ap_first()}, {"step", s.ap_step()}};
        case K::Squares:
            return Json{{"kind", "squares"}};
        case K::Interval: {
            Json out{{"kind", "interval"}, {"lo", s.interval_bounds().lo}};
            if (s.interval_unbounded()) {
                out["hi"] = nullptr;
            } else {
                out["hi"] = s.interval_bounds().hi;
            }
            return out;
        }
        case K::Windows: {
            const auto& c = s.windows_centers();
            Json centers = c.geometric()
                               ? Json{{"kind", "geometric"}, {"base", c.base}, {"first_exp", c.first_exp}}
                               : Json{{"kind", "list"}, {"values", c.list}};
            return Json{{"kind", "windows"}, {"lambda", to_json(s.windows_lambda())},
                        {"centers", centers}};
        }
        case K::Union:
            return Json{{"kind", "union"}, {"left", to_json(s.left())}, {"right", to_json(s.right())}};
        case K::Inter:
            return Json{{"kind", "inter"}, {"left", to_json(s.left())}, {"right", to_json(s.right())}};
        case K::Compl:
            return Json{{"kind", "compl"}, {"inner", to_json(s.inner())}};
    }
    throw std::logic_error("SetDescription: bad kind");
}

SetDescription set_description_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite") {
        return SetDescription::finite(j.at("members").get<std::vector<Index>>());
    }
    if (kind == "ap") {
        return SetDescription::ap(j.at("first").get<Index>(), j.at("step").get<Index>());
    }
    if (kind == "squares") return SetDescription::squares();
    if (kind == "interval") {
        std::optional<Index> hi;
        if (j.contains("hi") && !j.at("hi").is_null()) hi = j.at("hi").get<Index>();
        return SetDescription::interval(j.at("lo").get<Index>(), hi);
    }
    if (kind == "windows") {
        const Json& c = j.at("centers");
        SetDescription::Centers centers;
        if (c.at("kind").get<std::string>() == "geometric") {
            centers.base = c.at("base").get<Index>();
            centers.first_exp = c.value("first_exp", Index(1));
        } else {
            centers.list = c.at("values").get<std::vector<Index>>();
        }
        return SetDescription::windows(lambda_from_json(j.at("lambda")), std::move(centers));
    }
    if (kind == "union") {
        return SetDescription::union_of(set_description_from_json(j.at("left")),
                                        set_description_from_json(j.at("right")));
    }
    if (kind == "inter") {
        return SetDescription::inter_of(set_description_from_json(j.at("left")),
                                        set_description_from_json(j.at("right")));
    }
    if (kind == "compl") {
        return SetDescription::compl_of(set_description_from_json(j.at("inner")));
    }
    throw std::invalid_argument("SetDescription: unknown kind " + kind);
}

Json to_json(const LambdaSeq& lambda) {
    if (lambda.family() == LambdaSeq::Family::Custom) {
        return Json{{"table", lambda.table()}};
    }
    return Json(lambda.name());
}

LambdaSeq lambda_from_json(const Json& j) {
    if (j.is_string()) return LambdaSeq::from_name(j.get<std::string>());
    return LambdaSeq::custom(j.at("table").get<std::vector<Index>>());
}

Json to_json(const Pattern& p) {
    if (p.period() == 1) return Json{{"kind", "const"}, {"label", p.labels().front()}};
    return Json{{"kind", "periodic"}, {"labels", p.labels()}};
}

Pattern pattern_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "const") return Pattern::constant(j.at("label").get<std::string>());
    if (kind == "periodic") {
        return Pattern::periodic(j.at("labels").get<std::vector<std::string>>());
    }
    throw std::invalid_argument("Pattern: unknown kind " + kind);
}

Json to_json(const SymbolicSequence& seq) {
    return Json{{"space", to_json(seq.space())},
                {"base", to_json(seq.base())},
                {"exceptions", to_json(seq.exceptions())},
                {"exception_values", to_json(seq.exception_values())}};
}

SymbolicSequence sequence_from_json(const Json& j) {
    return SymbolicSequence(pmspace_from_json(j.at("space")), pattern_from_json(j.at("base")),
                            set_description_from_json(j.at("exceptions")),
                            pattern_from_json(j.at("exception_values")));
}

Json to_json(const DensityCheckpoint& cp) {
    return Json{{"n", cp.n}, {"count", cp.count}, {"lambda_n", cp.lambda_n}, {"ratio", cp.ratio}};
}

Json to_json(const DensityVerdict& v) {
    Json out{{"kind", v.kind_name()}};
    if (v.exact_value) out["value"] = to_double(*v.exact_value);
    if (v.limsup_estimate >= 0.0) {
        out["limsup"] = v.limsup_estimate;
        out["liminf"] = v.liminf_estimate;
    }
    Json ev = Json::array();
    for (const auto& cp : v.evidence) ev.push_back(to_json(cp));
    out["evidence"] = ev;
    return out;
}

Json to_json(const AxiomReport& r) {
    return Json{{"pass", r.pass},
                {"failed_axiom", r.failed_axiom},
                {"witness", r.witness},
                {"detail", r.detail}};
}

Json to_json(const LawReport& r) {
    return Json{{"samples", r.samples},     {"commutative", r.commutative},
                {"associative", r.associative}, {"monotone", r.monotone},
                {"identity", r.identity},   {"counterexample", r.counterexample},
                {"pass", r.pass()}};
}

Json to_json(const ConvergenceReport& r) {
    Json per_t = Json::array();
    for (const auto& ev : r.per_t) {
        per_t.push_back(Json{{"t", to_double(ev.t)},
                             {"exception_set", to_json(ev.exception_set)},
                             {"verdict", to_json(ev.verdict)},
                             {"dl_form_agrees", ev.dl_form_agrees}});
    }
    return Json{{"verdict", r.verdict_name()}, {"candidate", r.candidate},
                {"lambda", r.lambda_name},     {"horizon", r.horizon},
                {"eps", r.eps},                {"per_t", per_t}};
}

Json to_json(const CauchyReport& r) {
    Json per_t = Json::array();
    for (const auto& ev : r.per_t) {
        Json e{{"t", to_double(ev.t)}};
        if (ev.witness_index) {
            e["witness_index"] = *ev.witness_index;
            e["witness_label"] = ev.witness_label;
        } else {
            e["witness_index"] = nullptr;
        }
        e["exception_set"] = to_json(ev.exception_set);
        e["verdict"] = to_json(ev.verdict);
        per_t.push_back(std::move(e));
    }
    return Json{{"cauchy", r.cauchy}, {"lambda", r.lambda_name}, {"horizon", r.horizon},
                {"eps", r.eps},       {"per_t", per_t}};
}

Json to_json(const PairOffReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        entries.push_back(Json{{"t", to_double(e.t)},
                               {"eta", to_double(e.eta)},
                               {"anchor", e.anchor},
                               {"null_set", to_json(e.h_t)},
                               {"full_set", to_json(e.g_t)},
                               {"null_verdict", to_json(e.h_verdict)},
                               {"pairs_checked", e.pairs_checked}});
    }
    return Json{{"entries", entries}};
}

Json to_json(const ExtractionReport& r) {
    Json stages = Json::array();
    for (const auto& [t, u] : r.stage_entry) stages.push_back(Json::array({t, u}));
    Json density = Json::array();
    for (const auto& cp : r.density) density.push_back(to_json(cp));
    Json nbhd = Json::array();
    for (const auto& c : r.neighborhood) {
        nbhd.push_back(Json{{"t", to_double(c.t)},
                            {"stage", c.stage},
                            {"from", c.from},
                            {"ok", c.ok},
                            {"checked", c.checked}});
    }
    return Json{{"g", to_json(r.g)},
                {"stage_entry", stages},
                {"density", density},
                {"neighborhood", nbhd}};
}

Json to_json(const PointSets& r) {
    return Json{{"strong_limit_points", r.strong_limit_points},
                {"stat_limit_points", r.stat_limit_points},
                {"stat_cluster_points", r.stat_cluster_points}};
}

Json to_json(const TriEquivalenceReport& r) {
    Json per_eta = Json::array();
    for (const auto& e : r.per_eta) {
        per_eta.push_back(Json{{"eta", to_double(e.eta)},
                               {"anchor_form", e.anchor_form},
                               {"pair_form", e.pair_form},
                               {"nested_form", e.nested_form}});
    }
    return Json{{"all_agree", r.all_agree}, {"cauchy", r.cauchy}, {"per_eta", per_eta}};
}

std::string checkpoints_to_csv(const std::vector<DensityCheckpoint>& cps) {
    std::ostringstream os;
    os << "n,count,lambda_n,ratio\n";
    for (const auto& cp : cps) {
        os << cp.n << "," << cp.count << "," << cp.lambda_n << "," << cp.ratio << "\n";
    }
    return os.str();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace pmseq

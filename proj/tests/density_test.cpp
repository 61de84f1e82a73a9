#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pmseq/density.hpp"
#include "pmseq/json_io.hpp"
#include "pmseq/rng.hpp"

using namespace pmseq;

TEST_CASE("lambda families satisfy the admissibility conditions") {
    for (const char* name : {"identity", "ceil-sqrt", "half"}) {
        LambdaSeq lam = LambdaSeq::from_name(name);
        auto bad = check_lambda_conditions([&](Index n) { return lam(n); }, 1'000'000);
        CHECK(!bad.has_value());
    }
    CHECK(LambdaSeq::identity()(1) == 1);
    CHECK(LambdaSeq::ceil_sqrt()(1) == 1);
    CHECK(LambdaSeq::half()(1) == 1);
}

TEST_CASE("inadmissible sequences are rejected with a witness") {
    auto doubled = validate_lambda([](Index n) { return 2 * n; }, 1000);
    REQUIRE(doubled.violation.has_value());
    CHECK(doubled.violation->n == 1);
    CHECK(doubled.violation->condition == "lambda_1 = 1");

    auto jump = validate_lambda([](Index n) { return n < 10 ? n : n + 5; }, 1000);
    REQUIRE(jump.violation.has_value());
    CHECK(jump.violation->condition == "lambda_{n+1} <= lambda_n + 1");
    CHECK(jump.violation->n == 10);

    auto drop = validate_lambda([](Index n) { return n < 10 ? n : 5; }, 1000);
    REQUIRE(drop.violation.has_value());
    CHECK(drop.violation->condition == "nondecreasing");

    auto stalled = validate_lambda([](Index n) { return n < 4 ? n : 4; }, 1000);
    REQUIRE(stalled.violation.has_value());
    CHECK(stalled.violation->condition == "tends to infinity");

    auto ok = validate_lambda([](Index n) { return n; }, 1000, "identity");
    CHECK(!ok.violation.has_value());
    REQUIRE(ok.seq.has_value());
    CHECK((*ok.seq)(1000) == 1000);

    CHECK_THROWS_AS(LambdaSeq::custom({2, 3, 4}), std::invalid_argument);
}

TEST_CASE("windows") {
    CHECK(LambdaSeq::identity().window(10).lo == 1);
    CHECK(LambdaSeq::identity().window(10).hi == 10);
    CHECK(LambdaSeq::ceil_sqrt()(100) == 10);
    CHECK(LambdaSeq::ceil_sqrt().window(100).lo == 91);
    CHECK(LambdaSeq::ceil_sqrt().window(100).hi == 100);
    for (const char* name : {"identity", "ceil-sqrt", "half"}) {
        IndexInterval w = LambdaSeq::from_name(name).window(1);
        CHECK(w.lo == 1);
        CHECK(w.hi == 1);
    }
    CHECK(LambdaSeq::half().window(9).lo == 5);  // lambda_9 = 5
}

TEST_CASE("set membership and counting basics") {
    SetDescription evens = SetDescription::ap(2, 2);
    CHECK(evens.contains(2));
    CHECK(!evens.contains(3));
    CHECK(evens.count(1, 10) == 5);

    SetDescription sq = SetDescription::squares();
    CHECK(sq.contains(9));
    CHECK(!sq.contains(8));
    CHECK(sq.count(1, 100) == 10);

    SetDescription fin = SetDescription::finite({5, 1, 5, 9});
    CHECK(fin.count(1, 9) == 3);
    CHECK(fin.contains(5));
    CHECK(!fin.contains(2));

    SetDescription iv = SetDescription::interval(10, 20);
    CHECK(iv.count(1, 100) == 11);
    CHECK(iv.count(15, 100) == 6);
    SetDescription ray = SetDescription::interval(10, std::nullopt);
    CHECK(ray.contains(1'000'000'000));
    CHECK(!ray.contains(9));

    CHECK(SetDescription::compl_of(evens).contains(3));
    CHECK(SetDescription::union_of(evens, sq).contains(9));
    CHECK(SetDescription::inter_of(evens, sq).contains(4));
    CHECK(!SetDescription::inter_of(evens, sq).contains(9));
}

TEST_CASE("window-union sets") {
    SetDescription::Centers c;
    c.base = 4;
    c.first_exp = 1;
    SetDescription m = SetDescription::windows(LambdaSeq::ceil_sqrt(), c);
    // I_16 under ceil-sqrt is [13, 16].
    CHECK(m.contains(16));
    CHECK(m.contains(13));
    CHECK(!m.contains(12));
    CHECK(!m.contains(17));
    CHECK(m.contains(4));  // I_4 = [3, 4]
    CHECK(m.count(13, 16) == 4);

    SetDescription::Centers list;
    list.list = {10, 12};
    SetDescription m2 = SetDescription::windows(LambdaSeq::half(), list);
    // I_10 = [5,10], I_12 = [6,12]: union is [5,12].
    CHECK(m2.count(1, 20) == 8);
    CHECK(m2.contains(5));
    CHECK(!m2.contains(4));
}

TEST_CASE("closed-form counts match the member-by-member oracle") {
    Rng rng(31);
    std::vector<SetDescription> pool;
    pool.push_back(SetDescription::ap(3, 5));
    pool.push_back(SetDescription::squares());
    pool.push_back(SetDescription::finite({2, 30, 400, 5000, 60000}));
    pool.push_back(SetDescription::interval(100, 5000));
    {
        SetDescription::Centers c;
        c.base = 4;
        pool.push_back(SetDescription::windows(LambdaSeq::ceil_sqrt(), c));
    }
    for (int i = 0; i < 120; ++i) {
        SetDescription a = pool[rng.below(pool.size())];
        SetDescription b = pool[rng.below(pool.size())];
        SetDescription s = SetDescription::empty_set();
        switch (rng.below(4)) {
            case 0: s = SetDescription::union_of(a, b); break;
            case 1: s = SetDescription::inter_of(a, b); break;
            case 2: s = SetDescription::compl_of(a); break;
            default: s = SetDescription::union_of(SetDescription::compl_of(a), b); break;
        }
        Index lo = rng.range(1, 60000);
        Index hi = lo + rng.below(3000);
        CHECK(s.count(lo, hi) == oracles::count_loop(s, lo, hi));
    }
}

TEST_CASE("trivial algebra simplifications") {
    SetDescription e = SetDescription::empty_set();
    SetDescription all = SetDescription::all();
    SetDescription sq = SetDescription::squares();
    CHECK(SetDescription::union_of(e, sq).kind() == SetDescription::Kind::Squares);
    CHECK(SetDescription::inter_of(all, sq).kind() == SetDescription::Kind::Squares);
    CHECK(SetDescription::inter_of(e, sq).is_empty_syntactic());
    CHECK(SetDescription::union_of(all, sq).is_all_syntactic());
    CHECK(SetDescription::compl_of(SetDescription::compl_of(sq)).kind() ==
          SetDescription::Kind::Squares);
    CHECK(SetDescription::interval(10, 5).is_empty_syntactic());
}

TEST_CASE("empirical density worked examples") {
    SetDescription evens = SetDescription::ap(2, 2);
    DensityCheckpoint cp = empirical_density(evens, LambdaSeq::identity(), 10);
    CHECK(cp.count == 5);
    CHECK(cp.ratio == 0.5);

    CHECK(empirical_density(SetDescription::empty_set(), LambdaSeq::half(), 1000).count == 0);
    CHECK(empirical_density(SetDescription::all(), LambdaSeq::ceil_sqrt(), 1000).ratio == 1.0);
}

TEST_CASE("progression densities are exact for every family") {
    for (const char* name : {"identity", "ceil-sqrt", "half"}) {
        LambdaSeq lam = LambdaSeq::from_name(name);
        DensityVerdict v = exact_density(SetDescription::ap(1, 2), lam);
        REQUIRE(v.kind == DensityVerdict::Kind::Exact);
        CHECK(*v.exact_value == Rat(1, 2));
        for (const auto& cp : v.evidence) {
            CHECK(std::abs(cp.ratio - 0.5) <= 2.0 / static_cast<double>(cp.lambda_n));
        }
    }
    DensityVerdict v7 = exact_density(SetDescription::ap(4, 7), LambdaSeq::identity());
    CHECK(*v7.exact_value == Rat(1, 7));
}

TEST_CASE("progression window counts stay within the drift bound") {
    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        Index d = rng.range(2, 12);
        Index a = rng.range(1, d);
        LambdaSeq lam = LambdaSeq::from_name(
            std::vector<const char*>{"identity", "ceil-sqrt", "half"}[rng.below(3)]);
        Index n = rng.range(1000, 100000);
        DensityCheckpoint cp = empirical_density(SetDescription::ap(a, d), lam, n);
        CHECK(cp.ratio >= 0.0);
        CHECK(cp.ratio <= 1.0);
        CHECK(std::abs(cp.ratio - 1.0 / static_cast<double>(d)) <=
              static_cast<double>(d) / static_cast<double>(cp.lambda_n));
    }
}

TEST_CASE("density calculus rules") {
    LambdaSeq lam = LambdaSeq::ceil_sqrt();
    // Finite sets are null; complements of null sets are full.
    CHECK(*exact_density(SetDescription::finite({1, 2, 3}), lam).exact_value == 0);
    CHECK(*exact_density(SetDescription::compl_of(SetDescription::squares()), lam).exact_value == 1);
    // Unions of null sets are null.
    DensityVerdict un = exact_density(
        SetDescription::union_of(SetDescription::squares(), SetDescription::finite({7, 9})), lam);
    CHECK(un.is_null());
    // Subset monotonicity through intersections.
    DensityVerdict sub = exact_density(
        SetDescription::inter_of(SetDescription::squares(), SetDescription::ap(2, 2)), lam);
    CHECK(sub.is_null());
    // Null unions do not disturb exact densities.
    DensityVerdict mix = exact_density(
        SetDescription::union_of(SetDescription::squares(), SetDescription::ap(1, 4)), lam);
    REQUIRE(mix.kind == DensityVerdict::Kind::Exact);
    CHECK(*mix.exact_value == Rat(1, 4));
}

TEST_CASE("identity family reduces to natural density") {
    SetDescription evens = SetDescription::ap(2, 2);
    for (Index n : {Index(1000), Index(10000), Index(100000)}) {
        DensityCheckpoint cp = empirical_density(evens, LambdaSeq::identity(), n);
        CHECK(cp.count == n / 2);
        CHECK(cp.lambda_n == n);
    }
}

TEST_CASE("null classification of sparse and planted sets") {
    SetDescription sq = SetDescription::squares();
    DensityVerdict v = classify_null(sq, LambdaSeq::ceil_sqrt(), 1'000'000, 0.02);
    CHECK(v.is_null());

    SetDescription::Centers c;
    c.base = 4;
    SetDescription m = SetDescription::windows(LambdaSeq::ceil_sqrt(), c);
    DensityVerdict under_sqrt = classify_null(m, LambdaSeq::ceil_sqrt(), 1'000'000, 0.02);
    CHECK(!under_sqrt.is_null());
    CHECK((under_sqrt.kind == DensityVerdict::Kind::Oscillating ||
           under_sqrt.kind == DensityVerdict::Kind::Positive));
    CHECK(under_sqrt.limsup_estimate >= 0.5);

    DensityVerdict under_id = classify_null(m, LambdaSeq::identity(), 1'000'000, 0.02);
    CHECK(under_id.is_null());
    CHECK(under_id.limsup_estimate <= 0.02);

    DensityVerdict half_ap = classify_null(SetDescription::ap(2, 2), LambdaSeq::half(),
                                           1'000'000, 0.02);
    CHECK(half_ap.kind == DensityVerdict::Kind::Positive);

    CHECK_THROWS_AS(classify_null(sq, LambdaSeq::identity(), 100, 0.02), std::invalid_argument);
    CHECK_THROWS_AS(classify_null(sq, LambdaSeq::identity(), 10000, 0.0), std::invalid_argument);
}

TEST_CASE("oscillation detection along planted window unions") {
    SetDescription::Centers c;
    c.base = 4;
    SetDescription m = SetDescription::windows(LambdaSeq::ceil_sqrt(), c);
    DensityVerdict v = exact_density(m, LambdaSeq::ceil_sqrt(), 1'000'000);
    CHECK(v.kind == DensityVerdict::Kind::Oscillating);
    CHECK(v.limsup_estimate > 0.9);
    CHECK(v.liminf_estimate < 0.1);
}

TEST_CASE("checkpoint table serializes to csv") {
    DensityVerdict v = classify_null(SetDescription::squares(), LambdaSeq::identity(), 10000, 0.02);
    std::string csv = checkpoints_to_csv(v.evidence);
    CHECK(csv.rfind("n,count,lambda_n,ratio\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') ==
          static_cast<long>(v.evidence.size()) + 1);
}

TEST_CASE("set description json round trip") {
    SetDescription::Centers c;
    c.base = 4;
    std::vector<SetDescription> pool;
    pool.push_back(SetDescription::ap(3, 5));
    pool.push_back(SetDescription::squares());
    pool.push_back(SetDescription::finite({2, 30, 400}));
    pool.push_back(SetDescription::interval(100, std::nullopt));
    pool.push_back(SetDescription::windows(LambdaSeq::ceil_sqrt(), c));
    pool.push_back(SetDescription::union_of(pool[0], pool[1]));
    pool.push_back(SetDescription::inter_of(SetDescription::compl_of(pool[1]), pool[0]));
    Rng rng(4);
    for (const auto& s : pool) {
        SetDescription back = set_description_from_json(to_json(s));
        for (int i = 0; i < 400; ++i) {
            Index k = rng.range(1, 200000);
            CHECK(back.contains(k) == s.contains(k));
        }
    }
}

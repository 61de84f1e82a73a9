#include "pmseq/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace pmseq {

namespace {

Index isqrt_u64(Index n) {
    if (n == 0) return 0;
    Index r = static_cast<Index>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

Index ceil_sqrt_u64(Index n) {
    Index r = isqrt_u64(n);
    return r * r == n ? r : r + 1;
}

constexpr Index kCostCap = std::numeric_limits<Index>::max() / 4;

Index sat_add(Index a, Index b) { return (a > kCostCap || b > kCostCap) ? kCostCap : a + b; }

}  // namespace

// ---------------------------------------------------------------------------
// LambdaSeq

LambdaSeq LambdaSeq::identity() { return LambdaSeq(Family::Identity, "identity"); }
LambdaSeq LambdaSeq::ceil_sqrt() { return LambdaSeq(Family::CeilSqrt, "ceil-sqrt"); }
LambdaSeq LambdaSeq::half() { return LambdaSeq(Family::Half, "half"); }

LambdaSeq LambdaSeq::custom(std::vector<Index> table) {
    if (table.empty()) throw std::invalid_argument("LambdaSeq: empty table");
    LambdaSeq seq(Family::Custom, "custom");
    seq.table_ = std::move(table);
    auto bad = check_lambda_conditions(
        [&seq](Index n) { return seq.table_[n - 1]; }, seq.table_.size());
    if (bad) {
        throw std::invalid_argument("LambdaSeq: " + bad->condition + " violated at n=" +
                                    std::to_string(bad->n) + " (" + bad->detail + ")");
    }
    return seq;
}

LambdaSeq LambdaSeq::from_name(const std::string& name) {
    if (name == "identity") return identity();
    if (name == "ceil-sqrt") return ceil_sqrt();
    if (name == "half") return half();
    throw std::invalid_argument("unknown lambda family: " + name);
}

Index LambdaSeq::operator()(Index n) const {
    if (n == 0) throw std::invalid_argument("LambdaSeq: index must be >= 1");
    switch (family_) {
        case Family::Identity: return n;
        case Family::CeilSqrt: return ceil_sqrt_u64(n);
        case Family::Half: return n / 2 + 1;
        case Family::Custom:
            if (n > table_.size()) {
                throw std::out_of_range("LambdaSeq: custom table has no entry for n=" +
                                        std::to_string(n));
            }
            return table_[n - 1];
    }
    throw std::logic_error("LambdaSeq: bad family");
}

IndexInterval LambdaSeq::window(Index n) const {
    Index l = (*this)(n);
    return IndexInterval{n - l + 1, n};
}

std::optional<LambdaViolation> check_lambda_conditions(
    const std::function<Index(Index)>& lambda, Index horizon) {
    if (horizon < 1) return LambdaViolation{"horizon", 0, "horizon must be >= 1"};
    Index prev = lambda(1);
    if (prev != 1) {
        return LambdaViolation{"lambda_1 = 1", 1, "lambda_1 = " + std::to_string(prev)};
    }
    for (Index n = 2; n <= horizon; ++n) {
        Index cur = lambda(n);
        if (cur < prev) {
            return LambdaViolation{"nondecreasing", n,
                                   "lambda drops from " + std::to_string(prev) + " to " +
                                       std::to_string(cur)};
        }
        if (cur > prev + 1) {
            return LambdaViolation{"lambda_{n+1} <= lambda_n + 1", n,
                                   "increment " + std::to_string(cur - prev)};
        }
        prev = cur;
    }
    if (horizon >= 16 && lambda(horizon) == lambda(horizon / 2)) {
        return LambdaViolation{"tends to infinity", horizon,
                               "no growth over the top half of the horizon"};
    }
    return std::nullopt;
}

LambdaValidation validate_lambda(const std::function<Index(Index)>& lambda, Index horizon,
                                 const std::string& name) {
    LambdaValidation out;
    out.violation = check_lambda_conditions(lambda, horizon);
    if (out.violation) return out;
    if (name == "identity" || name == "ceil-sqrt" || name == "half") {
        out.seq = LambdaSeq::from_name(name);
        return out;
    }
    std::vector<Index> table;
    table.reserve(horizon);
    for (Index n = 1; n <= horizon; ++n) table.push_back(lambda(n));
    out.seq = LambdaSeq::custom(std::move(table));
    return out;
}

// ---------------------------------------------------------------------------
// SetDescription

struct SetDescription::Node {
    Kind kind;
    std::vector<Index> members;  // Finite (sorted, unique)
    Index first = 0, step = 0;   // AP
    IndexInterval iv;            // Interval
    bool iv_unbounded = false;
    std::optional<LambdaSeq> lambda;  // Windows
    Centers centers;                  // Windows
    std::shared_ptr<const Node> a, b;
};

SetDescription::Kind SetDescription::kind() const { return node_->kind; }

SetDescription SetDescription::finite(std::vector<Index> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.front() == 0) {
        throw std::invalid_argument("SetDescription: members must be >= 1");
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Finite;
    n->members = std::move(members);
    return SetDescription(std::move(n));
}

SetDescription SetDescription::empty_set() { return finite({}); }

SetDescription SetDescription::all() { return compl_of(empty_set()); }

SetDescription SetDescription::ap(Index first, Index step) {
    if (first < 1 || step < 1) {
        throw std::invalid_argument("SetDescription: arithmetic progression needs first, step >= 1");
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::AP;
    n->first = first;
    n->step = step;
    return SetDescription(std::move(n));
}

SetDescription SetDescription::squares() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Squares;
    return SetDescription(std::move(n));
}

SetDescription SetDescription::interval(Index lo, std::optional<Index> hi) {
    if (lo < 1) throw std::invalid_argument("SetDescription: interval lo must be >= 1");
    if (hi && *hi < lo) return empty_set();
    auto n = std::make_shared<Node>();
    n->kind = Kind::Interval;
    n->iv.lo = lo;
    n->iv.hi = hi ? *hi : std::numeric_limits<Index>::max();
    n->iv_unbounded = !hi.has_value();
    return SetDescription(std::move(n));
}

SetDescription SetDescription::windows(LambdaSeq lambda, Centers centers) {
    if (centers.geometric()) {
        if (centers.base < 2) throw std::invalid_argument("SetDescription: windows base must be >= 2");
        if (centers.first_exp < 1) centers.first_exp = 1;
    } else {
        std::sort(centers.list.begin(), centers.list.end());
        centers.list.erase(std::unique(centers.list.begin(), centers.list.end()),
                           centers.list.end());
        if (!centers.list.empty() && centers.list.front() == 0) {
            throw std::invalid_argument("SetDescription: window centers must be >= 1");
        }
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Windows;
    n->lambda = std::move(lambda);
    n->centers = std::move(centers);
    return SetDescription(std::move(n));
}

SetDescription SetDescription::union_of(SetDescription a, SetDescription b) {
    if (a.is_empty_syntactic()) return b;
    if (b.is_empty_syntactic()) return a;
    if (a.is_all_syntactic() || b.is_all_syntactic()) return all();
    if (a.node_ == b.node_) return a;
    if (a.kind() == Kind::Finite && b.kind() == Kind::Finite) {
        std::vector<Index> merged = a.node_->members;
        merged.insert(merged.end(), b.node_->members.begin(), b.node_->members.end());
        return finite(std::move(merged));
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Union;
    n->a = a.node_;
    n->b = b.node_;
    return SetDescription(std::move(n));
}

SetDescription SetDescription::inter_of(SetDescription a, SetDescription b) {
    if (a.is_empty_syntactic() || b.is_empty_syntactic()) return empty_set();
    if (a.is_all_syntactic()) return b;
    if (b.is_all_syntactic()) return a;
    if (a.node_ == b.node_) return a;
    if (a.kind() == Kind::Finite) {
        std::vector<Index> kept;
        for (Index m : a.node_->members) {
            if (b.contains(m)) kept.push_back(m);
        }
        return finite(std::move(kept));
    }
    if (b.kind() == Kind::Finite) return inter_of(b, a);
    auto n = std::make_shared<Node>();
    n->kind = Kind::Inter;
    n->a = a.node_;
    n->b = b.node_;
    return SetDescription(std::move(n));
}

SetDescription SetDescription::compl_of(SetDescription a) {
    if (a.kind() == Kind::Compl) return SetDescription(a.node_->a);
    auto n = std::make_shared<Node>();
    n->kind = Kind::Compl;
    n->a = a.node_;
    return SetDescription(std::move(n));
}

bool SetDescription::is_empty_syntactic() const {
    return node_->kind == Kind::Finite && node_->members.empty();
}

bool SetDescription::is_all_syntactic() const {
    return node_->kind == Kind::Compl && node_->a->kind == Kind::Finite &&
           node_->a->members.empty();
}

const std::vector<Index>& SetDescription::finite_members() const { return node_->members; }
Index SetDescription::ap_first() const { return node_->first; }
Index SetDescription::ap_step() const { return node_->step; }
const IndexInterval& SetDescription::interval_bounds() const { return node_->iv; }
bool SetDescription::interval_unbounded() const { return node_->iv_unbounded; }
const LambdaSeq& SetDescription::windows_lambda() const { return *node_->lambda; }
const SetDescription::Centers& SetDescription::windows_centers() const { return node_->centers; }
SetDescription SetDescription::left() const { return SetDescription(node_->a); }
SetDescription SetDescription::right() const { return SetDescription(node_->b); }
SetDescription SetDescription::inner() const { return SetDescription(node_->a); }

namespace {

// Enumerates window centers m of a Windows node with m >= from, in order.
// Returns false from the visitor to stop.
template <typename Fn>
void for_each_center_from(const LambdaSeq& lambda, const SetDescription::Centers& c, Index from,
                          Fn&& fn) {
    if (c.geometric()) {
        unsigned __int128 m = 1;
        for (Index e = 0; e < c.first_exp; ++e) m *= c.base;
        while (m < from) {
            if (m > (static_cast<unsigned __int128>(1) << 62)) return;
            m *= c.base;
        }
        for (;;) {
            if (m > (static_cast<unsigned __int128>(1) << 62)) return;
            if (!fn(static_cast<Index>(m))) return;
            m *= c.base;
        }
    } else {
        auto it = std::lower_bound(c.list.begin(), c.list.end(), from);
        for (; it != c.list.end(); ++it) {
            if (!fn(*it)) return;
        }
    }
    (void)lambda;
}

}  // namespace

bool SetDescription::contains(Index k) const {
    if (k == 0) return false;
    switch (node_->kind) {
        case Kind::Finite:
            return std::binary_search(node_->members.begin(), node_->members.end(), k);
        case Kind::AP:
            return k >= node_->first && (k - node_->first) % node_->step == 0;
        case Kind::Squares: {
            Index r = isqrt_u64(k);
            return r * r == k;
        }
        case Kind::Interval:
            return k >= node_->iv.lo && k <= node_->iv.hi;
        case Kind::Windows: {
            // Window lower ends are nondecreasing in the center, so only the
            // smallest center >= k can cover k.
            bool covered = false;
            for_each_center_from(*node_->lambda, node_->centers, k, [&](Index m) {
                covered = node_->lambda->window(m).lo <= k;
                return false;
            });
            return covered;
        }
        case Kind::Union:
            return SetDescription(node_->a).contains(k) || SetDescription(node_->b).contains(k);
        case Kind::Inter:
            return SetDescription(node_->a).contains(k) && SetDescription(node_->b).contains(k);
        case Kind::Compl:
            return !SetDescription(node_->a).contains(k);
    }
    throw std::logic_error("SetDescription: bad kind");
}

namespace {

constexpr Index kCollectLimit = Index(1) << 20;
constexpr Index kScanLimit = Index(1) << 23;

Index enum_cost(const SetDescription& s, Index lo, Index hi);
Index count_impl(const SetDescription& s, Index lo, Index hi);
void collect(const SetDescription& s, Index lo, Index hi, std::vector<Index>& out);

Index inter_count(const SetDescription& a, const SetDescription& b, Index lo, Index hi) {
    if (lo > hi) return 0;
    Index ca = enum_cost(a, lo, hi);
    Index cb = enum_cost(b, lo, hi);
    const SetDescription& small = ca <= cb ? a : b;
    const SetDescription& other = ca <= cb ? b : a;
    if (std::min(ca, cb) <= kCollectLimit) {
        std::vector<Index> mem;
        collect(small, lo, hi, mem);
        Index n = 0;
        for (Index k : mem) {
            if (other.contains(k)) ++n;
        }
        return n;
    }
    if (hi - lo + 1 <= kScanLimit) {
        Index n = 0;
        for (Index k = lo; k <= hi; ++k) {
            if (a.contains(k) && b.contains(k)) ++n;
        }
        return n;
    }
    throw std::runtime_error("SetDescription::count: range too large for this description");
}

Index count_impl(const SetDescription& s, Index lo, Index hi) {
    if (lo == 0) lo = 1;
    if (lo > hi) return 0;
    switch (s.kind()) {
        case SetDescription::Kind::Finite: {
            const auto& m = s.finite_members();
            auto b = std::lower_bound(m.begin(), m.end(), lo);
            auto e = std::upper_bound(m.begin(), m.end(), hi);
            return static_cast<Index>(e - b);
        }
        case SetDescription::Kind::AP: {
            Index first = s.ap_first(), step = s.ap_step();
            Index f = first >= lo ? first : first + ((lo - first + step - 1) / step) * step;
            return f > hi ? 0 : (hi - f) / step + 1;
        }
        case SetDescription::Kind::Squares:
            return isqrt_u64(hi) - isqrt_u64(lo - 1);
        case SetDescription::Kind::Interval: {
            const auto& iv = s.interval_bounds();
            Index a = std::max(lo, iv.lo), b = std::min(hi, iv.hi);
            return b < a ? 0 : b - a + 1;
        }
        case SetDescription::Kind::Windows: {
            const LambdaSeq& lam = s.windows_lambda();
            Index total = 0;
            Index covered_to = lo - 1;  // union of overlapping windows
            for_each_center_from(lam, s.windows_centers(), lo, [&](Index m) {
                Index wlo = lam.window(m).lo;
                if (wlo > hi) return false;
                Index a = std::max({wlo, covered_to + 1, lo});
                Index b = std::min(m, hi);
                if (b >= a) {
                    total += b - a + 1;
                    covered_to = b;
                }
                return true;
            });
            return total;
        }
        case SetDescription::Kind::Compl:
            return (hi - lo + 1) - count_impl(s.inner(), lo, hi);
        case SetDescription::Kind::Union: {
            Index ca = count_impl(s.left(), lo, hi);
            Index cb = count_impl(s.right(), lo, hi);
            return ca + cb - inter_count(s.left(), s.right(), lo, hi);
        }
        case SetDescription::Kind::Inter:
            return inter_count(s.left(), s.right(), lo, hi);
    }
    throw std::logic_error("SetDescription: bad kind");
}

Index enum_cost(const SetDescription& s, Index lo, Index hi) {
    if (lo == 0) lo = 1;
    if (lo > hi) return 0;
    switch (s.kind()) {
        case SetDescription::Kind::Finite:
        case SetDescription::Kind::AP:
        case SetDescription::Kind::Squares:
        case SetDescription::Kind::Interval:
        case SetDescription::Kind::Windows:
            return count_impl(s, lo, hi);
        case SetDescription::Kind::Union:
            return sat_add(enum_cost(s.left(), lo, hi), enum_cost(s.right(), lo, hi));
        case SetDescription::Kind::Inter:
            return std::min(enum_cost(s.left(), lo, hi), enum_cost(s.right(), lo, hi));
        case SetDescription::Kind::Compl:
            return hi - lo + 1;
    }
    throw std::logic_error("SetDescription: bad kind");
}

void collect(const SetDescription& s, Index lo, Index hi, std::vector<Index>& out) {
    if (lo == 0) lo = 1;
    if (lo > hi) return;
    switch (s.kind()) {
        case SetDescription::Kind::Finite: {
            const auto& m = s.finite_members();
            auto b = std::lower_bound(m.begin(), m.end(), lo);
            auto e = std::upper_bound(m.begin(), m.end(), hi);
            out.insert(out.end(), b, e);
            return;
        }
        case SetDescription::Kind::AP: {
            Index first = s.ap_first(), step = s.ap_step();
            Index f = first >= lo ? first : first + ((lo - first + step - 1) / step) * step;
            for (Index k = f; k <= hi; k += step) out.push_back(k);
            return;
        }
        case SetDescription::Kind::Squares: {
            for (Index r = isqrt_u64(lo - 1) + 1; r * r <= hi; ++r) out.push_back(r * r);
            return;
        }
        case SetDescription::Kind::Interval: {
            const auto& iv = s.interval_bounds();
            for (Index k = std::max(lo, iv.lo); k <= std::min(hi, iv.hi); ++k) out.push_back(k);
            return;
        }
        case SetDescription::Kind::Windows: {
            const LambdaSeq& lam = s.windows_lambda();
            Index covered_to = lo - 1;
            for_each_center_from(lam, s.windows_centers(), lo, [&](Index m) {
                Index wlo = lam.window(m).lo;
                if (wlo > hi) return false;
                Index a = std::max({wlo, covered_to + 1, lo});
                Index b = std::min(m, hi);
                for (Index k = a; k <= b; ++k) out.push_back(k);
                if (b >= a) covered_to = b;
                return true;
            });
            return;
        }
        case SetDescription::Kind::Union: {
            std::vector<Index> left, right;
            collect(s.left(), lo, hi, left);
            collect(s.right(), lo, hi, right);
            out.reserve(out.size() + left.size() + right.size());
            std::merge(left.begin(), left.end(), right.begin(), right.end(),
                       std::back_inserter(out));
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return;
        }
        case SetDescription::Kind::Inter: {
            Index ca = enum_cost(s.left(), lo, hi);
            Index cb = enum_cost(s.right(), lo, hi);
            const SetDescription& small = ca <= cb ? s.left() : s.right();
            const SetDescription& other = ca <= cb ? s.right() : s.left();
            std::vector<Index> mem;
            collect(small, lo, hi, mem);
            for (Index k : mem) {
                if (other.contains(k)) out.push_back(k);
            }
            return;
        }
        case SetDescription::Kind::Compl: {
            for (Index k = lo; k <= hi; ++k) {
                if (!s.inner().contains(k)) out.push_back(k);
            }
            return;
        }
    }
    throw std::logic_error("SetDescription: bad kind");
}

}  // namespace

Index SetDescription::count(Index lo, Index hi) const { return count_impl(*this, lo, hi); }

std::optional<Index> SetDescription::first_member(Index lo, Index hi) const {
    if (lo == 0) lo = 1;
    if (lo > hi) return std::nullopt;
    // Dense sets answer within a short prefix scan; sparse ones through the
    // enumeration path.
    Index prefix_end = std::min(hi, lo + 4096);
    for (Index k = lo; k <= prefix_end; ++k) {
        if (contains(k)) return k;
    }
    if (prefix_end == hi) return std::nullopt;
    Index rest_lo = prefix_end + 1;
    if (enum_cost(*this, rest_lo, hi) <= kCollectLimit) {
        std::vector<Index> mem;
        collect(*this, rest_lo, hi, mem);
        if (mem.empty()) return std::nullopt;
        return mem.front();
    }
    for (Index k = rest_lo; k <= hi; ++k) {
        if (contains(k)) return k;
    }
    return std::nullopt;
}

std::string SetDescription::str() const {
    std::ostringstream os;
    switch (kind()) {
        case Kind::Finite: {
            os << "{";
            const auto& m = finite_members();
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i) os << ",";
                if (i > 12) {
                    os << "...";
                    break;
                }
                os << m[i];
            }
            os << "}";
            break;
        }
        case Kind::AP:
            os << "ap(" << ap_first() << "+" << ap_step() << "k)";
            break;
        case Kind::Squares:
            os << "squares";
            break;
        case Kind::Interval:
            if (interval_unbounded()) {
                os << "[" << interval_bounds().lo << ",inf)";
            } else {
                os << "[" << interval_bounds().lo << "," << interval_bounds().hi << "]";
            }
            break;
        case Kind::Windows:
            os << "windows(" << windows_lambda().name() << ",";
            if (windows_centers().geometric()) {
                os << windows_centers().base << "^j)";
            } else {
                os << windows_centers().list.size() << " centers)";
            }
            break;
        case Kind::Union:
            os << "(" << left().str() << " u " << right().str() << ")";
            break;
        case Kind::Inter:
            os << "(" << left().str() << " n " << right().str() << ")";
            break;
        case Kind::Compl:
            os << "~" << inner().str();
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Density

std::string DensityVerdict::kind_name() const {
    switch (kind) {
        case Kind::Exact: return "exact";
        case Kind::Empirical: return "empirical";
        case Kind::Null: return "null";
        case Kind::Positive: return "positive";
        case Kind::Oscillating: return "oscillating";
    }
    return "?";
}

std::vector<Index> density_checkpoints(Index horizon) {
    std::vector<Index> out;
    for (Index n = 128; n <= horizon; n *= 2) out.push_back(n);
    if (out.empty() || out.back() != horizon) out.push_back(horizon);
    return out;
}

DensityCheckpoint empirical_density(const SetDescription& m, const LambdaSeq& lambda, Index n) {
    IndexInterval w = lambda.window(n);
    DensityCheckpoint cp;
    cp.n = n;
    cp.lambda_n = w.length();
    cp.count = m.count(w.lo, w.hi);
    cp.ratio = static_cast<double>(cp.count) / static_cast<double>(cp.lambda_n);
    return cp;
}

namespace {

// Densities that hold for every admissible lambda: windows of length
// lambda_n -> infinity see finitely many members of a finite set, O(1 +
// lambda_n / sqrt(n)) squares, and lambda_n/step + O(1) members of a step-d
// progression.
std::optional<Rat> symbolic_density(const SetDescription& s) {
    using K = SetDescription::Kind;
    switch (s.kind()) {
        case K::Finite:
            return Rat(0);
        case K::Squares:
            return Rat(0);
        case K::AP:
            return Rat(1, s.ap_step());
        case K::Interval:
            return s.interval_unbounded() ? std::optional<Rat>(Rat(1)) : std::optional<Rat>(Rat(0));
        case K::Windows:
            return std::nullopt;
        case K::Compl: {
            auto v = symbolic_density(s.inner());
            if (!v) return std::nullopt;
            return Rat(1) - *v;
        }
        case K::Union: {
            auto a = symbolic_density(s.left());
            auto b = symbolic_density(s.right());
            if (a && *a == 0) return b;
            if (b && *b == 0) return a;
            if ((a && *a == 1) || (b && *b == 1)) return Rat(1);
            return std::nullopt;
        }
        case K::Inter: {
            auto a = symbolic_density(s.left());
            auto b = symbolic_density(s.right());
            if ((a && *a == 0) || (b && *b == 0)) return Rat(0);
            if (a && *a == 1) return b;
            if (b && *b == 1) return a;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

void fill_evidence(DensityVerdict& v, const SetDescription& m, const LambdaSeq& lambda,
                   const std::vector<Index>& ns) {
    for (Index n : ns) v.evidence.push_back(empirical_density(m, lambda, n));
}

}  // namespace

DensityVerdict exact_density(const SetDescription& m, const LambdaSeq& lambda, Index horizon) {
    DensityVerdict v;
    if (auto exact = symbolic_density(m)) {
        v.kind = DensityVerdict::Kind::Exact;
        v.exact_value = *exact;
        std::vector<Index> ns;
        for (Index n : {Index(1000), Index(10000), Index(100000)}) {
            if (n <= horizon) ns.push_back(n);
        }
        fill_evidence(v, m, lambda, ns);
        return v;
    }
    fill_evidence(v, m, lambda, density_checkpoints(horizon));
    double hi = -1.0, lo = 2.0;
    for (const auto& cp : v.evidence) {
        if (cp.n * 10 >= horizon) {
            hi = std::max(hi, cp.ratio);
            lo = std::min(lo, cp.ratio);
        }
    }
    v.limsup_estimate = hi;
    v.liminf_estimate = lo;
    v.kind = (hi - lo > 0.05) ? DensityVerdict::Kind::Oscillating : DensityVerdict::Kind::Empirical;
    return v;
}

DensityVerdict classify_null(const SetDescription& m, const LambdaSeq& lambda, Index horizon,
                             double eps) {
    if (horizon < 1000) throw std::invalid_argument("classify_null: horizon must be >= 1000");
    if (!(eps > 0.0) || eps >= 0.5) throw std::invalid_argument("classify_null: eps out of range");
    DensityVerdict v;
    if (auto exact = symbolic_density(m)) {
        v.exact_value = *exact;
        v.kind = (*exact == 0) ? DensityVerdict::Kind::Null : DensityVerdict::Kind::Positive;
        std::vector<Index> ns;
        for (Index n : {Index(1000), Index(10000), Index(100000)}) {
            if (n <= horizon) ns.push_back(n);
        }
        fill_evidence(v, m, lambda, ns);
        return v;
    }
    fill_evidence(v, m, lambda, density_checkpoints(horizon));
    const double floor = std::max(0.1, 2.0 * eps);
    bool all_null = true, all_pos = true;
    double hi = -1.0, lo = 2.0;
    for (const auto& cp : v.evidence) {
        if (cp.n * 10 < horizon) continue;  // classify on the top decade only
        all_null = all_null && cp.ratio <= eps;
        all_pos = all_pos && cp.ratio >= floor;
        hi = std::max(hi, cp.ratio);
        lo = std::min(lo, cp.ratio);
    }
    v.limsup_estimate = hi;
    v.liminf_estimate = lo;
    v.kind = all_null  ? DensityVerdict::Kind::Null
             : all_pos ? DensityVerdict::Kind::Positive
                       : DensityVerdict::Kind::Oscillating;
    return v;
}

}  // namespace pmseq

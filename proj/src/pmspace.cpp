#include "pmseq/pmspace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pmseq {

PMSpace::PMSpace(std::vector<std::string> points, const DistTable& table, TriangleFn tau)
    : points_(std::move(points)), tau_(tau), min_sep_(1) {
    if (points_.empty()) throw std::invalid_argument("PMSpace: empty point set");
    std::set<std::string> seen(points_.begin(), points_.end());
    if (seen.size() != points_.size()) {
        throw std::invalid_argument("PMSpace: duplicate point labels");
    }
    const std::size_t n = points_.size();
    const StepDistFn zero_step = StepDistFn::unit_step(ExtReal(0));
    dist_.assign(n, std::vector<StepDistFn>(n, zero_step));
    std::vector<std::vector<bool>> have(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) have[i][i] = true;
    for (const auto& [key, fn] : table) {
        if (!seen.count(key.first) || !seen.count(key.second)) {
            throw std::invalid_argument("PMSpace: table entry for unknown point");
        }
        if (!fn.is_distance_shaped()) {
            throw std::invalid_argument("PMSpace: table entry is not a distance distribution function");
        }
        int i = index_of(key.first), j = index_of(key.second);
        dist_[i][j] = fn;
        have[i][j] = true;
    }
    // Fill missing mirror entries from the provided side.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (have[i][j] && !have[j][i]) {
                dist_[j][i] = dist_[i][j];
                have[j][i] = true;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!have[i][j]) {
                throw std::invalid_argument("PMSpace: missing distance entry " + points_[i] +
                                            "," + points_[j]);
            }
        }
    }
    sep_.assign(n, std::vector<Rat>(n, Rat(0)));
    bool any_off = false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sep_[i][j] = exact_levy_to_zero_step(dist_[i][j]);
            if (i != j) {
                if (!any_off || sep_[i][j] < min_sep_) min_sep_ = sep_[i][j];
                any_off = true;
            }
        }
    }
    if (!any_off || min_sep_ <= 0) min_sep_ = 1;  // single point, or degenerate table
    Rat g = min_sep_ / 2;
    while (g < 2) {
        grid_.push_back(g);
        g *= 2;
    }
    grid_.push_back(Rat(2));
}

int PMSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i] == label) return static_cast<int>(i);
    }
    throw std::invalid_argument("PMSpace: unknown point " + label);
}

bool PMSpace::has_point(const std::string& label) const {
    return std::find(points_.begin(), points_.end(), label) != points_.end();
}

const StepDistFn& PMSpace::dist(const std::string& p, const std::string& q) const {
    return dist_[index_of(p)][index_of(q)];
}

bool PMSpace::operator==(const PMSpace& o) const {
    if (points_ != o.points_ || !(tau_ == o.tau_)) return false;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        for (std::size_t j = 0; j < points_.size(); ++j) {
            if (dist_[i][j] != o.dist_[i][j]) return false;
        }
    }
    return true;
}

AxiomReport verify_axioms(const PMSpace& space) {
    AxiomReport rep;
    const auto& pts = space.points();
    const int n = static_cast<int>(pts.size());
    const StepDistFn zero_step = StepDistFn::unit_step(ExtReal(0));
    auto fail = [&](int axiom, std::vector<std::string> witness, std::string detail) {
        rep.pass = false;
        rep.failed_axiom = axiom;
        rep.witness = std::move(witness);
        rep.detail = std::move(detail);
    };
    for (int i = 0; i < n; ++i) {
        if (space.dist(i, i) != zero_step) {
            fail(1, {pts[i]}, "dist(" + pts[i] + "," + pts[i] + ") is not the unit step at 0");
            return rep;
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (space.dist(i, j) == zero_step) {
                fail(2, {pts[i], pts[j]},
                     "dist(" + pts[i] + "," + pts[j] + ") equals the unit step at 0");
                return rep;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (space.dist(i, j) != space.dist(j, i)) {
                fail(3, {pts[i], pts[j]}, "asymmetric pair (" + pts[i] + "," + pts[j] + ")");
                return rep;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                StepDistFn lower = space.tau()(space.dist(i, j), space.dist(j, k));
                if (!pointwise_leq(space.dist(i, k), lower)) {
                    fail(4, {pts[i], pts[j], pts[k]},
                         "dist(" + pts[i] + "," + pts[k] + ") < tau(dist(" + pts[i] + "," +
                             pts[j] + "), dist(" + pts[j] + "," + pts[k] + "))");
                    return rep;
                }
            }
        }
    }
    return rep;
}

namespace {

PMSpace checked(PMSpace space, const char* builder) {
    AxiomReport rep = verify_axioms(space);
    if (!rep.pass) {
        std::ostringstream os;
        os << builder << ": axiom " << rep.failed_axiom << " fails (";
        for (std::size_t i = 0; i < rep.witness.size(); ++i) {
            if (i) os << ",";
            os << rep.witness[i];
        }
        os << "): " << rep.detail;
        throw std::invalid_argument(os.str());
    }
    return space;
}

}  // namespace

PMSpace build_equilateral(const std::vector<std::string>& points, const StepDistFn& f0,
                          TriangleFn tau) {
    if (!f0.is_distance_shaped()) {
        throw std::invalid_argument("build_equilateral: f0 must be a distance distribution function");
    }
    PMSpace::DistTable table;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            table.emplace(std::make_pair(points[i], points[j]), f0);
        }
    }
    return checked(PMSpace(points, table, tau), "build_equilateral");
}

PMSpace build_simple(const std::vector<std::string>& points,
                     const std::vector<std::vector<Rat>>& rho, const StepDistFn& g,
                     TriangleFn tau) {
    const std::size_t n = points.size();
    if (rho.size() != n) throw std::invalid_argument("build_simple: rho size mismatch");
    for (const auto& row : rho) {
        if (row.size() != n) throw std::invalid_argument("build_simple: rho size mismatch");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (rho[i][i] != 0) throw std::invalid_argument("build_simple: rho has nonzero diagonal");
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && !(rho[i][j] > 0)) {
                throw std::invalid_argument("build_simple: rho must be positive off the diagonal");
            }
            if (rho[i][j] != rho[j][i]) {
                throw std::invalid_argument("build_simple: rho must be symmetric");
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (rho[i][k] > rho[i][j] + rho[j][k]) {
                    throw std::invalid_argument("build_simple: rho violates the triangle inequality");
                }
            }
        }
    }
    if (!g.is_distance_shaped()) {
        throw std::invalid_argument("build_simple: g must be a distance distribution function");
    }
    PMSpace::DistTable table;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // g(x / rho) is the step function with jump locations scaled by rho.
            std::vector<Jump> jumps;
            for (const auto& jm : g.jumps()) {
                jumps.push_back(Jump{ExtReal(jm.loc.value() * rho[i][j]), jm.val});
            }
            table.emplace(std::make_pair(points[i], points[j]),
                          StepDistFn::from_jumps(std::move(jumps), true));
        }
    }
    return checked(PMSpace(points, table, tau), "build_simple");
}

std::vector<std::string> strong_neighborhood(const PMSpace& space, const std::string& x,
                                             const Rat& r) {
    if (!(r > 0)) throw std::invalid_argument("strong_neighborhood: r must be positive");
    int xi = space.index_of(x);
    std::vector<std::string> out;
    for (std::size_t y = 0; y < space.size(); ++y) {
        if (space.dist(xi, static_cast<int>(y)).eval(ExtReal(r)) > Rat(1) - r) {
            out.push_back(space.points()[y]);
        }
    }
    return out;
}

std::vector<std::string> strong_closure(const PMSpace& space, const std::vector<std::string>& a) {
    if (a.empty()) throw std::invalid_argument("strong_closure: empty subset");
    std::vector<int> idx;
    for (const auto& lbl : a) idx.push_back(space.index_of(lbl));
    std::vector<std::string> out;
    for (std::size_t p = 0; p < space.size(); ++p) {
        bool in_closure = true;
        for (const Rat& t : space.threshold_grid()) {
            bool some_b = false;
            for (int b : idx) {
                if (space.dist(static_cast<int>(p), b).eval(ExtReal(t)) > Rat(1) - t) {
                    some_b = true;
                    break;
                }
            }
            if (!some_b) {
                in_closure = false;
                break;
            }
        }
        if (in_closure) out.push_back(space.points()[p]);
    }
    return out;
}

Vicinity vicinity(const PMSpace& space, const Rat& r) {
    if (!(r > 0)) throw std::invalid_argument("vicinity: r must be positive");
    Vicinity v;
    v.r = r;
    const std::size_t n = space.size();
    v.member.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (space.dist(static_cast<int>(i), static_cast<int>(j)).eval(ExtReal(r)) >
                Rat(1) - r) {
                v.member[i][j] = true;
                v.pairs.emplace_back(space.points()[i], space.points()[j]);
            }
        }
    }
    return v;
}

std::optional<Rat> find_eta(const PMSpace& space, const Rat& r, std::vector<Rat> grid) {
    if (!(r > 0)) throw std::invalid_argument("find_eta: r must be positive");
    std::sort(grid.begin(), grid.end(), std::greater<Rat>());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    Vicinity target = vicinity(space, r);
    const std::size_t n = space.size();
    for (const Rat& eta : grid) {
        if (!(eta > 0)) continue;
        Vicinity v = vicinity(space, eta);
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
            for (std::size_t z = 0; z < n && ok; ++z) {
                if (target.member[x][z]) continue;
                for (std::size_t y = 0; y < n; ++y) {
                    if (v.member[x][y] && v.member[y][z]) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (ok) return eta;
    }
    return std::nullopt;
}

}  // namespace pmseq

#include "wbr/weights.hpp"

#include <algorithm>
#include <functional>

namespace wbr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition must be weakly decreasing");
    }
}

int Partition::size() const {
    int n = 0;
    for (int p : parts_) n += p;
    return n;
}

std::vector<int> Partition::contents() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size()));
    for (size_t a = 0; a < parts_.size(); ++a)
        for (int b = 0; b < parts_[a]; ++b) out.push_back(b - static_cast<int>(a));
    return out;
}

std::vector<std::pair<Partition, int>> Partition::with_box_added() const {
    std::vector<std::pair<Partition, int>> out;
    const int len = static_cast<int>(parts_.size());
    for (int i = 0; i <= len; ++i) {
        const int row_len = i < len ? parts_[static_cast<size_t>(i)] : 0;
        const int above = i == 0 ? row_len + 1 : parts_[static_cast<size_t>(i - 1)];
        if (row_len >= above && i > 0) continue;
        std::vector<int> p = parts_;
        if (i == len)
            p.push_back(1);
        else
            ++p[static_cast<size_t>(i)];
        out.emplace_back(Partition(std::move(p)), row_len - i);
    }
    return out;
}

std::vector<std::pair<Partition, int>> Partition::with_box_removed() const {
    std::vector<std::pair<Partition, int>> out;
    const int len = static_cast<int>(parts_.size());
    for (int i = 0; i < len; ++i) {
        const int row_len = parts_[static_cast<size_t>(i)];
        if (i + 1 < len && parts_[static_cast<size_t>(i + 1)] == row_len) continue;
        std::vector<int> p = parts_;
        --p[static_cast<size_t>(i)];
        out.emplace_back(Partition(std::move(p)), (row_len - 1) - i);
    }
    return out;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.parts_.size() > parts_.size()) return false;
    for (size_t i = 0; i < inner.parts_.size(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

std::optional<std::pair<int, int>> Partition::single_box_skew(const Partition& inner) const {
    if (!contains(inner) || size() != inner.size() + 1) return std::nullopt;
    for (size_t i = 0; i < parts_.size(); ++i) {
        const int in = i < inner.parts_.size() ? inner.parts_[i] : 0;
        if (parts_[i] != in) return std::make_pair(static_cast<int>(i), parts_[i] - 1);
    }
    return std::nullopt;
}

bool Partition::operator<(const Partition& o) const { return parts_ < o.parts_; }

std::string Partition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

bool Weight::operator<(const Weight& o) const {
    if (t != o.t) return t < o.t;
    if (left != o.left) return left < o.left;
    return right < o.right;
}

std::string Weight::to_string() const { return left.to_string() + "|" + right.to_string(); }

Weight make_weight(Wall wall, Partition left, Partition right) {
    const int t = wall.r - left.size();
    if (t < 0 || t > std::min(wall.r, wall.s) || right.size() != wall.s - t)
        throw Error("weight sizes incompatible with the wall");
    return Weight{std::move(left), std::move(right), wall, t};
}

DeltaSpec delta_spec_of(const ScalarMode& mode) {
    switch (mode.kind()) {
        case ScalarMode::Kind::RationalAt: return DeltaSpec::at(mode.delta().rational());
        case ScalarMode::Kind::GenericDelta: return DeltaSpec::generic_value();
        default: throw MixedModes("delta_spec_of needs a classical mode");
    }
}

std::vector<Weight> enumerate_weights(Wall wall) {
    std::vector<Weight> out;
    for (int t = 0; t <= std::min(wall.r, wall.s); ++t)
        for (const Partition& l : partitions_of(wall.r - t))
            for (const Partition& r : partitions_of(wall.s - t))
                out.push_back(Weight{l, r, wall, t});
    return out;
}

std::vector<Weight> dot_weights(Wall wall, const DeltaSpec& delta) {
    std::vector<Weight> out = enumerate_weights(wall);
    if (delta.is_zero() && wall.r == wall.s && wall.r != 0) {
        std::erase_if(out, [](const Weight& w) { return w.left.empty() && w.right.empty(); });
    }
    return out;
}

std::vector<Scalar> contents(const Weight& w, const ScalarMode& mode) {
    const Scalar delta = mode.delta();
    std::vector<Scalar> c;
    c.reserve(static_cast<size_t>(w.wall.n()));
    for (int v : w.left.contents()) c.emplace_back(Rat(v));
    for (int i = 0; i < 2 * w.t; ++i) c.emplace_back(Rat(0));
    for (int v : w.right.contents()) c.push_back(Scalar(Rat(v)) + delta);
    return c;
}

namespace {

// Small helpers for polynomials in z with Scalar coefficients, used only by
// the content rational function.
using ZPoly = std::vector<Scalar>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    ztrim(c);
    return c;
}

ZPoly zrem(ZPoly a, const ZPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Scalar f = a.back() / b.back();
        const size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        ztrim(a);
    }
    return a;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
    while (!b.empty()) {
        ZPoly r = zrem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

ZPoly zdiv(const ZPoly& a, const ZPoly& b) {
    ZPoly rem = a, quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Scalar(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        const Scalar f = rem.back() / b.back();
        const size_t shift = rem.size() - b.size();
        quot[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        ztrim(rem);
    }
    if (!rem.empty()) throw InternalError("zdiv: not divisible");
    ztrim(quot);
    return quot;
}

} // namespace

ContentFunction content_rational_function(const Weight& w, const ScalarMode& mode) {
    const Scalar delta = mode.delta();
    ZPoly num{Scalar(1)}, den{Scalar(1)};
    for (int v : w.left.contents()) num = zmul(num, {Scalar(1), Scalar(Rat(v))});
    for (int v : w.right.contents()) den = zmul(den, {Scalar(1), -(Scalar(Rat(v)) + delta)});
    ZPoly g = zgcd(num, den);
    if (g.size() > 1) {
        num = zdiv(num, g);
        den = zdiv(den, g);
    }
    // both constant terms are 1 before reduction, so rescale to keep that
    const Scalar n0 = num[0];
    for (Scalar& c : num) c = c / n0;
    const Scalar d0 = den[0];
    for (Scalar& c : den) c = c / d0;
    return ContentFunction{std::move(num), std::move(den)};
}

std::string ContentFunction::to_string() const {
    auto poly_str = [](const std::vector<Scalar>& p) {
        std::string out;
        for (size_t i = p.size(); i-- > 0;) {
            if (p[i].is_zero()) continue;
            if (!out.empty()) out += "+";
            out += "(" + p[i].to_string() + ")";
            if (i >= 1) out += "*z";
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out.empty() ? std::string("0") : out;
    };
    return "(" + poly_str(num) + ")/(" + poly_str(den) + ")";
}

bool is_semisimple(Wall wall, const DeltaSpec& delta) {
    if (wall.r == 0 || wall.s == 0) return true;
    if (delta.generic || !delta.is_integer()) return true;
    if (rat_abs(delta.value) > wall.n() - 2) return true;
    if (delta.is_zero()) {
        const std::pair<int, int> rs{wall.r, wall.s};
        for (auto ok : {std::pair{1, 2}, {1, 3}, {2, 1}, {3, 1}})
            if (rs == ok) return true;
    }
    return false;
}

BranchingGraph branching_graph(Wall wall) {
    BranchingGraph g;
    g.wall = wall;
    const int r = wall.r, n = wall.n();
    g.levels.resize(static_cast<size_t>(n) + 1);
    for (int a = 0; a <= n; ++a) {
        const Wall wa{std::min(a, r), std::max(0, a - r)};
        g.levels[static_cast<size_t>(a)] = enumerate_weights(wa);
    }
    g.edges_up.resize(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        const auto& lower = g.levels[static_cast<size_t>(a)];
        const auto& upper = g.levels[static_cast<size_t>(a + 1)];
        auto& edges = g.edges_up[static_cast<size_t>(a)];
        edges.resize(lower.size());
        for (size_t i = 0; i < lower.size(); ++i) {
            const Weight& mu = lower[i];
            for (size_t j = 0; j < upper.size(); ++j) {
                const Weight& la = upper[j];
                bool joined = false;
                if (a + 1 <= r) {
                    joined = la.left.single_box_skew(mu.left).has_value();
                } else {
                    joined = (la.right == mu.right && mu.left.single_box_skew(la.left)) ||
                             (la.left == mu.left && la.right.single_box_skew(mu.right));
                }
                if (joined) edges[i].push_back(static_cast<int>(j));
            }
        }
    }
    return g;
}

bool Path::operator<(const Path& o) const { return vertices < o.vertices; }

std::string Path::to_string() const {
    std::string out;
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i) out += "->";
        out += vertices[i].to_string();
    }
    return out;
}

std::vector<Path> paths_to(const BranchingGraph& graph, const Weight& target) {
    std::vector<Path> out;
    const size_t top = graph.levels.size() - 1;
    std::vector<Weight> cur;
    std::function<void(size_t, size_t)> rec = [&](size_t level, size_t idx) {
        cur.push_back(graph.levels[level][idx]);
        if (level == top) {
            if (graph.levels[level][idx] == target) out.push_back(Path{cur});
        } else {
            for (int j : graph.edges_up[level][idx]) rec(level + 1, static_cast<size_t>(j));
        }
        cur.pop_back();
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Path> all_paths(const BranchingGraph& graph) {
    std::vector<Path> out;
    for (const Weight& w : graph.levels.back()) {
        auto p = paths_to(graph, w);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

std::vector<Scalar> path_contents(const Path& path, const ScalarMode& mode) {
    const Scalar delta = mode.delta();
    std::vector<Scalar> out;
    const int r = path.vertices.back().wall.r;
    for (size_t i = 1; i < path.vertices.size(); ++i) {
        const Weight& prev = path.vertices[i - 1];
        const Weight& cur = path.vertices[i];
        if (static_cast<int>(i) <= r) {
            auto box = cur.left.single_box_skew(prev.left);
            if (!box) throw InternalError("path edge below the wall is not a single left box");
            out.emplace_back(Rat(box->second - box->first));
        } else {
            auto removed = prev.left.single_box_skew(cur.left);
            auto added = cur.right.single_box_skew(prev.right);
            if (removed && added)
                throw InternalError("ambiguous branching edge: both content patterns match");
            if (removed)
                out.emplace_back(Rat(removed->first - removed->second));
            else if (added)
                out.push_back(Scalar(Rat(added->second - added->first)) + delta);
            else
                throw InternalError("path edge above the wall matches no content pattern");
        }
    }
    return out;
}

namespace {

// Signed profile k -> #boxes of the left partition with content k minus
// #boxes of the right partition with content -delta-k, for integer delta.
std::map<Rat, int> balance_profile(const Weight& w, const Rat& delta) {
    std::map<Rat, int> profile;
    for (int c : w.left.contents()) ++profile[Rat(c)];
    for (int c : w.right.contents()) --profile[-delta - Rat(c)];
    return profile;
}

} // namespace

bool is_delta_balanced(const Weight& a, const Weight& b, const DeltaSpec& delta) {
    if (a.wall != b.wall) throw WallMismatch();
    if (delta.generic || !delta.is_integer()) return a.left == b.left && a.right == b.right;
    auto pa = balance_profile(a, delta.value);
    auto pb = balance_profile(b, delta.value);
    std::erase_if(pa, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(pb, [](const auto& kv) { return kv.second == 0; });
    return pa == pb;
}

std::vector<std::vector<Weight>> blocks(Wall wall, const DeltaSpec& delta) {
    const std::vector<Weight> weights = dot_weights(wall, delta);
    std::vector<int> cls(weights.size(), -1);
    std::vector<std::vector<Weight>> out;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = static_cast<int>(out.size());
        out.push_back({weights[i]});
        for (size_t j = i + 1; j < weights.size(); ++j) {
            if (cls[j] < 0 && is_delta_balanced(weights[i], weights[j], delta)) {
                cls[j] = cls[i];
                out.back().push_back(weights[j]);
            }
        }
    }
    return out;
}

} // namespace wbr

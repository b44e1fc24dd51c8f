#include "wbr/diagram.hpp"

#include <algorithm>

namespace wbr {

namespace {

// Side of a vertex: false = left of the wall, true = right.
bool side_of(const Wall& w, int v) {
    const int n = w.n();
    const int pos = v < n ? v : v - n;
    return pos >= w.r;
}

bool is_top(const Wall& w, int v) { return v < w.n(); }

void check_strand(const Wall& w, int u, int v) {
    if (is_top(w, u) == is_top(w, v)) {
        if (side_of(w, u) == side_of(w, v))
            throw CrossesWall("horizontal strand must cross the wall");
    } else {
        if (side_of(w, u) != side_of(w, v))
            throw CrossesWall("vertical strand cannot cross the wall");
    }
}

} // namespace

WalledDiagram::WalledDiagram(Wall wall, std::vector<int> pairing)
    : wall_(wall), pairing_(std::move(pairing)) {
    const int m = 2 * wall_.n();
    if (static_cast<int>(pairing_.size()) != m)
        throw IndexOutOfRange("diagram pairing has wrong length");
    for (int v = 0; v < m; ++v) {
        const int u = pairing_[static_cast<size_t>(v)];
        if (u < 0 || u >= m) throw IndexOutOfRange("pairing entry out of range");
        if (u == v) throw Error("pairing has a fixed point");
        if (pairing_[static_cast<size_t>(u)] != v) throw Error("pairing is not an involution");
        check_strand(wall_, v, u);
    }
}

WalledDiagram WalledDiagram::identity(Wall wall) {
    const int n = wall.n();
    std::vector<int> p(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        p[static_cast<size_t>(i)] = i + n;
        p[static_cast<size_t>(i + n)] = i;
    }
    return WalledDiagram(wall, std::move(p));
}

int WalledDiagram::top_arc_count() const {
    const int n = wall_.n();
    int count = 0;
    for (int v = 0; v < n; ++v)
        if (pairing_[static_cast<size_t>(v)] < n && pairing_[static_cast<size_t>(v)] > v) ++count;
    return count;
}

int WalledDiagram::bottom_arc_count() const {
    const int n = wall_.n();
    int count = 0;
    for (int v = n; v < 2 * n; ++v)
        if (pairing_[static_cast<size_t>(v)] >= n && pairing_[static_cast<size_t>(v)] > v) ++count;
    return count;
}

bool WalledDiagram::operator<(const WalledDiagram& o) const {
    if (wall_.r != o.wall_.r) return wall_.r < o.wall_.r;
    if (wall_.s != o.wall_.s) return wall_.s < o.wall_.s;
    return pairing_ < o.pairing_;
}

std::string WalledDiagram::to_string() const {
    const int n = wall_.n();
    std::string out = "{";
    bool first = true;
    for (int v = 0; v < 2 * n; ++v) {
        const int u = pairing_[static_cast<size_t>(v)];
        if (u < v) continue;
        if (!first) out += ",";
        first = false;
        auto name = [n](int x) {
            return (x < n ? "t" + std::to_string(x + 1) : "b" + std::to_string(x - n + 1));
        };
        out += name(v) + "-" + name(u);
    }
    return out + "}";
}

WalledDiagram make_generator(Wall wall, const Gen& g) {
    const int r = wall.r, s = wall.s, n = wall.n();
    auto vertical_identity = [&]() {
        std::vector<int> p(static_cast<size_t>(2 * n));
        for (int i = 0; i < n; ++i) {
            p[static_cast<size_t>(i)] = i + n;
            p[static_cast<size_t>(i + n)] = i;
        }
        return p;
    };
    switch (g.kind) {
        case Gen::Kind::S: {
            const int i = g.a;
            if (i == r && r >= 1 && s >= 1) throw CrossesWall("s_r would cross the wall");
            const bool left_ok = 1 <= i && i <= r - 1;
            const bool right_ok = r + 1 <= i && i <= n - 1;
            if (!left_ok && !right_ok) throw IndexOutOfRange("s_i index out of range");
            auto p = vertical_identity();
            p[static_cast<size_t>(i - 1)] = n + i;
            p[static_cast<size_t>(n + i)] = i - 1;
            p[static_cast<size_t>(i)] = n + i - 1;
            p[static_cast<size_t>(n + i - 1)] = i;
            return WalledDiagram(wall, std::move(p));
        }
        case Gen::Kind::E: {
            const int j = g.a, k = g.b;
            if (j < 1 || j > n || k < 1 || k > n) throw IndexOutOfRange("e_{j,k} index out of range");
            if (!(j <= r && k >= r + 1)) throw CrossesWall("e_{j,k} needs j <= r < k");
            auto p = vertical_identity();
            p[static_cast<size_t>(j - 1)] = k - 1;
            p[static_cast<size_t>(k - 1)] = j - 1;
            p[static_cast<size_t>(n + j - 1)] = n + k - 1;
            p[static_cast<size_t>(n + k - 1)] = n + j - 1;
            return WalledDiagram(wall, std::move(p));
        }
        case Gen::Kind::Transposition: {
            const int a = std::min(g.a, g.b), b = std::max(g.a, g.b);
            if (a < 1 || b > n) throw IndexOutOfRange("(a,b) index out of range");
            if (a == b) throw IndexOutOfRange("(a,a) is not a transposition");
            const bool both_left = b <= r;
            const bool both_right = a >= r + 1;
            if (!both_left && !both_right) throw CrossesWall("(a,b) must stay on one side");
            auto p = vertical_identity();
            p[static_cast<size_t>(a - 1)] = n + b - 1;
            p[static_cast<size_t>(n + b - 1)] = a - 1;
            p[static_cast<size_t>(b - 1)] = n + a - 1;
            p[static_cast<size_t>(n + a - 1)] = b - 1;
            return WalledDiagram(wall, std::move(p));
        }
        case Gen::Kind::Tau: {
            const int t = g.a;
            if (t < 0 || t > std::min(r, s)) throw IndexOutOfRange("tau_t needs 0 <= t <= min(r,s)");
            auto p = vertical_identity();
            for (int i = 1; i <= t; ++i) {
                const int u = r - i, v = r + i - 1; // 0-based columns r-i+1 and r+i
                p[static_cast<size_t>(u)] = v;
                p[static_cast<size_t>(v)] = u;
                p[static_cast<size_t>(n + u)] = n + v;
                p[static_cast<size_t>(n + v)] = n + u;
            }
            return WalledDiagram(wall, std::move(p));
        }
    }
    throw InternalError("make_generator");
}

std::pair<WalledDiagram, int> compose(const WalledDiagram& d1, const WalledDiagram& d2) {
    if (d1.wall() != d2.wall()) throw WallMismatch();
    const int n = d1.wall().n();
    // Layers: result top = top of d2, result bottom = bottom of d1,
    // middle = bottom of d2 glued to top of d1.
    std::vector<int> result(static_cast<size_t>(2 * n), -1);
    std::vector<bool> middle_seen(static_cast<size_t>(n), false);

    // Walks a strand starting from an exterior vertex. `in_d2` says whether
    // the current vertex lives in d2 (true) or d1; `v` is that diagram's
    // vertex index. Returns the exterior endpoint in result numbering.
    auto walk = [&](bool start_in_d2, int v) {
        bool in_d2 = start_in_d2;
        while (true) {
            if (in_d2) {
                const int u = d2.partner(v);
                if (u < n) return u;           // exits at result top
                middle_seen[static_cast<size_t>(u - n)] = true;
                in_d2 = false;
                v = u - n;                     // continue from d1 top
            } else {
                const int u = d1.partner(v);
                if (u >= n) return u;          // exits at result bottom
                middle_seen[static_cast<size_t>(u)] = true;
                in_d2 = true;
                v = u + n;                     // continue from d2 bottom
            }
        }
    };

    for (int v = 0; v < n; ++v) {
        if (result[static_cast<size_t>(v)] >= 0) continue;
        const int u = walk(true, v);
        result[static_cast<size_t>(v)] = u;
        result[static_cast<size_t>(u)] = v;
    }
    for (int v = n; v < 2 * n; ++v) {
        if (result[static_cast<size_t>(v)] >= 0) continue;
        const int u = walk(false, v);
        result[static_cast<size_t>(v)] = u;
        result[static_cast<size_t>(u)] = v;
    }

    // Unvisited middle vertices belong to closed loops alternating between
    // top arcs of d1 and bottom arcs of d2.
    int loops = 0;
    for (int m = 0; m < n; ++m) {
        if (middle_seen[static_cast<size_t>(m)]) continue;
        ++loops;
        int v = m;
        while (!middle_seen[static_cast<size_t>(v)]) {
            middle_seen[static_cast<size_t>(v)] = true;
            const int u = d1.partner(v);       // top arc of d1 (stays in top)
            middle_seen[static_cast<size_t>(u)] = true;
            v = d2.partner(u + n) - n;         // bottom arc of d2
        }
    }
    return {WalledDiagram(d1.wall(), std::move(result)), loops};
}

namespace {

void enumerate_rec(const Wall& w, std::vector<int>& p, std::vector<WalledDiagram>& out) {
    const int m = 2 * w.n();
    int v = 0;
    while (v < m && p[static_cast<size_t>(v)] >= 0) ++v;
    if (v == m) {
        out.emplace_back(w, p);
        return;
    }
    for (int u = v + 1; u < m; ++u) {
        if (p[static_cast<size_t>(u)] >= 0) continue;
        const bool horizontal = is_top(w, v) == is_top(w, u);
        const bool same_side = side_of(w, v) == side_of(w, u);
        if (horizontal == same_side) continue;
        p[static_cast<size_t>(v)] = u;
        p[static_cast<size_t>(u)] = v;
        enumerate_rec(w, p, out);
        p[static_cast<size_t>(v)] = -1;
        p[static_cast<size_t>(u)] = -1;
    }
}

} // namespace

std::vector<WalledDiagram> enumerate_diagrams(Wall wall, int size_cap) {
    if (wall.n() > size_cap)
        throw SizeLimitExceeded("diagram enumeration beyond the size cap r+s <= " +
                                std::to_string(size_cap));
    std::vector<WalledDiagram> out;
    if (wall.n() == 0) {
        out.emplace_back(wall, std::vector<int>{});
        return out;
    }
    std::vector<int> p(static_cast<size_t>(2 * wall.n()), -1);
    enumerate_rec(wall, p, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Gen> algebra_generators(Wall wall) {
    std::vector<Gen> gens;
    for (int i = 1; i <= wall.r - 1; ++i) gens.push_back(Gen::S(i));
    for (int i = wall.r + 1; i <= wall.n() - 1; ++i) gens.push_back(Gen::S(i));
    if (wall.r >= 1 && wall.s >= 1) gens.push_back(Gen::E(wall.r, wall.r + 1));
    return gens;
}

} // namespace wbr

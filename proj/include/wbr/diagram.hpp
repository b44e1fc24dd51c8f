// Walled Brauer diagrams on two rows of r+s vertices, and their
// composition with middle-row loop counting.
//
// Vertex numbering (0-based internally): top row 0..n-1 left to right,
// bottom row n..2n-1, where n = r+s. The wall separates positions < r from
// positions >= r in each row. A diagram is a fixed-point-free involution
// subject to the strand rules: vertical strands stay on one side of the
// wall, horizontal strands cross it.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wbr/errors.hpp"

namespace wbr {

struct Wall {
    int r = 0;
    int s = 0;
    int n() const { return r + s; }
    bool operator==(const Wall& o) const { return r == o.r && s == o.s; }
    bool operator!=(const Wall& o) const { return !(*this == o); }
};

class WalledDiagram {
public:
    /// Validates the involution and the strand rules.
    WalledDiagram(Wall wall, std::vector<int> pairing);

    static WalledDiagram identity(Wall wall);

    const Wall& wall() const { return wall_; }
    int partner(int v) const { return pairing_[static_cast<size_t>(v)]; }
    const std::vector<int>& pairing() const { return pairing_; }

    int top_arc_count() const;
    int bottom_arc_count() const;

    /// Canonical order: lexicographic on the pairing array.
    bool operator<(const WalledDiagram& o) const;
    bool operator==(const WalledDiagram& o) const {
        return wall_ == o.wall_ && pairing_ == o.pairing_;
    }
    bool operator!=(const WalledDiagram& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Wall wall_;
    std::vector<int> pairing_;
};

/// Generator families, with 1-based indices as usual for s_i, e_{j,k},
/// transpositions (a,b) and the contraction chains tau_t.
struct Gen {
    enum class Kind { S, E, Transposition, Tau };
    Kind kind;
    int a = 0;
    int b = 0;

    static Gen S(int i) { return {Kind::S, i, 0}; }
    static Gen E(int j, int k) { return {Kind::E, j, k}; }
    static Gen Transposition(int a, int b) { return {Kind::Transposition, a, b}; }
    static Gen Tau(int t) { return {Kind::Tau, t, 0}; }
};

/// The diagram of a generator. Throws IndexOutOfRange / CrossesWall on bad
/// indices (S(r), same-side E, wall-crossing transpositions).
WalledDiagram make_generator(Wall wall, const Gen& g);

/// Stacks d1 under d2, removes middle loops, and returns the resulting
/// diagram together with the number of removed loops.
std::pair<WalledDiagram, int> compose(const WalledDiagram& d1, const WalledDiagram& d2);

/// All (r+s)! diagrams in canonical order. Throws SizeLimitExceeded when
/// r+s exceeds the cap.
std::vector<WalledDiagram> enumerate_diagrams(Wall wall, int size_cap = 7);

/// The generating set {s_i} cup {e_{r,r+1}} of the algebra.
std::vector<Gen> algebra_generators(Wall wall);

} // namespace wbr

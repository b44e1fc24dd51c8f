// Bipartition weights, contents, the branching graph, delta-balancedness
// and blocks, and the semisimplicity criterion.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wbr/diagram.hpp"
#include "wbr/scalar.hpp"

namespace wbr {

/// Weakly decreasing positive parts; the empty partition is {}.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const; // number of boxes
    bool empty() const { return parts_.empty(); }

    /// Contents b-a of the boxes read row by row (the row-reading tableau).
    std::vector<int> contents() const;

    /// Partitions obtained by adding one box, with the content of the box.
    std::vector<std::pair<Partition, int>> with_box_added() const;
    /// Partitions obtained by removing one box, with the content of the box.
    std::vector<std::pair<Partition, int>> with_box_removed() const;

    /// Is `inner` contained in this diagram?
    bool contains(const Partition& inner) const;
    /// The single box of *this / inner, when the skew shape is one box.
    std::optional<std::pair<int, int>> single_box_skew(const Partition& inner) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// All partitions of n, largest part first ((n), (n-1,1), ..., (1^n)).
std::vector<Partition> partitions_of(int n);

/// A weight (lambda^L, lambda^R) in Lambda^t_{r,s}.
struct Weight {
    Partition left, right;
    Wall wall;
    int t = 0;

    bool operator==(const Weight& o) const {
        return left == o.left && right == o.right && wall == o.wall && t == o.t;
    }
    bool operator<(const Weight& o) const;
    std::string to_string() const;
};

Weight make_weight(Wall wall, Partition left, Partition right);

/// delta as either a rational value or the generic (non-integer) symbol.
/// Integer-sensitive predicates branch on this; content values use
/// ScalarMode instead.
struct DeltaSpec {
    bool generic = true;
    Rat value;

    static DeltaSpec generic_value() { return {}; }
    static DeltaSpec at(const Rat& v) { return {false, v}; }
    bool is_integer() const { return !generic && rat_is_integer(value); }
    bool is_zero() const { return !generic && rat_is_zero(value); }
};

/// DeltaSpec matching a classical ScalarMode (RationalAt or GenericDelta).
DeltaSpec delta_spec_of(const ScalarMode& mode);

/// All weights of Lambda_{r,s}, ordered by t, then by the bipartition.
std::vector<Weight> enumerate_weights(Wall wall);
/// Lambda-dot: drops (empty,empty) exactly when delta = 0 and r = s != 0.
std::vector<Weight> dot_weights(Wall wall, const DeltaSpec& delta);

/// The content vector (c(lambda,1), ..., c(lambda,r+s)).
std::vector<Scalar> contents(const Weight& w, const ScalarMode& mode);

/// The reduced rational function prod (1 + cont(L,i) z) / prod (1 - (cont(R,j)+delta) z),
/// stored as numerator/denominator coefficient lists in z with constant
/// terms 1. Equal weights classes compare equal coefficient-wise.
struct ContentFunction {
    std::vector<Scalar> num, den;
    bool operator==(const ContentFunction& o) const { return num == o.num && den == o.den; }
    bool operator!=(const ContentFunction& o) const { return !(*this == o); }
    std::string to_string() const;
};

ContentFunction content_rational_function(const Weight& w, const ScalarMode& mode);

bool is_semisimple(Wall wall, const DeltaSpec& delta);

/// The levelled branching graph with levels Lambda_0 .. Lambda_{r+s}.
struct BranchingGraph {
    Wall wall;
    std::vector<std::vector<Weight>> levels;
    /// edges_up[a][i] = indices in level a+1 of the successors of levels[a][i].
    std::vector<std::vector<std::vector<int>>> edges_up;
};

BranchingGraph branching_graph(Wall wall);

/// A path from the empty weight to a weight of the top level.
struct Path {
    std::vector<Weight> vertices; // length r+s+1
    bool operator==(const Path& o) const { return vertices == o.vertices; }
    bool operator<(const Path& o) const;
    std::string to_string() const;
};

std::vector<Path> paths_to(const BranchingGraph& graph, const Weight& target);
std::vector<Path> all_paths(const BranchingGraph& graph);

/// The eigenvalue list (c_T(1), ..., c_T(r+s)) of a path.
std::vector<Scalar> path_contents(const Path& path, const ScalarMode& mode);

/// Count-profile criterion for delta-balancedness; for non-integer delta
/// this degenerates to equality of the bipartitions.
bool is_delta_balanced(const Weight& a, const Weight& b, const DeltaSpec& delta);

/// Partition of Lambda-dot into delta-balanced classes.
std::vector<std::vector<Weight>> blocks(Wall wall, const DeltaSpec& delta);

} // namespace wbr

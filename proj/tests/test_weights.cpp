#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "wbr/weights.hpp"

using namespace wbr;

TEST_SUITE_BEGIN("weights");

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<Wall> walls_up_to(int max_n, int min_n = 1) {
    std::vector<Wall> out;
    for (int n = min_n; n <= max_n; ++n)
        for (int r = 0; r <= n; ++r) out.push_back(Wall{r, n - r});
    return out;
}

// Brute-force oracle for delta-balancedness: search for box pairings whose
// content pairs sum to -delta, straight from the definition.
std::vector<int> skew_contents(const Partition& outer, const Partition& common) {
    std::vector<int> out;
    const auto& op = outer.parts();
    for (size_t i = 0; i < op.size(); ++i) {
        const int in = i < common.parts().size() ? common.parts()[i] : 0;
        for (int b = in; b < op[i]; ++b) out.push_back(b - static_cast<int>(i));
    }
    return out;
}

bool pairing_exists(std::vector<int> lefts, std::vector<int> rights, const Rat& delta) {
    if (lefts.size() != rights.size()) return false;
    std::sort(rights.begin(), rights.end());
    do {
        bool ok = true;
        for (size_t i = 0; i < lefts.size() && ok; ++i)
            if (Rat(lefts[i]) + Rat(rights[i]) != -delta) ok = false;
        if (ok) return true;
    } while (std::next_permutation(rights.begin(), rights.end()));
    return lefts.empty();
}

bool balanced_oracle(const Weight& a, const Weight& b, const Rat& delta) {
    auto common = [](const Partition& x, const Partition& y) {
        std::vector<int> parts;
        for (size_t i = 0; i < std::min(x.parts().size(), y.parts().size()); ++i)
            parts.push_back(std::min(x.parts()[i], y.parts()[i]));
        return Partition(parts);
    };
    const Partition cl = common(a.left, b.left), cr = common(a.right, b.right);
    return pairing_exists(skew_contents(a.left, cl), skew_contents(a.right, cr), delta) &&
           pairing_exists(skew_contents(b.left, cl), skew_contents(b.right, cr), delta);
}

} // namespace

TEST_CASE("partition basics") {
    CHECK(Partition({3, 1}).contents() == std::vector<int>{0, 1, 2, -1});
    CHECK(Partition({2, 2, 0}).parts() == std::vector<int>{2, 2});
    CHECK_THROWS_AS(Partition({1, 2}), Error);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(0).size() == 1);
    CHECK(Partition({2, 1}).with_box_added().size() == 3);
    CHECK(Partition({2, 2}).with_box_removed().size() == 1);

    // the content multiset determines the partition (n <= 8)
    for (int n = 0; n <= 8; ++n) {
        std::set<std::multiset<int>> seen;
        for (const Partition& p : partitions_of(n)) {
            auto c = p.contents();
            auto key = std::multiset<int>(c.begin(), c.end());
            CHECK(seen.insert(key).second);
        }
    }
}

TEST_CASE("weight enumeration") {
    CHECK(enumerate_weights(Wall{2, 2}).size() == 6);
    CHECK(enumerate_weights(Wall{1, 0}).size() == 1);
    CHECK(enumerate_weights(Wall{2, 1}).size() == 3);
    CHECK(dot_weights(Wall{2, 2}, DeltaSpec::at(0)).size() == 5);
    CHECK(dot_weights(Wall{2, 2}, DeltaSpec::at(1)).size() == 6);
    CHECK(dot_weights(Wall{2, 2}, DeltaSpec::generic_value()).size() == 6);
    CHECK(dot_weights(Wall{2, 1}, DeltaSpec::at(0)).size() == 3);
}

TEST_CASE("content vectors") {
    const ScalarMode generic = ScalarMode::generic_delta();
    const Weight w = make_weight(Wall{2, 1}, Partition({2}), Partition({1}));
    const auto c = contents(w, generic);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Scalar(0));
    CHECK(c[1] == Scalar(1));
    CHECK(c[2] == generic.delta());

    const Weight empty11 = make_weight(Wall{1, 1}, Partition(), Partition());
    CHECK(contents(empty11, generic) == std::vector<Scalar>{Scalar(0), Scalar(0)});

    // the five content vectors of Lambda-dot_{3,1} at delta = 0
    const ScalarMode at0 = ScalarMode::rational_at(0);
    std::set<std::vector<Rat>> vecs;
    for (const Weight& la : dot_weights(Wall{3, 1}, DeltaSpec::at(0))) {
        std::vector<Rat> v;
        for (const Scalar& x : contents(la, at0)) v.push_back(x.rational());
        vecs.insert(v);
    }
    const std::set<std::vector<Rat>> expected = {
        {0, 1, 2, 0}, {0, 1, -1, 0}, {0, -1, -2, 0}, {0, 1, 0, 0}, {0, -1, 0, 0}};
    CHECK(vecs == expected);
}

TEST_CASE("content rational functions") {
    const auto f1 = content_rational_function(make_weight(Wall{1, 1}, {1}, {1}),
                                              ScalarMode::rational_at(0));
    CHECK(f1.num == std::vector<Scalar>{Scalar(1)});
    CHECK(f1.den == std::vector<Scalar>{Scalar(1)});

    const auto f2 = content_rational_function(make_weight(Wall{2, 0}, {2}, {}),
                                              ScalarMode::rational_at(0));
    CHECK(f2.num == std::vector<Scalar>{Scalar(1), Scalar(1)});
    CHECK(f2.den == std::vector<Scalar>{Scalar(1)});

    const auto f3 = content_rational_function(make_weight(Wall{2, 1}, {2}, {1}),
                                              ScalarMode::rational_at(2));
    CHECK(f3.num == std::vector<Scalar>{Scalar(1), Scalar(1)});
    CHECK(f3.den == std::vector<Scalar>{Scalar(1), Scalar(-2)});
}

TEST_CASE("semisimplicity criterion") {
    CHECK(is_semisimple(Wall{0, 5}, DeltaSpec::at(0)));
    CHECK(is_semisimple(Wall{4, 0}, DeltaSpec::at(1)));
    CHECK(!is_semisimple(Wall{2, 2}, DeltaSpec::at(1)));
    CHECK(is_semisimple(Wall{1, 2}, DeltaSpec::at(0)));
    CHECK(is_semisimple(Wall{3, 1}, DeltaSpec::at(0)));
    CHECK(!is_semisimple(Wall{3, 2}, DeltaSpec::at(0)));
    CHECK(is_semisimple(Wall{2, 2}, DeltaSpec::generic_value()));
    CHECK(is_semisimple(Wall{2, 2}, DeltaSpec::at(rat_parse("7/3"))));
    CHECK(is_semisimple(Wall{2, 2}, DeltaSpec::at(3)));
    CHECK(!is_semisimple(Wall{2, 2}, DeltaSpec::at(2)));
    CHECK(!is_semisimple(Wall{2, 2}, DeltaSpec::at(-2)));
    CHECK(is_semisimple(Wall{2, 2}, DeltaSpec::at(-3)));
}

TEST_CASE("branching graph and path contents") {
    const ScalarMode generic = ScalarMode::generic_delta();

    const auto g11 = branching_graph(Wall{1, 1});
    const auto p11 = paths_to(g11, make_weight(Wall{1, 1}, Partition(), Partition()));
    REQUIRE(p11.size() == 1);
    CHECK(path_contents(p11[0], generic) == std::vector<Scalar>{Scalar(0), Scalar(0)});

    const auto g21 = branching_graph(Wall{2, 1});
    const auto p21 = paths_to(g21, make_weight(Wall{2, 1}, {2}, {1}));
    REQUIRE(p21.size() == 1);
    const auto c = path_contents(p21[0], generic);
    CHECK(c == std::vector<Scalar>{Scalar(0), Scalar(1), generic.delta()});
}

TEST_CASE("path counts square-sum to (r+s)!") {
    for (const Wall& w : walls_up_to(6)) {
        const auto g = branching_graph(w);
        long long total = 0;
        for (const Weight& la : g.levels.back()) {
            const long long k = static_cast<long long>(paths_to(g, la).size());
            total += k * k;
        }
        CAPTURE(w.r);
        CAPTURE(w.s);
        CHECK(total == factorial(w.n()));
    }
}

TEST_CASE("delta-balancedness") {
    const Wall w21{2, 1};
    const Weight a = make_weight(w21, {2}, {1});
    const Weight b = make_weight(w21, {1}, {});
    CHECK(is_delta_balanced(a, b, DeltaSpec::at(-1)));
    CHECK(!is_delta_balanced(a, b, DeltaSpec::at(1)));
    CHECK(is_delta_balanced(a, a, DeltaSpec::at(5)));
    CHECK(is_delta_balanced(a, a, DeltaSpec::generic_value()));
    CHECK(!is_delta_balanced(a, b, DeltaSpec::at(rat_parse("1/2"))));
    CHECK(!is_delta_balanced(a, b, DeltaSpec::generic_value()));
}

TEST_CASE("count criterion agrees with the pairing-search oracle") {
    for (const Wall& w : walls_up_to(4)) {
        const auto weights = enumerate_weights(w);
        for (int d = -2; d <= 2; ++d)
            for (const Weight& a : weights)
                for (const Weight& b : weights) {
                    CAPTURE(w.r);
                    CAPTURE(w.s);
                    CAPTURE(d);
                    CHECK(is_delta_balanced(a, b, DeltaSpec::at(d)) ==
                          balanced_oracle(a, b, Rat(d)));
                }
    }
}

TEST_CASE("balancedness matches equality of content rational functions") {
    for (const Wall& w : walls_up_to(4)) {
        const auto weights = enumerate_weights(w);
        for (int d = -2; d <= 2; ++d) {
            const ScalarMode mode = ScalarMode::rational_at(d);
            std::vector<ContentFunction> fs;
            for (const Weight& la : weights) fs.push_back(content_rational_function(la, mode));
            for (size_t i = 0; i < weights.size(); ++i)
                for (size_t j = 0; j < weights.size(); ++j)
                    CHECK(is_delta_balanced(weights[i], weights[j], DeltaSpec::at(d)) ==
                          (fs[i] == fs[j]));
        }
    }
}

TEST_CASE("content functions separate weights in semisimple regimes") {
    auto check_separation = [](Wall w, const ScalarMode& mode) {
        const auto weights = enumerate_weights(w);
        for (size_t i = 0; i < weights.size(); ++i)
            for (size_t j = i + 1; j < weights.size(); ++j) {
                CAPTURE(w.r);
                CAPTURE(w.s);
                CHECK(content_rational_function(weights[i], mode) !=
                      content_rational_function(weights[j], mode));
            }
    };
    for (const Wall& w : walls_up_to(5)) {
        check_separation(w, ScalarMode::generic_delta());
        check_separation(w, ScalarMode::rational_at(rat_parse("7/3")));
        check_separation(w, ScalarMode::rational_at(100));
    }
    for (Wall w : {Wall{1, 2}, Wall{2, 1}, Wall{1, 3}, Wall{3, 1}})
        check_separation(w, ScalarMode::rational_at(0));
}

TEST_CASE("blocks") {
    const auto generic_blocks = blocks(Wall{2, 2}, DeltaSpec::generic_value());
    CHECK(generic_blocks.size() == 6);
    for (const auto& cls : generic_blocks) CHECK(cls.size() == 1);

    const auto b11 = blocks(Wall{1, 1}, DeltaSpec::at(0));
    REQUIRE(b11.size() == 1);
    CHECK(b11[0] == std::vector<Weight>{make_weight(Wall{1, 1}, {1}, {1})});

    const auto b21 = blocks(Wall{2, 1}, DeltaSpec::at(-1));
    const Weight a = make_weight(Wall{2, 1}, {2}, {1});
    const Weight b = make_weight(Wall{2, 1}, {1}, {});
    bool together = false;
    for (const auto& cls : b21) {
        const bool has_a = std::find(cls.begin(), cls.end(), a) != cls.end();
        const bool has_b = std::find(cls.begin(), cls.end(), b) != cls.end();
        if (has_a || has_b) together = has_a && has_b;
    }
    CHECK(together);
}

TEST_SUITE_END();

#include <doctest.h>

#include <numeric>

#include "wbr/diagram.hpp"

using namespace wbr;

TEST_SUITE_BEGIN("diagrams");

namespace {

// Left-to-right product of generator diagrams (first factor at the bottom
// of the stack), returning the final diagram and the total loop count.
std::pair<WalledDiagram, int> word_product(Wall w, const std::vector<Gen>& word) {
    WalledDiagram acc = WalledDiagram::identity(w);
    int loops = 0;
    for (const Gen& g : word) {
        auto [next, l] = compose(acc, make_generator(w, g));
        acc = next;
        loops += l;
    }
    return {acc, loops};
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

TEST_CASE("identity diagram and unit law") {
    const Wall w{2, 1};
    const WalledDiagram id = WalledDiagram::identity(w);
    for (int k = 0; k < 3; ++k) CHECK(id.partner(k) == k + 3);

    for (const WalledDiagram& d : enumerate_diagrams(w)) {
        CHECK(compose(id, d) == std::make_pair(d, 0));
        CHECK(compose(d, id) == std::make_pair(d, 0));
    }

    CHECK(WalledDiagram::identity(Wall{0, 0}).pairing().empty());
}

TEST_CASE("generator diagrams") {
    const Wall w{2, 2};
    const WalledDiagram s1 = make_generator(w, Gen::S(1));
    CHECK(s1.pairing() == std::vector<int>{5, 4, 6, 7, 1, 0, 2, 3});

    const WalledDiagram e23 = make_generator(w, Gen::E(2, 3));
    CHECK(e23.pairing() == std::vector<int>{4, 2, 1, 7, 0, 6, 5, 3});

    // tau_2 = e_{2,3} e_{1,4}, composed with no loops
    const WalledDiagram tau2 = make_generator(w, Gen::Tau(2));
    CHECK(tau2.pairing() == std::vector<int>{3, 2, 1, 0, 7, 6, 5, 4});
    CHECK(compose(e23, make_generator(w, Gen::E(1, 4))) == std::make_pair(tau2, 0));
    CHECK(make_generator(w, Gen::Tau(0)) == WalledDiagram::identity(w));

    CHECK_THROWS_AS(make_generator(w, Gen::S(2)), CrossesWall);
    CHECK_THROWS_AS(make_generator(w, Gen::S(4)), IndexOutOfRange);
    CHECK_THROWS_AS(make_generator(w, Gen::E(3, 4)), CrossesWall);
    CHECK_THROWS_AS(make_generator(w, Gen::Transposition(2, 3)), CrossesWall);
    CHECK_THROWS_AS(make_generator(w, Gen::Tau(3)), IndexOutOfRange);

    CHECK(algebra_generators(w).size() == 3);
    CHECK(algebra_generators(Wall{3, 0}).size() == 2);
}

TEST_CASE("composition with loop counting") {
    const Wall w{2, 2};
    const WalledDiagram s1 = make_generator(w, Gen::S(1));
    const WalledDiagram e23 = make_generator(w, Gen::E(2, 3));

    CHECK(compose(s1, s1) == std::make_pair(WalledDiagram::identity(w), 0));
    CHECK(compose(e23, e23) == std::make_pair(e23, 1));

    // e_{2,3} (1,2) e_{2,3} traced stepwise: no loop at either step and the
    // product collapses to e_{2,3}, which is the diagram form of
    // e_{i,j} e_{i',j} = e_{i,j} (i,i') once e_{1,3} = s_1 e_{2,3} s_1 is
    // substituted.
    const WalledDiagram t12 = make_generator(w, Gen::Transposition(1, 2));
    auto [step1, l1] = compose(e23, t12);
    CHECK(l1 == 0);
    auto [step2, l2] = compose(step1, e23);
    CHECK(l2 == 0);
    CHECK(step2 == e23);

    const WalledDiagram e13 = make_generator(w, Gen::E(1, 3));
    CHECK(compose(e23, e13) == compose(e23, t12));

    CHECK_THROWS_AS(compose(s1, WalledDiagram::identity(Wall{2, 1})), WallMismatch);
}

TEST_CASE("enumeration") {
    CHECK(enumerate_diagrams(Wall{2, 2}).size() == 24);
    CHECK(enumerate_diagrams(Wall{1, 0}).size() == 1);
    CHECK(enumerate_diagrams(Wall{0, 0}).size() == 1);

    const auto d11 = enumerate_diagrams(Wall{1, 1});
    REQUIRE(d11.size() == 2);
    CHECK(d11[0] == make_generator(Wall{1, 1}, Gen::E(1, 2)));
    CHECK(d11[1] == WalledDiagram::identity(Wall{1, 1}));

    for (Wall w : {Wall{2, 1}, Wall{3, 0}, Wall{1, 2}}) {
        auto all = enumerate_diagrams(w);
        CHECK(static_cast<long long>(all.size()) == factorial(w.n()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end()); // no duplicates
    }

    CHECK_THROWS_AS(enumerate_diagrams(Wall{4, 4}), SizeLimitExceeded);
    CHECK(enumerate_diagrams(Wall{4, 4}, 8).size() == 40320);
}

TEST_CASE("arc counts") {
    const Wall w{2, 2};
    CHECK(WalledDiagram::identity(w).top_arc_count() == 0);
    for (int t = 0; t <= 2; ++t) {
        CHECK(make_generator(w, Gen::Tau(t)).top_arc_count() == t);
        CHECK(make_generator(w, Gen::Tau(t)).bottom_arc_count() == t);
    }
    CHECK(make_generator(w, Gen::E(1, 4)).top_arc_count() == 1);
}

TEST_CASE("composition is associative, exhaustively for r+s <= 3") {
    for (Wall w : {Wall{1, 0}, Wall{1, 1}, Wall{2, 0}, Wall{2, 1}, Wall{1, 2}, Wall{3, 0}}) {
        const auto all = enumerate_diagrams(w);
        for (const auto& a : all)
            for (const auto& b : all)
                for (const auto& c : all) {
                    auto [ab, l_ab] = compose(a, b);
                    auto [ab_c, l_ab_c] = compose(ab, c);
                    auto [bc, l_bc] = compose(b, c);
                    auto [a_bc, l_a_bc] = compose(a, bc);
                    CHECK(ab_c == a_bc);
                    CHECK(l_ab + l_ab_c == l_bc + l_a_bc);
                }
    }
}

TEST_CASE("arcs never decrease under composition") {
    for (Wall w : {Wall{1, 1}, Wall{2, 1}, Wall{1, 2}}) {
        const auto all = enumerate_diagrams(w);
        for (const auto& a : all) {
            CHECK(a.top_arc_count() == a.bottom_arc_count());
            for (const auto& b : all) {
                const auto prod = compose(a, b).first;
                CHECK(prod.top_arc_count() >= std::max(a.top_arc_count(), b.top_arc_count()));
                CHECK(prod.bottom_arc_count() >=
                      std::max(a.bottom_arc_count(), b.bottom_arc_count()));
            }
        }
    }
}

TEST_CASE("generator words reproduce e_{j,k} and (a,b)") {
    const Wall w{3, 2};
    const int r = w.r;
    for (int j = 1; j <= r; ++j)
        for (int k = r + 1; k <= w.n(); ++k) {
            std::vector<Gen> word;
            for (int i = k - 1; i >= r + 1; --i) word.push_back(Gen::S(i));
            for (int i = j; i <= r - 1; ++i) word.push_back(Gen::S(i));
            word.push_back(Gen::E(r, r + 1));
            for (int i = r - 1; i >= j; --i) word.push_back(Gen::S(i));
            for (int i = r + 1; i <= k - 1; ++i) word.push_back(Gen::S(i));
            CHECK(word_product(w, word) ==
                  std::make_pair(make_generator(w, Gen::E(j, k)), 0));
        }

    auto transposition_word = [](int a, int b) {
        std::vector<Gen> word;
        for (int i = b - 1; i >= a + 1; --i) word.push_back(Gen::S(i));
        word.push_back(Gen::S(a));
        for (int i = a + 1; i <= b - 1; ++i) word.push_back(Gen::S(i));
        return word;
    };
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {4, 5}})
        CHECK(word_product(w, transposition_word(a, b)) ==
              std::make_pair(make_generator(w, Gen::Transposition(a, b)), 0));
}

TEST_SUITE_END();

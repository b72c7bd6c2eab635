#include <doctest.h>

#include "linkcert/cycles.hpp"
#include "linkcert/errors.hpp"

using namespace linkcert;

TEST_CASE("cycle construction validates input") {
    CHECK_THROWS_AS(OrientedCycle({0, 1}), PreconditionError);
    CHECK_THROWS_AS(OrientedCycle({0, 1, 0}), PreconditionError);
}

TEST_CASE("canonical form starts at the smallest vertex, smaller neighbor next") {
    OrientedCycle c({4, 2, 7, 5});
    auto canon = c.canonical();
    CHECK(canon.vertices() == std::vector<Vertex>{2, 4, 5, 7});
    CHECK(c.reversed().canonical().vertices() == std::vector<Vertex>{2, 4, 5, 7});
}

TEST_CASE("arc follows the orientation inclusively") {
    OrientedCycle c({3, 9, 1, 6});
    CHECK(c.arc(1, 3) == std::vector<Vertex>{9, 1, 6});
    CHECK(c.arc(3, 1) == std::vector<Vertex>{6, 3, 9});  // wraps
}

TEST_CASE("a cycle plus its reverse cancels") {
    OrientedCycle c({0, 1, 2, 3});
    auto sum = chain_add(chain_of(c), chain_of(c.reversed()));
    CHECK(sum.is_zero());
}

TEST_CASE("triangles sharing one edge with opposite orientations fuse to a 4-cycle") {
    // (0,1,2) and (1,0,3) traverse edge {0,1} oppositely.
    OrientedCycle t1({0, 1, 2});
    OrientedCycle t2({1, 0, 3});
    auto sum = chain_add(chain_of(t1), chain_of(t2));
    auto fused = sum.as_simple_cycle();
    REQUIRE(fused.has_value());
    CHECK(fused->size() == 4);
    CHECK(fused->canonical().vertices() == std::vector<Vertex>{0, 2, 1, 3});
}

TEST_CASE("non-simple chain sums are rejected with a reason") {
    OrientedCycle t1({0, 1, 2});
    OrientedCycle t2({3, 4, 5});
    auto sum = chain_add(chain_of(t1), chain_of(t2));
    std::string why;
    CHECK_FALSE(sum.as_simple_cycle(&why).has_value());
    CHECK(why.find("disconnected") != std::string::npos);

    // Same orientation on the shared edge: multiplicity 2.
    auto doubled = chain_add(chain_of(OrientedCycle({0, 1, 2})), chain_of(OrientedCycle({0, 1, 3})));
    CHECK_FALSE(doubled.as_simple_cycle(&why).has_value());
}

TEST_CASE("chain multiplicities respect orientation") {
    OrientedChain ch;
    ch.add_edge(2, 5, 3);
    CHECK(ch.multiplicity(2, 5) == 3);
    CHECK(ch.multiplicity(5, 2) == -3);
    ch.add_edge(5, 2, 3);
    CHECK(ch.is_zero());
}

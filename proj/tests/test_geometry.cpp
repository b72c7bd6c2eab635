#include <doctest.h>

#include "fixtures.hpp"
#include "linkcert/errors.hpp"
#include "linkcert/geometry.hpp"

using namespace linkcert;

TEST_CASE("affine basis points are accepted") {
    auto emb = fixtures::embedding_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(validate_embedding(emb).ok());
}

TEST_CASE("scalar multiples are a collinear triple") {
    auto emb = fixtures::embedding_of({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {5, 1, 9}});
    auto report = validate_embedding(emb);
    REQUIRE_FALSE(report.ok());
    CHECK(report.issues[0].kind == ValidationIssue::CollinearTriple);
    CHECK(report.issues[0].vertices == std::vector<int>{0, 1, 2});
    CHECK(report.summary().find("collinear triple") != std::string::npos);
}

TEST_CASE("flat quadruple is rejected") {
    auto emb = fixtures::embedding_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    auto report = validate_embedding(emb);
    REQUIRE_FALSE(report.ok());
    CHECK(report.issues[0].kind == ValidationIssue::CoplanarQuadruple);
    CHECK(report.summary().find("coplanar quadruple") != std::string::npos);
}

TEST_CASE("duplicate vertices are reported first") {
    auto emb = fixtures::embedding_of({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}});
    auto report = validate_embedding(emb);
    REQUIRE_FALSE(report.ok());
    CHECK(report.issues[0].kind == ValidationIssue::DuplicateVertices);
    CHECK(report.issues[0].vertices == std::vector<int>{0, 2});
}

TEST_CASE("embedding JSON round-trip keeps unbounded coordinates") {
    Embedding emb;
    emb.coords.push_back(Point3{BigInt("123456789012345678901234567890"), BigInt(-7), BigInt(0)});
    emb.coords.push_back(Point3{BigInt(1), BigInt(2), BigInt(3)});
    const std::string text = emb.to_json();
    Embedding back = Embedding::from_json(text);
    REQUIRE(back.n() == 2);
    CHECK(back.coords[0].x == emb.coords[0].x);
    CHECK(back.coords[0].y == BigInt(-7));
    CHECK(text.find("\"n\"") < text.find("\"coords\""));
}

TEST_CASE("malformed embedding JSON is a usage error") {
    CHECK_THROWS_AS(Embedding::from_json("{"), PreconditionError);
    CHECK_THROWS_AS(Embedding::from_json("{\"n\": 2, \"coords\": [[\"0\",\"0\",\"0\"]]}"),
                    PreconditionError);
}

TEST_CASE("incremental validity matches the full validator") {
    auto emb = fixtures::hopf_embedding();
    for (int k = 0; k < emb.n(); ++k) CHECK(new_point_keeps_valid(emb.coords, k));
    auto flat = fixtures::embedding_of({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    CHECK_FALSE(new_point_keeps_valid(flat.coords, 3));
}

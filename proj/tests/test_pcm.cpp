#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"

#include <alo_ipcm/pcm.hpp>

using namespace alo;
using Catch::Matchers::WithinAbs;

namespace {

const Scale M = Scale::multiplicative();
const Scale A = Scale::additive();
const Scale F = Scale::fuzzy();

constexpr double tau = 1e-9;

} // namespace

TEST_CASE("permutation", "[pcm]")
{
    const Permutation p = Permutation::from_one_based({1, 3, 2});
    REQUIRE(p.to_string() == "1 3 2");
    REQUIRE(p[1] == 2);
    REQUIRE(p.one_based() == std::vector<std::size_t>{1, 3, 2});
    REQUIRE_THROWS_AS(Permutation::from_one_based({1, 1, 2}), InvalidArgument);
    REQUIRE_THROWS_AS(Permutation::from_one_based({0, 1}), InvalidArgument);
    REQUIRE(Permutation::identity(3) < p);
}

TEST_CASE("construction", "[pcm]")
{
    REQUIRE_THROWS_AS(Pcm(A, 1, {0.0}), InvalidArgument);
    REQUIRE_THROWS_AS(Pcm(A, 2, {0.0, 1.0, -1.0}), InvalidArgument);
    REQUIRE_THROWS_AS(Pcm::from_rows(A, {{0.0, 1.0}, {-1.0, 0.5}}), InvalidArgument);
    REQUIRE_THROWS_AS(Pcm::from_rows(F, {{0.5, 1.0}, {0.0, 0.5}}), DomainError);
    const Pcm snapped = Pcm::from_rows(M, {{1.0 + 1e-12, 2.0}, {0.5, 1.0}});
    REQUIRE(snapped.raw(0, 0) == 1.0);
}

TEST_CASE("is_reciprocal", "[pcm]")
{
    REQUIRE(is_reciprocal(Pcm::from_rows(A, {{0, 2}, {-2, 0}})));
    REQUIRE_FALSE(is_reciprocal(Pcm::from_rows(M, {{1, 2}, {3, 1}})));
    // L of the three-alternative multiplicative example, identity relabelling
    const Pcm l = Pcm::from_rows(M, {{1, 0.25, 6}, {4, 1, 3}, {1.0 / 6, 1.0 / 3, 1}});
    REQUIRE(is_reciprocal(l));
}

TEST_CASE("is_consistent", "[pcm]")
{
    REQUIRE(is_consistent(Pcm::from_rows(A, {{0, 2, 4}, {-2, 0, 2}, {-4, -2, 0}})));
    REQUIRE_FALSE(is_consistent(Pcm::from_rows(A, {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}})));
    REQUIRE(is_consistent(Pcm::from_rows(F, {{0.5, 0.9}, {0.1, 0.5}})));
    REQUIRE_THROWS_AS(is_consistent(Pcm::from_rows(M, {{1, 2}, {3, 1}})), NotReciprocal);
}

TEST_CASE("consistency_index", "[pcm]")
{
    REQUIRE(consistency_index(Pcm::from_rows(A, {{0, 2, 4}, {-2, 0, 2}, {-4, -2, 0}})).value() == 0.0);
    REQUIRE(consistency_index(Pcm::from_rows(A, {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}})).value() == 1.0);
    const std::vector<double> w{3.0, 0.5, 2.0};
    std::vector<std::vector<double>> rows(3, std::vector<double>(3));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) rows[i][j] = w[i] / w[j];
    }
    REQUIRE_THAT(consistency_index(Pcm::from_rows(M, rows)).value(), WithinAbs(1.0, 1e-12));
    REQUIRE_THROWS_AS(consistency_index(Pcm::from_rows(A, {{0, 1}, {-1, 0}})), OrderTooSmall);
    REQUIRE_THROWS_AS(consistency_index(Pcm::from_rows(M, {{1, 2, 1}, {3, 1, 1}, {1, 1, 1}})), NotReciprocal);
}

TEST_CASE("permute", "[pcm]")
{
    const Pcm a = Pcm::from_rows(A, {{0, 1, 5}, {-1, 0, -2}, {-5, 2, 0}});
    REQUIRE(permute(a, Permutation::identity(3)).raw_entries() == a.raw_entries());
    const Pcm b = permute(a, Permutation::from_one_based({2, 1, 3}));
    REQUIRE(b.raw(0, 1) == -1.0);
    REQUIRE(b.raw(0, 2) == -2.0);
    REQUIRE(is_reciprocal(b));
    REQUIRE_THROWS_AS(permute(a, Permutation::identity(2)), InvalidArgument);
}

// Properties -------------------------------------------------------------------

TEST_CASE("index is at least e, equals e exactly on consistent matrices, ignores relabelling",
          "[pcm][property]")
{
    testing::Gen gen(0x9C31);
    const Tolerance tol{tau};
    for (const auto& g : testing::builtin_scales()) {
        INFO(g.name());
        int inconsistent = 0;
        for (int s = 0; s < 200; ++s) {
            const std::size_t n = gen.index(3, 7);
            const Pcm a = s % 4 == 0 ? gen.consistent_pcm(g, n) : gen.reciprocal_pcm(g, n);
            const GroupElement idx = consistency_index(a, tol);
            REQUIRE(g.less_equal(g.identity(), idx, tol));
            const bool consistent = is_consistent(a, tol);
            REQUIRE(g.equal(idx, g.identity(), tol) == consistent);
            if (!consistent) ++inconsistent;
            for (int r = 0; r < 10; ++r) {
                REQUIRE(g.equal(consistency_index(permute(a, gen.permutation(n)), tol), idx, tol));
            }
        }
        REQUIRE(inconsistent > 0);
    }
}

TEST_CASE("index commutes with isomorphisms", "[pcm][property]")
{
    testing::Gen gen(0x9C32);
    const Tolerance tol{tau};
    for (const IsoMap& m : {IsoMap::multiplicative_to_fuzzy(), IsoMap::additive_to_fuzzy(),
                            IsoMap::multiplicative_to_additive(), IsoMap::multiplicative_to_fuzzy().inverse()}) {
        for (int s = 0; s < 100; ++s) {
            const Pcm a = gen.reciprocal_pcm(m.source(), gen.index(3, 6));
            const Pcm b = transport(a, m);
            REQUIRE(is_reciprocal(b, tol));
            REQUIRE(m.target().equal(consistency_index(b, tol), m.apply(consistency_index(a, tol)), tol));
        }
    }
}

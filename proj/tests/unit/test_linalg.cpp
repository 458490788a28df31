#include <doctest.h>

#include "mzvcf/confluence.hpp"
#include "mzvcf/linalg.hpp"

using namespace mzvcf;

namespace {

NCPoly P(const char* s) { return NCPoly::parse(s); }

std::vector<NCPoly> bodies(const std::vector<RelationRecord>& rs)
{
    std::vector<NCPoly> out;
    for (const auto& r : rs)
        out.push_back(r.body);
    return out;
}

// d_k as the number of ordered compositions of k into parts 2 and 3,
// counted by explicit enumeration.
long compositions(int k)
{
    if (k == 0)
        return 1;
    long n = 0;
    for (int part : {2, 3})
        if (part <= k)
            n += compositions(k - part);
    return n;
}

std::vector<long> dimension_table(int n)
{
    std::vector<long> c;
    for (int k = 0; k <= n; ++k)
        c.push_back(compositions(k));
    return c;
}

}  // namespace

TEST_CASE("a0 basis")
{
    const auto b = a0_basis(4);
    REQUIRE(b.size() == 4);
    CHECK(b[0].str() == "1000");
    CHECK(b[1].str() == "1010");
    CHECK(b[2].str() == "1100");
    CHECK(b[3].str() == "1110");
    CHECK(a0_basis(2).size() == 1);
}

TEST_CASE("vectorization")
{
    CHECK(to_vector(NCPoly(), 3).entries == std::vector<Rational>{0, 0});
    CHECK(to_vector(P("1*100 + 1*110"), 3).entries == std::vector<Rational>{1, 1});
    const NCPoly body = confluence_relation(Word::parse("1z10")).body;
    const RelVector v = to_vector(body, 4);
    CHECK(v.entries == std::vector<Rational>{3, 5, 13, 4});
    CHECK(from_vector(v) == body);
    CHECK_THROWS_AS(to_vector(P("1*100 + 1*10"), 3), PreconditionError);
    CHECK_THROWS_AS(to_vector(P("1*z00"), 3), PreconditionError);
}

TEST_CASE("rank and span")
{
    CHECK(rank({}).rank == 0);
    CHECK_THROWS_AS(rank({to_vector(P("1*10"), 2), to_vector(P("1*100"), 3)}), PreconditionError);

    const RankResult cf3 = rank_of_bodies(bodies(generate_confluence(3)), 3);
    CHECK(cf3.rank == 1);
    CHECK(rank_of_bodies(bodies(generate_confluence(4)), 4).rank == 3);
    CHECK(in_span(P("1*100 + 1*110"), cf3.basis));
    CHECK(in_span(rds_relation(Word::parse("1"), Word::parse("10")).body, cf3.basis));
    CHECK_FALSE(in_span(P("1*100"), cf3.basis));
    CHECK_THROWS_AS(in_span(P("1*1000"), cf3.basis), PreconditionError);
}

TEST_CASE("rank is stable under adding combinations")
{
    std::vector<RelVector> vs;
    for (const auto& r : generate_confluence(5))
        vs.push_back(to_vector(r.body, 5));
    const auto base = rank(vs).rank;
    RelVector combo = vs[3];
    for (std::size_t i = 0; i < combo.entries.size(); ++i)
        combo.entries[i] = Rational(2, 3) * vs[5].entries[i] - 7 * vs[9].entries[i] + vs[11].entries[i];
    vs.push_back(combo);
    CHECK(rank(vs).rank == base);
    CHECK(rank(vs).basis.rows() == rank(vs).basis.rows());
}

TEST_CASE("echelon form invariants")
{
    RowEchelon e(4);
    CHECK(e.insert({2, 4, 0, 6}));
    CHECK(e.insert({0, 0, 3, 3}));
    CHECK_FALSE(e.insert({1, 2, 1, 4}));
    REQUIRE(e.rank() == 2);
    CHECK(e.pivots() == std::vector<std::size_t>{0, 2});
    CHECK(e.rows()[0] == std::vector<Rational>{1, 2, 0, 3});
    CHECK(e.rows()[1] == std::vector<Rational>{0, 0, 1, 1});
}

TEST_CASE("left kernel")
{
    const std::vector<std::vector<Rational>> rows{{1, 0}, {0, 1}, {1, 1}};
    const auto k = left_kernel(rows, 2);
    REQUIRE(k.size() == 1);
    for (std::size_t j = 0; j < 2; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < 3; ++i)
            s += k[0][i] * rows[i][j];
        CHECK(s == 0);
    }
}

TEST_CASE("confluence ranks match 2^(k-2) - d_k")
{
    const auto d = dimension_table(8);
    CHECK(d == std::vector<long>{1, 0, 1, 1, 1, 2, 2, 3, 4});
    for (int k = 2; k <= 8; ++k) {
        CHECK(conjectural_dimension(k) == d[k]);
        CHECK(expected_relation_rank(k) == (1L << (k - 2)) - d[k]);
    }
    for (int k = 2; k <= 7; ++k)
        CHECK(static_cast<long>(rank_of_bodies(bodies(generate_confluence(k)), k).rank) == (1L << (k - 2)) - d[k]);
}

TEST_CASE("double shuffle and duality lie in the confluence span")
{
    for (int k = 3; k <= 6; ++k) {
        const RankResult cf = rank_of_bodies(bodies(generate_confluence(k)), k);
        for (const auto& r : generate_rds(k))
            CHECK(in_span(r.body, cf.basis));
        for (const auto& r : generate_duality(k))
            CHECK(in_span(r.body, cf.basis));
    }
}

#include <doctest.h>

#include "mzvcf/checks.hpp"

using namespace mzvcf;

TEST_CASE("algebra, regularization and phi suites pass at small weight")
{
    SuiteOptions opts;
    opts.max_weight = 4;
    opts.samples = 60;
    for (const char* suite : {"algebra", "regularization", "phi"})
        for (const auto& r : run_suite(suite, opts)) {
            INFO(r.summary());
            CHECK(r.passed());
        }
}

TEST_CASE("sampling is reproducible and respects the subspace")
{
    std::mt19937_64 a(kDefaultSeed), b(kDefaultSeed);
    for (int i = 0; i < 50; ++i) {
        const Word w = sample_word(a, Subspace::Az0, 2, 5);
        CHECK(w == sample_word(b, Subspace::Az0, 2, 5));
        CHECK(word_in(w, Subspace::Az0));
        CHECK(w.size() >= 2);
        CHECK(w.size() <= 5);
    }
}

TEST_CASE("unknown suite")
{
    CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), ParseError);
    CHECK(suite_names().size() == 4);
}

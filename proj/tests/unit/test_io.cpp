#include <doctest.h>

#include <sstream>

#include "mzvcf/confluence.hpp"
#include "mzvcf/golden.hpp"
#include "mzvcf/io.hpp"
#include "mzvcf/notation.hpp"

using namespace mzvcf;

namespace {

NCPoly P(const char* s) { return NCPoly::parse(s); }

}  // namespace

TEST_CASE("zeta notation")
{
    CHECK(word_to_index(Word::parse("1100")) == ZetaIndex{1, 3});
    CHECK(index_to_word({2, 3}) == Word::parse("10100"));
    CHECK(index_to_word({2}, Letter::Z) == Word::parse("z0"));
    CHECK(to_zeta_string(P("-1*110 - 1*100")) == "-z(1,2)+z(3)");
    CHECK(to_zeta_string(confluence_relation(Word::parse("1z10")).body) == "-4z(1,1,2)+13z(1,3)+5z(2,2)-3z(4)");
    CHECK(to_zeta_string(NCPoly()) == "0");
    CHECK(to_zeta_string(P("1/2*10")) == "-(1/2)z(2)");
    CHECK_THROWS_AS(to_zeta_string(P("1*z0")), PreconditionError);
}

TEST_CASE("tex rendering")
{
    CHECK(word_tex(Word::parse("1100")) == "e_{1}^{2}e_{0}^{2}");
    CHECK(word_tex(Word{}) == "1");
    CHECK(poly_tex(P("-1*100 - 1*110")) == "-e_{1}e_{0}^{2}-e_{1}^{2}e_{0}");
}

TEST_CASE("JSON round trip")
{
    std::vector<RelationRecord> records = generate_confluence(4);
    for (const auto& r : generate_rds(4))
        records.push_back(r);
    records.push_back(make_record(Family::Duality, "100", 3, P("1/3*100 - 2/7*110")));
    std::stringstream ss;
    write_json_lines(ss, records);
    CHECK(read_json_lines(ss) == records);

    std::istringstream bad("{\"family\":\"confluence\"}\n");
    CHECK_THROWS_AS(read_json_lines(bad), ParseError);
    std::istringstream garbage("\n{nope\n");
    try {
        read_json_lines(garbage);
        FAIL("expected a parse error");
    }
    catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("csv, tex and zeta writers")
{
    const auto records = generate_confluence(3);
    std::ostringstream csv, tex, zeta;
    write_csv(csv, records);
    write_tex(tex, records);
    write_zeta(zeta, records);
    CHECK(csv.str().rfind("family,weight,source,body,zeta\n", 0) == 0);
    CHECK(csv.str().find("confluence,3,z10,") != std::string::npos);
    CHECK(tex.str().find("\\begin{tabular}") != std::string::npos);
    CHECK(zeta.str().find("z10: -z(1,2)+z(3) = 0\n") != std::string::npos);
}

TEST_CASE("golden table is reproduced byte for byte")
{
    const GoldenReport a = verify_golden_table();
    CHECK(a.passed());
    CHECK(a.rows == 20);
    CHECK(a.matched == 20);
    CHECK(a.unexpected == 0);
    CHECK(verify_golden_table().lines == a.lines);
}

#include <doctest.h>

#include <unordered_set>

#include "mzvcf/ncpoly.hpp"

using namespace mzvcf;

TEST_CASE("word text round trip")
{
    for (const char* s : {"", "z10", "1z10", "0", "zzzz", "101010"})
        CHECK(Word::parse(s).str() == s);
    const Word w = Word::parse("z10");
    REQUIRE(w.size() == 3);
    CHECK(w[0] == Letter::Z);
    CHECK(w[1] == Letter::One);
    CHECK(w[2] == Letter::Zero);
    CHECK(Word::parse("Z0").str() == "z0");
    CHECK_THROWS_AS(Word::parse("12"), ParseError);
    CHECK_THROWS_AS(Word::parse("e1"), ParseError);
}

TEST_CASE("long words spill past the inline chunk")
{
    std::string s;
    for (int i = 0; i < 100; ++i)
        s += "10z"[i % 3];
    const Word w = Word::parse(s);
    CHECK(w.size() == 100);
    CHECK(w.str() == s);
    CHECK(w == Word::parse(s));
    CHECK(w.hash() == Word::parse(s).hash());
    CHECK((w.prefix(40) + w.suffix_from(40)) == w);
    CHECK(w.erased(50).size() == 99);
    CHECK(w.erased(50).str() == s.substr(0, 50) + s.substr(51));
    Word grown;
    for (char c : s)
        grown.push_back(letter_from_char(c));
    CHECK(grown == w);
}

TEST_CASE("shortlex order with 0 < 1 < z")
{
    const std::vector<std::string> sorted{"", "0", "1", "z", "00", "01", "0z", "10", "z0", "zz", "000"};
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        CHECK(Word::parse(sorted[i]) < Word::parse(sorted[i + 1]));
}

TEST_CASE("distinct words hash apart in practice")
{
    std::unordered_set<std::size_t> hashes;
    for (int n = 0; n <= 7; ++n) {
        std::vector<int> digits(n, 0);
        while (true) {
            Word w;
            for (int d : digits)
                w.push_back(static_cast<Letter>(d));
            hashes.insert(w.hash());
            int i = n - 1;
            while (i >= 0 && digits[i] == 2)
                digits[i--] = 0;
            if (i < 0)
                break;
            ++digits[i];
        }
    }
    // 3^0 + ... + 3^7 words
    CHECK(hashes.size() == 3280);
}

TEST_CASE("word helpers")
{
    CHECK(power(Letter::Z, 3).str() == "zzz");
    CHECK(power(Letter::One, 0).empty());
    const Word w = Word::parse("1z0z");
    CHECK(w.count(Letter::Z) == 2);
    CHECK(w.contains(Letter::One));
    CHECK_FALSE(Word::parse("00").contains(Letter::One));
    CHECK(w.front() == Letter::One);
    CHECK(w.back() == Letter::Z);
}

TEST_CASE("rationals")
{
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("13")) == "13");
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("polynomial arithmetic and text form")
{
    const NCPoly p = NCPoly::parse("3*1000 - 2/3*z10 + 5");
    CHECK(p.coeff(Word::parse("1000")) == 3);
    CHECK(p.coeff(Word::parse("z10")) == Rational(-2, 3));
    CHECK(p.coeff(Word{}) == 5);
    CHECK(NCPoly::parse(p.str()) == p);
    CHECK_FALSE(p.is_homogeneous());
    CHECK_FALSE(p.is_integral());
    CHECK(*p.degree() == 4);

    NCPoly q = NCPoly(Word::parse("10")) - NCPoly(Word::parse("10"));
    CHECK(q.is_zero());
    CHECK(q.size() == 0);
    CHECK_FALSE(q.degree().has_value());
    CHECK(q.str() == "0");

    const NCPoly a = NCPoly::parse("1*1 + 2*0"), b = NCPoly::parse("1*z");
    CHECK(concat(a, b) == NCPoly::parse("1*1z + 2*0z"));
    CHECK(prepend(Letter::Z, a) == NCPoly::parse("1*z1 + 2*z0"));
    NCPoly c = a;
    c *= Rational(1, 2);
    CHECK(c == NCPoly::parse("1/2*1 + 1*0"));
    CHECK_THROWS_AS(NCPoly::parse("3*12"), ParseError);
}

// Straightforward string-based reference implementations used as test oracles.

#ifndef MZVCF_TEST_ORACLE_HPP
#define MZVCF_TEST_ORACLE_HPP

#include <map>
#include <string>

#include "mzvcf/ncpoly.hpp"

namespace oracle {

using Lin = std::map<std::string, mzvcf::Rational>;

inline void add(Lin& acc, const Lin& x, const mzvcf::Rational& c = 1)
{
    for (const auto& [w, v] : x)
        acc[w] += c * v;
}

inline Lin prefixed(char a, const Lin& x)
{
    Lin out;
    for (const auto& [w, v] : x)
        out[a + w] += v;
    return out;
}

inline Lin shuffle(const std::string& u, const std::string& v)
{
    if (u.empty())
        return {{v, 1}};
    if (v.empty())
        return {{u, 1}};
    Lin out = prefixed(u[0], shuffle(u.substr(1), v));
    add(out, prefixed(v[0], shuffle(u, v.substr(1))));
    return out;
}

inline char label_product(char a, char b)
{
    if (a == '0')
        return '0';
    return b;
}

inline Lin stuffle(const std::string& u, const std::string& v)
{
    if (u.empty())
        return {{v, 1}};
    if (v.empty())
        return {{u, 1}};
    Lin inner = stuffle(u.substr(1), v);
    add(inner, stuffle(u, v.substr(1)));
    add(inner, prefixed('0', stuffle(u.substr(1), v.substr(1))), -1);
    return prefixed(label_product(u[0], v[0]), inner);
}

inline mzvcf::NCPoly to_poly(const Lin& x)
{
    mzvcf::NCPoly p;
    for (const auto& [w, v] : x)
        p.add(mzvcf::Word::parse(w), v);
    return p;
}

inline bool same_pair(char x, char y, char a, char b)
{
    return (x == a && y == b) || (x == b && y == a);
}

// Sum over i of (delta({a_i,a_{i+1}}) - delta({a_{i-1},a_i})) times the word without a_i.
inline Lin derivation(char alpha, char beta, const std::string& w)
{
    Lin out;
    const std::string padded = "0" + w + "1";
    for (std::size_t i = 1; i + 1 < padded.size(); ++i) {
        int c = 0;
        if (same_pair(padded[i], padded[i + 1], alpha, beta))
            ++c;
        if (same_pair(padded[i - 1], padded[i], alpha, beta))
            --c;
        if (c != 0)
            out[w.substr(0, i - 1) + w.substr(i)] += c;
    }
    return out;
}

inline Lin tau_z(const std::string& w)
{
    Lin acc{{"", 1}};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Lin image;
        if (*it == '0')
            image = {{"z", 1}, {"1", -1}};
        else if (*it == '1')
            image = {{"z", 1}, {"0", -1}};
        else
            image = {{"z", 1}};
        Lin next;
        for (const auto& [u, c] : acc)
            for (const auto& [v, d] : image)
                next[u + v] += c * d;
        acc = std::move(next);
    }
    return acc;
}

}  // namespace oracle

#endif

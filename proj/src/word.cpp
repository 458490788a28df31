/*
   Copyright 2026 The mzvcf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "mzvcf/word.hpp"

#include <algorithm>

namespace mzvcf {

namespace {

constexpr unsigned shift_of(std::size_t i) noexcept
{
    return static_cast<unsigned>(2 * (Word::kLettersPerChunk - 1 - i % Word::kLettersPerChunk));
}

}  // namespace

char to_char(Letter a) noexcept
{
    switch (a) {
        case Letter::Zero:
            return '0';
        case Letter::One:
            return '1';
        case Letter::Z:
            return 'z';
    }
    return '?';
}

Letter letter_from_char(char c)
{
    switch (c) {
        case '0':
            return Letter::Zero;
        case '1':
            return Letter::One;
        case 'z':
        case 'Z':
            return Letter::Z;
        default:
            throw ParseError(std::string("invalid letter '") + c + "' (expected 0, 1 or z)");
    }
}

Word::Word(std::initializer_list<Letter> letters)
{
    for (Letter a : letters)
        push_back(a);
}

Word::Word(std::span<const Letter> letters)
{
    for (Letter a : letters)
        push_back(a);
}

Word Word::parse(std::string_view text)
{
    Word w;
    for (char c : text)
        w.push_back(letter_from_char(c));
    return w;
}

std::string Word::str() const
{
    std::string s;
    s.reserve(len_);
    for (std::size_t i = 0; i < len_; ++i)
        s.push_back(to_char((*this)[i]));
    return s;
}

Letter Word::operator[](std::size_t i) const noexcept
{
    std::size_t chunk = i / kLettersPerChunk;
    std::uint64_t bits = chunk == 0 ? head_ : spill_[chunk - 1];
    return static_cast<Letter>((bits >> shift_of(i)) & 3u);
}

void Word::set(std::size_t i, Letter a) noexcept
{
    std::size_t chunk = i / kLettersPerChunk;
    std::uint64_t& bits = chunk == 0 ? head_ : spill_[chunk - 1];
    unsigned sh = shift_of(i);
    bits = (bits & ~(std::uint64_t{3} << sh)) | (std::uint64_t{static_cast<std::uint8_t>(a)} << sh);
}

void Word::push_back(Letter a)
{
    if (len_ >= kLettersPerChunk && len_ % kLettersPerChunk == 0)
        spill_.push_back(0);
    ++len_;
    set(len_ - 1, a);
}

Word Word::erased(std::size_t i) const
{
    Word w;
    for (std::size_t j = 0; j < len_; ++j)
        if (j != i)
            w.push_back((*this)[j]);
    return w;
}

Word Word::prefix(std::size_t n) const
{
    n = std::min<std::size_t>(n, len_);
    if (n <= kLettersPerChunk && len_ <= kLettersPerChunk) {
        Word w;
        w.len_ = static_cast<std::uint32_t>(n);
        w.head_ = n == 0 ? 0 : head_ & (~std::uint64_t{0} << (2 * (kLettersPerChunk - n)));
        return w;
    }
    Word w;
    for (std::size_t j = 0; j < n; ++j)
        w.push_back((*this)[j]);
    return w;
}

Word Word::suffix_from(std::size_t i) const
{
    Word w;
    for (std::size_t j = i; j < len_; ++j)
        w.push_back((*this)[j]);
    return w;
}

std::vector<Letter> Word::letters() const
{
    std::vector<Letter> out(len_);
    for (std::size_t j = 0; j < len_; ++j)
        out[j] = (*this)[j];
    return out;
}

bool Word::contains(Letter a) const noexcept
{
    for (std::size_t j = 0; j < len_; ++j)
        if ((*this)[j] == a)
            return true;
    return false;
}

std::size_t Word::count(Letter a) const noexcept
{
    std::size_t n = 0;
    for (std::size_t j = 0; j < len_; ++j)
        n += (*this)[j] == a;
    return n;
}

Word operator+(const Word& u, const Word& v)
{
    if (u.len_ + v.len_ <= Word::kLettersPerChunk) {
        Word w;
        w.len_ = u.len_ + v.len_;
        w.head_ = u.head_ | (v.len_ == 0 ? 0 : v.head_ >> (2 * u.len_));
        return w;
    }
    Word w = u;
    for (std::size_t j = 0; j < v.len_; ++j)
        w.push_back(v[j]);
    return w;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) noexcept
{
    if (auto c = u.len_ <=> v.len_; c != 0)
        return c;
    if (auto c = u.head_ <=> v.head_; c != 0)
        return c;
    return std::lexicographical_compare_three_way(u.spill_.begin(), u.spill_.end(), v.spill_.begin(),
                                                  v.spill_.end());
}

std::size_t Word::hash() const noexcept
{
    // splitmix64 finalizer over (len, chunks)
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    };
    std::uint64_t h = mix(head_ ^ (std::uint64_t{len_} << 1));
    for (std::uint64_t c : spill_)
        h = mix(h ^ c);
    return static_cast<std::size_t>(h);
}

Word power(Letter a, std::size_t n)
{
    Word w;
    for (std::size_t i = 0; i < n; ++i)
        w.push_back(a);
    return w;
}

}  // namespace mzvcf

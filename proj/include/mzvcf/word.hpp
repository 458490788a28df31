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

#ifndef MZVCF_WORD_HPP
#define MZVCF_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzvcf {

/// Raised when an argument lies outside the subspace an operation is defined on.
class PreconditionError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Raised on malformed textual input.
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Generators e_0, e_1, e_z. The numeric values fix the canonical order 0 < 1 < z.
enum class Letter : std::uint8_t { Zero = 0, One = 1, Z = 2 };

char to_char(Letter a) noexcept;
Letter letter_from_char(char c);

/*
   A monomial e_{a1}...e_{an}, stored two bits per letter. The first 32 letters
   live in an inline 64-bit word (most significant pair = leftmost letter, so
   numeric order equals lexicographic order); longer words spill into
   additional 64-bit chunks using the same layout.

   Ordering is shortlex: shorter words first, then lexicographic with 0 < 1 < z.
*/
class Word {
   public:
    static constexpr std::size_t kLettersPerChunk = 32;

    Word() = default;
    Word(std::initializer_list<Letter> letters);
    explicit Word(std::span<const Letter> letters);

    /// Canonical text form over '0', '1', 'z'; the empty string is the unit word.
    static Word parse(std::string_view text);
    std::string str() const;

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    Letter operator[](std::size_t i) const noexcept;
    Letter front() const noexcept { return (*this)[0]; }
    Letter back() const noexcept { return (*this)[len_ - 1]; }

    void push_back(Letter a);
    void set(std::size_t i, Letter a) noexcept;

    /// Copy with the letter at position i removed.
    Word erased(std::size_t i) const;
    Word prefix(std::size_t n) const;
    Word suffix_from(std::size_t i) const;
    std::vector<Letter> letters() const;

    bool contains(Letter a) const noexcept;
    std::size_t count(Letter a) const noexcept;

    friend Word operator+(const Word& u, const Word& v);

    friend bool operator==(const Word& u, const Word& v) noexcept = default;
    friend std::strong_ordering operator<=>(const Word& u, const Word& v) noexcept;

    std::size_t hash() const noexcept;

   private:
    std::uint32_t len_ = 0;
    std::uint64_t head_ = 0;
    std::vector<std::uint64_t> spill_;
};

/// e_a^n as a word.
Word power(Letter a, std::size_t n);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept { return w.hash(); }
};

}  // namespace mzvcf

#endif  // MZVCF_WORD_HPP

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace braid3 {

// Raised when word text fails to parse. position() is the byte offset of the
// offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Raised when an internal consistency check fails. This always indicates a
// bug in the library, never bad user input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Gen : int { Sigma1 = 1, Sigma2 = 2 };

// A maximal run sigma_g^e. Exponents are arbitrary-precision so a^1000000000
// is a single syllable.
struct Syllable {
    Gen gen;
    mpz_class exp;

    friend bool operator==(const Syllable& x, const Syllable& y) {
        return x.gen == y.gen && x.exp == y.exp;
    }
};

// A word in the generators sigma_1, sigma_2 of the braid group B3, stored as
// a syllable sequence. The empty word is the identity. A BraidWord is a plain
// value and need not be freely reduced; free_reduce produces the reduced
// form, in which adjacent syllables have distinct generators.
class BraidWord {
public:
    BraidWord() = default;

    // Rejects syllables with zero exponent.
    explicit BraidWord(std::vector<Syllable> syllables);

    const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
    bool empty() const noexcept { return syllables_.empty(); }
    std::size_t size() const noexcept { return syllables_.size(); }

    friend bool operator==(const BraidWord& x, const BraidWord& y) {
        return x.syllables_ == y.syllables_;
    }

private:
    std::vector<Syllable> syllables_;
};

// Parses either grammar:
//   compact:  letters a, A, b, B with optional ^n, e.g. "ab^2A", "a^-3";
//             `^n` multiplies the letter's exponent, so "A^3" is sigma_1^-3.
//   explicit: whitespace-separated s1/s2 tokens, e.g. "s1^3 s2^-2".
// Whitespace is ignored, zero exponents are dropped. Throws ParseError.
BraidWord parse_word(std::string_view text);

// Compact rendering, e.g. "ab^2A". Inverse letters use upper case with a
// positive exponent.
std::string render_word(const BraidWord& w);

// Explicit rendering, e.g. "s1^3 s2^-2".
std::string render_word_explicit(const BraidWord& w);

// Merges adjacent syllables with equal generator and drops vanishing ones
// until no more cancellation applies. Single pass, linear time.
BraidWord free_reduce(const BraidWord& w);

// Concatenation followed by free reduction.
BraidWord concat(const BraidWord& u, const BraidWord& v);

// Reverses the syllable order and negates exponents.
BraidWord inverse(const BraidWord& w);

// Exponent sum (abelianization B3 -> Z, both generators to 1). A conjugation
// invariant.
mpz_class exponent_sum(const BraidWord& w);

// The Garside half twist Delta = sigma_1 sigma_2 sigma_1.
BraidWord garside_delta();

// Word of `length` i.i.d. uniform letters from {a, A, b, B}, one unit
// syllable per letter, not free-reduced. Deterministic for a fixed seed.
BraidWord random_word(std::size_t length, std::uint64_t seed);

}  // namespace braid3

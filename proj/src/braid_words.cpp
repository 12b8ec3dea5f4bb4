#include "braid3/braid_words.hpp"

#include <cctype>
#include <random>
#include <utility>

namespace braid3 {

namespace {

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

// Parses the optional "^n" suffix at text[i]; returns 1 when absent.
mpz_class parse_exponent(std::string_view text, std::size_t& i) {
    if (i >= text.size() || text[i] != '^') return 1;
    ++i;  // '^'
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
    }
    std::size_t start = i;
    while (i < text.size() && is_digit(text[i])) ++i;
    if (i == start) throw ParseError("malformed exponent: expected digits after '^'", i);
    mpz_class e(std::string(text.substr(start, i - start)), 10);
    if (negative) e = -e;
    return e;
}

BraidWord parse_compact(std::string_view text) {
    std::vector<Syllable> syls;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (is_space(ch)) {
            ++i;
            continue;
        }
        Gen g;
        int sign;
        switch (ch) {
            case 'a': g = Gen::Sigma1; sign = 1; break;
            case 'A': g = Gen::Sigma1; sign = -1; break;
            case 'b': g = Gen::Sigma2; sign = 1; break;
            case 'B': g = Gen::Sigma2; sign = -1; break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'", i);
        }
        ++i;
        mpz_class e = sign * parse_exponent(text, i);
        if (e != 0) syls.push_back({g, std::move(e)});
    }
    return BraidWord(std::move(syls));
}

BraidWord parse_explicit(std::string_view text) {
    std::vector<Syllable> syls;
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        if (text[i] != 's') throw ParseError("expected 's1' or 's2'", i);
        ++i;
        if (i >= text.size() || (text[i] != '1' && text[i] != '2'))
            throw ParseError("expected generator index 1 or 2 after 's'", i);
        Gen g = text[i] == '1' ? Gen::Sigma1 : Gen::Sigma2;
        ++i;
        mpz_class e = parse_exponent(text, i);
        if (i < text.size() && !is_space(text[i]))
            throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
        if (e != 0) syls.push_back({g, std::move(e)});
    }
    return BraidWord(std::move(syls));
}

std::vector<Syllable> reduce_syllables(const std::vector<Syllable>& in) {
    std::vector<Syllable> out;
    out.reserve(in.size());
    for (const Syllable& s : in) {
        if (!out.empty() && out.back().gen == s.gen) {
            out.back().exp += s.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace

BraidWord::BraidWord(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {
    for (const Syllable& s : syllables_) {
        if (s.gen != Gen::Sigma1 && s.gen != Gen::Sigma2)
            throw std::invalid_argument("BraidWord: generator index must be 1 or 2");
        if (s.exp == 0) throw std::invalid_argument("BraidWord: syllable exponent must be nonzero");
    }
}

BraidWord parse_word(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && is_space(text[i])) ++i;
    if (i < text.size() && text[i] == 's') return parse_explicit(text);
    return parse_compact(text);
}

std::string render_word(const BraidWord& w) {
    std::string out;
    for (const Syllable& s : w.syllables()) {
        bool pos = s.exp > 0;
        out += s.gen == Gen::Sigma1 ? (pos ? 'a' : 'A') : (pos ? 'b' : 'B');
        mpz_class mag = abs(s.exp);
        if (mag != 1) {
            out += '^';
            out += mag.get_str();
        }
    }
    return out;
}

std::string render_word_explicit(const BraidWord& w) {
    std::string out;
    for (const Syllable& s : w.syllables()) {
        if (!out.empty()) out += ' ';
        out += s.gen == Gen::Sigma1 ? "s1" : "s2";
        if (s.exp != 1) {
            out += '^';
            out += s.exp.get_str();
        }
    }
    return out;
}

BraidWord free_reduce(const BraidWord& w) {
    return BraidWord(reduce_syllables(w.syllables()));
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
    std::vector<Syllable> joined = u.syllables();
    joined.insert(joined.end(), v.syllables().begin(), v.syllables().end());
    return BraidWord(reduce_syllables(joined));
}

BraidWord inverse(const BraidWord& w) {
    std::vector<Syllable> out;
    out.reserve(w.size());
    for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
        out.push_back({it->gen, -it->exp});
    return BraidWord(std::move(out));
}

mpz_class exponent_sum(const BraidWord& w) {
    mpz_class sum = 0;
    for (const Syllable& s : w.syllables()) sum += s.exp;
    return sum;
}

BraidWord garside_delta() {
    return BraidWord({{Gen::Sigma1, 1}, {Gen::Sigma2, 1}, {Gen::Sigma1, 1}});
}

BraidWord random_word(std::size_t length, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::vector<Syllable> syls;
    syls.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        // 4 divides 2^64, so the low two bits are exactly uniform.
        switch (eng() & 3u) {
            case 0: syls.push_back({Gen::Sigma1, 1}); break;
            case 1: syls.push_back({Gen::Sigma1, -1}); break;
            case 2: syls.push_back({Gen::Sigma2, 1}); break;
            default: syls.push_back({Gen::Sigma2, -1}); break;
        }
    }
    return BraidWord(std::move(syls));
}

}  // namespace braid3

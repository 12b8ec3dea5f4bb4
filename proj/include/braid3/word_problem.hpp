#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "braid3/braid_words.hpp"
#include "braid3/continued_fractions.hpp"
#include "braid3/modular_group.hpp"

namespace braid3 {

// The complete word-problem invariant: the images of infinity and 0 under
// phi(w), plus the exponent sum. Two words are equal in B3 iff their
// RhoInvariants agree.
struct RhoInvariant {
    ProjPoint rho1;  // act(phi(w), infinity) = first column of phi(w)
    ProjPoint rho2;  // act(phi(w), 0)        = second column of phi(w)
    mpz_class eps;

    friend bool operator==(const RhoInvariant& x, const RhoInvariant& y) {
        return x.rho1 == y.rho1 && x.rho2 == y.rho2 && x.eps == y.eps;
    }
    friend bool operator<(const RhoInvariant& x, const RhoInvariant& y);
};

// One factor sigma_1^a sigma_2^b of a normal-form tail.
struct TailPair {
    mpz_class a;
    mpz_class b;

    friend bool operator==(const TailPair& x, const TailPair& y) {
        return x.a == y.a && x.b == y.b;
    }
};

// Image of the normal form in PSL2(Z): g = iota^delta * prod S^{a_i} T^{b_i}
// with iota = STS, delta in {0,1}, and the tail constraints of NormalForm.
struct PSL2NormalForm {
    int delta = 0;
    std::vector<TailPair> tail;

    friend bool operator==(const PSL2NormalForm& x, const PSL2NormalForm& y) {
        return x.delta == y.delta && x.tail == y.tail;
    }
};

// The unique normal form w = Delta^k * prod_{i=1..n} sigma_1^{a_i} sigma_2^{b_i}
// with a_1 >= 0, a_i >= 1 for i >= 2, b_i <= -1 for i <= n-1 and b_n
// arbitrary. A single (0,0) pair is forbidden; that word is Delta^k with an
// empty tail. k == delta (mod 2) where delta is the PSL2 flag.
struct NormalForm {
    mpz_class k;
    std::vector<TailPair> tail;

    friend bool operator==(const NormalForm& x, const NormalForm& y) {
        return x.k == y.k && x.tail == y.tail;
    }
    friend bool operator<(const NormalForm& x, const NormalForm& y);
};

RhoInvariant rho(const BraidWord& w);

// Equality in B3, by comparing rho. Linear in the word lengths (in word
// operations; matrix entries grow, see README on bit complexity).
bool words_equal(const BraidWord& u, const BraidWord& v);

// Normal form of g in PSL2(Z). delta = 0 iff act(g, 0) is a finite
// nonnegative rational; otherwise g is premultiplied by iota^{-1}, which
// moves act(g, 0) into [0, infinity). The tail is then read off the
// odd-length simple continued fraction of act(., 0); the final exponent b_n
// is the residual power of T. Internal consistency failures throw
// InvariantViolation.
PSL2NormalForm psl2_normal_form(const PSL2Elem& g);

// Lifts psl2_normal_form to B3: k = (eps(w) - eps(tail))/3, which is exact
// and has the parity of delta (both checked).
NormalForm normal_form(const BraidWord& w);

// Delta^k concatenated with the tail syllables, free-reduced. Validates the
// tail constraints and throws std::invalid_argument on a malformed tail.
BraidWord normal_form_to_word(const NormalForm& nf);

// "D^k · s1^a1 s2^b1 · ...", empty tail rendered as "D^k".
std::string render_normal_form(const NormalForm& nf);

}  // namespace braid3

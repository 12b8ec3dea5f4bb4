#pragma once

#include <optional>
#include <utility>
#include <variant>

#include <gmpxx.h>

#include "braid3/braid_words.hpp"
#include "braid3/continued_fractions.hpp"
#include "braid3/modular_group.hpp"
#include "braid3/word_problem.hpp"

namespace braid3 {

// Trace trichotomy of a PSL2(Z) element: |trace| = 0, 1, 2 or > 2.
enum class ElementClass { Elliptic0, Elliptic1, Parabolic, Hyperbolic };

// Conjugacy class data in PSL2(Z), one alternative per trace case.
//
// Trace 0: a single class of order-2 elements (fixed point i).
struct Elliptic2 {
    friend bool operator==(const Elliptic2&, const Elliptic2&) { return true; }
};

// Trace 1: two classes of order-3 elements, distinguished by sign: in the
// trace +1 representative exactly one of b, c is positive.
struct Elliptic3 {
    int sign;  // +1 if b > 0, -1 if c > 0

    friend bool operator==(const Elliptic3& x, const Elliptic3& y) {
        return x.sign == y.sign;
    }
};

// Trace 2: classes are indexed by the integer s with g ~ [[1,s],[0,1]].
struct ParabolicClass {
    mpz_class s;

    friend bool operator==(const ParabolicClass& x, const ParabolicClass& y) {
        return x.s == y.s;
    }
};

// Trace > 2: classes are separated by the trace together with the canonical
// class period of the expanding fixed point's continued fraction. The period
// is a cyclic word in alternating s1/s2 exponents; its canonical rotation
// ranges only over offsets that keep those roles aligned, because an odd
// shift is conjugation by a determinant -1 matrix and can change the class
// (trace 4 splits into [1,2] and [2,1]).
struct HyperbolicClass {
    mpz_class trace;
    PeriodWord period;

    friend bool operator==(const HyperbolicClass& x, const HyperbolicClass& y) {
        return x.trace == y.trace && x.period == y.period;
    }
};

using ClassInvariant = std::variant<Elliptic2, Elliptic3, ParabolicClass, HyperbolicClass>;

bool class_invariant_less(const ClassInvariant& x, const ClassInvariant& y);

// The complete conjugacy invariant for B3: the PSL2(Z) class invariant of
// phi(w) plus the exponent sum. Words are conjugate in B3 iff their
// MuInvariants agree.
struct MuInvariant {
    ClassInvariant cls;
    mpz_class eps;

    friend bool operator==(const MuInvariant& x, const MuInvariant& y) {
        return x.cls == y.cls && x.eps == y.eps;
    }
};

bool mu_invariant_less(const MuInvariant& x, const MuInvariant& y);

// Witness for the parabolic class computation: u = gcd(a-1, c) together with
// integers (r, t) satisfying (a-1)t - cr = u.
struct BezoutWitness {
    mpz_class u, r, t;
};

ElementClass classify(const PSL2Elem& g);

// Sign of an order-3 element (trace 1 required, else std::invalid_argument).
int elliptic3_sign(const PSL2Elem& g);

// The parabolic class index s (trace 2 required). For [[1,b],[0,1]] this is
// b and no witness is involved; otherwise s is computed from a Bezout
// witness, and the result does not depend on which witness is used. The
// intermediate divisions are exact (checked).
std::pair<mpz_class, std::optional<BezoutWitness>> parabolic_s(const PSL2Elem& g);

// Same computation with a caller-supplied witness, for independence checks.
// The witness is validated against g.
mpz_class parabolic_s_with_witness(const PSL2Elem& g, const BezoutWitness& w);

// The expanding fixed point kappa = (a - d + sqrt(tr^2 - 4))/(2c) of a
// hyperbolic g (trace > 2 required). Satisfies c k^2 + (d-a) k - b = 0 and
// c*kappa + d > 1.
QuadSurd hyperbolic_kappa(const PSL2Elem& g);

// Symbolic fast path: reads the period directly off psl2_normal_form(g),
// squaring g first when delta = 1. With tail exponents (a_1..a_n, b_1..b_n):
//   a_1 >= 1, b_n <= -1:  block (a_1, -b_1, ..., a_n, -b_n)
//   a_1 = 0,  b_n = 0:    block (-b_1, a_2, ..., -b_{n-1}, a_n)
//   a_1 = 0,  b_n <= -1:  block (a_2, -b_2, ..., a_n, -b_n - b_1)
//   a_1 >= 1, b_n = 0:    block (-b_1, a_2, ..., -b_{n-1}, a_n + a_1)
// (the boundary shapes fold the end exponents together, which is cyclic
// conjugation of the tail by T^{-b_1} resp. S^{-a_1}). The block is then
// reduced to its primitive part and rotated to the canonical role-aligned
// representative. Returns nullopt when no shape applies, e.g. trailing
// b_n > 0 or delta still 1 after squaring.
std::optional<PeriodWord> hyperbolic_period_symbolic(const PSL2Elem& g);

// Oracle path: expands the surd kappa and canonicalizes the repeating block
// with its role parity taken from the preperiod length.
PeriodWord hyperbolic_period_surd(const PSL2Elem& g);

// Fast path if its shape preconditions hold, surd fallback otherwise.
PeriodWord hyperbolic_period(const PSL2Elem& g);

// The PSL2(Z) conjugacy class invariant of g.
ClassInvariant lambda_invariant(const PSL2Elem& g);

// The B3 conjugacy invariant of w.
MuInvariant mu(const BraidWord& w);

// Conjugacy in B3, by comparing mu.
bool conjugate(const BraidWord& u, const BraidWord& v);

// When phi(u) and phi(v) are conjugate in PSL2(Z), u is conjugate to
// Delta^{2k} v with k = (eps(u) - eps(v))/6 (exact; checked). Returns nullopt
// when the lambda invariants differ.
std::optional<mpz_class> central_twist(const BraidWord& u, const BraidWord& v);

// Brute-force conjugator search, for testing only: breadth-first over all
// letter words c with |c| <= max_len in the order a, A, b, B (shorter words
// first), returning the first c with words_equal(c u c^-1, v). Deterministic.
// Exponential in max_len.
std::optional<BraidWord> conjugator_search_oracle(const BraidWord& u, const BraidWord& v,
                                                  int max_len);

}  // namespace braid3

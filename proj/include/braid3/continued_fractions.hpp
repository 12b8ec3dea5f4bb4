#pragma once

#include <vector>

#include <gmpxx.h>

#include "braid3/modular_group.hpp"

namespace braid3 {

// A finite continued fraction [c0; c1, ..., cn] = c0 + 1/(c1 + 1/(... )).
// Entries are signed. Simple expansions (all entries beyond index 0 >= 1)
// are what simple_cf_odd produces; eval_cf accepts arbitrary entries and
// evaluates projectively, so intermediate zeros and infinities are fine.
struct FiniteCF {
    std::vector<mpz_class> entries;
};

// Right-to-left projective evaluation with 1/0 = infinity and 1/inf = 0.
// Total on P^1; throws std::invalid_argument only for an empty entry list.
ProjPoint eval_cf(const FiniteCF& cf);

// The simple continued fraction of a finite rational p >= 0, adjusted to odd
// length: [..., c] with c >= 2 becomes [..., c-1, 1], and [..., c', 1]
// becomes [..., c'+1]. First entry >= 0, all later entries >= 1, and the
// expansion is the unique odd-length one. Throws std::invalid_argument for
// negative or infinite input.
FiniteCF simple_cf_odd(const ProjPoint& p);

// Lexicographically least rotation of s (Booth-style two-candidate scan,
// linear time).
std::vector<mpz_class> least_rotation(const std::vector<mpz_class>& s);

// Shortest block b with s = b^(|s|/|b|), via the KMP failure function.
// Requires s to be a whole number of repetitions of its primitive block,
// which is automatic for the full-period blocks produced here.
std::vector<mpz_class> primitive_period(const std::vector<mpz_class>& s);

// A fundamental period of an eventually periodic continued fraction:
// nonempty, positive entries, held in a canonical rotation. The one-argument
// constructor canonicalizes a full-period block by primitive reduction and
// least rotation, so equality means the periodic tails agree up to shift.
// Callers that canonicalize under a finer equivalence (the conjugacy
// classifier only admits rotations keeping the alternating s1/s2 roles
// aligned) pick their rotation themselves and pass keep_rotation; the block
// must then already be primitive.
class PeriodWord {
public:
    struct keep_rotation_t {};
    static constexpr keep_rotation_t keep_rotation{};

    explicit PeriodWord(std::vector<mpz_class> block);
    PeriodWord(std::vector<mpz_class> block, keep_rotation_t);

    const std::vector<mpz_class>& entries() const noexcept { return entries_; }

    friend bool operator==(const PeriodWord& x, const PeriodWord& y) {
        return x.entries_ == y.entries_;
    }
    friend bool operator<(const PeriodWord& x, const PeriodWord& y);

private:
    std::vector<mpz_class> entries_;
};

// The quadratic surd (P + sqrt(D))/Q with D > 0 not a perfect square and
// Q != 0. Stored with the invariant Q | D - P^2; a constructor argument
// violating it is rescaled (P,Q multiplied by |Q|, D by Q^2), which leaves
// the value unchanged. The coefficient of sqrt(D) is always +1; negative
// branches (P - sqrt(D))/Q must be rewritten by the caller as
// (-P + sqrt(D))/(-Q).
class QuadSurd {
public:
    QuadSurd(mpz_class p, mpz_class q, mpz_class d);

    const mpz_class& p() const noexcept { return p_; }
    const mpz_class& q() const noexcept { return q_; }
    const mpz_class& d() const noexcept { return d_; }

    // Sign of (this - r), always ±1 since the surd is irrational. Exact.
    int compare(const mpq_class& r) const;

    // Value equality across representations: (4+sqrt(32))/4 == (1+sqrt(2))/1.
    friend bool operator==(const QuadSurd& x, const QuadSurd& y);

private:
    mpz_class p_, q_, d_;
};

// Continued fraction expansion of a quadratic surd, split at the start of
// the repeating part: preperiod entries followed by the canonical period.
struct SurdExpansion {
    std::vector<mpz_class> preperiod;
    PeriodWord period;
};

// The same split with the repeating block exactly as first emitted: the
// block starts at entry position preperiod.size() of the expansion and is
// primitive, but no canonical rotation is applied. The conjugacy classifier
// needs this because the block's position parity carries information the
// least rotation would discard.
struct RawSurdExpansion {
    std::vector<mpz_class> preperiod;
    std::vector<mpz_class> block;
};

// Runs the classical P,Q iteration
//   c = floor((P + sqrt(D))/Q), P' = cQ - P, Q' = (D - P'^2)/Q
// with exact integer arithmetic (floor via isqrt, no floating point), and
// detects the cycle by hashing the (P,Q) states.
RawSurdExpansion surd_cf_expansion(const QuadSurd& x);

// surd_cf_expansion with the block canonicalized as a PeriodWord.
SurdExpansion surd_cf_period(const QuadSurd& x);

// Moebius transport m(x) = (a x + b)/(c x + d), recomputed exactly as a
// QuadSurd over the same radical. By Serret's theorem this never changes the
// canonical period.
QuadSurd act_surd(const UniMat& m, const QuadSurd& x);

}  // namespace braid3

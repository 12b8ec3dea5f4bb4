#pragma once

#include <string>

#include <gmpxx.h>

#include "braid3/braid_words.hpp"

namespace braid3 {

// Integer 2x2 matrix [[a,b],[c,d]] with determinant +1.
class UniMat {
public:
    UniMat() : a_(1), b_(0), c_(0), d_(1) {}

    // Throws std::invalid_argument unless ad - bc = 1.
    UniMat(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

    const mpz_class& a() const noexcept { return a_; }
    const mpz_class& b() const noexcept { return b_; }
    const mpz_class& c() const noexcept { return c_; }
    const mpz_class& d() const noexcept { return d_; }

    UniMat operator*(const UniMat& rhs) const;
    UniMat inverse() const;  // adjugate, exact
    UniMat negated() const;

    mpz_class trace() const { return a_ + d_; }

    friend bool operator==(const UniMat& x, const UniMat& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

private:
    struct unchecked_t {};
    UniMat(unchecked_t, mpz_class a, mpz_class b, mpz_class c, mpz_class d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    mpz_class a_, b_, c_, d_;
};

UniMat mat_mul(const UniMat& x, const UniMat& y);

// S^k = [[1,k],[0,1]] and T^k = [[1,0],[-k,1]], closed form for any integer k.
UniMat mat_S_pow(const mpz_class& k);
UniMat mat_T_pow(const mpz_class& k);

// A point of P^1(Q) as a reduced fraction num/den with den > 0, or the point
// at infinity stored as 1/0. (0,0) is rejected.
class ProjPoint {
public:
    ProjPoint(mpz_class num, mpz_class den);

    static ProjPoint infinity() { return ProjPoint(1, 0); }
    static ProjPoint zero() { return ProjPoint(0, 1); }

    const mpz_class& num() const noexcept { return num_; }
    const mpz_class& den() const noexcept { return den_; }
    bool is_infinity() const noexcept { return den_ == 0; }

    std::string str() const;  // "num/den", infinity as "1/0"

    friend bool operator==(const ProjPoint& x, const ProjPoint& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator<(const ProjPoint& x, const ProjPoint& y);

private:
    mpz_class num_, den_;
};

// An element of PSL2(Z) = SL2(Z)/{±I}, stored as the canonical sign
// representative: trace > 0, or trace = 0 and c > 0. (Trace-zero elements of
// SL2(Z) always have c != 0.)
class PSL2Elem {
public:
    PSL2Elem() = default;  // identity
    explicit PSL2Elem(const UniMat& m);

    const UniMat& rep() const noexcept { return rep_; }

    PSL2Elem operator*(const PSL2Elem& rhs) const { return PSL2Elem(rep_ * rhs.rep_); }
    PSL2Elem inverse() const { return PSL2Elem(rep_.inverse()); }

    friend bool operator==(const PSL2Elem& x, const PSL2Elem& y) {
        return x.rep_ == y.rep_;
    }

private:
    UniMat rep_;
};

// The projection B3 -> PSL2(Z): sigma_1 -> S, sigma_2 -> T. Kills the center
// <Delta^2>; together with the exponent sum it separates elements of B3.
PSL2Elem phi(const BraidWord& w);

// Moebius action on P^1(Q): [x:y] -> [ax+by : cx+dy]. Well defined on PSL2.
ProjPoint act(const PSL2Elem& g, const ProjPoint& p);

// |trace|, i.e. the trace of the canonical representative.
mpz_class trace_abs(const PSL2Elem& g);

}  // namespace braid3

#include "braid3/modular_group.hpp"

#include <utility>

namespace braid3 {

UniMat::UniMat(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1) throw std::invalid_argument("UniMat: determinant must be 1");
}

UniMat UniMat::operator*(const UniMat& rhs) const {
    return UniMat(unchecked_t{}, a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                  c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_);
}

UniMat UniMat::inverse() const {
    return UniMat(unchecked_t{}, d_, -b_, -c_, a_);
}

UniMat UniMat::negated() const {
    return UniMat(unchecked_t{}, -a_, -b_, -c_, -d_);
}

UniMat mat_mul(const UniMat& x, const UniMat& y) {
    return x * y;
}

UniMat mat_S_pow(const mpz_class& k) {
    return UniMat(1, k, 0, 1);
}

UniMat mat_T_pow(const mpz_class& k) {
    return UniMat(1, 0, -k, 1);
}

ProjPoint::ProjPoint(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_ == 0 && den_ == 0) throw std::invalid_argument("ProjPoint: (0,0) is not a point");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    if (den_ < 0 || (den_ == 0 && num_ < 0)) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::string ProjPoint::str() const {
    return num_.get_str() + "/" + den_.get_str();
}

bool operator<(const ProjPoint& x, const ProjPoint& y) {
    int c = cmp(x.num_, y.num_);
    if (c != 0) return c < 0;
    return cmp(x.den_, y.den_) < 0;
}

PSL2Elem::PSL2Elem(const UniMat& m) : rep_(m) {
    int tr = sgn(mpz_class(m.trace()));
    if (tr < 0 || (tr == 0 && sgn(m.c()) < 0)) rep_ = rep_.negated();
}

PSL2Elem phi(const BraidWord& w) {
    // Right-multiplication by S^e and T^e in place: two multiply-accumulates
    // per syllable, so the whole product is linear in the syllable count.
    mpz_class a = 1, b = 0, c = 0, d = 1;
    for (const Syllable& s : w.syllables()) {
        if (s.gen == Gen::Sigma1) {
            b += a * s.exp;  // M <- M * S^e
            d += c * s.exp;
        } else {
            a -= b * s.exp;  // M <- M * T^e
            c -= d * s.exp;
        }
    }
    return PSL2Elem(UniMat(std::move(a), std::move(b), std::move(c), std::move(d)));
}

ProjPoint act(const PSL2Elem& g, const ProjPoint& p) {
    const UniMat& m = g.rep();
    return ProjPoint(m.a() * p.num() + m.b() * p.den(), m.c() * p.num() + m.d() * p.den());
}

mpz_class trace_abs(const PSL2Elem& g) {
    return g.rep().trace();
}

}  // namespace braid3

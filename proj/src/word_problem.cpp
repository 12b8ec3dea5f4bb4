#include "braid3/word_problem.hpp"

#include <utility>

namespace braid3 {

namespace {

// iota^{-1} for iota = STS = [[0,1],[-1,0]].
UniMat iota_inverse() {
    return UniMat(0, -1, 1, 0);
}

mpz_class tail_exponent_sum(const std::vector<TailPair>& tail) {
    mpz_class sum = 0;
    for (const TailPair& p : tail) sum += p.a + p.b;
    return sum;
}

int compare_tails(const std::vector<TailPair>& x, const std::vector<TailPair>& y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(x[i].a, y[i].a);
        if (c != 0) return c;
        c = cmp(x[i].b, y[i].b);
        if (c != 0) return c;
    }
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
}

}  // namespace

bool operator<(const RhoInvariant& x, const RhoInvariant& y) {
    if (x.rho1 == y.rho1) {
        if (x.rho2 == y.rho2) return cmp(x.eps, y.eps) < 0;
        return x.rho2 < y.rho2;
    }
    return x.rho1 < y.rho1;
}

bool operator<(const NormalForm& x, const NormalForm& y) {
    int c = cmp(x.k, y.k);
    if (c != 0) return c < 0;
    return compare_tails(x.tail, y.tail) < 0;
}

RhoInvariant rho(const BraidWord& w) {
    const PSL2Elem g = phi(w);
    const UniMat& m = g.rep();
    return RhoInvariant{ProjPoint(m.a(), m.c()), ProjPoint(m.b(), m.d()), exponent_sum(w)};
}

bool words_equal(const BraidWord& u, const BraidWord& v) {
    return rho(u) == rho(v);
}

PSL2NormalForm psl2_normal_form(const PSL2Elem& g) {
    // Move act(g, 0) into the fundamental half line [0, infinity): when it is
    // infinite or negative, one factor of iota^{-1} fixes that.
    int delta = 0;
    UniMat h = g.rep();
    ProjPoint image = act(g, ProjPoint::zero());
    if (image.is_infinity() || image.num() < 0) {
        delta = 1;
        h = iota_inverse() * h;
    }
    ProjPoint target = act(PSL2Elem(h), ProjPoint::zero());

    // The odd-length simple expansion of act(h, 0) spells out the tail
    // word S^{a_1} T^{b_1} ... S^{a_n}; what remains fixes 0, so it is a
    // power of T and supplies b_n.
    FiniteCF cf = simple_cf_odd(target);
    std::vector<TailPair> tail;
    UniMat w;
    for (std::size_t i = 0; i < cf.entries.size(); ++i) {
        if (i % 2 == 0) {
            tail.push_back(TailPair{cf.entries[i], 0});
            w = w * mat_S_pow(cf.entries[i]);
        } else {
            tail.back().b = -cf.entries[i];
            w = w * mat_T_pow(-cf.entries[i]);
        }
    }
    UniMat v = PSL2Elem(w.inverse() * h).rep();
    if (v.a() != 1 || v.b() != 0 || v.d() != 1)
        throw InvariantViolation("psl2_normal_form: residual is not a power of T");
    tail.back().b = -v.c();

    if (tail.size() == 1 && tail[0].a == 0 && tail[0].b == 0) tail.clear();
    return PSL2NormalForm{delta, std::move(tail)};
}

NormalForm normal_form(const BraidWord& w) {
    PSL2NormalForm pf = psl2_normal_form(phi(w));
    mpz_class diff = exponent_sum(w) - tail_exponent_sum(pf.tail);
    if (!mpz_divisible_ui_p(diff.get_mpz_t(), 3))
        throw InvariantViolation("normal_form: exponent defect not divisible by 3");
    mpz_class k = diff / 3;
    bool k_odd = mpz_odd_p(k.get_mpz_t()) != 0;
    if (k_odd != (pf.delta == 1))
        throw InvariantViolation("normal_form: k parity does not match delta");
    return NormalForm{std::move(k), std::move(pf.tail)};
}

BraidWord normal_form_to_word(const NormalForm& nf) {
    const std::size_t n = nf.tail.size();
    for (std::size_t i = 0; i < n; ++i) {
        const TailPair& p = nf.tail[i];
        if (i == 0 && p.a < 0)
            throw std::invalid_argument("normal_form_to_word: a_1 must be >= 0");
        if (i > 0 && p.a < 1)
            throw std::invalid_argument("normal_form_to_word: a_i must be >= 1 for i >= 2");
        if (i + 1 < n && p.b > -1)
            throw std::invalid_argument("normal_form_to_word: b_i must be <= -1 for i < n");
    }
    if (n == 1 && nf.tail[0].a == 0 && nf.tail[0].b == 0)
        throw std::invalid_argument("normal_form_to_word: single (0,0) pair is forbidden");

    if (!nf.k.fits_slong_p())
        throw std::invalid_argument("normal_form_to_word: |k| too large to expand");
    long k = nf.k.get_si();

    std::vector<Syllable> syls;
    const int sign = k < 0 ? -1 : 1;
    for (long i = 0; i != k; i += sign) {
        syls.push_back({Gen::Sigma1, sign});
        syls.push_back({Gen::Sigma2, sign});
        syls.push_back({Gen::Sigma1, sign});
    }
    for (const TailPair& p : nf.tail) {
        if (p.a != 0) syls.push_back({Gen::Sigma1, p.a});
        if (p.b != 0) syls.push_back({Gen::Sigma2, p.b});
    }
    return free_reduce(BraidWord(std::move(syls)));
}

std::string render_normal_form(const NormalForm& nf) {
    std::string out = "D^" + nf.k.get_str();
    for (const TailPair& p : nf.tail)
        out += " · s1^" + p.a.get_str() + " s2^" + p.b.get_str();
    return out;
}

}  // namespace braid3

#include "braid3/continued_fractions.hpp"

#include <cstddef>
#include <map>
#include <utility>

namespace braid3 {

namespace {

// floor((P + sqrt(D))/Q) for nonsquare D > 0, exact. sqrt_d = isqrt(D).
// Since sqrt(D) is irrational, P + sqrt(D) lies strictly between m and m+1
// for m = P + isqrt(D), and the floor (or, for Q < 0, the negated ceiling)
// only needs m.
mpz_class floor_surd(const mpz_class& p, const mpz_class& q, const mpz_class& sqrt_d) {
    mpz_class m = p + sqrt_d;
    mpz_class out;
    if (q > 0) {
        mpz_fdiv_q(out.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
    } else {
        mpz_class qa = -q;
        mpz_fdiv_q(out.get_mpz_t(), m.get_mpz_t(), qa.get_mpz_t());
        out = -(out + 1);
    }
    return out;
}

}  // namespace

ProjPoint eval_cf(const FiniteCF& cf) {
    if (cf.entries.empty()) throw std::invalid_argument("eval_cf: empty continued fraction");
    // Right to left: x -> c + 1/x maps [p:q] to [cp+q : p]. Starting from
    // [c_n : 1] this keeps the pair coprime, and it never becomes (0,0), so
    // intermediate infinities need no special case.
    mpz_class num = cf.entries.back(), den = 1;
    for (std::size_t i = cf.entries.size() - 1; i-- > 0;) {
        mpz_class next_num = cf.entries[i] * num + den;
        den = std::exchange(num, std::move(next_num));
    }
    return ProjPoint(std::move(num), std::move(den));
}

FiniteCF simple_cf_odd(const ProjPoint& p) {
    if (p.is_infinity() || p.num() < 0)
        throw std::invalid_argument("simple_cf_odd: input must be a finite nonnegative rational");
    std::vector<mpz_class> e;
    mpz_class n = p.num(), d = p.den(), q, r;
    while (d != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        e.push_back(q);
        n = std::exchange(d, r);
    }
    if (e.size() % 2 == 0) {
        if (e.back() == 1) {
            e.pop_back();
            e.back() += 1;
        } else {
            e.back() -= 1;
            e.push_back(1);
        }
    }
    return FiniteCF{std::move(e)};
}

std::vector<mpz_class> least_rotation(const std::vector<mpz_class>& s) {
    const std::size_t n = s.size();
    if (n <= 1) return s;
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        int c = cmp(s[(i + k) % n], s[(j + k) % n]);
        if (c == 0) {
            ++k;
            continue;
        }
        if (c > 0)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    std::size_t best = std::min(i, j);
    std::vector<mpz_class> out;
    out.reserve(n);
    for (std::size_t t = 0; t < n; ++t) out.push_back(s[(best + t) % n]);
    return out;
}

std::vector<mpz_class> primitive_period(const std::vector<mpz_class>& s) {
    const std::size_t n = s.size();
    if (n <= 1) return s;
    std::vector<std::size_t> pi(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = pi[i - 1];
        while (k > 0 && s[i] != s[k]) k = pi[k - 1];
        if (s[i] == s[k]) ++k;
        pi[i] = k;
    }
    std::size_t p = n - pi[n - 1];
    if (n % p != 0) return s;
    return std::vector<mpz_class>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(p));
}

namespace {

void validate_period_block(const std::vector<mpz_class>& block) {
    if (block.empty()) throw std::invalid_argument("PeriodWord: empty period");
    for (const mpz_class& e : block)
        if (e < 1) throw std::invalid_argument("PeriodWord: entries must be positive");
}

}  // namespace

PeriodWord::PeriodWord(std::vector<mpz_class> block) {
    validate_period_block(block);
    entries_ = least_rotation(primitive_period(block));
}

PeriodWord::PeriodWord(std::vector<mpz_class> block, keep_rotation_t) {
    validate_period_block(block);
    entries_ = std::move(block);
}

bool operator<(const PeriodWord& x, const PeriodWord& y) {
    const std::size_t n = std::min(x.entries_.size(), y.entries_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(x.entries_[i], y.entries_[i]);
        if (c != 0) return c < 0;
    }
    return x.entries_.size() < y.entries_.size();
}

QuadSurd::QuadSurd(mpz_class p, mpz_class q, mpz_class d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
    if (d_ <= 0) throw std::invalid_argument("QuadSurd: D must be positive");
    if (mpz_perfect_square_p(d_.get_mpz_t()))
        throw std::invalid_argument("QuadSurd: D must not be a perfect square");
    if (q_ == 0) throw std::invalid_argument("QuadSurd: Q must be nonzero");
    mpz_class rem = d_ - p_ * p_;
    if (!mpz_divisible_p(rem.get_mpz_t(), q_.get_mpz_t())) {
        // Rescale to restore Q | D - P^2; the value is unchanged.
        mpz_class qa = abs(q_);
        p_ *= qa;
        d_ *= q_ * q_;
        q_ *= qa;
    }
}

int QuadSurd::compare(const mpq_class& r) const {
    // sign((P + sqrt(D))/Q - u/v) with v > 0. The numerator over Qv is
    // A + v sqrt(D) where A = Pv - uQ; compare A^2 with v^2 D when A < 0.
    mpz_class u = r.get_num(), v = r.get_den();
    mpz_class a = p_ * v - u * q_;
    int num_sign;
    if (a >= 0)
        num_sign = 1;
    else
        num_sign = cmp(v * v * d_, a * a) > 0 ? 1 : -1;
    return sgn(q_) > 0 ? num_sign : -num_sign;
}

bool operator==(const QuadSurd& x, const QuadSurd& y) {
    if (sgn(x.q_) != sgn(y.q_)) return false;
    if (x.p_ * y.q_ != y.p_ * x.q_) return false;
    return x.d_ * y.q_ * y.q_ == y.d_ * x.q_ * x.q_;
}

RawSurdExpansion surd_cf_expansion(const QuadSurd& x) {
    mpz_class p = x.p(), q = x.q(), d = x.d();
    mpz_class sqrt_d;
    mpz_sqrt(sqrt_d.get_mpz_t(), d.get_mpz_t());

    std::vector<mpz_class> entries;
    std::map<std::pair<mpz_class, mpz_class>, std::size_t> seen;
    // The state space is finite once the surd becomes reduced, so the walk
    // must revisit a (P,Q) pair; the guard only catches library bugs.
    constexpr std::size_t kStepCap = 10'000'000;
    for (;;) {
        auto [it, inserted] = seen.emplace(std::make_pair(p, q), entries.size());
        if (!inserted) {
            std::size_t start = it->second;
            std::vector<mpz_class> pre(entries.begin(),
                                       entries.begin() + static_cast<std::ptrdiff_t>(start));
            std::vector<mpz_class> block(entries.begin() + static_cast<std::ptrdiff_t>(start),
                                         entries.end());
            return RawSurdExpansion{std::move(pre), std::move(block)};
        }
        mpz_class c = floor_surd(p, q, sqrt_d);
        entries.push_back(c);
        mpz_class pn = c * q - p;
        mpz_class num = d - pn * pn;
        mpz_class qn;
        if (!mpz_divisible_p(num.get_mpz_t(), q.get_mpz_t()))
            throw InvariantViolation("surd_cf_period: Q' division not exact");
        mpz_divexact(qn.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
        p = std::move(pn);
        q = std::move(qn);
        if (entries.size() > kStepCap)
            throw InvariantViolation("surd_cf_period: no cycle within step cap");
    }
}

SurdExpansion surd_cf_period(const QuadSurd& x) {
    RawSurdExpansion raw = surd_cf_expansion(x);
    return SurdExpansion{std::move(raw.preperiod), PeriodWord(std::move(raw.block))};
}

QuadSurd act_surd(const UniMat& m, const QuadSurd& x) {
    // (a x + b)/(c x + d) for x = (P + sqrt(D))/Q; rationalize by the
    // conjugate of the denominator. The radical coefficient is Q, so the
    // result lives over D' = Q^2 D.
    const mpz_class &p = x.p(), &q = x.q(), &d = x.d();
    mpz_class an = m.a() * p + m.b() * q;  // numerator = (an + a sqrt(D)) / Q
    mpz_class cn = m.c() * p + m.d() * q;  // denominator = (cn + c sqrt(D)) / Q
    mpz_class e = cn * cn - m.c() * m.c() * d;
    mpz_class pp = an * cn - m.a() * m.c() * d;
    // value = (pp + Q sqrt(D)) / e
    if (q < 0) {
        pp = -pp;
        e = -e;
    }
    return QuadSurd(std::move(pp), std::move(e), q * q * d);
}

}  // namespace braid3

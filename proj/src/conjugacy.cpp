#include "braid3/conjugacy.hpp"

#include <string>
#include <utility>

namespace braid3 {

namespace {

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den, const char* what) {
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InvariantViolation(std::string(what) + ": division not exact");
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

int class_rank(const ClassInvariant& c) {
    return static_cast<int>(c.index());
}

// Canonical class period of a hyperbolic element. The repeating block is a
// cyclic word in alternating s1/s2 exponents, and only rotations that keep
// those roles aligned yield conjugate products: rotating by an odd offset
// swaps the roles, which is conjugation by a determinant -1 matrix and in
// general lands in a different PSL2(Z) class ([[3,2],[1,1]] vs [[1,1],[2,3]],
// both trace 4, are not conjugate). `parity` is the role of block[0]: 0 for
// an s1 exponent, 1 for an s2 exponent. The representative is the least
// admissible rotation starting on an s2 exponent. A primitive block of odd
// length is fixed by the role swap (its doubled cycle shifts onto itself), so
// there every rotation is admissible and the plain least rotation is used.
PeriodWord class_period(const std::vector<mpz_class>& block, int parity) {
    std::vector<mpz_class> p = primitive_period(block);
    const std::size_t n = p.size();
    if (n % 2 != 0) return PeriodWord(std::move(p));
    std::size_t best = parity == 1 ? 0 : 1;
    for (std::size_t i = best + 2; i < n; i += 2) {
        for (std::size_t k = 0; k < n; ++k) {
            int c = cmp(p[(i + k) % n], p[(best + k) % n]);
            if (c != 0) {
                if (c < 0) best = i;
                break;
            }
        }
    }
    std::vector<mpz_class> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(p[(best + k) % n]);
    return PeriodWord(std::move(out), PeriodWord::keep_rotation);
}

}  // namespace

bool class_invariant_less(const ClassInvariant& x, const ClassInvariant& y) {
    if (class_rank(x) != class_rank(y)) return class_rank(x) < class_rank(y);
    if (const auto* ex = std::get_if<Elliptic3>(&x))
        return ex->sign < std::get<Elliptic3>(y).sign;
    if (const auto* px = std::get_if<ParabolicClass>(&x))
        return cmp(px->s, std::get<ParabolicClass>(y).s) < 0;
    if (const auto* hx = std::get_if<HyperbolicClass>(&x)) {
        const auto& hy = std::get<HyperbolicClass>(y);
        int c = cmp(hx->trace, hy.trace);
        if (c != 0) return c < 0;
        return hx->period < hy.period;
    }
    return false;  // Elliptic2 is a singleton
}

bool mu_invariant_less(const MuInvariant& x, const MuInvariant& y) {
    if (x.cls == y.cls) return cmp(x.eps, y.eps) < 0;
    return class_invariant_less(x.cls, y.cls);
}

ElementClass classify(const PSL2Elem& g) {
    mpz_class t = trace_abs(g);
    if (t == 0) return ElementClass::Elliptic0;
    if (t == 1) return ElementClass::Elliptic1;
    if (t == 2) return ElementClass::Parabolic;
    return ElementClass::Hyperbolic;
}

int elliptic3_sign(const PSL2Elem& g) {
    if (trace_abs(g) != 1) throw std::invalid_argument("elliptic3_sign: trace must be ±1");
    // In the trace +1 representative, bc = -(a^2 - a + 1) < 0, so exactly
    // one of b, c is positive.
    const UniMat& m = g.rep();
    if (m.b() > 0) return 1;
    if (m.c() > 0) return -1;
    throw InvariantViolation("elliptic3_sign: neither b nor c positive");
}

mpz_class parabolic_s_with_witness(const PSL2Elem& g, const BezoutWitness& wit) {
    if (trace_abs(g) != 2) throw std::invalid_argument("parabolic_s: trace must be ±2");
    const UniMat& m = g.rep();  // trace +2 representative
    mpz_class am1 = m.a() - 1;
    mpz_class u_check;
    mpz_gcd(u_check.get_mpz_t(), am1.get_mpz_t(), m.c().get_mpz_t());
    if (wit.u != u_check) throw std::invalid_argument("parabolic_s: witness u is not gcd(a-1, c)");
    if (am1 * wit.t - m.c() * wit.r != wit.u)
        throw std::invalid_argument("parabolic_s: witness does not satisfy (a-1)t - cr = u");
    if (am1 != 0)
        return exact_quotient(wit.u * (wit.r * am1 + m.b() * wit.t), am1, "parabolic_s");
    return exact_quotient(wit.u * (wit.r * m.c() + (m.d() - 1) * wit.t), m.c(), "parabolic_s");
}

std::pair<mpz_class, std::optional<BezoutWitness>> parabolic_s(const PSL2Elem& g) {
    if (trace_abs(g) != 2) throw std::invalid_argument("parabolic_s: trace must be ±2");
    const UniMat& m = g.rep();
    if (m.a() == 1 && m.c() == 0) return {m.b(), std::nullopt};
    mpz_class am1 = m.a() - 1;
    BezoutWitness wit;
    mpz_class y;
    // (a-1)x + cy = u, hence t = x and r = -y.
    mpz_gcdext(wit.u.get_mpz_t(), wit.t.get_mpz_t(), y.get_mpz_t(), am1.get_mpz_t(),
               m.c().get_mpz_t());
    wit.r = -y;
    mpz_class s = parabolic_s_with_witness(g, wit);
    return {std::move(s), std::move(wit)};
}

QuadSurd hyperbolic_kappa(const PSL2Elem& g) {
    if (trace_abs(g) <= 2) throw std::invalid_argument("hyperbolic_kappa: trace must exceed 2");
    const UniMat& m = g.rep();
    mpz_class tr = m.trace();
    // Root of the fixed-point equation c k^2 + (d - a) k - b = 0 whose
    // eigenvalue c*kappa + d = (tr + sqrt(tr^2-4))/2 exceeds 1. c != 0
    // because c = 0 forces trace ±2.
    return QuadSurd(m.a() - m.d(), 2 * m.c(), tr * tr - 4);
}

std::optional<PeriodWord> hyperbolic_period_symbolic(const PSL2Elem& g) {
    if (trace_abs(g) <= 2) throw std::invalid_argument("hyperbolic_period: trace must exceed 2");
    PSL2NormalForm pf = psl2_normal_form(g);
    if (pf.delta == 1) {
        // iota^2 = 1 in PSL2(Z), and squaring keeps both fixed points, so
        // the period can be read off g^2 instead.
        pf = psl2_normal_form(g * g);
        if (pf.delta == 1) return std::nullopt;
    }
    const std::size_t n = pf.tail.size();
    if (n == 0) return std::nullopt;
    const mpz_class& a1 = pf.tail.front().a;
    const mpz_class& bn = pf.tail.back().b;
    if (bn > 0) return std::nullopt;

    // parity is the s1/s2 role of the first block entry (see class_period):
    // the merged boundary shapes start on a b exponent.
    std::vector<mpz_class> block;
    int parity = 0;
    if (a1 >= 1 && bn <= -1) {
        // Purely periodic: the tail exponents themselves repeat.
        for (const TailPair& p : pf.tail) {
            block.push_back(p.a);
            block.push_back(-p.b);
        }
    } else if (a1 == 0 && bn == 0) {
        if (n < 2) return std::nullopt;
        parity = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) block.push_back(pf.tail[i].a);
            if (i + 1 < n) block.push_back(-pf.tail[i].b);
        }
    } else if (a1 == 0) {
        if (n < 2) return std::nullopt;
        // Conjugating by T^{-b_1} folds b_1 onto b_n.
        for (std::size_t i = 1; i < n; ++i) {
            block.push_back(pf.tail[i].a);
            block.push_back(i + 1 < n ? mpz_class(-pf.tail[i].b)
                                      : mpz_class(-bn - pf.tail[0].b));
        }
    } else {
        if (n < 2) return std::nullopt;
        // b_n = 0: conjugating by S^{-a_1} folds a_1 onto a_n.
        parity = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            block.push_back(-pf.tail[i].b);
            block.push_back(i + 2 < n ? pf.tail[i + 1].a : mpz_class(pf.tail[i + 1].a + a1));
        }
    }
    return class_period(block, parity);
}

PeriodWord hyperbolic_period_surd(const PSL2Elem& g) {
    // Each expansion entry contributes one determinant -1 factor [[c,1],[1,0]],
    // so g is conjugate in PSL2(Z) to the block product anchored at an even
    // entry position: the block's first entry is an s1 exponent exactly when
    // the preperiod has even length.
    RawSurdExpansion e = surd_cf_expansion(hyperbolic_kappa(g));
    return class_period(e.block, static_cast<int>(e.preperiod.size() % 2));
}

PeriodWord hyperbolic_period(const PSL2Elem& g) {
    if (auto fast = hyperbolic_period_symbolic(g)) return *std::move(fast);
    return hyperbolic_period_surd(g);
}

ClassInvariant lambda_invariant(const PSL2Elem& g) {
    switch (classify(g)) {
        case ElementClass::Elliptic0:
            return Elliptic2{};
        case ElementClass::Elliptic1:
            return Elliptic3{elliptic3_sign(g)};
        case ElementClass::Parabolic:
            return ParabolicClass{parabolic_s(g).first};
        case ElementClass::Hyperbolic:
        default:
            return HyperbolicClass{trace_abs(g), hyperbolic_period(g)};
    }
}

MuInvariant mu(const BraidWord& w) {
    return MuInvariant{lambda_invariant(phi(w)), exponent_sum(w)};
}

bool conjugate(const BraidWord& u, const BraidWord& v) {
    return mu(u) == mu(v);
}

std::optional<mpz_class> central_twist(const BraidWord& u, const BraidWord& v) {
    if (!(lambda_invariant(phi(u)) == lambda_invariant(phi(v)))) return std::nullopt;
    mpz_class diff = exponent_sum(u) - exponent_sum(v);
    if (!mpz_divisible_ui_p(diff.get_mpz_t(), 6))
        throw InvariantViolation("central_twist: exponent difference not divisible by 6");
    return mpz_class(diff / 6);
}

std::optional<BraidWord> conjugator_search_oracle(const BraidWord& u, const BraidWord& v,
                                                  int max_len) {
    if (max_len < 0) throw std::invalid_argument("conjugator_search_oracle: max_len must be >= 0");

    // words_equal(c u c^-1, v) compares rho, i.e. the canonical matrix and
    // the exponent sum; eps(c u c^-1) = eps(u), so the matrix check below is
    // that predicate verbatim. No candidate can succeed when eps differs.
    if (exponent_sum(u) != exponent_sum(v)) return std::nullopt;
    const PSL2Elem gu = phi(u), gv = phi(v);

    struct Node {
        UniMat m;
        std::int32_t parent;
        std::int8_t letter;
    };
    static constexpr struct {
        Gen gen;
        int exp;
    } kLetters[4] = {{Gen::Sigma1, 1}, {Gen::Sigma1, -1}, {Gen::Sigma2, 1}, {Gen::Sigma2, -1}};
    const UniMat letter_mats[4] = {mat_S_pow(1), mat_S_pow(-1), mat_T_pow(1), mat_T_pow(-1)};

    auto matches = [&](const UniMat& mc) {
        return PSL2Elem(mc * gu.rep() * mc.inverse()) == gv;
    };
    auto build_word = [&](const std::vector<Node>& nodes, std::int32_t idx) {
        std::vector<Syllable> letters;
        for (std::int32_t at = idx; at >= 0; at = nodes[static_cast<std::size_t>(at)].parent) {
            const Node& nd = nodes[static_cast<std::size_t>(at)];
            letters.push_back({kLetters[nd.letter].gen, kLetters[nd.letter].exp});
        }
        return BraidWord(std::vector<Syllable>(letters.rbegin(), letters.rend()));
    };

    if (matches(UniMat())) return BraidWord();

    std::vector<Node> nodes;
    std::size_t level_begin = 0, level_end = 0;  // empty word is the implicit root
    for (int len = 1; len <= max_len; ++len) {
        std::size_t next_begin = nodes.size();
        if (len == 1) {
            for (std::int8_t l = 0; l < 4; ++l)
                nodes.push_back(Node{letter_mats[l], -1, l});
        } else {
            for (std::size_t at = level_begin; at < level_end; ++at)
                for (std::int8_t l = 0; l < 4; ++l)
                    nodes.push_back(Node{nodes[at].m * letter_mats[l],
                                         static_cast<std::int32_t>(at), l});
        }
        level_begin = next_begin;
        level_end = nodes.size();
        for (std::size_t at = level_begin; at < level_end; ++at)
            if (matches(nodes[at].m)) return build_word(nodes, static_cast<std::int32_t>(at));
    }
    return std::nullopt;
}

}  // namespace braid3

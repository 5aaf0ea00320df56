#pragma once

#include "walkbench/pl_map.hpp"

#include <string>
#include <vector>

namespace walkbench {

/// Thompson's group F in one of its two piecewise-affine realizations.
/// Elements are canonical PL maps; the group law is composition
/// (g*h)(x) = g(h(x)), so the word problem is canonical-form equality.
struct ThompsonGroup {
    using Element = PLMap;

    PLVariant variant = PLVariant::real_line;

    Element identity() const { return PLMap::identity(variant); }
    Element mul(const Element& a, const Element& b) const { return PLMap::compose(a, b); }
    Element inv(const Element& a) const { return a.inverse(); }

    Element sigma() const {
        if (variant == PLVariant::unit_interval)
            return PLMap(variant, {Dyadic(1, 1), Dyadic(3, 2)},
                         {{-1, Dyadic(0)}, {0, Dyadic(-1, 2)}, {1, Dyadic(-1)}});
        return PLMap(variant, {}, {{0, Dyadic(-1)}});
    }

    // The Brin-Squier table's left tail reads "(-inf, x]"; only (-inf, 0]
    // gives a continuous bijection, and the constructor checks continuity,
    // so the reading is enforced rather than assumed.
    Element tau() const {
        if (variant == PLVariant::unit_interval)
            return PLMap(variant, {Dyadic(1, 1), Dyadic(3, 2), Dyadic(7, 3)},
                         {{0, Dyadic(0)}, {-1, Dyadic(1, 2)}, {0, Dyadic(-1, 3)}, {1, Dyadic(-1)}});
        return PLMap(variant, {Dyadic(0), Dyadic(2)},
                     {{0, Dyadic(0)}, {-1, Dyadic(0)}, {0, Dyadic(-1)}});
    }

    std::vector<std::pair<std::string, Element>> generators() const {
        return {{"sigma", sigma()},
                {"sigma^-1", inv(sigma())},
                {"tau", tau()},
                {"tau^-1", inv(tau())}};
    }

    Element base_generator(int i) const {
        if (i == 0) return sigma();
        if (i == 1) return tau();
        throw std::out_of_range("thompson generator index");
    }

    Element power(const Element& g, long n) const {
        Element base = n < 0 ? inv(g) : g;
        long k = n < 0 ? -n : n;
        Element r = identity();
        for (long i = 0; i < k; ++i) r = mul(r, base);
        return r;
    }

    /// gamma_0 = sigma, gamma_n = sigma^{1-n} tau sigma^{n-1}.
    Element gamma(long n) const {
        if (n == 0) return sigma();
        return mul(mul(power(sigma(), 1 - n), tau()), power(sigma(), n - 1));
    }

    std::string format(const Element& g) const { return g.serialize(); }
};

/// Exact evaluation of the defining relations. The gamma cases record which
/// of gamma_m^-1 gamma_n gamma_m = gamma_n / gamma_{n+1} actually holds;
/// the two candidates come from the two presentations in circulation.
struct RelationsReport {
    bool commutator1_identity = false;  // [sigma tau^-1, sigma^-1 tau sigma]
    bool commutator2_identity = false;  // [sigma tau^-1, sigma^-2 tau sigma^2]
    struct GammaCase {
        long m, n;
        bool equals_gamma_n;
        bool equals_gamma_n_plus_1;
    };
    std::vector<GammaCase> gamma_cases;

    bool commutators_pass() const { return commutator1_identity && commutator2_identity; }
};

inline RelationsReport check_relations(const ThompsonGroup& F,
                                       const std::vector<std::pair<long, long>>& gamma_pairs = {
                                           {0, 2}, {0, 3}, {1, 3}}) {
    auto s = F.sigma();
    auto t = F.tau();
    auto commutator = [&](const PLMap& a, const PLMap& b) {
        return F.mul(F.mul(F.inv(a), F.inv(b)), F.mul(a, b));
    };
    PLMap a = F.mul(s, F.inv(t));
    PLMap b1 = F.mul(F.mul(F.inv(s), t), s);
    PLMap b2 = F.mul(F.mul(F.power(s, -2), t), F.power(s, 2));

    RelationsReport rep;
    rep.commutator1_identity = commutator(a, b1) == F.identity();
    rep.commutator2_identity = commutator(a, b2) == F.identity();
    for (auto [m, n] : gamma_pairs) {
        PLMap lhs = F.mul(F.mul(F.inv(F.gamma(m)), F.gamma(n)), F.gamma(m));
        rep.gamma_cases.push_back(
            {m, n, lhs == F.gamma(n), lhs == F.gamma(n + 1)});
    }
    return rep;
}

/// The equivariant bijection kappa: (0,1) -> R of the two F-actions, with
/// t_n = 1 - 2^{-(n+1)} for n >= 0 and t_n = 2^{n-1} for n <= -1.
/// kappa(x) = (x - t_n) / (t_{n+1} - t_n) + n on [t_n, t_{n+1}].
/// The containing piece is located exactly from the bit layout of x.
inline Dyadic kappa(const Dyadic& x) {
    if (!(Dyadic(0) < x) || !(x < Dyadic(1)))
        throw std::domain_error("kappa: point outside (0,1)");
    auto msb_exponent = [](const Dyadic& v, bool& exact_power) {
        // L with 2^L <= v < 2^{L+1}; exact_power says v == 2^L
        const BigInt& m = v.numerator();
        long b = static_cast<long>(boost::multiprecision::msb(m));  // 2^b <= m < 2^{b+1}
        exact_power = (m == (BigInt(1) << b));
        return b - static_cast<long>(v.exponent());
    };
    if (x >= Dyadic(1, 1)) {  // piece index n >= 0
        Dyadic s = Dyadic(1) - x;  // in (0, 1/2]
        bool pow2;
        long l = msb_exponent(s, pow2);   // s in [2^l, 2^{l+1})
        long L = pow2 ? -l : -(l + 1);    // 2^{-L-1} < s <= 2^{-L}
        long n = L - 1;
        Dyadic t_n(BigInt((BigInt(1) << (n + 1)) - 1), static_cast<unsigned>(n + 1));
        return (x - t_n).scale_pow2(n + 2) + Dyadic(BigInt(n));
    }
    bool pow2;
    long l = msb_exponent(x, pow2);  // x in [2^l, 2^{l+1}), so t_n = 2^l with n = l+1
    long n = l + 1;
    Dyadic t_n(BigInt(1), static_cast<unsigned>(1 - n));
    return (x - t_n).scale_pow2(1 - n) + Dyadic(BigInt(n));
}

inline Dyadic kappa_inv(const Dyadic& y) {
    BigInt nf = y.floor();
    if (nf > 1000000 || nf < -1000000)
        throw std::domain_error("kappa_inv: piece index out of supported range");
    long n = static_cast<long>(nf);
    Dyadic frac = y - Dyadic(nf);
    if (n >= 0) {
        Dyadic t_n(BigInt((BigInt(1) << (n + 1)) - 1), static_cast<unsigned>(n + 1));
        return t_n + frac.scale_pow2(-(n + 2));
    }
    Dyadic t_n(BigInt(1), static_cast<unsigned>(1 - n));
    return t_n + frac.scale_pow2(n - 1);
}

}  // namespace walkbench

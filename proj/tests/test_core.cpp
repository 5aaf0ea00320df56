#include <catch2/catch_amalgamated.hpp>

#include "walkbench/dyadic.hpp"
#include "walkbench/free_group.hpp"
#include "walkbench/lattice.hpp"
#include "walkbench/thompson.hpp"
#include "walkbench/word.hpp"

#include <random>

using namespace walkbench;

namespace {

std::mt19937_64 rng(0x5eed0001);

Dyadic random_dyadic(int max_bits = 24, int max_exp = 12) {
    std::uniform_int_distribution<long long> num(-(1LL << max_bits), 1LL << max_bits);
    std::uniform_int_distribution<int> ex(0, max_exp);
    return Dyadic(BigInt(num(rng)), static_cast<unsigned>(ex(rng)));
}

/// Random point of D = (0,1) n Z[1/2].
Dyadic random_unit_dyadic() {
    std::uniform_int_distribution<int> ex(1, 12);
    int k = ex(rng);
    std::uniform_int_distribution<long long> num(1, (1LL << k) - 1);
    return Dyadic(BigInt(num(rng)), static_cast<unsigned>(k));
}

GroupWord random_word(int gens, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> letter(1, gens);
    std::uniform_int_distribution<int> sign(0, 1);
    GroupWord w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.letters.push_back(letter(rng) * (sign(rng) ? 1 : -1));
    return w;
}

}  // namespace

TEST_CASE("dyadic arithmetic is exact and canonical") {
    CHECK(Dyadic(1, 1) + Dyadic(1, 2) == Dyadic(3, 2));
    CHECK(Dyadic(3, 2) - Dyadic(3, 2) == Dyadic(0));
    CHECK((Dyadic(3, 2) - Dyadic(3, 2)).exponent() == 0);
    CHECK(Dyadic(5, 3) * Dyadic(2) == Dyadic(5, 2));
    CHECK(Dyadic(3, 2).scale_pow2(-1) == Dyadic(3, 3));
    CHECK(Dyadic(1).scale_pow2(3) == Dyadic(8));
    CHECK(Dyadic(7, 3).scale_pow2(3) == Dyadic(7));
}

TEST_CASE("dyadic parse/format round trip") {
    CHECK(Dyadic::parse("3/2^2") == Dyadic(3, 2));
    CHECK(Dyadic::parse("-5") == Dyadic(-5));
    CHECK(Dyadic::parse("-5").exponent() == 0);
    CHECK(Dyadic(3, 3).format() == "3/2^3");
    CHECK_THROWS_AS(Dyadic::parse("3/4"), std::invalid_argument);
    CHECK_THROWS_AS(Dyadic::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Dyadic::parse("x/2^2"), std::invalid_argument);
    for (int i = 0; i < 1000; ++i) {
        Dyadic d = random_dyadic();
        CHECK(Dyadic::parse(d.format()) == d);
    }
}

TEST_CASE("dyadic group laws and ordering on random values") {
    for (int i = 0; i < 300; ++i) {
        Dyadic a = random_dyadic(), b = random_dyadic();
        CHECK((a + b) - b == a);
        std::uniform_int_distribution<int> kd(-10, 10);
        int k = kd(rng);
        CHECK(a.scale_pow2(k).scale_pow2(-k) == a);
        // ordering agrees with cross-multiplication on the rational values
        bool lt = a < b;
        CHECK(lt == (a.to_rational() < b.to_rational()));
    }
}

TEST_CASE("dyadic floor") {
    CHECK(Dyadic(7, 2).floor() == 1);
    CHECK(Dyadic(-7, 2).floor() == -2);
    CHECK(Dyadic(-8, 2).floor() == -2);
    CHECK(Dyadic(5).floor() == 5);
}

TEST_CASE("lattice and free group laws") {
    IntLattice z2{2};
    CHECK(z2.mul({1, 0}, {0, 1}) == IntLattice::Element{1, 1});
    CHECK(z2.mul({3, -2}, z2.inv({3, -2})) == z2.identity());

    FreeGroup f2;
    auto a = f2.generator(1), b = f2.generator(2);
    CHECK(f2.mul(a, f2.inv(a)) == f2.identity());
    auto aba = f2.mul(f2.mul(a, b), f2.inv(a));
    CHECK(aba.length() == 3);
    CHECK(word_eval(f2, GroupWord{{1, 2, -1}}) == aba);
    CHECK(word_eval(f2, GroupWord{{}}) == f2.identity());

    for (int i = 0; i < 200; ++i) {
        auto w1 = random_word(2, 8), w2 = random_word(2, 8), w3 = random_word(2, 8);
        auto x = word_eval(f2, w1), y = word_eval(f2, w2), z = word_eval(f2, w3);
        CHECK(f2.mul(f2.mul(x, y), z) == f2.mul(x, f2.mul(y, z)));
        CHECK(f2.mul(x, f2.inv(x)) == f2.identity());
        CHECK(f2.inv(f2.mul(x, y)) == f2.mul(f2.inv(y), f2.inv(x)));
    }
}

TEST_CASE("thompson generators match the defining tables") {
    ThompsonGroup Fu{PLVariant::unit_interval};
    ThompsonGroup Fl{PLVariant::real_line};
    auto su = Fu.sigma(), tu = Fu.tau();

    CHECK(su.eval(Dyadic(1, 1)) == Dyadic(1, 2));          // sigma(1/2) = 1/4
    CHECK(tu.eval(Dyadic(3, 2)) == Dyadic(5, 3));          // tau(3/4) = 5/8
    CHECK(su.cuts() == std::vector<Dyadic>{Dyadic(1, 1), Dyadic(3, 2)});
    CHECK(Fl.sigma().eval(Dyadic(0)) == Dyadic(-1));       // sigma(0) = -1
    CHECK(Fl.sigma().cuts().empty());
    CHECK(Fl.tau().tail_translations() == std::pair<BigInt, BigInt>{BigInt(0), BigInt(-1)});

    CHECK(Fu.mul(su, Fu.inv(su)) == Fu.identity());
    CHECK(Fl.mul(Fl.tau(), Fl.inv(Fl.tau())) == Fl.identity());
}

TEST_CASE("thompson group laws on random words, both variants") {
    for (auto variant : {PLVariant::unit_interval, PLVariant::real_line}) {
        ThompsonGroup F{variant};
        for (int i = 0; i < 60; ++i) {
            auto w1 = random_word(2, 6), w2 = random_word(2, 6), w3 = random_word(2, 4);
            auto x = word_eval(F, w1), y = word_eval(F, w2), z = word_eval(F, w3);
            CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
            CHECK(F.mul(x, F.inv(x)) == F.identity());
            CHECK(F.mul(F.identity(), x) == x);
        }
    }
}

TEST_CASE("pl_eval is monotone and composition-compatible") {
    ThompsonGroup F{PLVariant::unit_interval};
    for (int i = 0; i < 100; ++i) {
        auto g = word_eval(F, random_word(2, 6));
        Dyadic x = random_unit_dyadic(), y = random_unit_dyadic();
        if (x == y) continue;
        if (y < x) std::swap(x, y);
        CHECK(g.eval(x) < g.eval(y));
        CHECK(g.eval_inverse(g.eval(x)) == x);
    }
    ThompsonGroup Fl{PLVariant::real_line};
    for (int i = 0; i < 60; ++i) {
        auto g = word_eval(Fl, random_word(2, 5));
        auto h = word_eval(Fl, random_word(2, 5));
        Dyadic x = random_dyadic(16, 8);
        CHECK(Fl.mul(g, h).eval(x) == g.eval(h.eval(x)));  // composition law
        auto [p, q] = Fl.mul(g, h).tail_translations();    // tails stay integer translations
        auto [pg, qg] = g.tail_translations();
        auto [ph, qh] = h.tail_translations();
        CHECK(p == pg + ph);
        CHECK(q == qg + qh);
    }
}

TEST_CASE("pl domain errors") {
    ThompsonGroup F{PLVariant::unit_interval};
    CHECK_THROWS_AS(F.sigma().eval(Dyadic(3, 1)), std::domain_error);
    ThompsonGroup Fl{PLVariant::real_line};
    CHECK_THROWS_AS(PLMap::compose(F.sigma(), Fl.sigma()), std::invalid_argument);
}

TEST_CASE("pl serialization round trip is bit exact") {
    for (auto variant : {PLVariant::unit_interval, PLVariant::real_line}) {
        ThompsonGroup F{variant};
        for (int i = 0; i < 80; ++i) {
            auto g = word_eval(F, random_word(2, 6));
            CHECK(PLMap::deserialize(g.serialize()) == g);
        }
    }
}

TEST_CASE("defining relations of F hold exactly in both variants") {
    for (auto variant : {PLVariant::unit_interval, PLVariant::real_line}) {
        ThompsonGroup F{variant};
        auto rep = check_relations(F);
        CHECK(rep.commutator1_identity);
        CHECK(rep.commutator2_identity);
        // computed resolution of the presentation line: conjugation shifts the index
        for (const auto& c : rep.gamma_cases) {
            CHECK(c.equals_gamma_n_plus_1);
            CHECK_FALSE(c.equals_gamma_n);
        }
    }
}

TEST_CASE("gamma ladder basics") {
    ThompsonGroup F{PLVariant::unit_interval};
    CHECK(F.gamma(0) == F.sigma());
    CHECK(F.gamma(1) == F.tau());
    CHECK(F.gamma(2) == F.mul(F.mul(F.inv(F.sigma()), F.tau()), F.sigma()));
}

TEST_CASE("kappa bridge: pinned values, inverse, monotonicity") {
    CHECK(kappa(Dyadic(1, 1)) == Dyadic(0));
    CHECK(kappa(Dyadic(3, 2)) == Dyadic(1));
    CHECK(kappa(Dyadic(1, 2)) == Dyadic(-1));
    CHECK_THROWS_AS(kappa(Dyadic(0)), std::domain_error);
    CHECK_THROWS_AS(kappa(Dyadic(5, 2)), std::domain_error);

    Dyadic prev;
    bool have_prev = false;
    for (int i = 0; i < 200; ++i) {
        Dyadic x = random_unit_dyadic();
        CHECK(kappa_inv(kappa(x)) == x);
        if (have_prev && prev < x) CHECK(kappa(prev) < kappa(x));
        if (have_prev && x < prev) CHECK(kappa(x) < kappa(prev));
        prev = x;
        have_prev = true;
    }
}

TEST_CASE("kappa equivariance: kappa(g_unit x) = g_line kappa(x)") {
    ThompsonGroup Fu{PLVariant::unit_interval};
    ThompsonGroup Fl{PLVariant::real_line};
    // pinned case from the generator tables
    CHECK(kappa(Fu.sigma().eval(Dyadic(1, 1))) == Fl.sigma().eval(kappa(Dyadic(1, 1))));
    for (int i = 0; i < 100; ++i) {
        GroupWord w = random_word(2, 6);
        auto gu = word_eval(Fu, w);
        auto gl = word_eval(Fl, w);
        Dyadic x = random_unit_dyadic();
        CHECK(kappa(gu.eval(x)) == gl.eval(kappa(x)));
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "limlie/chain.hpp"

using namespace limlie;

namespace {

QVec qv(std::initializer_list<long long> xs) {
    QVec v;
    for (auto x : xs) v.push_back(Rat(x));
    return v;
}

std::vector<QVec> random_basis(std::mt19937& rng, std::size_t d) {
    std::uniform_int_distribution<long long> entry(-4, 4);
    while (true) {
        std::vector<QVec> basis;
        for (std::size_t i = 0; i < d; ++i) {
            QVec v(d);
            for (auto& x : v) x = Rat(entry(rng));
            basis.push_back(v);
        }
        if (RowSpace(d, basis).dim() == d) return basis;
    }
}

/// Independent lexicographic comparator: sign of the first nonzero
/// coefficient of v in the given ordered basis.
int lex_sign(const std::vector<QVec>& basis, const QVec& v) {
    auto coeff = solve_in_span(basis, v);
    REQUIRE(coeff.has_value());
    for (auto& c : *coeff)
        if (!c.is_zero()) return c.sign();
    return 0;
}

} // namespace

TEST_CASE("complete flags are their own basic subchain and maximal closure") {
    Flag f(2, {{}, {qv({0, 1})}, {qv({1, 0}), qv({0, 1})}});
    CHECK(basic_subchain(f) == f);
    CHECK(maximal_from_basic(f) == f);

    Flag line(1, {{}, {qv({1})}});
    CHECK(basic_subchain(line) == line);

    Flag gap2(2, {{}, {qv({1, 0}), qv({0, 1})}});
    CHECK_THROWS_AS(basic_subchain(gap2), std::invalid_argument);
    CHECK_THROWS_AS(maximal_from_basic(gap2), std::invalid_argument);

    Flag q3(3, {{}, {qv({0, 0, 1})}, {qv({0, 1, 0}), qv({0, 0, 1})}, {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})}});
    CHECK(basic_subchain(q3) == q3);
}

TEST_CASE("flag construction rejects non-chains") {
    CHECK_THROWS_AS(Flag(2, {{}, {qv({1, 0})}}), std::invalid_argument);              // misses full space
    CHECK_THROWS_AS(Flag(2, {{qv({1, 0})}, {qv({1, 0}), qv({0, 1})}}), std::invalid_argument);  // misses 0
    CHECK_THROWS_AS(Flag(2, {{}, {qv({1, 0})}, {qv({0, 1})}, {qv({1, 0}), qv({0, 1})}}),
                    std::invalid_argument);  // not increasing
}

TEST_CASE("order from an oriented flag: spec examples") {
    Flag f(2, {{}, {qv({0, 1})}, {qv({1, 0}), qv({0, 1})}});
    Orientation o{{qv({0, 1}), qv({1, 0})}};  // +e2 in the small gap, +e1 in the big one
    CHECK(order_sign(f, o, qv({0, 3})) == 1);
    CHECK(order_sign(f, o, qv({-1, 100})) == -1);
    CHECK(order_sign(f, o, qv({0, 0})) == 0);
    CHECK(order_sign(f, o, qv({0, -2})) == -1);
    CHECK(order_sign(f, o, qv({2, -50})) == 1);
}

TEST_CASE("flag_from_lex_order unfolds the suffix construction") {
    auto [f1, o1] = flag_from_lex_order({qv({1, 0}), qv({0, 1})});
    Flag expect1(2, {{}, {qv({0, 1})}, {qv({1, 0}), qv({0, 1})}});
    CHECK(f1 == expect1);
    CHECK(o1.signs[0] == qv({0, 1}));
    CHECK(o1.signs[1] == qv({1, 0}));

    auto [f2, o2] = flag_from_lex_order({qv({0, 1}), qv({1, 0})});
    Flag expect2(2, {{}, {qv({1, 0})}, {qv({1, 0}), qv({0, 1})}});
    CHECK(f2 == expect2);
    CHECK(o2.signs[0] == qv({1, 0}));
    CHECK(o2.signs[1] == qv({0, 1}));

    auto [f3, o3] = flag_from_lex_order({qv({1})});
    CHECK(f3 == Flag(1, {{}, {qv({1})}}));
    CHECK(o3.signs[0] == qv({1}));

    CHECK_THROWS_AS(flag_from_lex_order({qv({1, 0}), qv({2, 0})}), std::invalid_argument);
}

TEST_CASE("lex round-trip on random bases, dimensions 1..5") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long long> entry(-5, 5);
    for (std::size_t d = 1; d <= 5; ++d) {
        for (int trial = 0; trial < 20; ++trial) {
            auto basis = random_basis(rng, d);
            auto [flag, orient] = flag_from_lex_order(basis);
            for (int probe = 0; probe < 100; ++probe) {
                QVec v(d);
                for (auto& x : v) x = Rat(entry(rng));
                CHECK(order_sign(flag, orient, v) == lex_sign(basis, v));
            }
        }
    }
}

TEST_CASE("induced order is antisymmetric and additive") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long long> entry(-5, 5);
    auto basis = random_basis(rng, 4);
    auto [flag, orient] = flag_from_lex_order(basis);
    for (int k = 0; k < 300; ++k) {
        QVec v(4), w(4);
        for (auto& x : v) x = Rat(entry(rng));
        for (auto& x : w) x = Rat(entry(rng));
        CHECK(order_sign(flag, orient, v) == -order_sign(flag, orient, QVec(qvec_zero(4)) - v));
        if (order_sign(flag, orient, v) == 1 && order_sign(flag, orient, w) == 1)
            CHECK(order_sign(flag, orient, v + w) == 1);
    }
}

TEST_CASE("triangular_from_flag: spec examples") {
    auto [flag, orient] = flag_from_lex_order({qv({1, 0}), qv({0, 1})});
    auto split = triangular_from_flag(flag, orient, Family::A, 3);
    std::set<Root> plus(split.plus.begin(), split.plus.end());
    CHECK(plus == std::set<Root>{Root::parse(Family::A, "e1-e2"), Root::parse(Family::A, "e1-e3"),
                                 Root::parse(Family::A, "e2-e3")});
    CHECK(split.zero.empty());

    Orientation flipped{{qvec_zero(2) - orient.signs[0], qvec_zero(2) - orient.signs[1]}};
    auto opposite = triangular_from_flag(flag, flipped, Family::A, 3);
    std::set<Root> minus(opposite.minus.begin(), opposite.minus.end());
    CHECK(minus == plus);

    auto [f1, o1] = flag_from_lex_order({qv({1})});
    auto t1 = triangular_from_flag(f1, o1, Family::A, 2);
    REQUIRE(t1.plus.size() == 1);
    CHECK(t1.plus[0] == Root::parse(Family::A, "e1-e2"));
    Orientation o1neg{{qv({-1})}};
    auto t1n = triangular_from_flag(f1, o1neg, Family::A, 2);
    CHECK(t1n.plus[0] == Root::parse(Family::A, "-e1+e2"));

    CHECK_THROWS_AS(triangular_from_flag(f1, o1, Family::A, 3), std::invalid_argument);
}

TEST_CASE("triangular_from_flag outputs pass the cone check on random flags") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        for (Family fam : {Family::A, Family::B, Family::D}) {
            int n = fam == Family::A ? 4 : 4;
            auto basis = random_basis(rng, span_dim(fam, n));
            auto [flag, orient] = flag_from_lex_order(basis);
            auto split = triangular_from_flag(flag, orient, fam, n);
            CHECK(split.plus.size() == roots_at_rank(fam, n).size() / 2);
            CHECK_FALSE(testing::has_nontrivial_nonneg_relation(split.plus, 2));
        }
    }
}

TEST_CASE("parabolic_from_partial_flag: spec examples and invariants") {
    // V' = ⟨ε1−ε2⟩ inside ⟨Δ_3⟩ for A: coordinates (1, 0) in the difference basis
    std::vector<QVec> vprime = {qv({1, 0})};
    auto [qflag, qorient] = flag_from_lex_order({qv({1})});
    auto split = parabolic_from_partial_flag(vprime, qflag, qorient, Family::A, 3);
    std::set<Root> zero(split.zero.begin(), split.zero.end());
    CHECK(zero == std::set<Root>{Root::parse(Family::A, "e1-e2"), Root::parse(Family::A, "-e1+e2")});
    CHECK(split.plus.size() == 2);
    CHECK(split.minus.size() == 2);
    std::set<Root> minus_neg;
    for (auto& r : split.minus) minus_neg.insert(-r);
    CHECK(minus_neg == std::set<Root>(split.plus.begin(), split.plus.end()));

    // V' = 0 reduces to triangular_from_flag
    std::mt19937 rng7(7);
    auto [flag2, orient2] = flag_from_lex_order(random_basis(rng7, 2));
    auto viaPartial = parabolic_from_partial_flag({}, flag2, orient2, Family::A, 3);
    auto direct = triangular_from_flag(flag2, orient2, Family::A, 3);
    CHECK(viaPartial.plus == direct.plus);
    CHECK(viaPartial.zero.empty());

    // V' = whole space puts every root in Δ⁰
    std::vector<QVec> all = {qv({1, 0}), qv({0, 1})};
    Flag trivial(0, {{}});
    auto everything = parabolic_from_partial_flag(all, trivial, Orientation{}, Family::A, 3);
    CHECK(everything.zero.size() == 6);

    // quotient triangularity: Π(Δ⁺) ⊔ Π(Δ⁻) has no nonneg relation among the
    // projected positives (checked via coordinates in the quotient)
    RowSpace vp(2, vprime);
    std::vector<Root> projected_ok;
    for (auto& r : split.plus) {
        QVec img = vp.quotient_coords(root_coords_in_span(Family::A, 3, r));
        CHECK_FALSE(qvec_is_zero(img));
    }
}

TEST_CASE("parabolic_from_partial_flag rejects non-V'-maximal data") {
    // quotient flag of wrong dimension
    std::vector<QVec> vprime = {qv({1, 0})};
    auto [qflag2, qorient2] = flag_from_lex_order({qv({1, 0}), qv({0, 1})});
    CHECK_THROWS_AS(parabolic_from_partial_flag(vprime, qflag2, qorient2, Family::A, 3),
                    std::invalid_argument);
}

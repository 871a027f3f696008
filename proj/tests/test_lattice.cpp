#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <zk3/lattice.hpp>
#include <zk3/snf.hpp>

#include "oracles.hpp"

#include <map>
#include <random>
#include <set>

using namespace zk3;

TEST_CASE("root lattice discriminants") {
    CHECK(Int(abs(discriminant(root_lattice(RootKind::A, 4)))) == 5);
    CHECK(Int(abs(discriminant(root_lattice(RootKind::A, 9)))) == 10);
    CHECK(Int(abs(discriminant(root_lattice(RootKind::D, 4)))) == 4);
    CHECK(Int(abs(discriminant(root_lattice(RootKind::D, 8)))) == 4);
    CHECK(Int(abs(discriminant(root_lattice(RootKind::E6, 0)))) == 3);
    CHECK(Int(abs(discriminant(root_lattice(RootKind::E7, 0)))) == 2);
    CHECK(Int(abs(discriminant(root_lattice(RootKind::E8, 0)))) == 1);
    CHECK(discriminant(hyperbolic_u()) == -1);
    CHECK(root_lattice(RootKind::A, 9).is_even());
    CHECK(root_lattice(RootKind::E8, 0).is_even());
}

TEST_CASE("direct sums used in the arguments") {
    IntegralLattice l1 = direct_sum({root_lattice(RootKind::A, 4),
                                     root_lattice(RootKind::A, 4),
                                     root_lattice(RootKind::A, 9)});
    CHECK(l1.rank() == 17);
    CHECK(Int(abs(discriminant(l1))) == 250);
    DiscGroup g1 = discriminant_group(l1);
    CHECK(g1.elementary_divisors == std::vector<Int>{5, 5, 10});
    CHECK(g1.order() == 250);

    IntegralLattice l2 = direct_sum({hyperbolic_u(), root_lattice(RootKind::A, 1),
                                     root_lattice(RootKind::A, 13)});
    CHECK(l2.rank() == 16);
    CHECK(discriminant(l2) == -28);

    IntegralLattice l3 = direct_sum({hyperbolic_u(), root_lattice(RootKind::A, 12),
                                     root_lattice(RootKind::E7, 0)});
    CHECK(l3.rank() == 21);
    CHECK(Int(abs(discriminant(l3))) == 26);
}

TEST_CASE("discriminant is multiplicative over direct sums") {
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        int na = 1 + t % 4, nb = 1 + (t / 3) % 4;
        IntegralLattice a = root_lattice(RootKind::A, na);
        IntegralLattice b = root_lattice(RootKind::D, 3 + nb);
        IntegralLattice s = direct_sum({a, b});
        CHECK(s.rank() == a.rank() + b.rank());
        CHECK(discriminant(s) == discriminant(a) * discriminant(b));
    }
}

TEST_CASE("discriminant groups") {
    CHECK(discriminant_group(hyperbolic_u()).elementary_divisors.empty());

    DiscGroup a2 = discriminant_group(root_lattice(RootKind::A, 2));
    REQUIRE(a2.elementary_divisors.size() == 1);
    CHECK(a2.elementary_divisors[0] == 3);

    std::vector<IntegralLattice> parts;
    for (int i = 0; i < 16; ++i)
        parts.push_back(root_lattice(RootKind::A, 1));
    parts.push_back(rank1_lattice(Int(4)));
    IntegralLattice kummer = direct_sum(parts);
    CHECK(kummer.rank() == 17);
    CHECK(Int(abs(discriminant(kummer))) == int_pow(Int(2), 18));
    DiscGroup g = discriminant_group(kummer);
    CHECK(g.order() == int_pow(Int(2), 18));
    CHECK(p_length(kummer, Int(2)) == 17);
    CHECK(p_length(kummer, Int(3)) == 0);
}

TEST_CASE("discriminant group is invariant under unimodular change of basis") {
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        IntegralLattice l = direct_sum({root_lattice(RootKind::A, 1 + t % 3),
                                        root_lattice(RootKind::A, 2 + t % 4)});
        RatMatrix u = oracles::random_unimodular(rng, l.rank());
        IntegralLattice conj("conj", u.transpose() * l.gram() * u);
        CHECK(discriminant_group(conj).elementary_divisors ==
              discriminant_group(l).elementary_divisors);
    }
}

TEST_CASE("two-torsion glue for U + A1 + A13") {
    IntegralLattice l = direct_sum({hyperbolic_u(), root_lattice(RootKind::A, 1),
                                    root_lattice(RootKind::A, 13)});
    auto glue = two_torsion_glue_candidates(l);
    REQUIRE(glue.size() == 1);

    // the unique candidate: (0,0; 1/2; the order-2 dual class of A13)
    const auto& v = glue[0];
    CHECK(v[0] == 0);
    CHECK(v[1] == 0);
    CHECK(v[2] == make_rat(Int(1), Int(2)));

    OverlatticeResult over = overlattice(l, glue);
    CHECK(over.index == 2);
    CHECK(over.lattice.rank() == 16);
    CHECK(discriminant(over.lattice) == -7);
    CHECK(over.lattice.is_even());
}

TEST_CASE("overlattice with empty glue is the identity") {
    IntegralLattice l = direct_sum({hyperbolic_u(), root_lattice(RootKind::A, 2)});
    OverlatticeResult over = overlattice(l, {});
    CHECK(over.index == 1);
    CHECK(discriminant(over.lattice) == discriminant(l));
}

TEST_CASE("glue vectors with bad pairing are rejected") {
    IntegralLattice a1 = root_lattice(RootKind::A, 1);
    // (1/2) pairs to -1 with the root: integral, but self-pairing -1/2 is
    // not an even integer
    CHECK_THROWS_AS(overlattice(a1, {{make_rat(Int(1), Int(2))}}), std::domain_error);

    IntegralLattice a2 = root_lattice(RootKind::A, 2);
    // (1/2, 0) has half-integral pairing with the second root
    CHECK_THROWS_AS(overlattice(a2, {{make_rat(Int(1), Int(2)), Rat(0)}}),
                    std::domain_error);
}

TEST_CASE("pairwise non-integral glue is rejected naming a pair") {
    // 14 copies of A1; each half-vector is fine on its own (self-pairing -4,
    // pairings with the basis integral) but the two overlap in 3 coordinates,
    // so their mutual pairing is -3/2
    std::vector<IntegralLattice> parts(14, root_lattice(RootKind::A, 1));
    IntegralLattice l = direct_sum(parts);
    std::vector<Rat> g1(14, Rat(0)), g2(14, Rat(0));
    for (std::size_t i = 0; i < 8; ++i)
        g1[i] = make_rat(Int(1), Int(2));
    for (std::size_t i = 5; i < 13; ++i)
        g2[i] = make_rat(Int(1), Int(2));
    try {
        overlattice(l, {g1, g2});
        FAIL("expected rejection");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("pair") != std::string::npos);
    }
}

TEST_CASE("overlattice law disc' * index^2 = disc on random even lattices") {
    std::mt19937 rng(314);
    // pool of even negative-definite summands with interesting 2-torsion
    auto pool = [&](int which) {
        switch (which % 6) {
        case 0: return root_lattice(RootKind::A, 1);
        case 1: return root_lattice(RootKind::A, 3);
        case 2: return root_lattice(RootKind::A, 7);
        case 3: return root_lattice(RootKind::D, 4);
        case 4: return root_lattice(RootKind::D, 6);
        default: return root_lattice(RootKind::E7, 0);
        }
    };
    int exercised = 0;
    std::uniform_int_distribution<int> pick(0, 5);
    for (int t = 0; t < 300 && exercised < 120; ++t) {
        std::vector<IntegralLattice> parts{pool(pick(rng)), pool(pick(rng))};
        if (t % 2)
            parts.push_back(pool(pick(rng)));
        IntegralLattice l = direct_sum(parts);
        if (l.rank() > 14)
            continue;
        auto glue = two_torsion_glue_candidates(l);
        for (const auto& g : glue) {
            OverlatticeResult over = overlattice(l, {g});
            CHECK(discriminant(over.lattice) * over.index * over.index == discriminant(l));
            CHECK(over.lattice.is_even());

            // oracle: index equals the order of the glue subgroup of L*/L,
            // counted by enumerating multiples of g modulo Z^n
            std::set<std::vector<Rat>> classes;
            std::vector<Rat> acc(l.rank(), Rat(0));
            for (int k = 0; k < 8; ++k) {
                std::vector<Rat> frac(l.rank());
                for (std::size_t i = 0; i < l.rank(); ++i) {
                    Rat x = acc[i] - Rat(Int(acc[i].get_num() / acc[i].get_den()));
                    if (x < 0)
                        x += 1;
                    frac[i] = x;
                }
                if (!classes.insert(frac).second)
                    break;
                for (std::size_t i = 0; i < l.rank(); ++i)
                    acc[i] += g[i];
            }
            CHECK(Int(static_cast<long>(classes.size())) == over.index);
            ++exercised;
        }
    }
    CHECK(exercised >= 100);
}

TEST_CASE("coordinate divisibility") {
    IntegralLattice a2 = root_lattice(RootKind::A, 2);
    CHECK(is_divisible(a2, {Int(2), Int(0)}, Int(2)));
    CHECK(!is_divisible(a2, {Int(1), Int(-1)}, Int(3)));
    CHECK(is_divisible(a2, {Int(5), Int(-7)}, Int(1)));
}

TEST_CASE("artin bounds") {
    IntegralLattice l250 = direct_sum({root_lattice(RootKind::A, 4),
                                       root_lattice(RootKind::A, 4),
                                       root_lattice(RootKind::A, 9)});
    CHECK(artin_bound(l250, Int(7)) == 2);
    CHECK_THROWS_AS(artin_bound(l250, Int(5)), std::domain_error); // 5 | 250

    IntegralLattice l7 = [&] {
        IntegralLattice base = direct_sum({hyperbolic_u(), root_lattice(RootKind::A, 1),
                                           root_lattice(RootKind::A, 13)});
        return overlattice(base, two_torsion_glue_candidates(base)).lattice;
    }();
    CHECK(artin_bound(l7, Int(3)) == 3);

    std::vector<IntegralLattice> parts;
    for (int i = 0; i < 16; ++i)
        parts.push_back(root_lattice(RootKind::A, 1));
    parts.push_back(rank1_lattice(Int(4)));
    CHECK(artin_bound(direct_sum(parts), Int(5)) == 2);
}

TEST_CASE("artin bound is monotone in the rank") {
    Int p(7);
    unsigned long prev = 100;
    for (int n = 1; n <= 22; ++n) {
        std::vector<IntegralLattice> parts(static_cast<std::size_t>(n),
                                           root_lattice(RootKind::A, 1));
        unsigned long b = artin_bound(direct_sum(parts), p);
        CHECK(b <= prev);
        prev = b;
    }
}

TEST_CASE("adjusted artin bound") {
    CHECK(artin_bound_adjusted(21, Int(26), Int(13)) == 1);
    // e = 0 agrees with the plain bound
    CHECK(artin_bound_adjusted(16, Int(-7), Int(3)) == 3);
    CHECK(artin_bound_adjusted(17, Int(250), Int(7)) == 2);
    // e = 3 case: max over t of 5(1+2t)-2t = 5+8t at t=3, (3+29)/2 = 16
    CHECK(artin_bound_adjusted(17, Int(250), Int(5)) == 16);
    CHECK(artin_bound_adjusted(18, Int(-5), Int(2)) == 2);
}

TEST_CASE("lattice JSON round trip") {
    IntegralLattice l = direct_sum({hyperbolic_u(), root_lattice(RootKind::A, 2)});
    nlohmann::json j = lattice_to_json(l);
    IntegralLattice back = lattice_from_json(j);
    CHECK(back.rank() == l.rank());
    CHECK(back.gram() == l.gram());
    CHECK(back.label() == l.label());

    nlohmann::json bad = {{"label", "x"}, {"rank", 3}, {"gram", {{0, 1}, {1, 0}}}};
    CHECK_THROWS_AS(lattice_from_json(bad), std::invalid_argument);
}

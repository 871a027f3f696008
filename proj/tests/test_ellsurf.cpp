#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <zk3/ellsurf.hpp>
#include <zk3/snf.hpp>

using namespace zk3;

namespace {

SectionData make_pj(int j) {
    SectionData s;
    s.name = "P" + std::to_string(j);
    s.po = 0;
    s.meets[0] = 1; // III, non-identity component
    s.meets[1] = 1; // I14, component adjacent to identity
    return s;
}

std::vector<SectionData> seven_sections() {
    std::vector<SectionData> out;
    for (int j = 0; j < 7; ++j)
        out.push_back(make_pj(j));
    for (auto& s : out)
        for (const auto& t : out)
            if (s.name != t.name)
                s.cross[t.name] = 1;
    return out;
}

} // namespace

TEST_CASE("fiber invariants") {
    KodairaFiber i14 = KodairaFiber::make(FiberType::In, 14);
    CHECK(i14.euler() == 14);
    CHECK(i14.components() == 14);
    REQUIRE(i14.root().has_value());
    CHECK(i14.root()->first == RootKind::A);
    CHECK(i14.root()->second == 13);

    KodairaFiber i0star = KodairaFiber::make(FiberType::InStar, 0);
    CHECK(i0star.euler() == 6);
    CHECK(i0star.components() == 5);
    CHECK(i0star.root()->first == RootKind::D);
    CHECK(i0star.root()->second == 4);

    CHECK(KodairaFiber::make(FiberType::II).euler() == 2);
    CHECK(KodairaFiber::make(FiberType::III).euler() == 3);
    CHECK(KodairaFiber::make(FiberType::IV).euler() == 4);
    CHECK(KodairaFiber::make(FiberType::IVStar).euler() == 8);
    CHECK(KodairaFiber::make(FiberType::IIIStar).euler() == 9);
    CHECK(KodairaFiber::make(FiberType::IIStar).euler() == 10);
    CHECK(KodairaFiber::make(FiberType::IIIStar).components() == 8);
    CHECK(!KodairaFiber::make(FiberType::II).root().has_value());
    CHECK(!KodairaFiber::make(FiberType::In, 1).root().has_value());
    CHECK_THROWS_AS(KodairaFiber::make(FiberType::In, 0), std::invalid_argument);
}

TEST_CASE("simple components") {
    // I_n: every component is simple
    CHECK(KodairaFiber::make(FiberType::In, 5).simple_components().size() == 5);
    // III*: identity plus the tail of the long arm
    auto s = KodairaFiber::make(FiberType::IIIStar).simple_components();
    CHECK(s == std::vector<int>{0, 7});
    // II*: only the identity
    CHECK(KodairaFiber::make(FiberType::IIStar).simple_components() ==
          std::vector<int>{0});
    // I_n*: identity, near component, two far components
    CHECK(KodairaFiber::make(FiberType::InStar, 2).simple_components().size() == 4);
}

TEST_CASE("fiber configurations of the hyperelliptic quotients") {
    FiberConfig l5 = fiber_config_for_ell(5);
    CHECK(l5.chi == 2);
    CHECK(euler_total(l5) == 24);
    REQUIRE(l5.fibers.size() == 7);
    CHECK(l5.fibers[0].name() == "III*");
    CHECK(l5.fibers[1].name() == "I10");

    FiberConfig l7 = fiber_config_for_ell(7);
    CHECK(euler_total(l7) == 24);
    CHECK(l7.fibers[0].name() == "III");
    CHECK(l7.fibers[1].name() == "I14");

    FiberConfig l3 = fiber_config_for_ell(3);
    CHECK(euler_total(l3) == 12); // rational elliptic surface

    CHECK_THROWS_AS(fiber_config_for_ell(4), std::invalid_argument);
    CHECK_THROWS_AS(fiber_config_for_ell(1), std::invalid_argument);
}

TEST_CASE("euler numbers and geometric genus across the family") {
    struct Row {
        long ell, e, pg;
    };
    for (const Row& r : {Row{3, 12, 0}, Row{5, 24, 1}, Row{7, 24, 1}, Row{11, 36, 2},
                         Row{9, 36, 2}, Row{13, 48, 3}}) {
        FiberConfig c = fiber_config_for_ell(r.ell);
        CHECK(euler_total(c) == r.e);
        CHECK(geometric_genus_for_ell(r.ell) == r.pg);
        long expected = r.ell % 4 == 3 ? 3 * r.ell + 3 : 3 * r.ell + 9;
        CHECK(euler_total(c) == expected);
    }
    // K3 exactly for ell in {5, 7}
    for (long ell = 3; ell <= 15; ell += 2)
        CHECK((euler_total(fiber_config_for_ell(ell)) == 24) == (ell == 5 || ell == 7));
}

TEST_CASE("wild ramification bookkeeping in characteristic 2") {
    FiberConfig c = fiber_config_for_ell(5, true);
    CHECK(euler_total(c) == 24);
    REQUIRE(c.fibers.size() == 2); // the I_1 fibers are gone
    CHECK(c.fibers[0].wild() == 5);
    nlohmann::json j = c.to_json();
    FiberConfig back = FiberConfig::from_json(j);
    CHECK(euler_total(back) == 24);
    CHECK(back.fibers[0].wild() == 5);
}

TEST_CASE("trivial lattices") {
    IntegralLattice l7 = trivial_lattice(fiber_config_for_ell(7));
    CHECK(l7.label() == "U + A1 + A13");
    CHECK(l7.rank() == 16);
    CHECK(discriminant(l7) == -28);

    IntegralLattice l5 = trivial_lattice(fiber_config_for_ell(5));
    CHECK(l5.label() == "U + E7 + A9");
    CHECK(l5.rank() == 18);

    FiberConfig ex75 = make_config({KodairaFiber::make(FiberType::In, 13),
                                    KodairaFiber::make(FiberType::IIIStar),
                                    KodairaFiber::make(FiberType::II)},
                                   2);
    IntegralLattice l = trivial_lattice(ex75);
    CHECK(l.label() == "U + A12 + E7");
    CHECK(l.rank() == 21);
    CHECK(Int(abs(discriminant(l))) == 26);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(make_config({KodairaFiber::make(FiberType::II)}, 2),
                    std::domain_error);
    FiberConfig base = make_config({KodairaFiber::make(FiberType::In, 1),
                                    KodairaFiber::make(FiberType::IIIStar),
                                    KodairaFiber::make(FiberType::II)},
                                   1);
    CHECK(euler_total(base) == 12);
}

TEST_CASE("contribution terms") {
    KodairaFiber i14 = KodairaFiber::make(FiberType::In, 14);
    CHECK(contribution(i14, 1, 1) == make_rat(Int(13), Int(14)));
    CHECK(contribution(i14, 7, 7) == make_rat(Int(49), Int(14)));
    CHECK(contribution(i14, 1, 13) == make_rat(Int(1), Int(14)));
    CHECK(contribution(i14, 0, 5) == 0);

    KodairaFiber iii = KodairaFiber::make(FiberType::III);
    CHECK(contribution(iii, 1, 1) == make_rat(Int(1), Int(2)));
    CHECK(contribution(iii, 0, 1) == 0);

    KodairaFiber iiistar = KodairaFiber::make(FiberType::IIIStar);
    CHECK(contribution(iiistar, 7, 7) == make_rat(Int(3), Int(2)));

    KodairaFiber iv = KodairaFiber::make(FiberType::IV);
    CHECK(contribution(iv, 1, 1) == make_rat(Int(2), Int(3)));
    CHECK(contribution(iv, 1, 2) == make_rat(Int(1), Int(3)));

    KodairaFiber ivstar = KodairaFiber::make(FiberType::IVStar);
    CHECK(contribution(ivstar, 1, 1) == make_rat(Int(4), Int(3)));
    CHECK(contribution(ivstar, 1, 6) == make_rat(Int(2), Int(3)));

    // I_2*: near component contributes 1, far components 1 + n/4
    KodairaFiber i2star = KodairaFiber::make(FiberType::InStar, 2);
    CHECK(contribution(i2star, 1, 1) == Rat(1));
    CHECK(contribution(i2star, 6, 6) == make_rat(Int(3), Int(2)));

    CHECK_THROWS_AS(contribution(i14, 14, 0), std::invalid_argument);
    CHECK_THROWS_AS(contribution(KodairaFiber::make(FiberType::II), 1, 1),
                    std::invalid_argument);
}

TEST_CASE("contribution off-diagonal bound for I_n") {
    KodairaFiber i9 = KodairaFiber::make(FiberType::In, 9);
    for (int i = 1; i < 9; ++i)
        for (int j = i; j < 9; ++j) {
            CHECK(contribution(i9, i, j) <= contribution(i9, i, i));
            CHECK(contribution(i9, i, j) >= 0);
        }
}

TEST_CASE("simple-component contributions stay below 2*chi for K3") {
    for (FiberType t : {FiberType::III, FiberType::IIIStar, FiberType::IV,
                        FiberType::IVStar}) {
        KodairaFiber f = KodairaFiber::make(t);
        for (int i : f.simple_components())
            if (i != 0) {
                Rat c = contribution(f, i, i);
                CHECK(c > 0);
                CHECK(c < 4);
            }
    }
    for (int n : {0, 1, 2, 3, 4}) {
        KodairaFiber f = KodairaFiber::make(FiberType::InStar, n);
        for (int i : f.simple_components())
            if (i != 0)
                CHECK(contribution(f, i, i) < 4);
    }
}

TEST_CASE("height pairing of the seven sections") {
    FiberConfig c = fiber_config_for_ell(7);
    auto sections = seven_sections();

    CHECK(height_pairing(sections[0], sections[0], c) == make_rat(Int(18), Int(7)));
    CHECK(height_pairing(sections[2], sections[5], c) == make_rat(Int(-3), Int(7)));

    // the zero section meets identity components everywhere and has h(O) = 0;
    // it also pairs to 0 with everything
    SectionData zero = SectionData::zero();
    CHECK(height_pairing(zero, zero, c) == Rat(0));
    CHECK(height_pairing(zero, sections[3], c) == Rat(0));

    SectionData torsion;
    torsion.name = "T";
    torsion.po = 0;
    torsion.meets[0] = 1;
    torsion.meets[1] = 7;
    CHECK(height_pairing(torsion, torsion, c) == Rat(0));
}

TEST_CASE("height pairing is symmetric") {
    FiberConfig c = fiber_config_for_ell(7);
    auto sections = seven_sections();
    for (std::size_t i = 0; i < sections.size(); ++i)
        for (std::size_t j = 0; j < sections.size(); ++j)
            CHECK(height_pairing(sections[i], sections[j], c) ==
                  height_pairing(sections[j], sections[i], c));
}

TEST_CASE("Mordell-Weil Gram matrix of the seven sections") {
    FiberConfig c = fiber_config_for_ell(7);
    RatMatrix g = mw_gram(seven_sections(), c);
    REQUIRE(g.rows() == 7);
    CHECK(rank_exact(g) == 6);

    // the all-ones vector spans the kernel
    std::vector<Rat> ones(7, Rat(1));
    for (const Rat& x : g.apply(ones))
        CHECK(x == 0);

    Rat expected = make_rat(Int(729), Int(7));
    for (std::size_t omit = 0; omit < 7; ++omit) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < 7; ++i)
            if (i != omit)
                idx.push_back(i);
        CHECK(det_exact(g.submatrix(idx, idx)) == expected);
    }

    // single section: rank 1, disc 18/7
    RatMatrix g1 = mw_gram({make_pj(0)}, c);
    CHECK(g1.rows() == 1);
    CHECK(g1.at(0, 0) == make_rat(Int(18), Int(7)));
}

TEST_CASE("Shioda-Tate discriminant bookkeeping") {
    CHECK(shioda_tate_disc(Int(28), make_rat(Int(729), Int(7)), Int(2)) == Rat(729));
    CHECK(shioda_tate_disc(Int(-28), make_rat(Int(729), Int(7)), Int(2)) == Rat(729));
    CHECK(shioda_tate_disc(Int(42), Rat(1), Int(1)) == Rat(42));
    // without the two-torsion the value is not a power of 3
    CHECK(shioda_tate_disc(Int(28), make_rat(Int(729), Int(7)), Int(1)) == Rat(2916));
    CHECK_THROWS_AS(shioda_tate_disc(Int(28), Rat(1), Int(0)), std::invalid_argument);
}

TEST_CASE("desingularization lattice of the degree 5 quotient") {
    IntegralLattice l = desingularization_lattice_ell5(false);
    CHECK(l.rank() == 17);
    CHECK(Int(abs(discriminant(l))) == 250);
    CHECK(artin_bound(l, Int(7)) == 2);

    IntegralLattice l2 = desingularization_lattice_ell5(true);
    CHECK(l2.rank() == 18);
    CHECK(discriminant(l2) == -5);
    CHECK(l2.is_even());
    CHECK(artin_bound(l2, Int(2)) == 2);
}

TEST_CASE("the line attachment point is pinned by the discriminant") {
    auto candidates = ell5_char2_candidates();
    REQUIRE(candidates.size() == 9);
    int winners = 0;
    for (const auto& cand : candidates) {
        if (cand.span_rank == 18 && cand.disc == -5) {
            ++winners;
            CHECK(cand.k == 5);
        }
    }
    CHECK(winners == 1);
}

TEST_CASE("sections survive the JSON representation") {
    auto sections = seven_sections();
    nlohmann::json j = sections[0].to_json();
    SectionData back = SectionData::from_json(j);
    CHECK(back.name == sections[0].name);
    CHECK(back.po == sections[0].po);
    CHECK(back.meets == sections[0].meets);
    CHECK(back.cross == sections[0].cross);
}

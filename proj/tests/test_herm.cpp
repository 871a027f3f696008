#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <zk3/herm.hpp>
#include <zk3/interpolate.hpp>
#include <zk3/snf.hpp>

#include <random>

using namespace zk3;

namespace {

const std::vector<long> kJ0Primes{2, 5, 11, 23};
const std::vector<long> kJ1728Primes{3, 7, 11, 19};

HermElement diag(const OrderCase& c, long alpha, long delta) {
    return HermElement(Int(alpha), Int(delta), QuatElement::zero(c));
}

} // namespace

TEST_CASE("pairing of the product polarization classes") {
    OrderCase c(CurveTag::J0, Int(5));
    HermElement e1 = diag(c, 0, 1);
    HermElement e2 = diag(c, 1, 0);
    CHECK(herm_pairing(e1, e2) == 1);
    CHECK(herm_pairing(e1, e1) == 0);
    CHECK(herm_pairing(e2, e2) == 0);
}

TEST_CASE("pairing reproduces the invariant Gram block") {
    for (long p : kJ0Primes) {
        OrderCase c(CurveTag::J0, Int(p));
        // off-diagonal invariant generators: beta = p and beta = 2p + p*tau
        HermElement g3(Int(0), Int(0), QuatElement::scalar(c, Rat(p)));
        HermElement g4(Int(0), Int(0), QuatElement(c, {Rat(2 * p), Rat(0), Rat(p), Rat(0)}));
        CHECK(herm_pairing(g3, g3) == Int(-2 * p * p));
        CHECK(herm_pairing(g3, g4) == Int(-3 * p * p));
        CHECK(herm_pairing(g4, g4) == Int(-6 * p * p));
    }
}

TEST_CASE("H basis Gram determinant is -p^2") {
    for (long p : kJ0Primes) {
        OrderCase c(CurveTag::J0, Int(p));
        RatMatrix g = h_lattice(c).gram;
        CHECK(det_exact(g) == Rat(Int(-p * p)));
        CHECK(g.is_symmetric());
        CHECK(g.at(0, 0) == 0);
        CHECK(g.at(1, 1) == 0);
    }
    for (long p : kJ1728Primes) {
        OrderCase c(CurveTag::J1728, Int(p));
        CHECK(det_exact(h_lattice(c).gram) == Rat(Int(-p * p)));
    }
}

TEST_CASE("pairing is symmetric, bilinear, and even on the diagonal") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> d(-3, 3);
    for (CurveTag tag : {CurveTag::J0, CurveTag::J1728}) {
        OrderCase c(tag, Int(tag == CurveTag::J0 ? 5 : 7));
        auto random_elem = [&] {
            return HermElement(Int(d(rng)), Int(d(rng)),
                               QuatElement(c, {Rat(d(rng)), Rat(d(rng)), Rat(d(rng)),
                                               Rat(d(rng))}));
        };
        for (int t = 0; t < 60; ++t) {
            HermElement x = random_elem(), y = random_elem(), z = random_elem();
            CHECK(herm_pairing(x, y) == herm_pairing(y, x));
            CHECK(herm_pairing(x + y, z) == herm_pairing(x, z) + herm_pairing(y, z));
            CHECK(herm_pairing(x, x) % 2 == 0); // NS of an abelian surface is even
        }
    }
}

TEST_CASE("H' membership and coordinates") {
    for (CurveTag tag : {CurveTag::J0, CurveTag::J1728}) {
        for (long p : tag == CurveTag::J0 ? kJ0Primes : kJ1728Primes) {
            OrderCase c(tag, Int(p));
            auto basis = hprime_basis(c);
            REQUIRE(basis.size() == 6);
            for (std::size_t i = 0; i < 6; ++i) {
                CHECK(in_h_prime(basis[i]));
                auto coords = hprime_coordinates(basis[i]);
                REQUIRE(coords.has_value());
                for (std::size_t j = 0; j < 6; ++j)
                    CHECK((*coords)[j] == (i == j ? 1 : 0));
            }
            // E1 itself is not in H'
            CHECK(!in_h_prime(diag(c, 0, 1)));
        }
    }
}

TEST_CASE("H' elements form a subgroup") {
    OrderCase c(CurveTag::J0, Int(5));
    auto basis = hprime_basis(c);
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-2, 2);
    for (int t = 0; t < 50; ++t) {
        HermElement x = diag(c, 0, 0), y = diag(c, 0, 0);
        for (const auto& b : basis) {
            x = x + b.scaled(Int(d(rng)));
            y = y + b.scaled(Int(d(rng)));
        }
        CHECK(in_h_prime(x + y));
        CHECK(in_h_prime(x - y));
        CHECK(in_h_prime(x.scaled(Int(3))));
    }
}

TEST_CASE("H' Gram determinants") {
    for (CurveTag tag : {CurveTag::J0, CurveTag::J1728}) {
        for (long p : tag == CurveTag::J0 ? kJ0Primes : kJ1728Primes) {
            OrderCase c(tag, Int(p));
            NsLattice hp = hprime_lattice(c);
            CHECK(det_exact(hp.gram) == Rat(-int_pow(Int(p), 10)));
            RatMatrix ns = hp.scaled_gram();
            CHECK(ns.is_integral());
            CHECK(det_exact(ns) == Rat(-int_pow(Int(p), 4)));
        }
    }
}

TEST_CASE("pullback by the identity and by diag(tau,tau)") {
    OrderCase c(CurveTag::J0, Int(5));
    QuatMat2 id = QuatMat2::diagonal(QuatElement::one(c), QuatElement::one(c));
    HermElement x(Int(3), Int(-2), QuatElement(c, {Rat(1), Rat(2), Rat(0), Rat(-1)}));
    CHECK(pullback_action(id, x) == x);

    QuatElement tau = QuatElement::basis_element(c, 2);
    QuatMat2 g = QuatMat2::diagonal(tau, tau);
    CHECK(pullback_action(g, diag(c, 0, 5)) == diag(c, 0, 5));
    CHECK(pullback_action(g, diag(c, 5, 0)) == diag(c, 5, 0));
}

TEST_CASE("pullback by diag(tau,tau) is an isometry") {
    for (CurveTag tag : {CurveTag::J0, CurveTag::J1728}) {
        for (long p : tag == CurveTag::J0 ? kJ0Primes : kJ1728Primes) {
            OrderCase c(tag, Int(p));
            QuatElement tau =
                QuatElement::basis_element(c, tag == CurveTag::J0 ? 2 : 1);
            QuatMat2 g = QuatMat2::diagonal(tau, tau);
            auto basis = h_basis(c);
            std::vector<HermElement> image;
            for (const auto& b : basis)
                image.push_back(pullback_action(g, b));
            CHECK(gram_matrix(image) == gram_matrix(basis));

            RatMatrix rho = hprime_action_matrix(c, g);
            RatMatrix hg = hprime_lattice(c).gram;
            CHECK(rho.transpose() * hg * rho == hg);
        }
    }
}

TEST_CASE("the conjugation condition on F*O solves to c = a/2, d = -3a/2") {
    // Invariance of [[0, F x],[conj(F x), 0]] under diag(tau,tau) pins
    // x = a + bF + c tau + d eta to the plane c = a/2, d = -3a/2 (b free):
    // the fixed space of the action on the off-diagonal block of H' is
    // spanned by (a,b,c,d) = (0,1,0,0) and (2,0,1,-3).
    OrderCase c(CurveTag::J0, Int(5));
    QuatElement tau = QuatElement::basis_element(c, 2);
    RatMatrix rho = hprime_action_matrix(c, QuatMat2::diagonal(tau, tau));
    // off-diagonal block: coordinates 2..5 of the H' basis
    RatMatrix block(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            block.at(i, j) = rho.at(i + 2, j + 2);
    auto kernel = integer_kernel(block - RatMatrix::identity(4));
    REQUIRE(kernel.size() == 2);
    // both named solutions lie in the fixed space
    auto contains = [&](const std::vector<long>& v) {
        RatMatrix m(4, 2);
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t i = 0; i < 4; ++i)
                m.at(i, j) = Rat(kernel[j][i]);
        auto sol = solve_rational(m, {Rat(v[0]), Rat(v[1]), Rat(v[2]), Rat(v[3])});
        if (!sol)
            return false;
        for (const Rat& x : *sol)
            if (!is_integral(x))
                return false;
        return true;
    };
    CHECK(contains({0, 1, 0, 0}));
    CHECK(contains({2, 0, 1, -3}));
    CHECK(!contains({1, 0, 0, 0}));
}

TEST_CASE("invariant sublattice determinants") {
    for (long p : kJ0Primes) {
        OrderCase c(CurveTag::J0, Int(p));
        NsLattice inv = invariant_sublattice(c);
        REQUIRE(inv.basis.size() == 4);
        CHECK(det_exact(inv.gram) == Rat(Int(-3) * int_pow(Int(p), 8)));
        CHECK(det_exact(inv.scaled_gram()) == Rat(Int(-3) * int_pow(Int(p), 4)));
    }
    for (long p : kJ1728Primes) {
        OrderCase c(CurveTag::J1728, Int(p));
        NsLattice inv = invariant_sublattice(c);
        REQUIRE(inv.basis.size() == 4);
        CHECK(det_exact(inv.gram) == Rat(Int(-4) * int_pow(Int(p), 8)));
        CHECK(det_exact(inv.scaled_gram()) == Rat(Int(-4) * int_pow(Int(p), 4)));
    }
}

TEST_CASE("listed invariant generators lie in the computed sublattice") {
    auto in_span = [](const std::vector<std::vector<Int>>& span, const std::vector<Int>& v) {
        RatMatrix m(6, span.size());
        for (std::size_t j = 0; j < span.size(); ++j)
            for (std::size_t i = 0; i < 6; ++i)
                m.at(i, j) = Rat(span[j][i]);
        std::vector<Rat> rhs(v.begin(), v.end());
        auto sol = solve_rational(m, rhs);
        if (!sol)
            return false;
        for (const Rat& x : *sol)
            if (!is_integral(x))
                return false;
        return true;
    };

    for (long p : kJ0Primes) {
        OrderCase c(CurveTag::J0, Int(p));
        NsLattice inv = invariant_sublattice(c);
        std::vector<std::vector<Int>> span;
        for (const auto& e : inv.basis)
            span.push_back(*hprime_coordinates(e));

        std::vector<HermElement> listed;
        listed.push_back(diag(c, 0, p));
        listed.push_back(diag(c, p, 0));
        listed.emplace_back(Int(0), Int(0), QuatElement::scalar(c, Rat(p)));
        listed.emplace_back(Int(0), Int(0),
                            QuatElement(c, {Rat(2 * p), Rat(0), Rat(p), Rat(0)}));
        std::vector<std::vector<Int>> listed_coords;
        for (const auto& e : listed) {
            auto coords = hprime_coordinates(e);
            REQUIRE(coords.has_value());
            CHECK(in_span(span, *coords));
            listed_coords.push_back(*coords);
        }
        // and conversely: the listed elements generate the kernel lattice
        for (const auto& v : span)
            CHECK(in_span(listed_coords, v));
    }

    for (long p : kJ1728Primes) {
        OrderCase c(CurveTag::J1728, Int(p));
        NsLattice inv = invariant_sublattice(c);
        std::vector<std::vector<Int>> span;
        for (const auto& e : inv.basis)
            span.push_back(*hprime_coordinates(e));
        std::vector<HermElement> listed;
        listed.push_back(diag(c, 0, p));
        listed.push_back(diag(c, p, 0));
        listed.emplace_back(Int(0), Int(0), QuatElement::scalar(c, Rat(p)));
        listed.emplace_back(Int(0), Int(0),
                            QuatElement(c, {Rat(0), Rat(p), Rat(0), Rat(0)})); // p*tau
        for (const auto& e : listed) {
            auto coords = hprime_coordinates(e);
            REQUIRE(coords.has_value());
            CHECK(in_span(span, *coords));
        }
    }
}

TEST_CASE("determinant polynomials in p via interpolation") {
    auto poly_for = [](CurveTag tag, const std::vector<long>& nodes, bool scaled) {
        std::vector<std::pair<Rat, Rat>> pts;
        for (long p : nodes) {
            OrderCase c(tag, Int(p));
            NsLattice inv = invariant_sublattice(c);
            pts.emplace_back(Rat(p),
                             scaled ? det_exact(inv.scaled_gram()) : det_exact(inv.gram));
        }
        return interpolate_polynomial(pts);
    };
    const std::vector<long> j0{2, 5, 11, 17, 23, 29, 41, 47, 53};
    const std::vector<long> j1728{3, 7, 11, 19, 23, 31, 43, 47, 59};

    CHECK(polynomial_to_string(poly_for(CurveTag::J0, j0, false), "p") == "-3*p^8");
    CHECK(polynomial_to_string(poly_for(CurveTag::J0, j0, true), "p") == "-3*p^4");
    CHECK(polynomial_to_string(poly_for(CurveTag::J1728, j1728, false), "p") == "-4*p^8");
    CHECK(polynomial_to_string(poly_for(CurveTag::J1728, j1728, true), "p") == "-4*p^4");
}

TEST_CASE("artin invariant from discriminant") {
    CHECK(artin_invariant_from_disc(-int_pow(Int(5), 4), Int(5)) == 2ul);
    CHECK(artin_invariant_from_disc(Int(-729), Int(3)) == 3ul);
    CHECK(!artin_invariant_from_disc(Int(-26), Int(13)).has_value());
    CHECK(!artin_invariant_from_disc(Int(125), Int(5)).has_value()); // odd power
    CHECK(artin_invariant_from_disc(Int(-1), Int(7)) == 0ul);
}

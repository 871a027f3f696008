#include <zk3/claims.hpp>

#include <zk3/cover.hpp>
#include <zk3/ellsurf.hpp>
#include <zk3/herm.hpp>
#include <zk3/interpolate.hpp>
#include <zk3/lattice.hpp>
#include <zk3/quat.hpp>
#include <zk3/snf.hpp>

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace zk3 {

std::string to_string(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::Pass:
        return "pass";
    case ClaimStatus::Fail:
        return "fail";
    case ClaimStatus::Skipped:
        return "skipped";
    }
    return "?";
}

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::Paper:
        return "paper";
    case Provenance::Derived:
        return "derived";
    case Provenance::Trivial:
        return "trivial";
    }
    return "?";
}

namespace {

const std::vector<Int> kJ0Primes{2, 5, 11, 23};
const std::vector<Int> kJ1728Primes{3, 7, 11, 19};

// Interpolation nodes: nine admissible primes per case, enough to pin any
// polynomial of degree <= 8 exactly.
const std::vector<long> kJ0Nodes{2, 5, 11, 17, 23, 29, 41, 47, 53};
const std::vector<long> kJ1728Nodes{3, 7, 11, 19, 23, 31, 43, 47, 59};

void emit(std::vector<ClaimReport>& out, std::string id, std::string desc, std::string loc,
          Provenance prov, std::string expected, std::string computed) {
    ClaimStatus st = expected == computed ? ClaimStatus::Pass : ClaimStatus::Fail;
    out.push_back(ClaimReport{std::move(id), std::move(desc), std::move(loc),
                              std::move(expected), std::move(computed), st, prov});
}

void emit_skip(std::vector<ClaimReport>& out, std::string id, std::string desc,
               std::string loc, std::string reason) {
    out.push_back(ClaimReport{std::move(id), std::move(desc), std::move(loc), "",
                              std::move(reason), ClaimStatus::Skipped, Provenance::Trivial});
}

std::string inadmissible_reason(CurveTag t, const Int& p) {
    return "prime " + p.get_str() + " inadmissible for " +
           (t == CurveTag::J0 ? std::string("j0 (needs p = 2 mod 3)")
                              : std::string("j1728 (needs p = 3 mod 4)"));
}

std::vector<Int> primes_for(CurveTag t, const std::vector<Int>& override_primes) {
    if (!override_primes.empty())
        return override_primes;
    return t == CurveTag::J0 ? kJ0Primes : kJ1728Primes;
}

// ---------------------------------------------------------------- quat-assoc

void run_quat_assoc(const std::vector<Int>& primes, std::vector<ClaimReport>& out) {
    const std::string loc = "section 3, multiplication tables";
    for (CurveTag t : {CurveTag::J0, CurveTag::J1728}) {
        for (const Int& p : primes_for(t, primes)) {
            std::string id = "quat-assoc@" + std::string(t == CurveTag::J0 ? "j0" : "j1728") +
                             ",p=" + p.get_str();
            if (!OrderCase::admissible(t, p)) {
                emit_skip(out, id, "order multiplication table consistency", loc,
                          inadmissible_reason(t, p));
                continue;
            }
            OrderCase c(t, p);
            bool assoc = true, closed = true;
            for (int i = 0; i < 4 && assoc; ++i)
                for (int j = 0; j < 4 && assoc; ++j) {
                    QuatElement bi = QuatElement::basis_element(c, i);
                    QuatElement bj = QuatElement::basis_element(c, j);
                    if (!quat_mul(bi, bj).is_integral())
                        closed = false;
                    for (int k = 0; k < 4 && assoc; ++k) {
                        QuatElement bk = QuatElement::basis_element(c, k);
                        if (!(quat_mul(quat_mul(bi, bj), bk) == quat_mul(bi, quat_mul(bj, bk))))
                            assoc = false;
                    }
                }
            std::string got = std::string(assoc ? "associative" : "NOT associative") + "," +
                              (closed ? "closed" : "NOT closed");
            emit(out, id, "associativity on all 64 basis triples and ring closure", loc,
                 Provenance::Paper, "associative,closed", got);
        }
    }
    // The printed order-4 table lists tau*eta = -eta, which contradicts
    // associativity: (tau*tau)*xi = -xi while tau*(tau*xi) would be -eta.
    // The implemented entry is the relation-forced value -(1+F)/2.
    OrderCase c(CurveTag::J1728, Int(3));
    QuatElement tau = QuatElement::basis_element(c, 1);
    QuatElement xi = QuatElement::basis_element(c, 2);
    QuatElement eta = QuatElement::basis_element(c, 3);
    QuatElement via_table = quat_mul(tau, eta);
    QuatElement via_relations = quat_mul(quat_mul(tau, tau), xi);
    emit(out, "quat-assoc#j1728-taueta",
         "flagged discrepancy: the printed tau*eta entry (-eta) breaks associativity; "
         "the table is corrected to tau*eta = -(1+F)/2 = tau^2*(1+F)/2, and the "
         "associativity suite arbitrates",
         "section 3, second multiplication table", Provenance::Derived,
         via_relations.str(), via_table.str());
}

// ---------------------------------------------------------------- order-disc

void run_order_disc(const std::vector<Int>& primes, std::vector<ClaimReport>& out) {
    const std::string loc = "section 2 (discriminant p); section 3 (p = 2)";
    for (CurveTag t : {CurveTag::J0, CurveTag::J1728}) {
        for (const Int& p : primes_for(t, primes)) {
            std::string id = "order-disc@" + std::string(t == CurveTag::J0 ? "j0" : "j1728") +
                             ",p=" + p.get_str();
            if (!OrderCase::admissible(t, p)) {
                emit_skip(out, id, "reduced discriminant of the order", loc,
                          inadmissible_reason(t, p));
                continue;
            }
            OrderCase c(t, p);
            emit(out, id, "reduced discriminant of End(E) equals p", loc, Provenance::Paper,
                 p.get_str(), order_reduced_discriminant(c).get_str());
        }
    }
}

// ---------------------------------------------------------------- h-gram-det

void run_h_gram_det(const std::vector<Int>& primes, std::vector<ClaimReport>& out) {
    const std::string loc = "section 2, Gram matrix of <E1,E2,D1..D4>";
    for (CurveTag t : {CurveTag::J0, CurveTag::J1728}) {
        for (const Int& p : primes_for(t, primes)) {
            std::string id = "h-gram-det@" + std::string(t == CurveTag::J0 ? "j0" : "j1728") +
                             ",p=" + p.get_str();
            if (!OrderCase::admissible(t, p)) {
                emit_skip(out, id, "det of the NS(E1 x E2) Gram matrix", loc,
                          inadmissible_reason(t, p));
                continue;
            }
            OrderCase c(t, p);
            Int expected = -(p * p);
            Rat det = det_exact(h_lattice(c).gram);
            emit(out, id, "det of the 6-element NS(E1 x E2) Gram matrix equals -p^2", loc,
                 Provenance::Paper, expected.get_str(), det.get_str());
        }
    }
}

// ---------------------------------------------------------------- hprime-det

void run_hprime_det(const std::vector<Int>& primes, std::vector<ClaimReport>& out) {
    const std::string loc = "Proposition 2.3 proof";
    for (CurveTag t : {CurveTag::J0, CurveTag::J1728}) {
        for (const Int& p : primes_for(t, primes)) {
            std::string suffix = "@" + std::string(t == CurveTag::J0 ? "j0" : "j1728") +
                                 ",p=" + p.get_str();
            if (!OrderCase::admissible(t, p)) {
                emit_skip(out, "hprime-det" + suffix, "H' basis checks", loc,
                          inadmissible_reason(t, p));
                continue;
            }
            OrderCase c(t, p);
            auto basis = hprime_basis(c);
            bool member = true;
            for (const auto& e : basis)
                member = member && in_h_prime(e);
            emit(out, "hprime-det#membership" + suffix,
                 "all six listed basis elements satisfy p|alpha, p|delta, beta in F*O",
                 loc, Provenance::Paper, "in H'", member ? "in H'" : "membership violated");
            Int expected = -int_pow(p, 10);
            emit(out, "hprime-det" + suffix, "H-Gram det of the H' basis equals -p^10", loc,
                 Provenance::Paper, expected.get_str(),
                 det_exact(gram_matrix(basis)).get_str());
        }
    }
}

// ------------------------------------------------------------------ prop-2.3

void run_prop_2_3(const std::vector<Int>& primes, std::vector<ClaimReport>& out) {
    const std::string loc = "Proposition 2.3";
    for (CurveTag t : {CurveTag::J0, CurveTag::J1728}) {
        for (const Int& p : primes_for(t, primes)) {
            std::string suffix = "@" + std::string(t == CurveTag::J0 ? "j0" : "j1728") +
                                 ",p=" + p.get_str();
            if (!OrderCase::admissible(t, p)) {
                emit_skip(out, "prop-2.3" + suffix, "NS(A) determinant and Artin invariant",
                          loc, inadmissible_reason(t, p));
                continue;
            }
            OrderCase c(t, p);
            NsLattice hp = hprime_lattice(c);
            RatMatrix ns = hp.scaled_gram(); // throws if non-integral
            Int det = to_int(det_exact(ns));
            Int expected = -int_pow(p, 4);
            emit(out, "prop-2.3" + suffix,
                 "NS(A) Gram (H-pairing scaled by 1/p) is integral with det -p^4", loc,
                 Provenance::Paper, expected.get_str(), det.get_str());
            auto sigma = artin_invariant_from_disc(det, p);
            emit(out, "prop-2.3#sigma" + suffix, "Artin invariant of A equals 2", loc,
                 Provenance::Paper, "2", sigma ? std::to_string(*sigma) : "undefined");
        }
    }
}

// --------------------------------------------------------- thm-3.3 / thm-3.5

std::string kernel_basis_string(const NsLattice& inv) {
    std::string s = "[";
    for (std::size_t i = 0; i < inv.basis.size(); ++i) {
        if (i)
            s += "; ";
        const HermElement& e = inv.basis[i];
        s += "alpha=" + e.alpha().get_str() + ",delta=" + e.delta().get_str() +
             ",beta=(" + e.beta().str() + ")";
    }
    return s + "]";
}

// Is x in the Z-span of the columns of basis (coordinates in H')?
bool in_span(const std::vector<std::vector<Int>>& basis_coords,
             const std::vector<Int>& v) {
    RatMatrix m(6, basis_coords.size());
    for (std::size_t j = 0; j < basis_coords.size(); ++j)
        for (std::size_t i = 0; i < 6; ++i)
            m.at(i, j) = Rat(basis_coords[j][i]);
    std::vector<Rat> rhs(6);
    for (std::size_t i = 0; i < 6; ++i)
        rhs[i] = Rat(v[i]);
    auto x = solve_rational(m, rhs);
    if (!x)
        return false;
    for (const Rat& xi : *x)
        if (!is_integral(xi))
            return false;
    return true;
}

void run_invariant_case(CurveTag t, long coeff, const std::string& base,
                        const std::string& loc, const std::vector<Int>& primes,
                        std::vector<ClaimReport>& out) {
    for (const Int& p : primes_for(t, primes)) {
        std::string suffix = "@" + std::string(t == CurveTag::J0 ? "j0" : "j1728") +
                             ",p=" + p.get_str();
        if (!OrderCase::admissible(t, p)) {
            emit_skip(out, base + suffix, "invariant sublattice determinants", loc,
                      inadmissible_reason(t, p));
            continue;
        }
        OrderCase c(t, p);
        NsLattice inv = invariant_sublattice(c);

        emit(out, base + "#rank" + suffix, "fixed sublattice of H' has rank 4", loc,
             Provenance::Paper, "4", std::to_string(inv.basis.size()));

        Int expected_h = Int(coeff) * int_pow(p, 8);
        std::string desc_h = "H-Gram det of (H')^<tau x tau> equals " +
                             std::to_string(coeff) + "p^8";
        if (t == CurveTag::J1728)
            desc_h += "; computed invariant basis recorded: " + kernel_basis_string(inv);
        emit(out, base + "#h-det" + suffix, desc_h, loc, Provenance::Paper,
             expected_h.get_str(), det_exact(inv.gram).get_str());

        Int expected_ns = Int(coeff) * int_pow(p, 4);
        emit(out, base + "#nsa-det" + suffix,
             "NS(A)-scaled Gram det equals " + std::to_string(coeff) + "p^4", loc,
             Provenance::Paper, expected_ns.get_str(),
             det_exact(inv.scaled_gram()).get_str());

        if (t == CurveTag::J0) {
            // the four hand-listed generators and the computed kernel span
            // the same lattice
            std::vector<HermElement> listed;
            listed.emplace_back(Int(0), p, QuatElement::zero(c));
            listed.emplace_back(p, Int(0), QuatElement::zero(c));
            listed.emplace_back(Int(0), Int(0), QuatElement::scalar(c, Rat(p)));
            listed.emplace_back(Int(0), Int(0),
                                QuatElement(c, {Rat(2 * p), Rat(0), Rat(p), Rat(0)}));

            std::vector<std::vector<Int>> kernel_coords, listed_coords;
            for (const auto& e : inv.basis)
                kernel_coords.push_back(*hprime_coordinates(e));
            bool mutual = true;
            for (const auto& e : listed) {
                auto coords = hprime_coordinates(e);
                if (!coords || !in_span(kernel_coords, *coords))
                    mutual = false;
                else
                    listed_coords.push_back(*coords);
            }
            if (mutual)
                for (const auto& v : kernel_coords)
                    mutual = mutual && in_span(listed_coords, v);
            emit(out, base + "#listed-basis" + suffix,
                 "the listed invariant generators and the computed kernel basis span the "
                 "same lattice (mutual containment)",
                 loc, Provenance::Paper, "equal lattices",
                 mutual ? "equal lattices" : "containment failed");
        }
    }

    // determinant as a polynomial in p, pinned by nine admissible primes
    const std::vector<long>& nodes = t == CurveTag::J0 ? kJ0Nodes : kJ1728Nodes;
    std::vector<std::pair<Rat, Rat>> pts_h, pts_ns;
    for (long p : nodes) {
        OrderCase c(t, Int(p));
        NsLattice inv = invariant_sublattice(c);
        pts_h.emplace_back(Rat(p), det_exact(inv.gram));
        pts_ns.emplace_back(Rat(p), det_exact(inv.scaled_gram()));
    }
    std::vector<Rat> expect_h(9, Rat(0)), expect_ns(5, Rat(0));
    expect_h[8] = coeff;
    expect_ns[4] = coeff;
    emit(out, base + "#poly",
         "degree-8 interpolation of the H-Gram determinant in p over nine admissible primes",
         loc, Provenance::Paper, polynomial_to_string(expect_h, "p"),
         polynomial_to_string(interpolate_polynomial(pts_h), "p"));
    emit(out, base + "#nsa-poly",
         "interpolation of the NS(A)-scaled determinant in p", loc, Provenance::Paper,
         polynomial_to_string(expect_ns, "p"),
         polynomial_to_string(interpolate_polynomial(pts_ns), "p"));
}

void run_thm_3_3(const std::vector<Int>& primes, std::vector<ClaimReport>& out) {
    run_invariant_case(CurveTag::J0, -3, "thm-3.3", "Theorem 3.3 proof", primes, out);
}

void run_thm_3_5(const std::vector<Int>& primes, std::vector<ClaimReport>& out) {
    run_invariant_case(CurveTag::J1728, -4, "thm-3.5", "section 3, order-4 case", primes, out);
}

// -------------------------------------------------------------- euler chains

void run_sec_5_1_euler(const std::vector<Int>&, std::vector<ClaimReport>& out) {
    using nlohmann::json;
    // A (abelian) -> blow up 9 fixed points -> blow up 18 -> quotient by the
    // order-3 action (fixed locus: 18 rational curves) -> contract 9 curves.
    auto gkm_chain = chain_from_json(json::parse(R"([
        {"op":"blow_up","points":9},
        {"op":"blow_up","points":18},
        {"op":"cyclic_quotient","degree":3,"fixed_euler":36},
        {"op":"contract","curves":9}
    ])"));
    SurfaceNode gkm = run_chain(SurfaceNode{"A", 0, ""}, gkm_chain);
    emit(out, "sec-5.1-euler#gkm",
         "the generalized Kummer chain ends at chi = 24 (a K3 surface)",
         "section 5.1.1", Provenance::Derived, "24", std::to_string(gkm.euler));

    auto y_chain = chain_from_json(json::parse(R"([
        {"op":"blow_up","points":9},
        {"op":"cyclic_cover","degree":3,"branch_euler":36},
        {"op":"contract","curves":18},
        {"op":"contract","curves":9}
    ])"));
    SurfaceNode y = run_chain(SurfaceNode{"X", 24, ""}, y_chain);
    emit(out, "sec-5.1-euler#y", "the triple-cover chain from X ends at chi(Y) = 0",
         "section 5.1.3", Provenance::Paper, "0", std::to_string(y.euler));
}

void run_sec_5_2_euler(const std::vector<Int>&, std::vector<ClaimReport>& out) {
    using nlohmann::json;
    auto w_chain = chain_from_json(json::parse(R"([
        {"op":"cyclic_cover","degree":2,"branch_euler":16},
        {"op":"contract","curves":8}
    ])"));
    SurfaceNode w = run_chain(SurfaceNode{"X", 24, ""}, w_chain);
    emit(out, "sec-5.2-euler#w",
         "double cover branched over 8 rational curves, then contracting 8 (-1)-curves, "
         "gives chi(W) = 24 (K_W = 0, so W is K3)",
         "section 5.2", Provenance::Paper, "24", std::to_string(w.euler));

    SurfaceNode ytilde = apply_step(w, CoverStep::cyclic_cover(2, 32));
    emit(out, "sec-5.2-euler#abelian-blowup",
         "the second double cover has chi = 16: the blow-up of an abelian surface in 16 "
         "points",
         "section 5.2", Provenance::Paper, "16", std::to_string(ytilde.euler));

    SurfaceNode y = apply_step(ytilde, CoverStep::contract(16));
    emit(out, "sec-5.2-euler#endpoint", "contracting the 16 curves lands on chi = 0",
         "section 5.2", Provenance::Derived, "0", std::to_string(y.euler));
}

void run_sec_5_1_selfint(const std::vector<Int>&, std::vector<ClaimReport>& out) {
    Rat d = image_self_intersection(-1, 3, 3);
    Rat f = image_self_intersection(-1, 3, 3);
    Rat g = image_self_intersection(-3, 1, 3);
    std::string got = "(" + d.get_str() + "," + f.get_str() + "," + g.get_str() + ")";
    emit(out, "sec-5.1-selfint",
         "projection-formula bookkeeping gives (D')^2 = -3, (F')^2 = -3, (G')^2 = -1",
         "section 5.1.1", Provenance::Paper, "(-3,-3,-1)", got);
}

// -------------------------------------------------------------------- ex-6.2

void run_ex_6_2(const std::vector<Int>&, std::vector<ClaimReport>& out) {
    const std::string loc = "Example 6.2";
    std::vector<IntegralLattice> parts;
    for (int i = 0; i < 16; ++i)
        parts.push_back(root_lattice(RootKind::A, 1));
    parts.push_back(rank1_lattice(Int(4)));
    IntegralLattice l = direct_sum(parts);
    emit(out, "ex-6.2#rank", "16 disjoint (-2)-curves plus a polarization of square 4",
         loc, Provenance::Paper, "17", std::to_string(l.rank()));
    emit(out, "ex-6.2#disc", "|disc| = 2^18", loc, Provenance::Paper,
         int_pow(Int(2), 18).get_str(), Int(abs(discriminant(l))).get_str());
    emit(out, "ex-6.2#sigma-bound", "Artin bound (22-17)/2 = 2 at p = 5", loc,
         Provenance::Paper, "2", std::to_string(artin_bound(l, Int(5))));
}

// ----------------------------------------------------------- thm-6.6-lattice

void run_thm_6_6(const std::vector<Int>&, std::vector<ClaimReport>& out) {
    const std::string loc = "Theorem 6.6 proof";
    IntegralLattice l = desingularization_lattice_ell5(false);
    emit(out, "thm-6.6-lattice#rank", "two A4 points and one A9 point resolve to rank 17",
         loc, Provenance::Paper, "17", std::to_string(l.rank()));
    Int disc = discriminant(l);
    emit(out, "thm-6.6-lattice#disc-abs",
         "|disc(A4+A4+A9)| = 250 (signed value " + disc.get_str() + ")", loc,
         Provenance::Paper, "250", Int(abs(disc)).get_str());
    emit(out, "thm-6.6-lattice#sigma-bound", "Artin bound 2 at p = 7", loc,
         Provenance::Paper, "2", std::to_string(artin_bound(l, Int(7))));

    IntegralLattice l2 = desingularization_lattice_ell5(true);
    emit(out, "thm-6.6-lattice#char2-rank",
         "adding the two line classes extends the span to rank 18", loc, Provenance::Paper,
         "18", std::to_string(l2.rank()));
    emit(out, "thm-6.6-lattice#char2-disc", "the extended lattice has disc -5", loc,
         Provenance::Paper, "-5", discriminant(l2).get_str());
    emit(out, "thm-6.6-lattice#char2-sigma-bound", "Artin bound 2 at p = 2", loc,
         Provenance::Paper, "2", std::to_string(artin_bound(l2, Int(2))));

    // attachment scan: candidates failing the determinant test are reported
    std::string scan;
    std::string winners;
    for (const auto& cand : ell5_char2_candidates()) {
        if (!scan.empty())
            scan += "; ";
        scan += "k=" + std::to_string(cand.k) + ": rank " + std::to_string(cand.span_rank) +
                ", disc " + cand.disc.get_str();
        if (cand.span_rank == 18 && cand.disc == -5) {
            if (!winners.empty())
                winners += ",";
            winners += "k=" + std::to_string(cand.k);
        }
    }
    emit(out, "thm-6.6-lattice#char2-scan",
         "second line attached to A9 component k, all candidates: " + scan +
         " -- the resolution forces k = 5 (branch contact (5,5))",
         loc, Provenance::Derived, "k=5", winners);
}

// ----------------------------------------------------------------- lemma-7.2

void run_lemma_7_2(const std::vector<Int>&, std::vector<ClaimReport>& out) {
    const std::string loc = "Lemma 7.2";
    struct Row {
        long ell;
        long e;
        long pg;
        bool k3;
    };
    const Row rows[] = {{3, 12, 0, false}, {5, 24, 1, true}, {7, 24, 1, true},
                        {11, 36, 2, false}};
    for (const Row& r : rows) {
        std::string at = "@l=" + std::to_string(r.ell);
        FiberConfig c = fiber_config_for_ell(r.ell, false);
        emit(out, "lemma-7.2#e" + at,
             "Euler number 3l+3 (l = 3 mod 4) or 3l+9 (l = 1 mod 4), summed over fibers",
             loc, Provenance::Paper, std::to_string(r.e), std::to_string(euler_total(c)));
        emit(out, "lemma-7.2#pg" + at, "geometric genus floor(l/4)", loc, Provenance::Paper,
             std::to_string(r.pg), std::to_string(geometric_genus_for_ell(r.ell)));
        emit(out, "lemma-7.2#k3" + at, "K3 exactly when the fiber sum is 24", loc,
             Provenance::Paper, r.k3 ? "true" : "false",
             euler_total(c) == 24 ? "true" : "false");
    }
    FiberConfig c2 = fiber_config_for_ell(5, true);
    emit(out, "lemma-7.2#char2-e@l=5",
         "in characteristic 2 the I_1 fibers are absorbed by wild ramification at "
         "infinity; the wild term keeps the total at 24",
         loc, Provenance::Derived, "24", std::to_string(euler_total(c2)));
}

// ------------------------------------------------------------------- thm-7.3

void run_thm_7_3(const std::vector<Int>&, std::vector<ClaimReport>& out) {
    const std::string loc = "Theorem 7.3 proof (p = 3 fixed)";
    FiberConfig config = fiber_config_for_ell(7, false);
    IntegralLattice triv = trivial_lattice(config);
    emit(out, "thm-7.3#trivial-disc",
         "trivial lattice U + A1 + A13 of the l = 7 fibration has disc -28", loc,
         Provenance::Derived, "-28", discriminant(triv).get_str());

    auto glue = two_torsion_glue_candidates(triv);
    std::string glue_desc = "two-torsion glue vectors found by exhaustive enumeration: ";
    for (std::size_t i = 0; i < glue.size(); ++i) {
        if (i)
            glue_desc += " | ";
        glue_desc += "(";
        for (std::size_t j = 0; j < glue[i].size(); ++j) {
            if (j)
                glue_desc += ",";
            glue_desc += glue[i][j].get_str();
        }
        glue_desc += ")";
    }
    emit(out, "thm-7.3#glue", glue_desc, loc, Provenance::Derived, "1",
         std::to_string(glue.size()));

    OverlatticeResult over = overlattice(triv, glue);
    emit(out, "thm-7.3#overlattice-rank", "the two-torsion overlattice keeps rank 16", loc,
         Provenance::Paper, "16", std::to_string(over.lattice.rank()));
    emit(out, "thm-7.3#overlattice-disc", "index-2 overlattice has disc -7", loc,
         Provenance::Paper, "-7", discriminant(over.lattice).get_str());
    emit(out, "thm-7.3#sigma-bound", "Artin bound (22-16)/2 = 3 at p = 3", loc,
         Provenance::Paper, "3", std::to_string(artin_bound(over.lattice, Int(3))));

    // seven sections P_j = tau^j P, pairwise meeting transversally once, all
    // meeting component 1 of I14 and the non-identity component of III
    std::vector<SectionData> sections;
    for (int j = 0; j < 7; ++j) {
        SectionData s;
        s.name = "P" + std::to_string(j);
        s.po = 0;
        s.meets[0] = 1; // III
        s.meets[1] = 1; // I14
        sections.push_back(s);
    }
    for (auto& s : sections)
        for (const auto& t : sections)
            if (s.name != t.name)
                s.cross[t.name] = 1;

    Rat h = height_pairing(sections[0], sections[0], config);
    emit(out, "thm-7.3#height", "h(P_j) = 4 - 13/14 - 1/2 = 18/7", loc, Provenance::Paper,
         "18/7", h.get_str());
    Rat cross = height_pairing(sections[0], sections[1], config);
    emit(out, "thm-7.3#cross", "<P_j,P_m> = 2 - 1 - 13/14 - 1/2 = -3/7", loc,
         Provenance::Paper, "-3/7", cross.get_str());

    RatMatrix gram = mw_gram(sections, config);
    emit(out, "thm-7.3#mw-rank", "the 7x7 height Gram matrix has rank 6", loc,
         Provenance::Paper, "6", std::to_string(rank_exact(gram)));

    bool minors_ok = true;
    Rat expected_minor = make_rat(Int(729), Int(7));
    for (std::size_t omit = 0; omit < 7; ++omit) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < 7; ++i)
            if (i != omit)
                idx.push_back(i);
        if (det_exact(gram.submatrix(idx, idx)) != expected_minor)
            minors_ok = false;
    }
    emit(out, "thm-7.3#mw-minor",
         "every 6x6 principal minor of the height Gram equals 3^6/7", loc,
         Provenance::Paper, "729/7", minors_ok ? "729/7" : "mismatch");

    SectionData torsion;
    torsion.name = "T";
    torsion.po = 0;
    torsion.meets[0] = 1; // III, non-identity
    torsion.meets[1] = 7; // I14, opposite component
    emit(out, "thm-7.3#torsion-height",
         "the two-torsion section (0,0) has height exactly 0 with the supplied "
         "component data (I14 component 7, III component 1)",
         loc, Provenance::Derived, "0",
         height_pairing(torsion, torsion, config).get_str());

    Rat ns = shioda_tate_disc(discriminant(triv), expected_minor, Int(2));
    emit(out, "thm-7.3#shioda-tate",
         "|disc Triv| * |disc MW| / torsion^2 = 28 * (729/7) / 4 = 729 = 3^6; the "
         "saturation of the seven-section lattice in the Mordell-Weil lattice is "
         "paper-trusted",
         loc, Provenance::Derived, "729", ns.get_str());
    auto sigma = artin_invariant_from_disc(-to_int(ns), Int(3));
    emit(out, "thm-7.3#sigma", "Artin invariant sigma = 3 at p = 3", loc, Provenance::Paper,
         "3", sigma ? std::to_string(*sigma) : "undefined");
}

// -------------------------------------------------------------------- ex-7.5

void run_ex_7_5(const std::vector<Int>&, std::vector<ClaimReport>& out) {
    const std::string loc = "Example 7.5 (p = 13 fixed)";
    FiberConfig base = make_config({KodairaFiber::make(FiberType::In, 1),
                                    KodairaFiber::make(FiberType::IIIStar),
                                    KodairaFiber::make(FiberType::II)},
                                   1);
    emit(out, "ex-7.5#base-euler", "rational base fibration III* + II + I1 sums to 12",
         loc, Provenance::Paper, "12", std::to_string(euler_total(base)));

    FiberConfig k3 = make_config({KodairaFiber::make(FiberType::In, 13),
                                  KodairaFiber::make(FiberType::IIIStar),
                                  KodairaFiber::make(FiberType::II)},
                                 2);
    emit(out, "ex-7.5#k3-euler",
         "after inseparable base change t = s^13, I1 becomes I13 and the sum is 24", loc,
         Provenance::Paper, "24", std::to_string(euler_total(k3)));

    IntegralLattice triv = trivial_lattice(k3);
    emit(out, "ex-7.5#rank", "U + A12 + E7 has rank 21", loc, Provenance::Paper, "21",
         std::to_string(triv.rank()));
    Int disc = discriminant(triv);
    emit(out, "ex-7.5#disc-abs", "|disc(U + A12 + E7)| = 26 (signed value " +
                                      disc.get_str() + ")",
         loc, Provenance::Paper, "26", Int(abs(disc)).get_str());
    emit(out, "ex-7.5#adjusted-bound",
         "adjusted Artin bound with e = ord_13(26) = 1 gives sigma <= 1", loc,
         Provenance::Paper, "1",
         std::to_string(artin_bound_adjusted(triv.rank(), disc, Int(13))));
}

// ---------------------------------------------------------- congruence-gates

void run_congruence_gates(const std::vector<Int>&, std::vector<ClaimReport>& out) {
    const std::string loc = "Theorems 1.2-1.3 congruence hypotheses";
    struct Gate {
        const char* suffix;
        const char* desc;
    };
    const long ps[] = {2, 3, 5, 7, 11, 13, 19, 23, 61, 109};
    // frozen residue outcomes: a = gate applies, e = excluded
    const char* sigma1 = "aaaaaeaaee";
    const char* sigma2 = "aaaaaaaaee";
    const char* sigma3 = "eaaeeeaeae";
    for (std::size_t i = 0; i < 10; ++i) {
        long p = ps[i];
        std::string at = "@p=" + std::to_string(p);
        auto word = [](char c) { return c == 'a' ? std::string("applies") : "excluded"; };

        bool g1 = p % 12 != 1;
        emit(out, "congruence-gates#sigma1" + at,
             "sigma = 1 gate: p != 1 mod 12 (residue " + std::to_string(p % 12) +
                 "); the Zariski property itself is a paper-trusted geometric step",
             loc, Provenance::Trivial, word(sigma1[i]), g1 ? "applies" : "excluded");

        bool g2 = p % 60 != 1 && p % 60 != 49;
        emit(out, "congruence-gates#sigma2" + at,
             "sigma = 2 gate: p != 1,49 mod 60 (residue " + std::to_string(p % 60) +
                 "); paper-trusted geometric step",
             loc, Provenance::Trivial, word(sigma2[i]), g2 ? "applies" : "excluded");

        bool g3 = p % 7 == 3 || p % 7 == 5;
        emit(out, "congruence-gates#sigma3" + at,
             "sigma = 3 gate: p = 3,5 mod 7 (residue " + std::to_string(p % 7) +
                 "); paper-trusted geometric step",
             loc, Provenance::Trivial, word(sigma3[i]), g3 ? "applies" : "excluded");
    }
}

} // namespace

const ClaimRegistry& ClaimRegistry::standard() {
    static const ClaimRegistry reg = [] {
        ClaimRegistry r;
        r.defs_ = {
            {"quat-assoc", true, &run_quat_assoc},
            {"order-disc", true, &run_order_disc},
            {"h-gram-det", true, &run_h_gram_det},
            {"hprime-det", true, &run_hprime_det},
            {"prop-2.3", true, &run_prop_2_3},
            {"thm-3.3", true, &run_thm_3_3},
            {"thm-3.5", true, &run_thm_3_5},
            {"sec-5.1-euler", false, &run_sec_5_1_euler},
            {"sec-5.1-selfint", false, &run_sec_5_1_selfint},
            {"sec-5.2-euler", false, &run_sec_5_2_euler},
            {"ex-6.2", false, &run_ex_6_2},
            {"thm-6.6-lattice", false, &run_thm_6_6},
            {"lemma-7.2", false, &run_lemma_7_2},
            {"thm-7.3", false, &run_thm_7_3},
            {"ex-7.5", false, &run_ex_7_5},
            {"congruence-gates", false, &run_congruence_gates},
        };
        return r;
    }();
    return reg;
}

std::vector<std::string> ClaimRegistry::ids() const {
    std::vector<std::string> out;
    out.reserve(defs_.size());
    for (const auto& d : defs_)
        out.push_back(d.id);
    return out;
}

bool ClaimRegistry::has_claim(const std::string& id) const {
    return std::any_of(defs_.begin(), defs_.end(),
                       [&](const Def& d) { return d.id == id; });
}

bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*')
        ++p;
    return p == pattern.size();
}

std::vector<ClaimReport> ClaimRegistry::run(const std::string& filter,
                                            const std::vector<Int>& prime_override) const {
    bool is_glob = filter.find_first_of("*?") != std::string::npos;
    if (!filter.empty() && !is_glob && !has_claim(filter))
        throw std::invalid_argument("unknown claim id '" + filter + "'");

    std::vector<ClaimReport> out;
    for (const auto& d : defs_) {
        if (!filter.empty()) {
            bool match = is_glob ? glob_match(filter, d.id) : filter == d.id;
            if (!match)
                continue;
        }
        d.runner(d.prime_parameterizable ? prime_override : std::vector<Int>{}, out);
    }
    return out;
}

std::vector<ClaimReport> run_claims(const std::string& filter,
                                    const std::vector<Int>& prime_override) {
    return ClaimRegistry::standard().run(filter, prime_override);
}

ReportFormat report_format_from_string(const std::string& s) {
    if (s == "json")
        return ReportFormat::Json;
    if (s == "markdown")
        return ReportFormat::Markdown;
    if (s == "tsv")
        return ReportFormat::Tsv;
    throw std::invalid_argument("unknown format '" + s + "' (expected json|markdown|tsv)");
}

std::string emit_report(const std::vector<ClaimReport>& reports, ReportFormat format) {
    if (format == ReportFormat::Json) {
        if (reports.empty())
            return "[]";
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            nlohmann::ordered_json j;
            j["id"] = r.id;
            j["description"] = r.description;
            j["paper_location"] = r.paper_location;
            j["expected"] = r.expected;
            j["computed"] = r.computed;
            j["status"] = to_string(r.status);
            j["provenance"] = to_string(r.provenance);
            arr.push_back(j);
        }
        return arr.dump(2);
    }
    if (format == ReportFormat::Markdown) {
        std::string s = "| id | status | expected | computed | provenance | location |\n"
                        "|---|---|---|---|---|---|\n";
        for (const auto& r : reports)
            s += "| " + r.id + " | " + to_string(r.status) + " | " + r.expected + " | " +
                 r.computed + " | " + to_string(r.provenance) + " | " + r.paper_location +
                 " |\n";
        return s;
    }
    std::string s = "id\tstatus\texpected\tcomputed\tprovenance\tlocation\tdescription\n";
    for (const auto& r : reports)
        s += r.id + "\t" + to_string(r.status) + "\t" + r.expected + "\t" + r.computed +
             "\t" + to_string(r.provenance) + "\t" + r.paper_location + "\t" +
             r.description + "\n";
    return s;
}

bool any_failed(const std::vector<ClaimReport>& reports) {
    return std::any_of(reports.begin(), reports.end(),
                       [](const ClaimReport& r) { return r.status == ClaimStatus::Fail; });
}

} // namespace zk3

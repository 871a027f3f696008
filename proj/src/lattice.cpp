#include <zk3/lattice.hpp>

#include <zk3/snf.hpp>

#include <stdexcept>

namespace zk3 {

IntegralLattice::IntegralLattice(std::string label, RatMatrix gram)
    : label_(std::move(label)), gram_(std::move(gram)) {
    if (!gram_.is_square() || !gram_.is_symmetric())
        throw std::invalid_argument("lattice Gram matrix must be square and symmetric");
    if (!gram_.is_integral())
        throw std::invalid_argument("lattice Gram matrix must be integral");
}

bool IntegralLattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram_.at(i, i).get_num() % 2 != 0)
            return false;
    return true;
}

namespace {

// Dynkin diagram edges, Bourbaki numbering (nodes 1..n).
std::vector<std::pair<int, int>> dynkin_edges(RootKind kind, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
    case RootKind::A:
        if (n < 1)
            throw std::invalid_argument("A_n needs n >= 1");
        for (int i = 1; i < n; ++i)
            edges.emplace_back(i, i + 1);
        break;
    case RootKind::D:
        if (n < 3)
            throw std::invalid_argument("D_n needs n >= 3");
        for (int i = 1; i + 2 < n; ++i)
            edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 2, n - 1);
        edges.emplace_back(n - 2, n);
        break;
    case RootKind::E6:
    case RootKind::E7:
    case RootKind::E8: {
        int m = kind == RootKind::E6 ? 6 : kind == RootKind::E7 ? 7 : 8;
        edges.emplace_back(1, 3);
        for (int i = 3; i < m; ++i)
            edges.emplace_back(i, i + 1);
        edges.emplace_back(2, 4);
        break;
    }
    }
    return edges;
}

int root_rank(RootKind kind, int n) {
    switch (kind) {
    case RootKind::A:
    case RootKind::D:
        return n;
    case RootKind::E6:
        return 6;
    case RootKind::E7:
        return 7;
    case RootKind::E8:
        return 8;
    }
    return 0;
}

std::string root_label(RootKind kind, int n) {
    switch (kind) {
    case RootKind::A:
        return "A" + std::to_string(n);
    case RootKind::D:
        return "D" + std::to_string(n);
    case RootKind::E6:
        return "E6";
    case RootKind::E7:
        return "E7";
    case RootKind::E8:
        return "E8";
    }
    return "?";
}

} // namespace

RatMatrix cartan_matrix(RootKind kind, int n) {
    int rank = root_rank(kind, n);
    RatMatrix c(rank, rank);
    for (int i = 0; i < rank; ++i)
        c.at(i, i) = 2;
    for (auto [a, b] : dynkin_edges(kind, n)) {
        c.at(a - 1, b - 1) = -1;
        c.at(b - 1, a - 1) = -1;
    }
    return c;
}

std::vector<int> highest_root_coefficients(RootKind kind, int n) {
    switch (kind) {
    case RootKind::A:
        return std::vector<int>(static_cast<std::size_t>(n), 1);
    case RootKind::D: {
        // alpha_1 + 2 alpha_2 + ... + 2 alpha_{n-2} + alpha_{n-1} + alpha_n
        std::vector<int> c(static_cast<std::size_t>(n), 2);
        c.front() = 1;
        c[static_cast<std::size_t>(n) - 2] = 1;
        c[static_cast<std::size_t>(n) - 1] = 1;
        return c;
    }
    case RootKind::E6:
        return {1, 2, 2, 3, 2, 1};
    case RootKind::E7:
        return {2, 2, 3, 4, 3, 2, 1};
    case RootKind::E8:
        return {2, 3, 4, 6, 5, 4, 3, 2};
    }
    return {};
}

IntegralLattice root_lattice(RootKind kind, int n) {
    RatMatrix gram = cartan_matrix(kind, n).scaled(Rat(-1));
    return IntegralLattice(root_label(kind, n), std::move(gram));
}

IntegralLattice hyperbolic_u() {
    RatMatrix g(2, 2);
    g.at(0, 1) = 1;
    g.at(1, 0) = 1;
    return IntegralLattice("U", std::move(g));
}

IntegralLattice rank1_lattice(const Int& m) {
    RatMatrix g(1, 1);
    g.at(0, 0) = Rat(m);
    return IntegralLattice("<" + m.get_str() + ">", std::move(g));
}

IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts) {
    std::size_t rank = 0;
    for (const auto& l : parts)
        rank += l.rank();
    RatMatrix g(rank, rank);
    std::string label;
    std::size_t off = 0;
    for (const auto& l : parts) {
        for (std::size_t i = 0; i < l.rank(); ++i)
            for (std::size_t j = 0; j < l.rank(); ++j)
                g.at(off + i, off + j) = l.gram().at(i, j);
        off += l.rank();
        if (!label.empty())
            label += " + ";
        label += l.label();
    }
    return IntegralLattice(label.empty() ? "0" : label, std::move(g));
}

Int discriminant(const IntegralLattice& l) {
    return to_int(det_exact(l.gram()));
}

Int DiscGroup::order() const {
    Int n(1);
    for (const Int& d : elementary_divisors)
        n *= d;
    return n;
}

DiscGroup discriminant_group(const IntegralLattice& l) {
    if (discriminant(l) == 0)
        throw std::domain_error("discriminant group of a singular Gram matrix");
    SnfResult snf = smith_normal_form(l.gram());
    DiscGroup g;
    for (const Int& d : snf.diag)
        if (d > 1)
            g.elementary_divisors.push_back(d);
    return g;
}

std::size_t p_length(const IntegralLattice& l, const Int& p) {
    std::size_t count = 0;
    for (const Int& d : discriminant_group(l).elementary_divisors)
        if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
            ++count;
    return count;
}

OverlatticeResult overlattice(const IntegralLattice& l,
                              const std::vector<std::vector<Rat>>& glue) {
    const std::size_t n = l.rank();
    const RatMatrix& g = l.gram();

    for (std::size_t k = 0; k < glue.size(); ++k) {
        const auto& v = glue[k];
        if (v.size() != n)
            throw std::invalid_argument("glue vector length mismatch");
        std::vector<Rat> gv = g.apply(v);
        for (std::size_t i = 0; i < n; ++i)
            if (!is_integral(gv[i]))
                throw std::domain_error("glue vector " + std::to_string(k) +
                                        " pairs non-integrally with basis vector " +
                                        std::to_string(i));
        Rat self(0);
        for (std::size_t i = 0; i < n; ++i)
            self += v[i] * gv[i];
        if (!is_integral(self) || to_int(self) % 2 != 0)
            throw std::domain_error("glue vector " + std::to_string(k) +
                                    " has self-pairing " + self.get_str() +
                                    ", which is not an even integer");
    }

    // Z-row-span of { e_1..e_n, glue } via SNF of the common-denominator lift.
    Int den(1);
    for (const auto& v : glue)
        for (const Rat& x : v) {
            Int d = x.get_den();
            Int l2 = lcm(den, d);
            den = l2;
        }
    RatMatrix stacked(n + glue.size(), n);
    for (std::size_t i = 0; i < n; ++i)
        stacked.at(i, i) = Rat(den);
    for (std::size_t k = 0; k < glue.size(); ++k)
        for (std::size_t j = 0; j < n; ++j)
            stacked.at(n + k, j) = glue[k][j] * Rat(den);

    SnfResult snf = smith_normal_form(stacked);
    RatMatrix rinv = unimodular_inverse(snf.right);
    RatMatrix basis(n, n); // rows: new basis in old coordinates
    for (std::size_t t = 0; t < n; ++t) {
        if (snf.diag[t] == 0)
            throw std::logic_error("overlattice basis degenerated");
        for (std::size_t j = 0; j < n; ++j)
            basis.at(t, j) = Rat(snf.diag[t]) * rinv.at(t, j) / Rat(den);
    }

    RatMatrix new_gram = basis * g * basis.transpose();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!is_integral(new_gram.at(i, j)))
                throw std::domain_error("induced Gram is non-integral at pair (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");

    Rat bdet = det_exact(basis);
    if (bdet == 0)
        throw std::logic_error("overlattice basis is singular");
    Rat index = Rat(1) / abs(bdet);
    if (!is_integral(index))
        throw std::logic_error("overlattice index is not integral");

    return OverlatticeResult{IntegralLattice(l.label() + "^glue", std::move(new_gram)),
                             to_int(index)};
}

std::vector<std::vector<Rat>> two_torsion_glue_candidates(const IntegralLattice& l) {
    const std::size_t n = l.rank();
    if (n > 24)
        throw std::invalid_argument("two-torsion enumeration limited to rank <= 24");
    if (discriminant(l) == 0)
        throw std::domain_error("two-torsion search needs a nonsingular Gram matrix");

    std::vector<std::vector<Int>> g(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g[i][j] = l.gram().at(i, j).get_num();

    std::vector<std::vector<Rat>> found;
    std::vector<Int> u(n);
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i)
            u[i] = (mask >> i) & 1ul;
        // x = u/2 must pair integrally with every basis vector
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Int dot(0);
            for (std::size_t j = 0; j < n; ++j)
                if (u[j] != 0)
                    dot += g[i][j];
            ok = dot % 2 == 0;
        }
        if (!ok)
            continue;
        Int self(0);
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (u[j] != 0)
                    self += g[i][j];
        }
        if (self % 8 != 0) // (u/2)^2 must be an even integer
            continue;
        std::vector<Rat> x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = make_rat(u[i], Int(2));
        found.push_back(std::move(x));
    }
    return found;
}

bool is_divisible(const IntegralLattice& l, const std::vector<Int>& v, const Int& k) {
    if (v.size() != l.rank())
        throw std::invalid_argument("vector length does not match lattice rank");
    if (k == 0)
        throw std::invalid_argument("divisibility by zero");
    for (const Int& x : v)
        if (!mpz_divisible_p(x.get_mpz_t(), k.get_mpz_t()))
            return false;
    return true;
}

unsigned long artin_bound(const IntegralLattice& l, const Int& p) {
    if (l.rank() > 22)
        throw std::invalid_argument("rank exceeds 22");
    Int disc = discriminant(l);
    if (disc == 0)
        throw std::domain_error("singular lattice");
    Int g = gcd(disc, p);
    if (g != 1)
        throw std::domain_error("discriminant is divisible by p; use artin_bound_adjusted");
    return (22 - l.rank()) / 2;
}

unsigned long artin_bound_adjusted(unsigned long rank, const Int& disc, const Int& p) {
    if (rank > 22)
        throw std::invalid_argument("rank exceeds 22");
    if (disc == 0)
        throw std::domain_error("singular lattice");
    unsigned long e = ord_p(disc, p);
    long n = static_cast<long>(rank);
    long best = 0;
    for (unsigned long t = 0; t <= e; ++t) {
        long val = (22 - n) * (1 + 2 * static_cast<long>(t)) - 2 * static_cast<long>(t);
        if (t == 0 || val > best)
            best = val;
    }
    long bound2 = static_cast<long>(e) + best;
    if (bound2 < 0)
        return 0;
    return static_cast<unsigned long>(bound2) / 2;
}

IntegralLattice lattice_from_json(const nlohmann::json& j) {
    std::string label = j.value("label", std::string("lattice"));
    if (!j.contains("gram") || !j["gram"].is_array())
        throw std::invalid_argument("lattice JSON needs a \"gram\" array");
    std::vector<std::vector<Rat>> rows;
    for (const auto& row : j["gram"]) {
        std::vector<Rat> r;
        for (const auto& e : row) {
            if (e.is_number_integer())
                r.emplace_back(Rat(static_cast<long>(e.get<long long>())));
            else if (e.is_string())
                r.push_back(rat_from_string(e.get<std::string>()));
            else
                throw std::invalid_argument("gram entries must be integers");
        }
        rows.push_back(std::move(r));
    }
    RatMatrix gram = RatMatrix::from_rows(rows);
    if (j.contains("rank") && j["rank"].get<std::size_t>() != gram.rows())
        throw std::invalid_argument("declared rank does not match gram size");
    return IntegralLattice(std::move(label), std::move(gram));
}

nlohmann::json lattice_to_json(const IntegralLattice& l) {
    nlohmann::json j;
    j["label"] = l.label();
    j["rank"] = l.rank();
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < l.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < l.rank(); ++k) {
            const Int& e = l.gram().at(i, k).get_num();
            if (e.fits_slong_p())
                row.push_back(e.get_si());
            else
                row.push_back(e.get_str());
        }
        rows.push_back(row);
    }
    j["gram"] = rows;
    return j;
}

} // namespace zk3

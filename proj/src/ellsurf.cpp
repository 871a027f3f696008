#include <zk3/ellsurf.hpp>

#include <zk3/snf.hpp>

#include <stdexcept>

namespace zk3 {

KodairaFiber KodairaFiber::make(FiberType type, int n) {
    switch (type) {
    case FiberType::In:
        if (n < 1)
            throw std::invalid_argument("I_n needs n >= 1");
        break;
    case FiberType::InStar:
        if (n < 0)
            throw std::invalid_argument("I_n* needs n >= 0");
        break;
    default:
        n = 0;
        break;
    }
    return KodairaFiber(type, n);
}

long KodairaFiber::euler() const {
    switch (type_) {
    case FiberType::In:
        return n_;
    case FiberType::InStar:
        return n_ + 6;
    case FiberType::II:
        return 2;
    case FiberType::III:
        return 3;
    case FiberType::IV:
        return 4;
    case FiberType::IVStar:
        return 8;
    case FiberType::IIIStar:
        return 9;
    case FiberType::IIStar:
        return 10;
    }
    return 0;
}

int KodairaFiber::components() const {
    switch (type_) {
    case FiberType::In:
        return n_;
    case FiberType::InStar:
        return n_ + 5;
    case FiberType::II:
        return 1;
    case FiberType::III:
        return 2;
    case FiberType::IV:
        return 3;
    case FiberType::IVStar:
        return 7;
    case FiberType::IIIStar:
        return 8;
    case FiberType::IIStar:
        return 9;
    }
    return 0;
}

std::optional<std::pair<RootKind, int>> KodairaFiber::root() const {
    switch (type_) {
    case FiberType::In:
        if (n_ >= 2)
            return std::make_pair(RootKind::A, n_ - 1);
        return std::nullopt;
    case FiberType::InStar:
        return std::make_pair(RootKind::D, n_ + 4);
    case FiberType::II:
        return std::nullopt;
    case FiberType::III:
        return std::make_pair(RootKind::A, 1);
    case FiberType::IV:
        return std::make_pair(RootKind::A, 2);
    case FiberType::IVStar:
        return std::make_pair(RootKind::E6, 0);
    case FiberType::IIIStar:
        return std::make_pair(RootKind::E7, 0);
    case FiberType::IIStar:
        return std::make_pair(RootKind::E8, 0);
    }
    return std::nullopt;
}

std::vector<int> KodairaFiber::simple_components() const {
    std::vector<int> out{0};
    if (type_ == FiberType::In) {
        for (int i = 1; i < n_; ++i)
            out.push_back(i);
        return out;
    }
    auto r = root();
    if (!r)
        return out;
    std::vector<int> mult = highest_root_coefficients(r->first, r->second);
    for (std::size_t i = 0; i < mult.size(); ++i)
        if (mult[i] == 1)
            out.push_back(static_cast<int>(i) + 1);
    return out;
}

std::string KodairaFiber::name() const {
    switch (type_) {
    case FiberType::In:
        return "I" + std::to_string(n_);
    case FiberType::InStar:
        return "I" + std::to_string(n_) + "*";
    case FiberType::II:
        return "II";
    case FiberType::IIStar:
        return "II*";
    case FiberType::III:
        return "III";
    case FiberType::IIIStar:
        return "III*";
    case FiberType::IV:
        return "IV";
    case FiberType::IVStar:
        return "IV*";
    }
    return "?";
}

Rat contribution(const KodairaFiber& fiber, int i, int j) {
    if (i < 0 || j < 0 || i >= fiber.components() || j >= fiber.components())
        throw std::invalid_argument("component index out of range for fiber " + fiber.name());
    if (i == 0 || j == 0)
        return Rat(0);
    if (fiber.type() == FiberType::In) {
        int n = fiber.n();
        int a = std::min(i, j), b = std::max(i, j);
        return make_rat(Int(a) * Int(n - b), Int(n));
    }
    auto r = fiber.root();
    if (!r)
        throw std::invalid_argument("fiber " + fiber.name() + " has a single component");
    RatMatrix cartan = cartan_matrix(r->first, r->second);
    std::vector<Rat> e(cartan.rows(), Rat(0));
    e[static_cast<std::size_t>(j) - 1] = 1;
    auto x = solve_rational(cartan, e);
    return (*x)[static_cast<std::size_t>(i) - 1];
}

FiberConfig make_config(std::vector<KodairaFiber> fibers, long chi) {
    FiberConfig c{std::move(fibers), chi};
    if (euler_total(c) != 12 * chi)
        throw std::domain_error("fiber Euler numbers sum to " +
                                std::to_string(euler_total(c)) + ", expected " +
                                std::to_string(12 * chi));
    return c;
}

FiberConfig fiber_config_for_ell(long ell, bool char2) {
    if (ell < 3 || ell % 2 == 0)
        throw std::invalid_argument("need odd ell >= 3");
    std::vector<KodairaFiber> fibers;
    KodairaFiber infinity = KodairaFiber::make(
        ell % 4 == 3 ? FiberType::III : FiberType::IIIStar);
    if (char2)
        infinity.set_wild(ell); // the l fibers I_1 merge into infinity
    fibers.push_back(infinity);
    fibers.push_back(KodairaFiber::make(FiberType::In, static_cast<int>(2 * ell)));
    if (!char2)
        for (long i = 0; i < ell; ++i)
            fibers.push_back(KodairaFiber::make(FiberType::In, 1));
    long e = ell % 4 == 3 ? 3 * ell + 3 : 3 * ell + 9;
    return make_config(std::move(fibers), e / 12);
}

long euler_total(const FiberConfig& c) {
    long total = 0;
    for (const auto& f : c.fibers)
        total += f.euler() + f.wild();
    return total;
}

long geometric_genus_for_ell(long ell) {
    if (ell < 3 || ell % 2 == 0)
        throw std::invalid_argument("need odd ell >= 3");
    return ell / 4;
}

IntegralLattice trivial_lattice(const FiberConfig& c) {
    std::vector<IntegralLattice> parts{hyperbolic_u()};
    for (const auto& f : c.fibers)
        if (auto r = f.root())
            parts.push_back(root_lattice(r->first, r->second));
    return direct_sum(parts);
}

SectionData SectionData::zero(std::string name) {
    SectionData s;
    s.name = std::move(name);
    s.zero_section = true;
    return s;
}

namespace {

long cross_number(const SectionData& p, const SectionData& q) {
    if (p.zero_section)
        return q.po;
    if (q.zero_section)
        return p.po;
    auto it = p.cross.find(q.name);
    auto jt = q.cross.find(p.name);
    if (it != p.cross.end() && jt != q.cross.end() && it->second != jt->second)
        throw std::invalid_argument("inconsistent intersection numbers between " + p.name +
                                    " and " + q.name);
    if (it != p.cross.end())
        return it->second;
    if (jt != q.cross.end())
        return jt->second;
    throw std::invalid_argument("missing intersection number between " + p.name + " and " +
                                q.name);
}

int component_met(const SectionData& s, std::size_t fiber_index) {
    auto it = s.meets.find(fiber_index);
    return it == s.meets.end() ? 0 : it->second;
}

// P.O; the zero section carries O.O = -chi.
long po_of(const SectionData& s, const FiberConfig& c) {
    if (s.zero_section) {
        if (!s.meets.empty())
            throw std::invalid_argument(
                "the zero section meets only identity components");
        return -c.chi;
    }
    if (s.po < 0)
        throw std::invalid_argument("(P.O) must be nonnegative");
    return s.po;
}

} // namespace

Rat height_pairing(const SectionData& p, const SectionData& q, const FiberConfig& c) {
    long ppo = po_of(p, c), qpo = po_of(q, c);
    bool same = p.name == q.name;
    Rat total = same ? Rat(2 * c.chi + 2 * ppo)
                     : Rat(c.chi + ppo + qpo - cross_number(p, q));
    for (std::size_t f = 0; f < c.fibers.size(); ++f)
        total -= contribution(c.fibers[f], component_met(p, f), component_met(q, f));
    return total;
}

RatMatrix mw_gram(const std::vector<SectionData>& sections, const FiberConfig& c) {
    RatMatrix g(sections.size(), sections.size());
    for (std::size_t i = 0; i < sections.size(); ++i)
        for (std::size_t j = i; j < sections.size(); ++j) {
            Rat v = height_pairing(sections[i], sections[j], c);
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    return g;
}

Rat shioda_tate_disc(const Int& trivial_disc, const Rat& mw_disc, const Int& torsion_order) {
    if (torsion_order < 1)
        throw std::invalid_argument("torsion order must be >= 1");
    Rat r = Rat(abs(trivial_disc)) * abs(mw_disc) / Rat(torsion_order * torsion_order);
    return r;
}

namespace {

// Graph lattice of (-2)-curves: two A4 chains, an A9 chain, line 1 meeting
// one end of each chain, line 2 meeting component k of the A9 chain.
RatMatrix ell5_char2_gram(int k) {
    const std::size_t n = 19; // 4 + 4 + 9 + 2
    const std::size_t c0 = 0, d0 = 4, e0 = 8, l1 = 17, l2 = 18;
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        g.at(i, i) = -2;
    auto link = [&g](std::size_t a, std::size_t b) {
        g.at(a, b) = 1;
        g.at(b, a) = 1;
    };
    for (std::size_t i = 0; i < 3; ++i)
        link(c0 + i, c0 + i + 1);
    for (std::size_t i = 0; i < 3; ++i)
        link(d0 + i, d0 + i + 1);
    for (std::size_t i = 0; i < 8; ++i)
        link(e0 + i, e0 + i + 1);
    link(l1, c0);
    link(l1, d0);
    link(l1, e0);
    link(l2, e0 + static_cast<std::size_t>(k) - 1);
    return g;
}

// Rank of the span and discriminant of its quotient by the radical.
std::pair<std::size_t, Int> span_rank_and_disc(const RatMatrix& gram) {
    const std::size_t n = gram.rows();
    std::vector<std::vector<Int>> radical = integer_kernel(gram);
    const std::size_t r = radical.size();
    if (r == 0)
        return {n, to_int(det_exact(gram))};

    RatMatrix k(n, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < n; ++i)
            k.at(i, j) = Rat(radical[j][i]);
    SnfResult snf = smith_normal_form(k);
    for (const Int& d : snf.diag)
        if (d != 1)
            throw std::logic_error("radical basis not saturated");
    RatMatrix linv = unimodular_inverse(snf.left);
    // columns r..n-1 of linv complete the radical to a basis of Z^n
    RatMatrix complement(n, n - r);
    for (std::size_t j = r; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            complement.at(i, j - r) = linv.at(i, j);
    RatMatrix q = complement.transpose() * gram * complement;
    return {n - r, to_int(det_exact(q))};
}

} // namespace

std::vector<Ell5Candidate> ell5_char2_candidates() {
    std::vector<Ell5Candidate> out;
    for (int k = 1; k <= 9; ++k) {
        auto [rank, disc] = span_rank_and_disc(ell5_char2_gram(k));
        out.push_back(Ell5Candidate{k, rank, disc});
    }
    return out;
}

IntegralLattice desingularization_lattice_ell5(bool char2) {
    if (!char2)
        return direct_sum({root_lattice(RootKind::A, 4), root_lattice(RootKind::A, 4),
                           root_lattice(RootKind::A, 9)});

    RatMatrix g19 = ell5_char2_gram(5);
    const std::size_t n = 19;
    std::vector<std::vector<Int>> radical = integer_kernel(g19);
    if (radical.size() != 1)
        throw std::logic_error("line-extended span has corank " +
                               std::to_string(radical.size()) + ", expected 1");
    RatMatrix k(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        k.at(i, 0) = Rat(radical[0][i]);
    SnfResult snf = smith_normal_form(k);
    RatMatrix linv = unimodular_inverse(snf.left);
    RatMatrix complement(n, n - 1);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            complement.at(i, j - 1) = linv.at(i, j);
    RatMatrix gram = complement.transpose() * g19 * complement;
    return IntegralLattice("A4 + A4 + A9 + lines", std::move(gram));
}

nlohmann::json KodairaFiber::to_json() const {
    nlohmann::json j;
    j["type"] = name();
    if (wild_ != 0)
        j["wild"] = wild_;
    return j;
}

KodairaFiber KodairaFiber::from_json(const nlohmann::json& j) {
    std::string t = j.at("type").get<std::string>();
    bool star = !t.empty() && t.back() == '*';
    if (star)
        t.pop_back();
    KodairaFiber f = [&] {
        if (t == "II")
            return make(star ? FiberType::IIStar : FiberType::II);
        if (t == "III")
            return make(star ? FiberType::IIIStar : FiberType::III);
        if (t == "IV")
            return make(star ? FiberType::IVStar : FiberType::IV);
        if (t.size() > 1 && t.front() == 'I')
            return make(star ? FiberType::InStar : FiberType::In, std::stoi(t.substr(1)));
        throw std::invalid_argument("unknown fiber type '" + t + "'");
    }();
    f.set_wild(j.value("wild", 0l));
    return f;
}

nlohmann::json FiberConfig::to_json() const {
    nlohmann::json j;
    j["chi"] = chi;
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : fibers)
        fs.push_back(f.to_json());
    j["fibers"] = fs;
    return j;
}

FiberConfig FiberConfig::from_json(const nlohmann::json& j) {
    std::vector<KodairaFiber> fibers;
    for (const auto& f : j.at("fibers"))
        fibers.push_back(KodairaFiber::from_json(f));
    return make_config(std::move(fibers), j.at("chi").get<long>());
}

nlohmann::json SectionData::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["po"] = po;
    if (zero_section)
        j["zero_section"] = true;
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [f, comp] : meets)
        m[std::to_string(f)] = comp;
    j["meets"] = m;
    nlohmann::json x = nlohmann::json::object();
    for (const auto& [other, v] : cross)
        x[other] = v;
    j["cross"] = x;
    return j;
}

SectionData SectionData::from_json(const nlohmann::json& j) {
    SectionData s;
    s.name = j.at("name").get<std::string>();
    s.po = j.value("po", 0l);
    s.zero_section = j.value("zero_section", false);
    if (j.contains("meets"))
        for (auto it = j["meets"].begin(); it != j["meets"].end(); ++it)
            s.meets[std::stoul(it.key())] = it.value().get<int>();
    if (j.contains("cross"))
        for (auto it = j["cross"].begin(); it != j["cross"].end(); ++it)
            s.cross[it.key()] = it.value().get<long>();
    return s;
}

} // namespace zk3

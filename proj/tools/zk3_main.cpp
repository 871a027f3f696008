// zk3 -- exact-arithmetic reproduction harness for supersingular K3 / abelian
// surface lattice computations.
//
//   zk3 repro [--claim <id-glob>] [--prime <p>...] [--format json|markdown|tsv]
//             [--out <path>]
//   zk3 lattice disc <file.json>
//   zk3 quat mul --case j0|j1728 --p <prime> <elem> <elem>
//
// Exit codes: 0 all pass, 1 any claim failed, 2 usage error.

#include <zk3/claims.hpp>
#include <zk3/lattice.hpp>
#include <zk3/quat.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

zk3::QuatElement parse_element(const zk3::OrderCase& c, const std::string& text) {
    std::array<zk3::Rat, 4> coords;
    std::stringstream ss(text);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= 4)
            throw std::invalid_argument("element needs exactly 4 coordinates");
        coords[static_cast<std::size_t>(i++)] = zk3::rat_from_string(part);
    }
    if (i != 4)
        throw std::invalid_argument("element needs exactly 4 coordinates");
    return zk3::QuatElement(c, coords);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact reproduction harness for quaternion-order and K3 lattice computations"};
    app.require_subcommand(1);

    // repro
    auto* repro = app.add_subcommand("repro", "run the claim registry");
    std::string claim_filter;
    std::vector<std::string> prime_args;
    std::string format = "json";
    std::string out_path;
    repro->add_option("--claim", claim_filter, "claim id or glob (default: all)");
    repro->add_option("--prime", prime_args, "override prime set for prime-parameterizable claims");
    repro->add_option("--format", format, "json|markdown|tsv")->default_val("json");
    repro->add_option("--out", out_path, "write the report to a file instead of stdout");

    // lattice disc
    auto* lattice = app.add_subcommand("lattice", "lattice utilities");
    lattice->require_subcommand(1);
    auto* disc = lattice->add_subcommand("disc", "discriminant of a lattice JSON file");
    std::string lattice_path;
    disc->add_option("file", lattice_path, "JSON file {label, rank, gram}")->required();

    // quat mul
    auto* quat = app.add_subcommand("quat", "quaternion order utilities");
    quat->require_subcommand(1);
    auto* mul = quat->add_subcommand("mul", "multiply two order elements");
    std::string case_name;
    std::string prime_str;
    std::vector<std::string> elems;
    mul->add_option("--case", case_name, "j0 or j1728")->required();
    mul->add_option("--p", prime_str, "prime")->required();
    mul->add_option("elements", elems, "two comma-separated rational 4-tuples")
        ->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (repro->parsed()) {
            std::vector<zk3::Int> primes;
            for (const std::string& s : prime_args) {
                zk3::Int p(s);
                if (!zk3::is_prime(p)) {
                    std::cerr << "error: " << s << " is not prime\n";
                    return 2;
                }
                primes.push_back(p);
            }
            std::vector<zk3::ClaimReport> reports;
            try {
                reports = zk3::run_claims(claim_filter, primes);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
            std::string text =
                zk3::emit_report(reports, zk3::report_format_from_string(format));
            if (out_path.empty()) {
                std::cout << text;
                if (!text.empty() && text.back() != '\n')
                    std::cout << "\n";
            } else {
                std::ofstream f(out_path);
                if (!f) {
                    std::cerr << "error: cannot write " << out_path << "\n";
                    return 2;
                }
                f << text;
            }
            return zk3::any_failed(reports) ? 1 : 0;
        }

        if (disc->parsed()) {
            std::ifstream f(lattice_path);
            if (!f) {
                std::cerr << "error: cannot read " << lattice_path << "\n";
                return 2;
            }
            nlohmann::json j = nlohmann::json::parse(f);
            zk3::IntegralLattice l = zk3::lattice_from_json(j);
            std::cout << "label: " << l.label() << "\n";
            std::cout << "rank: " << l.rank() << "\n";
            std::cout << "disc: " << zk3::to_string(zk3::discriminant(l)) << "\n";
            std::cout << "disc_group: [";
            auto g = zk3::discriminant_group(l);
            for (std::size_t i = 0; i < g.elementary_divisors.size(); ++i) {
                if (i)
                    std::cout << ",";
                std::cout << g.elementary_divisors[i].get_str();
            }
            std::cout << "]\n";
            return 0;
        }

        if (mul->parsed()) {
            zk3::CurveTag tag;
            if (case_name == "j0")
                tag = zk3::CurveTag::J0;
            else if (case_name == "j1728")
                tag = zk3::CurveTag::J1728;
            else {
                std::cerr << "error: --case must be j0 or j1728\n";
                return 2;
            }
            zk3::OrderCase c(tag, zk3::Int(prime_str));
            zk3::QuatElement x = parse_element(c, elems[0]);
            zk3::QuatElement y = parse_element(c, elems[1]);
            std::cout << zk3::quat_mul(x, y).str() << "\n";
            return 0;
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

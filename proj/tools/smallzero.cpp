// smallzero.cpp
// Command-line front end: heights, constructive zero search with
// certificates, certificate verification, bounded enumeration, constants
// and randomized sweeps. Exit codes: 0 all certified, 1 usage/parse error,
// 2 hypothesis-failure diagnostic, 3 inconclusive at the precision cap.

#include "smallzeros/parser.hpp"
#include "smallzeros/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace smallzeros;

namespace {

int write_report(const ordered_json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        if (!out) {
            std::cerr << "cannot open " << path << "\n";
            return 1;
        }
        out << j.dump(2) << "\n";
    }
    return 0;
}

std::vector<Rat> parse_vector(const std::string& text) {
    std::vector<Rat> v;
    std::stringstream ss(text);
    std::string e;
    while (std::getline(ss, e, ',')) {
        size_t a = e.find_first_not_of(" \t");
        size_t b = e.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("vector: empty entry");
        v.push_back(parse_rat(e.substr(a, b - a + 1)));
    }
    if (v.empty()) throw std::invalid_argument("vector: empty");
    return v;
}

int verdict_exit(Cmp c) { return c == Cmp::LE_certified ? 0 : 3; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"small-height zeros of polynomials over the algebraic numbers"};
    app.require_subcommand(1);

    std::string json_path;
    long precision_bits = default_precision_cap();
    std::uint64_t seed = 0;
    app.add_option("--json", json_path, "write the JSON report to this path");
    app.add_option("--precision-bits", precision_bits, "refinement cap for comparisons");
    app.add_option("--seed", seed, "seed for randomized commands");

    // height <vec|poly|matrix> <value>
    auto* height_cmd = app.add_subcommand("height", "height of a vector, polynomial or matrix");
    std::string height_kind, height_value;
    height_cmd->add_option("kind", height_kind, "vec|poly|matrix")->required();
    height_cmd->add_option("value", height_value, "comma vector, expression, or row matrix")
        ->required();

    // find <method> <poly> [--matrix M]
    auto* find_cmd = app.add_subcommand("find", "construct a small-height zero with certificate");
    std::string method, poly_text, matrix_text;
    find_cmd->add_option("method", method, "basic|nonzero|all-nonzero|torus|inhom")->required();
    find_cmd->add_option("poly", poly_text, "polynomial expression")->required();
    find_cmd->add_option("--matrix", matrix_text, "rows ';'-separated, entries ','-separated");

    auto* verify_cmd = app.add_subcommand("verify", "re-verify a certificate file");
    std::string cert_path;
    verify_cmd->add_option("cert", cert_path, "certificate JSON path")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "rational projective zeros up to a height cap");
    std::string enum_poly, enum_cap{"10"};
    enum_cmd->add_option("poly", enum_poly, "homogeneous polynomial")->required();
    enum_cmd->add_option("--cap", enum_cap, "height cap (rational)");

    auto* sweep_cmd = app.add_subcommand("sweep", "randomized bound-verification sweep");
    std::string config_path;
    sweep_cmd->add_option("--config", config_path, "sweep config JSON")->required();

    auto* const_cmd = app.add_subcommand("constants", "evaluate the bound constants C1, C2");
    unsigned cn = 0, cm = 0;
    const_cmd->add_option("--n", cn, "number of variables")->required();
    const_cmd->add_option("--m", cm, "degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*height_cmd) {
            HeightValue h;
            if (height_kind == "vec")
                h = height_rational_vector(parse_vector(height_value));
            else if (height_kind == "poly")
                h = height_poly(parse_poly(height_value));
            else if (height_kind == "matrix")
                h = height_matrix(parse_matrix(height_value));
            else
                throw std::invalid_argument("height: kind must be vec|poly|matrix");
            ordered_json j{{"kind", height_kind},
                           {"value", height_value},
                           {"height", height_to_json(h, 128)},
                           {"approx", h.approx()}};
            return write_report(j, json_path);
        }

        if (*find_cmd) {
            MultiPoly f = parse_poly(poly_text);
            ZeroCertificate cert;
            if (method == "basic") {
                cert = basic_small_zero(f, precision_bits);
            } else if (method == "nonzero") {
                cert = nonzero_coord_zero(f, precision_bits);
            } else if (method == "all-nonzero") {
                cert = all_nonzero_zero(f, precision_bits);
            } else if (method == "torus") {
                if (matrix_text.empty())
                    throw std::invalid_argument("find torus: --matrix is required");
                QMatrix a = parse_matrix(matrix_text);
                if (a.nrows() > f.nvars()) f = parse_poly(poly_text, a.nrows());
                cert = torus_zero(f, a, precision_bits);
            } else if (method == "inhom") {
                cert = inhomogeneous_zero(f, precision_bits);
            } else {
                throw std::invalid_argument("find: unknown method " + method);
            }
            int rc = write_report(certificate_to_json(cert), json_path);
            if (rc) return rc;
            return verdict_exit(cert.bound_verdict);
        }

        if (*verify_cmd) {
            std::ifstream in(cert_path);
            if (!in) {
                std::cerr << "cannot open " << cert_path << "\n";
                return 1;
            }
            ordered_json j = ordered_json::parse(in);
            ZeroCertificate cert = certificate_from_json(j);
            VerifyReport rep = verify_certificate(cert, precision_bits);
            int rc = write_report(verify_report_to_json(rep), json_path);
            if (rc) return rc;
            return rep.all_ok() ? 0 : 3;
        }

        if (*enum_cmd) {
            MultiPoly f = parse_poly(enum_poly);
            Rat cap = parse_rat(enum_cap);
            auto zeros = enumerate_rational_zeros(f, cap);
            ordered_json arr = ordered_json::array();
            for (const auto& z : zeros) {
                ordered_json pt = ordered_json::array();
                for (const Int& v : z.point) pt.push_back(v.get_str());
                arr.push_back(
                    ordered_json{{"point", pt}, {"height_sq", rat_str(z.height_sq)}});
            }
            ordered_json j{{"poly", print_poly(f)}, {"cap", rat_str(cap)}, {"zeros", arr}};
            return write_report(j, json_path);
        }

        if (*sweep_cmd) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "cannot open " << config_path << "\n";
                return 1;
            }
            ordered_json cj = ordered_json::parse(in);
            if (seed != 0) cj["seed"] = seed;
            if (precision_bits != default_precision_cap()) cj["precision_bits"] = precision_bits;
            RunConfig config = RunConfig::from_json(cj);
            SweepOutcome outcome = run_sweep(config);
            int rc = write_report(outcome.report, json_path);
            if (rc) return rc;
            return outcome.exit_code;
        }

        if (*const_cmd) {
            ConstantEnclosure c1 = constant_c1(cn, cm);
            ConstantEnclosure c2 = constant_c2(cn, cm);
            DyInterval e1 = c1.enclosure(128), e2 = c2.enclosure(128);
            ordered_json j{{"n", cn},
                           {"m", cm},
                           {"c1",
                            ordered_json{{"lo", e1.lo.str()},
                                         {"hi", e1.hi.str()},
                                         {"approx", e1.mid().to_double()},
                                         {"exact_rational", c1.exact_rational()}}},
                           {"c2",
                            ordered_json{{"lo", e2.lo.str()},
                                         {"hi", e2.hi.str()},
                                         {"approx", e2.mid().to_double()},
                                         {"exact_rational", c2.exact_rational()}}}};
            return write_report(j, json_path);
        }
    } catch (const hypothesis_failure_error& e) {
        ordered_json j{{"error", "hypothesis_failure"}, {"detail", e.failed_check}};
        write_report(j, json_path);
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

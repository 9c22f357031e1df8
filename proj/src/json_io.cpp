// json_io.cpp

#include "smallzeros/json_io.hpp"
#include "smallzeros/parser.hpp"

namespace smallzeros {

namespace {

ordered_json interval_to_json(const DyInterval& iv) {
    return ordered_json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}};
}

std::string matrix_to_text(const QMatrix& m) {
    std::string out;
    for (size_t r = 0; r < m.nrows(); ++r) {
        if (r) out += ";";
        for (size_t c = 0; c < m.ncols(); ++c) {
            if (c) out += ",";
            out += rat_str(m.rows[r][c]);
        }
    }
    return out;
}

}  // namespace

ordered_json height_to_json(const HeightValue& h, long prec) {
    DyInterval arch = h.arch(prec);
    return ordered_json{{"finite_base", rat_str(h.finite_base)},
                        {"root_index", h.finite_root},
                        {"arch_lo", arch.lo.str()},
                        {"arch_hi", arch.hi.str()},
                        {"degree", h.degree_used}};
}

ordered_json certificate_to_json(const ZeroCertificate& cert) {
    ordered_json j;
    j["input"] = ordered_json{{"poly", print_poly(cert.input)}, {"nvars", cert.input.nvars()}};
    if (cert.matrix) j["input"]["matrix"] = matrix_to_text(*cert.matrix);

    ordered_json tr;
    tr["kind"] = branch_name(cert.branch.kind);
    if (cert.branch.index >= 0) tr["index"] = cert.branch.index;
    if (!cert.branch.beta_trace.empty()) {
        ordered_json bt = ordered_json::array();
        for (const BetaStep& s : cert.branch.beta_trace)
            bt.push_back(ordered_json::array({s.beta, s.sign}));
        tr["beta_trace"] = bt;
    }
    if (cert.branch.subst_var >= 0) tr["subst_var"] = cert.branch.subst_var;
    if (cert.branch.pivot_var >= 0) tr["pivot_var"] = cert.branch.pivot_var;
    if (!cert.branch.avoid_point.empty()) tr["avoid_point"] = cert.branch.avoid_point;
    j["branch_trace"] = tr;

    const IntPoly& mp =
        cert.point.field ? cert.point.field->minpoly() : IntPoly{Int(0), Int(1)};
    ordered_json mp_j = ordered_json::array();
    for (const Int& c : mp) mp_j.push_back(c.get_str());
    j["minpoly"] = mp_j;

    ordered_json pt = ordered_json::array();
    for (const UniPoly& r : cert.point.reprs) {
        Int den = 1;
        for (const Rat& c : r.coeffs())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        ordered_json coeffs = ordered_json::array();
        for (int k = 0; k <= r.degree(); ++k) {
            Rat v = r.coeff(k) * Rat(den);
            coeffs.push_back(v.get_num().get_str());
        }
        pt.push_back(ordered_json{{"repr", coeffs}, {"denominator", den.get_str()}});
    }
    j["point"] = pt;
    j["degree"] = cert.degree;
    j["height"] = height_to_json(cert.computed_height);

    ordered_json bound = interval_to_json(cert.claimed_bound);
    if (cert.bound_expr.is_exact()) {
        bound["exact_base"] = rat_str(cert.bound_expr.base());
        bound["exact_root"] = cert.bound_expr.root_index();
    }
    j["bound"] = bound;
    j["verdict"] = cmp_name(cert.bound_verdict);

    ordered_json nz = ordered_json::array();
    for (bool b : cert.nonzero_coords) nz.push_back(b);
    j["checks"] = ordered_json{{"zero_verified", cert.zero_verified},
                               {"degree_ok", true},
                               {"nonzero_coords", nz},
                               {"bound_verdict", cmp_name(cert.bound_verdict)}};
    return j;
}

ordered_json verify_report_to_json(const VerifyReport& rep) {
    return ordered_json{{"zero_ok", rep.zero_ok},
                        {"degree_ok", rep.degree_ok},
                        {"nonzero_ok", rep.nonzero_ok},
                        {"bound_verdict", cmp_name(rep.bound_verdict)},
                        {"all_ok", rep.all_ok()}};
}

namespace {

BranchKind branch_from_name(const std::string& name) {
    for (BranchKind k :
         {BranchKind::ZeroPolynomial, BranchKind::BasisVector, BranchKind::BinaryReduction,
          BranchKind::NonzeroCoordinate, BranchKind::AllNonzero, BranchKind::TorusColumn,
          BranchKind::TorusImage, BranchKind::InhomCaseA, BranchKind::InhomCaseB}) {
        if (name == branch_name(k)) return k;
    }
    throw std::invalid_argument("unknown branch kind: " + name);
}

}  // namespace

ZeroCertificate certificate_from_json(const ordered_json& j) {
    ZeroCertificate cert;
    cert.input = parse_poly(j.at("input").at("poly").get<std::string>(),
                            j.at("input").at("nvars").get<unsigned>());
    if (j.at("input").contains("matrix"))
        cert.matrix = parse_matrix(j.at("input").at("matrix").get<std::string>());

    const auto& tr = j.at("branch_trace");
    cert.branch.kind = branch_from_name(tr.at("kind").get<std::string>());
    if (tr.contains("index")) cert.branch.index = tr.at("index").get<int>();
    if (tr.contains("subst_var")) cert.branch.subst_var = tr.at("subst_var").get<int>();
    if (tr.contains("pivot_var")) cert.branch.pivot_var = tr.at("pivot_var").get<int>();
    if (tr.contains("beta_trace"))
        for (const auto& s : tr.at("beta_trace"))
            cert.branch.beta_trace.push_back({s.at(0).get<unsigned>(), s.at(1).get<int>()});
    if (tr.contains("avoid_point"))
        for (const auto& v : tr.at("avoid_point")) cert.branch.avoid_point.push_back(v.get<long>());

    IntPoly mp;
    for (const auto& c : j.at("minpoly")) mp.push_back(Int(c.get<std::string>()));
    bool rational_point = (ip_degree(mp) == 1 && mp[0] == 0 && mp[1] == 1);
    FieldPtr field = rational_point ? nullptr : NumberField::make(mp);

    cert.point.field = field;
    for (const auto& coord : j.at("point")) {
        Int den(coord.at("denominator").get<std::string>());
        std::vector<Rat> coeffs;
        for (const auto& c : coord.at("repr"))
            coeffs.push_back(make_rat(Int(c.get<std::string>()), den));
        cert.point.reprs.push_back(UniPoly(std::move(coeffs)));
    }
    cert.degree = j.at("degree").get<unsigned>();

    const auto& b = j.at("bound");
    DyInterval iv(Dyadic::from_mpq_down(parse_rat(b.at("lo").get<std::string>()), 128),
                  Dyadic::from_mpq_up(parse_rat(b.at("hi").get<std::string>()), 128));
    cert.claimed_bound = iv;
    if (b.contains("exact_base"))
        cert.bound_expr = CertReal::nth_root(parse_rat(b.at("exact_base").get<std::string>()),
                                             b.at("exact_root").get<unsigned>());
    else
        cert.bound_expr = CertReal::from_refiner([iv](long) { return iv; });

    cert.computed_height = height_point(cert.point);
    for (const auto& v : j.at("checks").at("nonzero_coords"))
        cert.nonzero_coords.push_back(v.get<bool>());
    cert.zero_verified = j.at("checks").at("zero_verified").get<bool>();
    std::string verdict = j.at("verdict").get<std::string>();
    cert.bound_verdict = verdict == std::string(cmp_name(Cmp::LE_certified))
                             ? Cmp::LE_certified
                             : (verdict == std::string(cmp_name(Cmp::GT_certified))
                                    ? Cmp::GT_certified
                                    : Cmp::Inconclusive);
    return cert;
}

}  // namespace smallzeros

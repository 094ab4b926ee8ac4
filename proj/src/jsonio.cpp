#include "jsonio.hpp"

namespace socrep {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

Json mat2_to_json(const Mat2& m) {
    return Json::array({Json::array({rational_to_json(m.m00), rational_to_json(m.m01)}),
                        Json::array({rational_to_json(m.m01), rational_to_json(m.m11)})});
}

Mat2 mat2_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        bad("2x2 matrix must be a 2x2 array");
    Mat2 m{rational_from_json(j[0][0]), rational_from_json(j[0][1]), rational_from_json(j[1][1])};
    if (rational_from_json(j[1][0]) != m.m01) bad("2x2 matrix must be symmetric");
    return m;
}

Json mat2poly_to_json(const Mat2Poly& m, const std::string& var) {
    return Json::array(
        {Json::array({unipoly_to_json(m.m00, var), unipoly_to_json(m.m01, var)}),
         Json::array({unipoly_to_json(m.m01, var), unipoly_to_json(m.m11, var)})});
}

Mat2Poly mat2poly_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        bad("polynomial matrix must be a 2x2 array");
    Mat2Poly m{unipoly_from_json(j[0][0]), unipoly_from_json(j[0][1]), unipoly_from_json(j[1][1])};
    if (!(unipoly_from_json(j[1][0]) == m.m01)) bad("polynomial matrix must be symmetric");
    return m;
}

Json affine_form_to_json(const AffineForm& f) {
    Json x = Json::array(), y = Json::array();
    for (const auto& c : f.cx) x.push_back(rational_to_json(c));
    for (const auto& c : f.cy) y.push_back(rational_to_json(c));
    return Json{{"const", rational_to_json(f.c0)}, {"x", std::move(x)}, {"y", std::move(y)}};
}

AffineForm affine_form_from_json(const Json& j) {
    AffineForm f;
    f.c0 = rational_from_json(field(j, "const"));
    for (const auto& c : field(j, "x")) f.cx.push_back(rational_from_json(c));
    for (const auto& c : field(j, "y")) f.cy.push_back(rational_from_json(c));
    return f;
}

}  // namespace

Json rational_to_json(const Rational& q) {
    return Json::array({q.get_num().get_str(), q.get_den().get_str()});
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        bad("rational must be a [\"num\", \"den\"] string pair");
    try {
        const Rational num = rat_from_string(j[0].get<std::string>());
        const Rational den = rat_from_string(j[1].get<std::string>());
        if (num.get_den() != 1 || den.get_den() != 1) bad("rational parts must be integers");
        if (den == 0) bad("rational denominator must be nonzero");
        Rational q(num.get_num(), den.get_num());
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument& e) {
        bad(e.what());
    }
}

Json unipoly_to_json(const UniPoly& p, const std::string& var) {
    Json coeffs = Json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(rational_to_json(p.coeff(k)));
    return Json{{"var", var}, {"coeffs", std::move(coeffs)}};
}

UniPoly unipoly_from_json(const Json& j) {
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) bad("\"coeffs\" must be an array");
    string_field(j, "var");
    std::vector<Rational> cs;
    cs.reserve(coeffs.size());
    for (const auto& c : coeffs) cs.push_back(rational_from_json(c));
    return UniPoly(std::move(cs));
}

Json bipoly_to_json(const BiPoly& b) {
    Json terms = Json::array();
    for (const auto& [key, c] : b.terms())
        terms.push_back(Json{{"du", key.first}, {"dv", key.second}, {"c", rational_to_json(c)}});
    return Json{{"vars", Json::array({"u", "v"})}, {"terms", std::move(terms)}};
}

BiPoly bipoly_from_json(const Json& j) {
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("\"terms\" must be an array");
    BiPoly b;
    for (const auto& t : terms) {
        const int du = int_field(t, "du"), dv = int_field(t, "dv");
        if (du < 0 || dv < 0) bad("bivariate exponents must be nonnegative");
        b.add_term(du, dv, rational_from_json(field(t, "c")));
    }
    return b;
}

Json decomposition_to_json(const TensorDecomposition& d) {
    Json terms = Json::array();
    for (const auto& t : d.terms)
        terms.push_back(Json{{"mu", t.mono_u},
                             {"mv", t.mono_v},
                             {"p", unipoly_to_json(t.p, "u")},
                             {"q", unipoly_to_json(t.q, "v")}});
    return Json{{"flat_order", d.flat_order},
                {"terms", std::move(terms)},
                {"base", bipoly_to_json(d.base)}};
}

TensorDecomposition decomposition_from_json(const Json& j) {
    TensorDecomposition d;
    d.flat_order = int_field(j, "flat_order");
    d.base = bipoly_from_json(field(j, "base"));
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("\"terms\" must be an array");
    for (const auto& t : terms) {
        TensorTerm term;
        term.mono_u = int_field(t, "mu");
        term.mono_v = int_field(t, "mv");
        if (term.mono_u < 0 || term.mono_v < 0) bad("monomial exponents must be nonnegative");
        term.p = unipoly_from_json(field(t, "p"));
        term.q = unipoly_from_json(field(t, "q"));
        d.terms.push_back(std::move(term));
    }
    return d;
}

Json spoly_to_json(const SPoly& s) {
    return Json{{"m", s.m}, {"n", s.n}, {"value", bipoly_to_json(s.value)}};
}

Json interval_cert_to_json(const IntervalCert& c, const std::string& var) {
    return Json{{"poly", unipoly_to_json(c.poly, var)},
                {"lo", rational_to_json(c.lo)},
                {"hi", rational_to_json(c.hi)},
                {"squarefree_part", unipoly_to_json(c.squarefree_part, var)},
                {"root_count_interior", c.root_count_interior},
                {"endpoint_values", Json::array({rational_to_json(c.endpoint_values.first),
                                                 rational_to_json(c.endpoint_values.second)})}};
}

IntervalCert interval_cert_from_json(const Json& j) {
    IntervalCert c;
    c.poly = unipoly_from_json(field(j, "poly"));
    c.lo = rational_from_json(field(j, "lo"));
    c.hi = rational_from_json(field(j, "hi"));
    c.squarefree_part = unipoly_from_json(field(j, "squarefree_part"));
    const Json& rc = field(j, "root_count_interior");
    if (!rc.is_number_integer() || rc.get<long>() < 0)
        bad("\"root_count_interior\" must be a nonnegative integer");
    c.root_count_interior = rc.get<long>();
    const Json& ev = field(j, "endpoint_values");
    if (!ev.is_array() || ev.size() != 2) bad("\"endpoint_values\" must be a pair");
    c.endpoint_values = {rational_from_json(ev[0]), rational_from_json(ev[1])};
    return c;
}

Json factorization_to_json(const PsdFactorization& f) {
    Json terms = Json::array(), aform = Json::array(), bform = Json::array();
    for (const auto& [p, q] : f.terms)
        terms.push_back(Json{{"p", unipoly_to_json(p, "u")}, {"q", unipoly_to_json(q, "v")}});
    for (const auto& m : f.A_form) aform.push_back(mat2poly_to_json(m, "u"));
    for (const auto& m : f.B_form) bform.push_back(mat2poly_to_json(m, "v"));
    return Json{{"a", rational_to_json(f.a)},
                {"terms", std::move(terms)},
                {"A_form", std::move(aform)},
                {"B_form", std::move(bform)}};
}

PsdFactorization factorization_from_json(const Json& j) {
    PsdFactorization f;
    f.a = rational_from_json(field(j, "a"));
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("\"terms\" must be an array");
    for (const auto& t : terms)
        f.terms.emplace_back(unipoly_from_json(field(t, "p")), unipoly_from_json(field(t, "q")));
    for (const auto& m : field(j, "A_form")) f.A_form.push_back(mat2poly_from_json(m));
    for (const auto& m : field(j, "B_form")) f.B_form.push_back(mat2poly_from_json(m));
    if (f.A_form.size() != f.terms.size() || f.B_form.size() != f.terms.size())
        bad("factorization form count mismatch");
    return f;
}

Json conic_rep_to_json(const ConicRep& r) {
    Json blocks = Json::array();
    for (const auto& b : r.blocks) {
        Json entries = Json::array();
        for (int row = 0; row < b.size; ++row) {
            Json row_json = Json::array();
            for (int col = 0; col < b.size; ++col)
                row_json.push_back(affine_form_to_json(b.entries[static_cast<size_t>(row * b.size + col)]));
            entries.push_back(std::move(row_json));
        }
        blocks.push_back(Json{{"size", b.size}, {"entries", std::move(entries)}});
    }
    return Json{{"kind", r.kind == RepKind::Set ? "set" : "cone"},
                {"n_vars", r.n_vars},
                {"n_lifts", r.n_lifts},
                {"blocks", std::move(blocks)},
                {"labels", r.labels}};
}

ConicRep conic_rep_from_json(const Json& j) {
    ConicRep r;
    const std::string kind = string_field(j, "kind");
    if (kind == "set") r.kind = RepKind::Set;
    else if (kind == "cone") r.kind = RepKind::Cone;
    else bad("\"kind\" must be \"set\" or \"cone\"");
    r.n_vars = int_field(j, "n_vars");
    r.n_lifts = int_field(j, "n_lifts");
    for (const auto& bj : field(j, "blocks")) {
        Block b;
        b.size = int_field(bj, "size");
        if (b.size != 1 && b.size != 2) bad("block size must be 1 or 2");
        const Json& entries = field(bj, "entries");
        if (!entries.is_array() || static_cast<int>(entries.size()) != b.size)
            bad("block entry rows mismatch");
        for (const auto& row : entries) {
            if (!row.is_array() || static_cast<int>(row.size()) != b.size)
                bad("block entry columns mismatch");
            for (const auto& e : row) b.entries.push_back(affine_form_from_json(e));
        }
        r.blocks.push_back(std::move(b));
    }
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) r.labels.push_back(l.get<std::string>());
    r.validate();
    return r;
}

Json bundle_to_json(const CertificateBundle& b) {
    Json certs = Json::array();
    for (size_t i = 0; i < b.radius_certs.size(); ++i)
        certs.push_back(interval_cert_to_json(b.radius_certs[i], i % 2 == 0 ? "u" : "v"));
    Json gens = Json::array();
    for (const auto& g : b.generator_certs) {
        Json mats = Json::array();
        for (const auto& m : g.G) mats.push_back(mat2_to_json(m));
        gens.push_back(Json{{"v", rational_to_json(g.v)},
                            {"c", rational_to_json(g.c)},
                            {"G", std::move(mats)}});
    }
    Json out{{"f", unipoly_to_json(b.f, "t")},
             {"a", rational_to_json(b.a)},
             {"decomp", decomposition_to_json(b.decomp)},
             {"radius_certs", std::move(certs)},
             {"generator_certs", std::move(gens)},
             {"orientation",
              b.orientation == Orientation::Epigraph ? "epigraph" : "hypograph-reflected"}};
    out["factorization"] = b.factorization ? factorization_to_json(*b.factorization) : Json();
    return out;
}

CertificateBundle bundle_from_json(const Json& j) {
    CertificateBundle b;
    b.f = unipoly_from_json(field(j, "f"));
    b.a = rational_from_json(field(j, "a"));
    b.decomp = decomposition_from_json(field(j, "decomp"));
    for (const auto& c : field(j, "radius_certs")) b.radius_certs.push_back(interval_cert_from_json(c));
    const Json& fac = field(j, "factorization");
    if (!fac.is_null()) b.factorization = factorization_from_json(fac);
    for (const auto& g : field(j, "generator_certs")) {
        GeneratorCert gc;
        gc.v = rational_from_json(field(g, "v"));
        gc.c = rational_from_json(field(g, "c"));
        for (const auto& m : field(g, "G")) gc.G.push_back(mat2_from_json(m));
        b.generator_certs.push_back(std::move(gc));
    }
    const std::string orient = string_field(j, "orientation");
    if (orient == "epigraph") b.orientation = Orientation::Epigraph;
    else if (orient == "hypograph-reflected") b.orientation = Orientation::HypographReflected;
    else bad("unknown orientation");
    return b;
}

Json point_set_to_json(const PointSet& s) {
    auto points_json = [](const std::vector<std::vector<Rational>>& pts) {
        Json out = Json::array();
        for (const auto& p : pts) {
            Json row = Json::array();
            for (const auto& c : p) row.push_back(rational_to_json(c));
            out.push_back(std::move(row));
        }
        return out;
    };
    Json out{{"dim", s.dim}, {"points", points_json(s.points)}};
    if (!s.hull_generators.empty()) out["hull_generators"] = points_json(s.hull_generators);
    return out;
}

PointSet point_set_from_json(const Json& j) {
    PointSet s;
    s.dim = int_field(j, "dim");
    auto parse_points = [&](const Json& arr) {
        std::vector<std::vector<Rational>> pts;
        if (!arr.is_array()) bad("points must be an array");
        for (const auto& row : arr) {
            if (!row.is_array()) bad("each point must be an array");
            std::vector<Rational> p;
            for (const auto& c : row) p.push_back(rational_from_json(c));
            pts.push_back(std::move(p));
        }
        return pts;
    };
    s.points = parse_points(field(j, "points"));
    if (j.contains("hull_generators") && !j.at("hull_generators").is_null())
        s.hull_generators = parse_points(j.at("hull_generators"));
    try {
        s.validate();
    } catch (const std::invalid_argument& e) {
        bad(e.what());
    }
    return s;
}

Json obstruction_report_to_json(const ObstructionReport& r) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) {
        Json coeffs = Json::array();
        for (const auto& c : w.f_coeffs) coeffs.push_back(rational_to_json(c));
        witnesses.push_back(Json{{"subset", w.subset}, {"f_coeffs", std::move(coeffs)}});
    }
    Json out{{"holds", r.holds},
             {"d", r.d},
             {"witnesses", std::move(witnesses)},
             {"caveat",
              "a finite verdict is evidence, not proof: the lower bound needs subsets of "
              "arbitrarily large cardinality, and f >= 0 is enforced on conv(hull_generators) "
              "only"}};
    out["failing_subset"] = r.failing_subset ? Json(*r.failing_subset) : Json();
    return out;
}

Json check_report_to_json(const CheckReport& r) {
    return Json{{"ok", r.ok}, {"failures", r.failures}};
}

std::string to_file_string(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace socrep

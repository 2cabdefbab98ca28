#include "cylkit/json_io.hpp"

namespace cylkit {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Json mismatch_json(const Mismatch& m) {
    return Json{{"z", m.z}, {"q", to_json(m.q)}, {"lhs", bigint_json(m.left)}, {"rhs", bigint_json(m.right)}};
}

Json factor_json(const PochFactor& f) {
    Json a = Json::array({to_json(f.q_exponent), to_json(f.modulus)});
    if (f.sign != 1 || f.z_degree != 0) {
        a.push_back(f.sign);
        a.push_back(f.z_degree);
    }
    return a;
}

PochFactor factor_from_json(const Json& j) {
    if (!j.is_array() || (j.size() != 2 && j.size() != 4)) throw Error("a product factor is [exp, mod] or [exp, mod, sign, z]");
    PochFactor f = PochFactor::q(rational_from_json(j[0]), rational_from_json(j[1]));
    if (j.size() == 4) {
        f.sign = j[2].get<int>();
        f.z_degree = j[3].get<int>();
        if (f.sign != 1 && f.sign != -1) throw Error("factor sign must be 1 or -1");
    }
    if (f.modulus <= 0) throw Error("factor modulus must be positive");
    return f;
}

Kind kind_from_json(const Json& j) {
    auto k = parse_kind(j.get<std::string>());
    if (!k) throw Error("unknown kind \"" + j.get<std::string>() + "\"");
    return *k;
}

} // namespace

Json conventions_json() {
    return Json{{"pochhammer", "standard: (a;q)_n = prod_{j=0}^{n-1} (1 - a q^j)"},
                {"w3_orientation", std::string(orientation_name(W3Orientation::mirrored))},
                {"truncation", "exact below q^N on the q^(1/q_scale) grid, z-degree <= D"}};
}

Json envelope(std::string_view type, Json body) {
    Json out{{"schema_version", kSchemaVersion}, {"type", std::string(type)}, {"conventions", conventions_json()}};
    for (auto& [k, v] : body.items()) out[k] = std::move(v);
    return out;
}

Json to_json(const Rational& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return to_string(r);
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error("expected an integer or a \"p/q\" string");
}

Json bigint_json(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Json to_json(const Window& w) {
    return Json{{"N", to_json(w.q_order())}, {"D", w.z_order}, {"q_limit", w.q_limit}, {"q_scale", w.q_scale}};
}

Json to_json(const TruncatedSeries& s) {
    Json terms = Json::array();
    for (const auto& t : s.terms()) terms.push_back(Json::array({t.z, t.q, s.q_scale(), bigint_json(t.coeff)}));
    return Json{{"window", to_json(s.window())}, {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const Json& j) {
    const Json& w = need(j, "window");
    Window win{need(w, "q_limit").get<std::int64_t>(), need(w, "D").get<int>(), need(w, "q_scale").get<int>()};
    win.validate();
    TruncatedSeries s(win);
    for (const auto& t : need(j, "terms")) {
        if (!t.is_array() || t.size() != 4) throw Error("a series term is [z, q_numerator, q_scale, coeff]");
        if (t[2].get<int>() != win.q_scale) throw Error("term grid differs from the window grid");
        BigInt c = t[3].is_string() ? BigInt(t[3].get<std::string>()) : BigInt(t[3].get<long>());
        s.add_term(t[0].get<int>(), t[1].get<std::int64_t>(), c);
    }
    return s;
}

Json to_json(const Profile& p) { return Json(p.delta); }

Profile profile_from_json(const Json& j) {
    if (j.is_string()) return parse_profile(j.get<std::string>());
    return Profile(j.get<std::vector<int>>());
}

Json to_json(const WeightVector& w) {
    Json a = Json::array();
    for (const auto& x : w.a) a.push_back(to_json(x));
    return a;
}

WeightVector weights_from_json(const Json& j) {
    if (j.is_string()) return parse_weights(j.get<std::string>());
    std::vector<Rational> a;
    for (const auto& x : j) a.push_back(rational_from_json(x));
    return WeightVector(std::move(a));
}

Json to_json(const WMultiset& m) {
    Json e = Json::array();
    for (const auto& x : m.entries) e.push_back(to_json(x));
    return Json{{"entries", std::move(e)}, {"modulus", to_json(m.modulus)}};
}

WMultiset multiset_from_json(const Json& j) {
    std::vector<Rational> e;
    for (const auto& x : need(j, "entries")) e.push_back(rational_from_json(x));
    return WMultiset(std::move(e), rational_from_json(need(j, "modulus")));
}

Json to_json(const ProductSpec& p) {
    Json num = Json::array(), den = Json::array();
    for (const auto& f : p.num) num.push_back(factor_json(f));
    for (const auto& f : p.den) den.push_back(factor_json(f));
    return Json{{"num", std::move(num)}, {"den", std::move(den)}};
}

ProductSpec product_from_json(const Json& j) {
    if (!j.is_object()) throw Error("a product is {\"num\": [...], \"den\": [...]}");
    ProductSpec p;
    if (j.contains("num"))
        for (const auto& f : j.at("num")) p.num.push_back(factor_from_json(f));
    if (j.contains("den"))
        for (const auto& f : j.at("den")) p.den.push_back(factor_from_json(f));
    return p;
}

Json to_json(const GridPartition& g) {
    Json d = Json::array();
    for (const auto& lam : g.diagonals) d.push_back(lam.parts());
    return Json{{"kind", std::string(kind_name(g.kind))}, {"delta", to_json(g.profile)}, {"weights", to_json(g.weights)}, {"diagonals", std::move(d)}};
}

GridPartition object_from_json(const Json& j) {
    GridPartition g;
    g.kind = kind_from_json(need(j, "kind"));
    g.profile = profile_from_json(need(j, "delta"));
    g.weights = weights_from_json(need(j, "weights"));
    for (const auto& d : need(j, "diagonals")) g.diagonals.emplace_back(d.get<std::vector<int>>());
    return g;
}

Json to_json(const FunctionalSystem& sys) {
    const std::string f = function_name(sys);
    Json eqs = Json::array();
    for (const auto& [p, eq] : sys.equations)
        eqs.push_back(Json{{"profile", to_json(p)}, {"equation", f + "_" + to_string(p) + "(z) = " + to_string(eq, f, sys.scale)}});
    return Json{{"kind", std::string(kind_name(sys.kind))},
                {"weights", to_json(sys.weights)},
                {"q_scale", sys.scale},
                {"normalized", sys.normalized},
                {"reversal_quotient", sys.reversal_quotient},
                {"equations", std::move(eqs)}};
}

Json to_json(const Comparison& c) {
    Json j{{"label", c.label},
           {"lhs", c.lhs_source},
           {"rhs", c.rhs_source},
           {"window", to_json(c.window)},
           {"equal", c.equal},
           {"report_only", c.report_only}};
    if (c.first_mismatch) j["first_mismatch"] = mismatch_json(*c.first_mismatch);
    if (c.difference_count > 0) {
        j["difference_count"] = c.difference_count;
        Json d = Json::array();
        for (const auto& m : c.differences) d.push_back(mismatch_json(m));
        j["differences"] = std::move(d);
    }
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

Json to_json(const CaseReport& r) {
    Json cs = Json::array();
    for (const auto& c : r.comparisons) cs.push_back(to_json(c));
    return Json{{"case", r.label},
                {"title", r.title},
                {"ok", r.ok()},
                {"summary", summary_line(r)},
                {"asserted", r.asserted()},
                {"asserted_equal", r.asserted_equal()},
                {"comparisons", std::move(cs)}};
}

FitProblem fit_problem_from_json(const Json& j) {
    FitProblem p;
    p.kind = kind_from_json(need(j, "kind"));
    p.profile = profile_from_json(need(j, "delta"));
    const Json& t = need(j, "target");
    if (t.is_array())
        for (const auto& m : t) p.target.push_back(multiset_from_json(m));
    else
        p.target.push_back(multiset_from_json(t));
    if (j.contains("integral")) p.integral = j.at("integral").get<bool>();
    if (j.contains("max_free")) p.max_free = j.at("max_free").get<long>();
    return p;
}

Json to_json(const FitProblem& p) {
    Json t = Json::array();
    for (const auto& m : p.target) t.push_back(to_json(m));
    Json j{{"kind", std::string(kind_name(p.kind))}, {"delta", to_json(p.profile)}, {"target", std::move(t)}, {"integral", p.integral}};
    if (p.max_free) j["max_free"] = *p.max_free;
    return j;
}

Json to_json(const FitResult& r) {
    Json s = Json::array();
    for (const auto& x : r.solutions) s.push_back(Json{{"weights", to_json(x.weights)}, {"forward_check", x.forward_check}});
    Json j{{"solutions", std::move(s)}, {"assignments", r.assignments}};
    if (r.infeasible) j["infeasible"] = *r.infeasible;
    return j;
}

Json to_json(const BalanceReport& r) {
    Json u = Json::array();
    for (const auto& p : r.unbalanced) u.push_back(to_json(p));
    return Json{{"max_width", r.max_width}, {"profiles", r.profiles}, {"balanced", r.ok()}, {"unbalanced", std::move(u)}};
}

Json to_json(const EquivalenceGroup& g) {
    Json ms = Json::array();
    for (const auto& m : g.members) {
        Json e{{"kind", std::string(kind_name(m.kind))}, {"delta", to_json(m.profile)}, {"weights", to_json(m.weights)}, {"product", m.product}};
        e["enumeration_agrees"] = m.enumeration_agrees ? Json(*m.enumeration_agrees) : Json(nullptr);
        ms.push_back(std::move(e));
    }
    Json c = Json::array();
    for (const auto& x : g.coefficients) c.push_back(bigint_json(x));
    return Json{{"members", std::move(ms)}, {"coefficients", std::move(c)}};
}

} // namespace cylkit

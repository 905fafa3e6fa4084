#include "json_io.hpp"

#include <algorithm>

namespace nfa::jsonio {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::parse_error, what); }

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

Domain domain_from(const json& j) { return Domain::parse(need(j, "domain").get<std::string>()); }

json poly_terms_to_json(const Poly& p, const Domain& dom) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (size_t v = 0; v < m.exps.size(); ++v)
            if (m.exps[v]) mono[dom.vars()[v]] = m.exps[v];
        terms.push_back(json{{"c", c.to_string()}, {"m", std::move(mono)}});
    }
    return json{{"terms", std::move(terms)}};
}

Poly poly_from_json(const json& j, const Domain& dom) {
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& t : need(j, "terms")) {
        Monomial m{std::vector<uint32_t>(dom.vars().size(), 0)};
        if (t.contains("m")) {
            for (auto it = t.at("m").begin(); it != t.at("m").end(); ++it) {
                int idx = dom.var_index(it.key());
                if (idx < 0) bad("unknown variable in monomial: " + it.key());
                m.exps[size_t(idx)] = it.value().get<uint32_t>();
            }
        }
        terms.push_back({std::move(m), Rational::parse(need(t, "c").get<std::string>())});
    }
    return Poly::from_terms(std::move(terms));
}

}  // namespace

json scalar_to_json(const Scalar& s) {
    switch (s.domain().kind()) {
        case DomainKind::rational: return s.as_rational().to_string();
        case DomainKind::prime_field:
            return json{{"fp", s.domain().prime()}, {"v", s.as_fp()}};
        case DomainKind::polynomial: return poly_terms_to_json(s.as_poly(), s.domain());
        case DomainKind::rational_function: {
            const auto& rf = s.as_ratfun();
            return json{{"num", poly_terms_to_json(rf.num, s.domain())},
                        {"den", poly_terms_to_json(rf.den, s.domain())}};
        }
    }
    bad("bad scalar domain");
}

Scalar scalar_from_json(const json& j, const Domain& dom) {
    switch (dom.kind()) {
        case DomainKind::rational:
            if (!j.is_string()) bad("rational scalar must be a string");
            return Scalar::of_rational(dom, Rational::parse(j.get<std::string>()));
        case DomainKind::prime_field: {
            if (j.is_string())  // tolerate the rational string form, reduced mod p
                return Scalar::of_rational(dom, Rational::parse(j.get<std::string>()));
            uint64_t p = need(j, "fp").get<uint64_t>();
            if (p != dom.prime()) bad("field element carries the wrong prime");
            return Scalar::fp(dom, need(j, "v").get<uint64_t>());
        }
        case DomainKind::polynomial: {
            if (j.is_string()) return Scalar::of_rational(dom, Rational::parse(j.get<std::string>()));
            Poly p = poly_from_json(j, dom);
            Scalar acc = Scalar::zero(dom);
            for (const auto& [m, c] : p.terms()) {
                Scalar term = Scalar::of_rational(dom, c);
                for (size_t v = 0; v < m.exps.size(); ++v)
                    for (uint32_t e = 0; e < m.exps[v]; ++e)
                        term = term * Scalar::variable(dom, dom.vars()[v]);
                acc = acc + term;
            }
            return acc;
        }
        case DomainKind::rational_function: {
            if (j.is_string()) return Scalar::of_rational(dom, Rational::parse(j.get<std::string>()));
            Domain poly_dom = Domain::polynomial(dom.vars());
            auto lift = [&](const json& part) {
                Poly p = poly_from_json(part, poly_dom);
                Scalar acc = Scalar::zero(dom);
                for (const auto& [m, c] : p.terms()) {
                    Scalar term = Scalar::of_rational(dom, c);
                    for (size_t v = 0; v < m.exps.size(); ++v)
                        for (uint32_t e = 0; e < m.exps[v]; ++e)
                            term = term * Scalar::variable(dom, dom.vars()[v]);
                    acc = acc + term;
                }
                return acc;
            };
            return lift(need(j, "num")) / lift(need(j, "den"));
        }
    }
    bad("bad scalar domain");
}

namespace {

json tensor_entries(const StructureTensor& t) {
    json out = json::array();
    for (int i = 1; i <= t.dim(); ++i)
        for (int j = 1; j <= t.dim(); ++j)
            for (int k = 1; k <= t.dim(); ++k)
                if (!t.at(i, j, k).is_zero())
                    out.push_back(json::array({i, j, k, scalar_to_json(t.at(i, j, k))}));
    return out;
}

StructureTensor tensor_from_entries(const json& entries, int n, const Domain& dom) {
    StructureTensor t(n, dom);
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 4) bad("tensor entry must be [i, j, k, scalar]");
        t.set(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), scalar_from_json(e[3], dom));
    }
    return t;
}

}  // namespace

json algebra_to_json(const BiAlgebra& alg) {
    return json{{"dim", alg.dim()},
                {"domain", alg.domain().to_string()},
                {"dot", tensor_entries(alg.dot)},
                {"star", tensor_entries(alg.star)}};
}

BiAlgebra algebra_from_json(const json& j) {
    int n = need(j, "dim").get<int>();
    Domain dom = domain_from(j);
    return BiAlgebra(tensor_from_entries(need(j, "dot"), n, dom),
                     tensor_from_entries(need(j, "star"), n, dom));
}

json check_result_to_json(const CheckResult& r) {
    json out{{"holds", r.holds}};
    if (r.witness) {
        json lhs = json::array(), rhs = json::array();
        for (const auto& s : r.witness->lhs) lhs.push_back(scalar_to_json(s));
        for (const auto& s : r.witness->rhs) rhs.push_back(scalar_to_json(s));
        out["witness"] = json{{"triple", json::array({r.witness->i, r.witness->j, r.witness->k})},
                              {"equation", r.witness->equation},
                              {"lhs", std::move(lhs)},
                              {"rhs", std::move(rhs)}};
    }
    return out;
}

namespace {

json scalars_to_json(const std::vector<Scalar>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(s));
    return out;
}

std::vector<Scalar> scalars_from_json(const json& j, const Domain& dom) {
    std::vector<Scalar> out;
    for (const auto& e : j) out.push_back(scalar_from_json(e, dom));
    return out;
}

Domain domain_of_params(const std::vector<Scalar>& v) {
    if (v.empty()) bad("empty parameter vector");
    return v[0].domain();
}

}  // namespace

json id_params_to_json(const IdParams& p) {
    return json{{"kind", "id"},
                {"domain", domain_of_params(p.alpha).to_string()},
                {"alpha", scalars_to_json(p.alpha)}};
}

json twelve_params_to_json(const TwelveParams& p) {
    return json{{"kind", "twelve"},
                {"domain", domain_of_params(p.alpha).to_string()},
                {"alpha", scalars_to_json(p.alpha)},
                {"beta", scalars_to_json(p.beta)}};
}

json twelve_seed_to_json(const TwelveSeed& p) {
    return json{{"kind", "twelve"},
                {"domain", domain_of_params(p.beta).to_string()},
                {"alpha", scalars_to_json(p.alpha)},
                {"beta", scalars_to_json(p.beta)}};
}

json auto_params_to_json(const AutoParams& p) {
    return json{{"domain", domain_of_params(p.A).to_string()}, {"A", scalars_to_json(p.A)}};
}

IdParams id_params_from_json(const json& j) {
    Domain dom = domain_from(j);
    return IdParams{scalars_from_json(need(j, "alpha"), dom)};
}

TwelveParams twelve_params_from_json(const json& j) {
    Domain dom = domain_from(j);
    TwelveParams p;
    p.alpha = scalars_from_json(need(j, "alpha"), dom);
    p.beta = scalars_from_json(need(j, "beta"), dom);
    if (p.beta.size() == p.alpha.size() + 1) {
        // a full seed vector: accept when beta_n = 0
        if (!p.beta.back().is_zero()) bad("twelve-family parameters need beta_n = 0");
        p.beta.pop_back();
    }
    return p;
}

TwelveSeed twelve_seed_from_json(const json& j) {
    Domain dom = domain_from(j);
    TwelveSeed p;
    p.alpha = scalars_from_json(need(j, "alpha"), dom);
    p.beta = scalars_from_json(need(j, "beta"), dom);
    if (p.beta.size() == p.alpha.size())  // beta_n omitted: treat as 0
        p.beta.push_back(Scalar::zero(dom));
    return p;
}

AutoParams auto_params_from_json(const json& j, const Domain& dom) {
    return AutoParams{scalars_from_json(need(j, "A"), dom)};
}

json form_to_json(const CanonicalForm& f) {
    json params = json::object();
    if (f.alpha) params["alpha"] = scalar_to_json(*f.alpha);
    if (f.scale) params["scale"] = scalar_to_json(*f.scale);
    if (!f.betas.empty()) {
        json betas = json::object();
        for (const auto& [i, v] : f.betas) betas[std::to_string(i)] = scalar_to_json(v);
        params["beta"] = std::move(betas);
    }
    json out{{"tag", family_tag_name(f.tag)}, {"n", f.n}, {"params", std::move(params)}};
    if (f.s) out["s"] = f.s;
    if (f.r) out["r"] = f.r;
    return out;
}

CanonicalForm form_from_json(const json& j, const Domain& dom) {
    CanonicalForm f;
    auto tag = parse_family_tag(need(j, "tag").get<std::string>());
    if (!tag) bad("unknown family tag");
    f.tag = *tag;
    f.n = j.contains("n") ? j.at("n").get<int>() : 0;
    f.s = j.contains("s") ? j.at("s").get<int>() : 0;
    f.r = j.contains("r") ? j.at("r").get<int>() : 0;
    if (j.contains("params")) {
        const json& params = j.at("params");
        if (params.contains("alpha")) f.alpha = scalar_from_json(params.at("alpha"), dom);
        if (params.contains("scale")) f.scale = scalar_from_json(params.at("scale"), dom);
        if (params.contains("beta")) {
            for (auto it = params.at("beta").begin(); it != params.at("beta").end(); ++it)
                f.betas.push_back({std::stoi(it.key()), scalar_from_json(it.value(), dom)});
            std::sort(f.betas.begin(), f.betas.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
    }
    return f;
}

json witness_to_json(const Witness& w) {
    json steps = json::array();
    for (const auto& s : w.steps)
        steps.push_back(json{{"A", scalars_to_json(s.A.A)}, {"note", s.note}});
    json out{{"full", w.full}, {"steps", std::move(steps)}};
    if (!w.full) out["partial"] = w.partial_reason;
    return out;
}

json normalize_result_to_json(const NormalizeResult& r) {
    return json{{"form", form_to_json(r.form)}, {"witness", witness_to_json(r.witness)}};
}

json derive12_to_json(const Derive12Result& r, const StructureTensor& dot) {
    json out;
    switch (r.branch) {
        case Branch::id_matching: out["branch"] = "id-matching"; break;
        case Branch::twelve: out["branch"] = "twelve"; break;
        case Branch::symbolic: out["branch"] = "symbolic"; break;
    }
    out["constraints"] = scalars_to_json(r.constraints);
    if (r.id_params) out["id_params"] = id_params_to_json(*r.id_params);
    if (r.twelve_params) out["twelve_params"] = twelve_params_to_json(*r.twelve_params);
    out["algebra"] = algebra_to_json(BiAlgebra(dot, r.star));
    return out;
}

json orbit_report_to_json(const OrbitReport& r) {
    json orbits = json::array();
    for (const auto& o : r.orbits)
        orbits.push_back(json{{"form", form_to_json(o.form)}, {"size", o.size}});
    return json{{"n", r.n},
                {"p", r.p},
                {"kind", identity_kind_name(r.kind)},
                {"total", r.total},
                {"orbit_count", r.orbits.size()},
                {"orbits", std::move(orbits)},
                {"anomalies", r.anomalies},
                {"findings", r.findings}};
}

json audit_report_to_json(const AuditReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back(json{{"lemma", s.lemma},
                             {"step", s.step},
                             {"trials", s.trials},
                             {"agreements", s.agreements},
                             {"agrees", s.agrees()},
                             {"flagged", s.flagged},
                             {"note", s.note}});
    return json{{"n", r.n}, {"trials", r.trials}, {"steps", std::move(steps)}};
}

}  // namespace nfa::jsonio

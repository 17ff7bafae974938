#include "latpos/catalog.hpp"

#include <nlohmann/json.hpp>

namespace latpos {

using nlohmann::json;

namespace {

MultiPoly param_or_var(const CatalogParams& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) return MultiPoly::var(name);
    return MultiPoly::parse(it->second);
}

int param_int(const CatalogParams& params, const std::string& name, int def) {
    auto it = params.find(name);
    if (it == params.end()) return def;
    MultiPoly p = MultiPoly::parse(it->second);
    Integer v = p.constant_value();
    if (!v.fits_sint_p()) raise(ErrorCode::BadParameters, "parameter '" + name + "' too large");
    return static_cast<int>(v.get_si());
}

WeightRule const_rule(long v) { return WeightRule::constant(MultiPoly(v)); }

WeightScheme ones_scheme(int t, int ell) {
    WeightScheme s;
    s.t = t;
    s.ell = ell;
    for (int i = 0; i <= ell; ++i) s.a.push_back(const_rule(1));
    s.b = const_rule(1);
    return s;
}

} // namespace

const std::vector<CatalogEntry>& catalog_list() {
    static const std::vector<CatalogEntry> entries = {
        {"pascal_triangle", Orientation::M, {},
         "C(n,k) = C(n-1,k-1) + C(n-1,k)"},
        {"pascal_square", Orientation::M, {},
         "P(n,k) = P(n,k-1) + P(n-1,k)"},
        {"delannoy_square", Orientation::M, {},
         "D(n,k) = D(n,k-1) + D(n-1,k-1) + D(n-1,k)"},
        {"delannoy_triangle", Orientation::M, {},
         "d(n,k) = d(n-2,k-1) + d(n-1,k-1) + d(n-1,k)"},
        {"brenti", Orientation::M, {"t"},
         "A(n,k) = z_n A(n-t,k-1) + y_n A(n-1-t,k-1) + x_n A(n-1,k)"},
        {"delannoy_like", Orientation::M, {"e", "h"},
         "d(n,k) = d(n-1,k-1) + h d(n-2,k-1) + e d(n-1,k), d(1,0) = 1"},
        {"generalized_delannoy", Orientation::M, {"a", "b", "c"},
         "d(n,k) = a d(n-1,k-1) + c d(n-2,k-1) + b d(n-1,k)"},
        {"stirling1", Orientation::M, {},
         "c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)"},
        {"legendre_stirling1", Orientation::M, {},
         "Ps(n,k) = Ps(n-1,k-1) + n(n-1) Ps(n-1,k)"},
        {"jacobi_stirling1", Orientation::M, {"z"},
         "Jc(n,k) = Jc(n-1,k-1) + (n-1)(n-1+z) Jc(n-1,k)"},
        {"stirling2", Orientation::T, {},
         "S(n,k) = S(n-1,k-1) + k S(n-1,k)"},
        {"gen_jacobi_stirling2", Orientation::T, {"a1", "a2", "a3", "b1", "b2", "b3"},
         "J(n,k) = (a1 k^2 + a2 k + a3) J(n-1,k) + (b1 k^2 + b2 k + b3) J(n-1,k-1)"},
    };
    return entries;
}

std::pair<WeightScheme, Orientation> catalog_scheme(const std::string& name,
                                                    const CatalogParams& params) {
    if (name == "pascal_triangle") return {ones_scheme(1, 0), Orientation::M};
    if (name == "pascal_square") return {ones_scheme(0, 0), Orientation::M};
    if (name == "delannoy_square") return {ones_scheme(0, 1), Orientation::M};
    if (name == "delannoy_triangle") return {ones_scheme(1, 1), Orientation::M};

    if (name == "brenti") {
        WeightScheme s;
        s.t = param_int(params, "t", 0);
        if (s.t < 0) raise(ErrorCode::BadParameters, "brenti needs t >= 0");
        s.ell = 1;
        s.a.push_back(WeightRule::indexed("z"));
        s.a.push_back(WeightRule::indexed("y"));
        s.b = WeightRule::indexed("x");
        return {std::move(s), Orientation::M};
    }

    if (name == "delannoy_like") {
        MultiPoly e = param_or_var(params, "e");
        MultiPoly h = param_or_var(params, "h");
        WeightScheme s;
        s.t = 1;
        s.ell = 1;
        s.a.push_back(const_rule(1));
        s.a.push_back(WeightRule::constant(h));
        // b_1 = 1 so that the (1,0) entry is 1; b_n = e afterwards
        s.b = WeightRule::fn([e](int n) { return n <= 1 ? MultiPoly(1) : e; }, "1,e,e,...");
        return {std::move(s), Orientation::M};
    }

    if (name == "generalized_delannoy") {
        WeightScheme s;
        s.t = 1;
        s.ell = 1;
        s.a.push_back(WeightRule::constant(param_or_var(params, "a")));
        s.a.push_back(WeightRule::constant(param_or_var(params, "c")));
        s.b = WeightRule::constant(param_or_var(params, "b"));
        return {std::move(s), Orientation::M};
    }

    if (name == "stirling1") {
        WeightScheme s = ones_scheme(1, 0);
        s.b = WeightRule::poly_in_index(MultiPoly::parse("n-1"));
        return {std::move(s), Orientation::M};
    }

    if (name == "legendre_stirling1") {
        WeightScheme s = ones_scheme(1, 0);
        s.b = WeightRule::poly_in_index(MultiPoly::parse("n^2-n"));
        return {std::move(s), Orientation::M};
    }

    if (name == "jacobi_stirling1") {
        MultiPoly z = param_or_var(params, "z");
        WeightScheme s = ones_scheme(1, 0);
        // (n-1)(n-1+z) = n^2 - 2n + 1 + (n-1) z
        MultiPoly n = MultiPoly::var("n");
        MultiPoly expr = (n - MultiPoly(1)) * (n - MultiPoly(1)) + (n - MultiPoly(1)) * z;
        s.b = WeightRule::poly_in_index(std::move(expr));
        return {std::move(s), Orientation::M};
    }

    if (name == "stirling2") {
        WeightScheme s;
        s.t = 0;
        s.ell = 1;
        s.a.push_back(WeightRule::poly_in_index(MultiPoly::var("n"), "n")); // a_k^(0) = k
        s.a.push_back(const_rule(1));
        s.b = const_rule(0);
        return {std::move(s), Orientation::T};
    }

    if (name == "gen_jacobi_stirling2") {
        MultiPoly a1 = param_or_var(params, "a1"), a2 = param_or_var(params, "a2"),
                  a3 = param_or_var(params, "a3");
        MultiPoly b1 = param_or_var(params, "b1"), b2 = param_or_var(params, "b2"),
                  b3 = param_or_var(params, "b3");
        MultiPoly n = MultiPoly::var("n");
        WeightScheme s;
        s.t = 0;
        s.ell = 1;
        s.a.push_back(WeightRule::poly_in_index(a1 * n * n + a2 * n + a3));
        s.a.push_back(WeightRule::poly_in_index(b1 * n * n + b2 * n + b3));
        s.b = const_rule(0);
        return {std::move(s), Orientation::T};
    }

    raise(ErrorCode::UnknownName, "unknown catalog entry '" + name + "'");
}

std::string catalog_json() {
    json out = json::array();
    for (const auto& e : catalog_list()) {
        json j;
        j["name"] = e.name;
        j["orientation"] = e.orientation == Orientation::M ? "M" : "T";
        j["params"] = e.params;
        j["description"] = e.description;
        out.push_back(std::move(j));
    }
    return out.dump();
}

} // namespace latpos

#include "latpos/scheme.hpp"

#include <nlohmann/json.hpp>

namespace latpos {

using nlohmann::json;

WeightRule WeightRule::constant(MultiPoly value) {
    WeightRule r;
    r.kind_ = "constant";
    r.value_ = std::move(value);
    return r;
}

WeightRule WeightRule::table(std::vector<MultiPoly> values) {
    WeightRule r;
    r.kind_ = "table";
    r.values_ = std::move(values);
    return r;
}

WeightRule WeightRule::poly_in_index(MultiPoly expr, std::string index_var) {
    WeightRule r;
    r.kind_ = "poly_in_n";
    r.value_ = std::move(expr);
    r.aux_ = std::move(index_var);
    return r;
}

WeightRule WeightRule::indexed(std::string prefix) {
    WeightRule r;
    r.kind_ = "indexed";
    r.aux_ = std::move(prefix);
    return r;
}

WeightRule WeightRule::fn(std::function<MultiPoly(int)> f, std::string description) {
    WeightRule r;
    r.kind_ = "fn";
    r.fn_ = std::move(f);
    r.aux_ = std::move(description);
    return r;
}

MultiPoly WeightRule::operator()(int idx) const {
    if (idx < 0) raise(ErrorCode::BadArgument, "weight index must be nonnegative");
    MultiPoly v;
    if (kind_ == "constant") {
        v = value_;
    } else if (kind_ == "table") {
        if (idx >= static_cast<int>(values_.size()))
            raise(ErrorCode::BadArgument,
                  "weight table has " + std::to_string(values_.size()) +
                      " entries, index " + std::to_string(idx) + " requested");
        v = values_[idx];
    } else if (kind_ == "poly_in_n") {
        v = value_.substitute(aux_, Integer(idx));
    } else if (kind_ == "indexed") {
        v = MultiPoly::var(aux_ + std::to_string(idx));
    } else {
        v = fn_(idx);
    }
    if (auto neg = v.first_negative_term())
        raise(ErrorCode::InvalidWeight,
              "weight at index " + std::to_string(idx) + " = '" + v.str() +
                  "' has a negative coefficient");
    return v;
}

std::string WeightRule::describe() const {
    if (kind_ == "constant") return value_.str();
    if (kind_ == "table") {
        std::string s = "[";
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) s += ',';
            s += values_[i].str();
        }
        return s + "]";
    }
    if (kind_ == "poly_in_n") return value_.str() + " in " + aux_;
    if (kind_ == "indexed") return aux_ + "<n>";
    return aux_;
}

void WeightScheme::validate() const {
    if (t < 0 || ell < 0) raise(ErrorCode::BadParameters, "t and ell must be nonnegative");
    if (static_cast<int>(a.size()) != ell + 1)
        raise(ErrorCode::BadParameters, "scheme needs ell+1 slanted weight tables");
}

MultiPoly WeightScheme::a_weight(int n, int i) const {
    if (i < 0 || i > ell) return MultiPoly(0);
    return a[static_cast<std::size_t>(i)](n);
}

MultiPoly WeightScheme::b_weight(int n) const { return b(n); }

bool WeightScheme::constant_a() const {
    for (const auto& r : a)
        if (r.kind() != "constant") return false;
    return true;
}

bool WeightScheme::constant_b() const { return b.kind() == "constant"; }

namespace {

json rule_to_json(const WeightRule& r, int probe_hi) {
    json j;
    if (r.kind() == "constant") {
        j["kind"] = "constant";
        j["value"] = r(0).str();
    } else if (r.kind() == "poly_in_n" || r.kind() == "indexed" || r.kind() == "fn" ||
               r.kind() == "table") {
        // Everything non-constant serializes as a finite table; the caller
        // chooses how far to materialize.
        j["kind"] = "table";
        json vals = json::array();
        for (int i = 0; i <= probe_hi; ++i) vals.push_back(r(i).str());
        j["values"] = std::move(vals);
    }
    return j;
}

WeightRule rule_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        raise(ErrorCode::ParseError, "weight rule must be an object with a 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant")
        return WeightRule::constant(MultiPoly::parse(j.at("value").get<std::string>()));
    if (kind == "table") {
        std::vector<MultiPoly> vals;
        for (const auto& v : j.at("values")) vals.push_back(MultiPoly::parse(v.get<std::string>()));
        return WeightRule::table(std::move(vals));
    }
    if (kind == "poly_in_n")
        return WeightRule::poly_in_index(MultiPoly::parse(j.at("expr").get<std::string>()));
    raise(ErrorCode::ParseError, "unknown weight rule kind '" + kind + "'");
}

} // namespace

std::string WeightScheme::to_json() const {
    json j;
    j["t"] = t;
    j["ell"] = ell;
    json as = json::array();
    for (const auto& r : a) as.push_back(rule_to_json(r, 24));
    j["a"] = std::move(as);
    j["b"] = rule_to_json(b, 24);
    j["vars"] = vars;
    return j.dump();
}

WeightScheme WeightScheme::from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) raise(ErrorCode::ParseError, "invalid scheme JSON");
    WeightScheme s;
    try {
        s.t = j.at("t").get<int>();
        s.ell = j.at("ell").get<int>();
        const json& aj = j.at("a");
        if (aj.is_array()) {
            for (const auto& r : aj) s.a.push_back(rule_from_json(r));
        } else {
            s.a.push_back(rule_from_json(aj));
        }
        s.b = rule_from_json(j.at("b"));
        if (j.contains("vars"))
            for (const auto& v : j.at("vars")) s.vars.push_back(v.get<std::string>());
    } catch (const json::exception& e) {
        raise(ErrorCode::ParseError, std::string("scheme JSON: ") + e.what());
    }
    s.validate();
    return s;
}

} // namespace latpos

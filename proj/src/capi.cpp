#include "latpos.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "latpos/battery.hpp"
#include "latpos/catalog.hpp"
#include "latpos/lgv.hpp"
#include "latpos/riordan.hpp"
#include "latpos/seqprops.hpp"
#include "latpos/structural.hpp"

using nlohmann::json;

struct latpos_scheme {
    latpos::WeightScheme scheme;
    latpos::Orientation orientation;
};

struct latpos_matrix {
    latpos::PolyMatrix m;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

latpos_status status_of(const latpos::Error& e) {
    switch (e.code()) {
    case latpos::ErrorCode::CapExceeded:
        return LATPOS_CAP_EXCEEDED;
    case latpos::ErrorCode::BadArgument:
    case latpos::ErrorCode::BadParameters:
    case latpos::ErrorCode::UnknownName:
    case latpos::ErrorCode::ParseError:
    case latpos::ErrorCode::OutOfBounds:
    case latpos::ErrorCode::OutOfWindow:
    case latpos::ErrorCode::IndexBeyondTruncation:
        return LATPOS_BAD_ARGUMENT;
    default:
        return LATPOS_ERROR;
    }
}

template <typename Fn>
latpos_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const latpos::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LATPOS_ERROR;
    }
}

latpos_status need(bool cond, const char* message) {
    if (cond) return LATPOS_OK;
    g_last_error = message;
    return LATPOS_BAD_ARGUMENT;
}

latpos::Extraction parse_what(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        latpos::raise(latpos::ErrorCode::ParseError, "slice spec must be a JSON object");
    if (j.contains("row")) return latpos::Extraction::row(j.at("row").get<int>());
    if (j.contains("column")) return latpos::Extraction::column(j.at("column").get<int>());
    if (j.contains("diagonal")) {
        auto v = j.at("diagonal");
        if (!v.is_array() || v.size() != 4)
            latpos::raise(latpos::ErrorCode::ParseError, "diagonal spec needs [n,k,delta,sigma]");
        return latpos::Extraction::diagonal(v[0].get<int>(), v[1].get<int>(), v[2].get<int>(),
                                            v[3].get<int>());
    }
    latpos::raise(latpos::ErrorCode::ParseError, "slice spec needs row, column or diagonal");
}

// Builds a truncation large enough for the requested slice.
latpos::TriangleTruncation truncation_for(const latpos_scheme* s, const latpos::Extraction& e,
                                          int count) {
    int rows = 1, cols = 1;
    switch (e.what) {
    case latpos::Extraction::What::row:
        rows = e.n + 1;
        cols = count;
        break;
    case latpos::Extraction::What::column:
        rows = count;
        cols = e.k + 1;
        break;
    case latpos::Extraction::What::diagonal:
        rows = e.n + e.delta * (count - 1) + 1;
        cols = e.k + e.sigma * (count - 1) + 1;
        break;
    }
    if (s->orientation == latpos::Orientation::T)
        return build_transpose_rec(s->scheme, rows - 1, cols - 1);
    return build_matrix_rec1(s->scheme, rows - 1, cols - 1);
}

struct LgvConfig {
    std::string variant = "tridiag";
    std::string network = "star";
    int t = 1, n = 3, ell = 1, k = 2, m = 1, delta = 1, sigma = 2, order = 2;
};

LgvConfig parse_lgv_config(const char* text) {
    LgvConfig c;
    if (!text || !*text) return c;
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        latpos::raise(latpos::ErrorCode::ParseError, "network config must be a JSON object");
    auto get = [&](const char* key, int& slot) {
        if (j.contains(key)) slot = j.at(key).get<int>();
    };
    if (j.contains("variant")) c.variant = j.at("variant").get<std::string>();
    if (j.contains("network")) c.network = j.at("network").get<std::string>();
    get("t", c.t);
    get("n", c.n);
    get("ell", c.ell);
    get("k", c.k);
    get("m", c.m);
    get("delta", c.delta);
    get("sigma", c.sigma);
    get("order", c.order);
    return c;
}

latpos::PlanarNetwork build_from_config(const LgvConfig& c) {
    using namespace latpos;
    if (c.variant == "tridiag") {
        TridiagParams p{WeightRule::indexed("al"), WeightRule::indexed("be"),
                        WeightRule::indexed("la"), WeightRule::indexed("mu"),
                        WeightRule::indexed("b")};
        if (c.network == "layer") return build_gamma_tridiag(c.n, p, c.t);
        if (c.network == "star") return build_gamma_star(c.n, p, c.t);
        if (c.network == "diamond") return build_gamma_diamond(c.n, c.k, p, c.t);
        raise(ErrorCode::BadParameters,
              "tridiagonal variant supports layer, star and diamond networks");
    }
    if (c.variant != "general")
        raise(ErrorCode::BadParameters, "variant must be 'tridiag' or 'general'");
    GeneralParams p;
    for (int j = 1; j <= c.ell; ++j) {
        p.alpha.push_back(MultiPoly::var("a" + std::to_string(j)));
        p.beta.push_back(MultiPoly::var("c" + std::to_string(j)));
    }
    p.b = c.network == "circ" ? WeightRule::constant(MultiPoly::var("g"))
                              : WeightRule::indexed("b");
    if (c.network == "layer") return build_gamma_general(c.n, p, c.t);
    if (c.network == "star") return build_gamma_star(c.n, p, c.t);
    if (c.network == "diamond") return build_gamma_diamond(c.n, c.k, p, c.t);
    if (c.network == "circ")
        return build_gamma_circ(c.m, c.n, c.k, c.delta, c.sigma, p, c.t);
    raise(ErrorCode::BadParameters, "network must be layer, star, diamond or circ");
}

// Reference truncation the walk matrix of a configured network must equal.
latpos::PolyMatrix expected_walk_matrix(const LgvConfig& c) {
    using namespace latpos;
    WeightScheme s;
    if (c.variant == "tridiag") {
        s = tridiag_factor_params(WeightRule::indexed("al"), WeightRule::indexed("be"),
                                  WeightRule::indexed("la"), WeightRule::indexed("mu"),
                                  WeightRule::indexed("b"), c.t);
    } else {
        s.t = c.t;
        s.ell = c.ell;
        std::vector<MultiPoly> al, be;
        for (int j = 1; j <= c.ell; ++j) {
            al.push_back(MultiPoly::var("a" + std::to_string(j)));
            be.push_back(MultiPoly::var("c" + std::to_string(j)));
        }
        for (auto& cc : band_coefficients(al, be)) s.a.push_back(WeightRule::constant(cc));
        s.b = c.network == "circ" ? WeightRule::constant(MultiPoly::var("g"))
                                  : WeightRule::indexed("b");
    }
    if (c.network == "layer") return build_P_tilde(s, c.n + 1, c.n + 1);
    if (c.network == "star") return build_matrix_rec1(s, c.n, c.n).entries;
    if (c.network == "diamond") {
        TriangleTruncation tri = build_matrix_rec1(s, c.n, c.n);
        PolyMatrix w(c.k + 1, c.k + 1);
        for (int i = 0; i <= c.k; ++i)
            for (int j = 0; j <= c.k; ++j) {
                int col = i - j;
                if (col >= 0 && col <= c.n) w.at(i, j) = tri.entries.at(c.n, col);
            }
        return w;
    }
    // circ
    TriangleTruncation tri =
        build_matrix_rec1(s, c.n + c.m * c.delta, c.k + c.m * c.sigma);
    PolyMatrix w(c.m + 1, c.m + 1);
    for (int i = 0; i <= c.m; ++i)
        for (int j = 0; j <= c.m; ++j)
            if (i >= j)
                w.at(i, j) = tri.entries.at(c.n + (i - j) * c.delta, c.k + (i - j) * c.sigma);
    return w;
}

} // namespace

extern "C" {

const char* latpos_last_error(void) { return g_last_error.c_str(); }

void latpos_free_string(char* s) { std::free(s); }

latpos_status latpos_scheme_from_catalog(const char* name, const char* params_json,
                                         latpos_scheme** out) {
    return guarded([&]() -> latpos_status {
        if (need(name && out, "name and out must be non-null") != LATPOS_OK)
            return LATPOS_BAD_ARGUMENT;
        latpos::CatalogParams params;
        if (params_json && *params_json) {
            json j = json::parse(params_json, nullptr, false);
            if (j.is_discarded() || !j.is_object())
                latpos::raise(latpos::ErrorCode::ParseError, "params must be a JSON object");
            for (auto it = j.begin(); it != j.end(); ++it)
                params[it.key()] = it.value().is_string() ? it.value().get<std::string>()
                                                          : it.value().dump();
        }
        auto [scheme, orientation] = latpos::catalog_scheme(name, params);
        *out = new latpos_scheme{std::move(scheme), orientation};
        return LATPOS_OK;
    });
}

latpos_status latpos_scheme_from_json(const char* json_text, latpos_scheme** out) {
    return guarded([&]() -> latpos_status {
        if (need(json_text && out, "json_text and out must be non-null") != LATPOS_OK)
            return LATPOS_BAD_ARGUMENT;
        latpos::WeightScheme s = latpos::WeightScheme::from_json(json_text);
        *out = new latpos_scheme{std::move(s), latpos::Orientation::M};
        return LATPOS_OK;
    });
}

latpos_status latpos_scheme_to_json(const latpos_scheme* s, char** out) {
    return guarded([&]() -> latpos_status {
        if (need(s && out, "scheme and out must be non-null") != LATPOS_OK)
            return LATPOS_BAD_ARGUMENT;
        *out = dup_string(s->scheme.to_json());
        return LATPOS_OK;
    });
}

int latpos_scheme_orientation(const latpos_scheme* s) {
    return s && s->orientation == latpos::Orientation::T ? 1 : 0;
}

void latpos_scheme_free(latpos_scheme* s) { delete s; }

latpos_status latpos_catalog_json(char** out) {
    return guarded([&]() -> latpos_status {
        if (need(out != nullptr, "out must be non-null") != LATPOS_OK) return LATPOS_BAD_ARGUMENT;
        *out = dup_string(latpos::catalog_json());
        return LATPOS_OK;
    });
}

latpos_status latpos_build_truncation(const latpos_scheme* s, int rows, int cols,
                                      const char* route, latpos_matrix** out) {
    return guarded([&]() -> latpos_status {
        if (need(s && out, "scheme and out must be non-null") != LATPOS_OK)
            return LATPOS_BAD_ARGUMENT;
        std::string r = route ? route : "auto";
        if (r == "auto")
            r = s->orientation == latpos::Orientation::T ? "transpose" : "rec1";
        latpos::PolyMatrix m;
        if (r == "rec1") {
            m = latpos::build_matrix_rec1(s->scheme, rows - 1, cols - 1).entries;
        } else if (r == "rec2") {
            m = latpos::build_matrix_rec2(s->scheme, rows - 1, cols - 1).entries;
        } else if (r == "transpose") {
            m = latpos::build_transpose_rec(s->scheme, rows - 1, cols - 1).entries;
        } else if (r == "oracle") {
            m = latpos::PolyMatrix(rows, cols);
            for (int n = 0; n < rows; ++n)
                for (int k = 0; k < cols; ++k)
                    m.at(n, k) = latpos::matrix_entry_oracle(s->scheme, n, k);
        } else {
            latpos::raise(latpos::ErrorCode::BadArgument,
                          "route must be rec1, rec2, oracle, transpose or auto");
        }
        *out = new latpos_matrix{std::move(m)};
        return LATPOS_OK;
    });
}

int latpos_matrix_rows(const latpos_matrix* m) { return m ? m->m.rows() : 0; }
int latpos_matrix_cols(const latpos_matrix* m) { return m ? m->m.cols() : 0; }

latpos_status latpos_matrix_entry(const latpos_matrix* m, int row, int col, char** out) {
    return guarded([&]() -> latpos_status {
        if (need(m && out, "matrix and out must be non-null") != LATPOS_OK)
            return LATPOS_BAD_ARGUMENT;
        *out = dup_string(m->m.at(row, col).str());
        return LATPOS_OK;
    });
}

latpos_status latpos_matrix_render(const latpos_matrix* m, const char* format, char** out) {
    return guarded([&]() -> latpos_status {
        if (need(m && out && format, "matrix, format and out must be non-null") != LATPOS_OK)
            return LATPOS_BAD_ARGUMENT;
        std::string f = format;
        if (f == "csv")
            *out = dup_string(m->m.to_csv());
        else if (f == "json")
            *out = dup_string(m->m.to_json());
        else
            latpos::raise(latpos::ErrorCode::BadArgument, "format must be csv or json");
        return LATPOS_OK;
    });
}

void latpos_matrix_free(latpos_matrix* m) { delete m; }

latpos_status latpos_tp_report(const latpos_matrix* m, int order, int threads, char** out) {
    return guarded([&]() -> latpos_status {
        if (need(m && out, "matrix and out must be non-null") != LATPOS_OK)
            return LATPOS_BAD_ARGUMENT;
        *out = dup_string(latpos::is_tp_order(m->m, order, threads).to_json());
        return LATPOS_OK;
    });
}

latpos_status latpos_toeplitz_report(const latpos_scheme* s, const char* what_json, int window,
                                     int order, char** out) {
    return guarded([&]() -> latpos_status {
        if (need(s && what_json && out, "scheme, slice and out must be non-null") != LATPOS_OK)
            return LATPOS_BAD_ARGUMENT;
        latpos::Extraction e = parse_what(what_json);
        latpos::TriangleTruncation tri = truncation_for(s, e, window + 1);
        latpos::PolySequence seq = latpos::extract(tri, e, window + 1);
        latpos::TPReport rep = latpos::is_tp_order(latpos::toeplitz(seq.terms, window), order);
        json j = json::parse(rep.to_json());
        j["origin"] = seq.origin;
        j["window"] = window;
        *out = dup_string(j.dump());
        return LATPOS_OK;
    });
}

latpos_status latpos_sequence_report(const latpos_scheme* s, const char* what_json, int count,
                                     int window, int order, int logconcave_depth, char** out) {
    return guarded([&]() -> latpos_status {
        if (need(s && what_json && out, "scheme, slice and out must be non-null") != LATPOS_OK)
            return LATPOS_BAD_ARGUMENT;
        latpos::Extraction e = parse_what(what_json);
        latpos::TriangleTruncation tri = truncation_for(s, e, count);
        latpos::PolySequence seq = latpos::extract(tri, e, count);
        *out = dup_string(latpos::sequence_report_json(seq, window, order, logconcave_depth));
        return LATPOS_OK;
    });
}

latpos_status latpos_riordan_report(const latpos_scheme* s, int order, char** out) {
    return guarded([&]() -> latpos_status {
        if (need(s && out, "scheme and out must be non-null") != LATPOS_OK)
            return LATPOS_BAD_ARGUMENT;
        const latpos::WeightScheme& ws = s->scheme;
        if (!ws.constant_a() || !ws.constant_b())
            latpos::raise(latpos::ErrorCode::BadParameters,
                          "the closed-form route needs constant weights");
        latpos::ConstantScheme cs;
        cs.t = ws.t;
        cs.ell = ws.ell;
        for (int i = 0; i <= ws.ell; ++i) cs.a.push_back(ws.a_weight(0, i));
        cs.gamma = ws.b_weight(0);
        if (ws.ell == 1)
            cs.factors = std::make_pair(std::vector<latpos::MultiPoly>{cs.a[1]},
                                        std::vector<latpos::MultiPoly>{cs.a[0]});
        latpos::RiordanSpec spec = latpos::riordan_from_scheme(cs, static_cast<unsigned>(order));
        latpos::TriangleTruncation tri = latpos::build_matrix_rec1(ws, order, order);
        bool agree = true;
        for (int n = 0; n <= order && agree; ++n)
            for (int k = 0; k <= order && agree; ++k) {
                agree = latpos::riordan_entry(spec, n, k) == tri.entries.at(n, k);
                if (agree && cs.factors)
                    agree = latpos::explicit_entry(cs, n, k) == tri.entries.at(n, k);
            }
        bool gf = latpos::bivariate_gf_check(cs, order, std::min(order, 6));
        json j;
        j["order"] = order;
        j["series_route_agrees"] = agree;
        j["explicit_route_included"] = cs.factors.has_value();
        j["generating_function_agrees"] = gf;
        j["passed"] = agree && gf;
        j["spec"] = json::parse(spec.to_json());
        *out = dup_string(j.dump());
        return LATPOS_OK;
    });
}

latpos_status latpos_lgv_report(const char* config_json, char** out) {
    return guarded([&]() -> latpos_status {
        if (need(out != nullptr, "out must be non-null") != LATPOS_OK) return LATPOS_BAD_ARGUMENT;
        LgvConfig c = parse_lgv_config(config_json);
        latpos::PlanarNetwork net = build_from_config(c);
        latpos::PolyMatrix walk = latpos::walk_matrix(net);
        latpos::PolyMatrix want = expected_walk_matrix(c);
        bool walk_ok = walk == want;
        // every minor of order <= c.order against the signed sum
        bool minors_ok = true;
        std::size_t checked = 0;
        int srcs = static_cast<int>(net.sources().size());
        for (int order = 1; order <= std::min(c.order, srcs) && minors_ok; ++order) {
            std::vector<int> rsel(static_cast<std::size_t>(order)),
                csel(static_cast<std::size_t>(order));
            std::function<bool(int, int, bool)> choose = [&](int start, int depth,
                                                             bool picking_rows) {
                if (depth == order) {
                    if (picking_rows) return choose(0, 0, false);
                    ++checked;
                    return latpos::lgv_verify(net, latpos::MinorSpec{rsel, csel});
                }
                for (int v = start; v < srcs; ++v) {
                    auto& slot = picking_rows ? rsel : csel;
                    slot[static_cast<std::size_t>(depth)] = v;
                    if (!choose(v + 1, depth + 1, picking_rows)) return false;
                }
                return true;
            };
            minors_ok = choose(0, 0, true);
        }
        json j;
        j["variant"] = c.variant;
        j["network"] = c.network;
        j["walk_matrix_matches"] = walk_ok;
        j["minors_checked"] = checked;
        j["minors_match_signed_sums"] = minors_ok;
        j["passed"] = walk_ok && minors_ok;
        *out = dup_string(j.dump());
        return LATPOS_OK;
    });
}

latpos_status latpos_network_json(const char* config_json, char** out) {
    return guarded([&]() -> latpos_status {
        if (need(out != nullptr, "out must be non-null") != LATPOS_OK) return LATPOS_BAD_ARGUMENT;
        LgvConfig c = parse_lgv_config(config_json);
        *out = dup_string(build_from_config(c).to_json());
        return LATPOS_OK;
    });
}

latpos_status latpos_verify_all(uint64_t seed, int threads, char** report_out,
                                char** timing_out) {
    return guarded([&]() -> latpos_status {
        if (need(report_out != nullptr, "report_out must be non-null") != LATPOS_OK)
            return LATPOS_BAD_ARGUMENT;
        latpos::BatteryReport rep = latpos::run_battery(seed, threads);
        *report_out = dup_string(rep.to_json());
        if (timing_out) *timing_out = dup_string(rep.timing_summary());
        return LATPOS_OK;
    });
}

} // extern "C"

// latpos command-line front end. Links the shared library through the C API
// only; all structured data moves as JSON strings.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latpos.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

int exit_code_for(latpos_status st) {
    switch (st) {
    case LATPOS_OK:
        return kExitOk;
    case LATPOS_CAP_EXCEEDED:
        return kExitCapExceeded;
    case LATPOS_BAD_ARGUMENT:
        return kExitUsage;
    default:
        return kExitUsage;
    }
}

// Owned C string from the library.
struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { latpos_free_string(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct OwnedScheme {
    latpos_scheme* ptr = nullptr;
    ~OwnedScheme() { latpos_scheme_free(ptr); }
};

struct OwnedMatrix {
    latpos_matrix* ptr = nullptr;
    ~OwnedMatrix() { latpos_matrix_free(ptr); }
};

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// Emits {"code", "message"} on stderr and exits with the mapped code.
[[noreturn]] void die(latpos_status st) {
    std::cerr << "{\"code\":" << exit_code_for(st) << ",\"message\":\""
              << json_escape(latpos_last_error()) << "\"}" << std::endl;
    std::exit(exit_code_for(st));
}

struct SchemeOptions {
    std::string catalog_name;
    std::vector<std::string> params; // key=value
    std::string scheme_file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--catalog", catalog_name, "catalog entry name");
        cmd->add_option("--param", params, "catalog parameter key=value (repeatable)");
        cmd->add_option("--scheme", scheme_file, "path to a scheme JSON document");
    }

    latpos_scheme* load() const {
        latpos_scheme* s = nullptr;
        latpos_status st;
        if (!scheme_file.empty()) {
            std::ifstream in(scheme_file);
            if (!in) {
                std::cerr << "{\"code\":2,\"message\":\"cannot read scheme file\"}" << std::endl;
                std::exit(kExitUsage);
            }
            std::stringstream buf;
            buf << in.rdbuf();
            st = latpos_scheme_from_json(buf.str().c_str(), &s);
        } else if (!catalog_name.empty()) {
            std::string pj = "{";
            for (std::size_t i = 0; i < params.size(); ++i) {
                auto eq = params[i].find('=');
                if (eq == std::string::npos) {
                    std::cerr << "{\"code\":2,\"message\":\"--param needs key=value\"}"
                              << std::endl;
                    std::exit(kExitUsage);
                }
                if (i) pj += ',';
                pj += "\"" + json_escape(params[i].substr(0, eq)) + "\":\"" +
                      json_escape(params[i].substr(eq + 1)) + "\"";
            }
            pj += "}";
            st = latpos_scheme_from_catalog(catalog_name.c_str(), pj.c_str(), &s);
        } else {
            std::cerr << "{\"code\":2,\"message\":\"need --catalog or --scheme\"}" << std::endl;
            std::exit(kExitUsage);
        }
        if (st != LATPOS_OK) {
            std::cerr << "{\"code\":" << exit_code_for(st) << ",\"message\":\""
                      << json_escape(latpos_last_error()) << "\"}" << std::endl;
            std::exit(exit_code_for(st));
        }
        return s;
    }
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    out << text;
}

bool json_field_true(const std::string& j, const std::string& field) {
    return j.find("\"" + field + "\":true") != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-path matrices, total positivity and planar-network checks"};
    app.require_subcommand(1);

    // --- catalog ---
    auto* cmd_catalog = app.add_subcommand("catalog", "list the built-in schemes");

    // --- gen ---
    auto* cmd_gen = app.add_subcommand("gen", "build a truncation and print it");
    SchemeOptions gen_scheme;
    gen_scheme.attach(cmd_gen);
    int gen_rows = 6, gen_cols = 6;
    std::string gen_route = "auto", gen_format = "csv", gen_out;
    cmd_gen->add_option("--rows", gen_rows, "row count");
    cmd_gen->add_option("--cols", gen_cols, "column count");
    cmd_gen->add_option("--route", gen_route, "rec1|rec2|oracle|transpose|auto");
    cmd_gen->add_option("--format", gen_format, "csv|json");
    cmd_gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // --- tp ---
    auto* cmd_tp = app.add_subcommand("tp", "total-positivity-of-order check on a truncation");
    SchemeOptions tp_scheme;
    tp_scheme.attach(cmd_tp);
    int tp_rows = 8, tp_cols = 8, tp_order = 4, tp_threads = 0;
    std::string tp_route = "auto";
    cmd_tp->add_option("--rows", tp_rows, "row count");
    cmd_tp->add_option("--cols", tp_cols, "column count");
    cmd_tp->add_option("--order", tp_order, "maximal minor order");
    cmd_tp->add_option("--route", tp_route, "rec1|rec2|oracle|transpose|auto");
    cmd_tp->add_option("--threads", tp_threads, "thread cap (0 = auto)");

    // --- toeplitz ---
    auto* cmd_toe = app.add_subcommand("toeplitz",
                                       "Toeplitz window of a row/column/diagonal slice + check");
    SchemeOptions toe_scheme;
    toe_scheme.attach(cmd_toe);
    int toe_row = -1, toe_col = -1, toe_window = 6, toe_order = 4;
    std::vector<int> toe_diag;
    cmd_toe->add_option("--row", toe_row, "row index");
    cmd_toe->add_option("--col", toe_col, "column index");
    cmd_toe->add_option("--diag", toe_diag, "diagonal n k delta sigma")->expected(4);
    cmd_toe->add_option("--window", toe_window, "Toeplitz window size");
    cmd_toe->add_option("--order", toe_order, "maximal minor order");

    // --- seq ---
    auto* cmd_seq = app.add_subcommand("seq", "sequence positivity and log-concavity report");
    SchemeOptions seq_scheme;
    seq_scheme.attach(cmd_seq);
    int seq_row = -1, seq_col = -1, seq_count = 8, seq_window = 6, seq_order = 4, seq_lc = 5;
    std::vector<int> seq_diag;
    bool seq_pf = false;
    cmd_seq->add_option("--row", seq_row, "row index");
    cmd_seq->add_option("--col", seq_col, "column index");
    cmd_seq->add_option("--diag", seq_diag, "diagonal n k delta sigma")->expected(4);
    cmd_seq->add_option("--count", seq_count, "number of terms");
    cmd_seq->add_option("--window", seq_window, "Toeplitz window size");
    cmd_seq->add_option("--order", seq_order, "maximal minor order");
    cmd_seq->add_flag("--pf", seq_pf, "require the window check to pass");
    cmd_seq->add_option("--logconcave", seq_lc, "log-concavity iteration depth");

    // --- riordan ---
    auto* cmd_rio = app.add_subcommand("riordan", "closed-form route agreement report");
    SchemeOptions rio_scheme;
    rio_scheme.attach(cmd_rio);
    int rio_order = 10;
    cmd_rio->add_option("--order", rio_order, "truncation order");

    // --- lgv ---
    auto* cmd_lgv = app.add_subcommand("lgv", "build a digraph and verify its walk matrix");
    std::string lgv_variant = "tridiag", lgv_network = "star", lgv_export;
    int lgv_t = 1, lgv_n = 3, lgv_ell = 1, lgv_k = 2, lgv_m = 1, lgv_delta = 1, lgv_sigma = 2,
        lgv_order = 2;
    cmd_lgv->add_option("--variant", lgv_variant, "tridiag|general");
    cmd_lgv->add_option("--network", lgv_network, "layer|star|diamond|circ");
    cmd_lgv->add_option("--t", lgv_t, "slant offset t");
    cmd_lgv->add_option("--n", lgv_n, "window index n");
    cmd_lgv->add_option("--ell", lgv_ell, "bandwidth (general variant)");
    cmd_lgv->add_option("--k", lgv_k, "Toeplitz window index k");
    cmd_lgv->add_option("--m", lgv_m, "skew window index m");
    cmd_lgv->add_option("--delta", lgv_delta, "row step");
    cmd_lgv->add_option("--sigma", lgv_sigma, "column step");
    cmd_lgv->add_option("--order", lgv_order, "verify minors up to this order");
    cmd_lgv->add_option("--export", lgv_export, "write the arc-list JSON to this file");

    // --- verify-all ---
    auto* cmd_all = app.add_subcommand("verify-all", "run the full verification battery");
    std::uint64_t all_seed = 42;
    int all_threads = 0;
    cmd_all->add_option("--seed", all_seed, "seed for the randomized sub-batteries");
    cmd_all->add_option("--threads", all_threads, "thread cap (0 = auto)");

    CLI11_PARSE(app, argc, argv);

    if (*cmd_catalog) {
        OwnedString out;
        latpos_status st = latpos_catalog_json(&out.ptr);
        if (st != LATPOS_OK) die(st);
        std::cout << out.str() << std::endl;
        return kExitOk;
    }

    if (*cmd_gen) {
        OwnedScheme s{gen_scheme.load()};
        OwnedMatrix m;
        latpos_status st =
            latpos_build_truncation(s.ptr, gen_rows, gen_cols, gen_route.c_str(), &m.ptr);
        if (st != LATPOS_OK) die(st);
        OwnedString text;
        st = latpos_matrix_render(m.ptr, gen_format.c_str(), &text.ptr);
        if (st != LATPOS_OK) die(st);
        write_output(text.str(), gen_out);
        return kExitOk;
    }

    if (*cmd_tp) {
        OwnedScheme s{tp_scheme.load()};
        OwnedMatrix m;
        latpos_status st =
            latpos_build_truncation(s.ptr, tp_rows, tp_cols, tp_route.c_str(), &m.ptr);
        if (st != LATPOS_OK) die(st);
        OwnedString rep;
        st = latpos_tp_report(m.ptr, tp_order, tp_threads, &rep.ptr);
        if (st != LATPOS_OK) die(st);
        std::cout << rep.str() << std::endl;
        return json_field_true(rep.str(), "passed") ? kExitOk : kExitCheckFailed;
    }

    auto slice_json = [](int row, int col, const std::vector<int>& diag) -> std::string {
        if (row >= 0) return "{\"row\":" + std::to_string(row) + "}";
        if (col >= 0) return "{\"column\":" + std::to_string(col) + "}";
        if (diag.size() == 4)
            return "{\"diagonal\":[" + std::to_string(diag[0]) + "," + std::to_string(diag[1]) +
                   "," + std::to_string(diag[2]) + "," + std::to_string(diag[3]) + "]}";
        std::cerr << "{\"code\":2,\"message\":\"need --row, --col or --diag\"}" << std::endl;
        std::exit(kExitUsage);
    };

    if (*cmd_toe) {
        OwnedScheme s{toe_scheme.load()};
        OwnedString rep;
        latpos_status st = latpos_toeplitz_report(
            s.ptr, slice_json(toe_row, toe_col, toe_diag).c_str(), toe_window, toe_order,
            &rep.ptr);
        if (st != LATPOS_OK) die(st);
        std::cout << rep.str() << std::endl;
        return json_field_true(rep.str(), "passed") ? kExitOk : kExitCheckFailed;
    }

    if (*cmd_seq) {
        OwnedScheme s{seq_scheme.load()};
        OwnedString rep;
        latpos_status st = latpos_sequence_report(
            s.ptr, slice_json(seq_row, seq_col, seq_diag).c_str(), seq_count, seq_window,
            seq_order, seq_lc, &rep.ptr);
        if (st != LATPOS_OK) die(st);
        std::cout << rep.str() << std::endl;
        if (seq_pf && !json_field_true(rep.str(), "pf")) return kExitCheckFailed;
        return kExitOk;
    }

    if (*cmd_rio) {
        OwnedScheme s{rio_scheme.load()};
        OwnedString rep;
        latpos_status st = latpos_riordan_report(s.ptr, rio_order, &rep.ptr);
        if (st != LATPOS_OK) die(st);
        std::cout << rep.str() << std::endl;
        return json_field_true(rep.str(), "passed") ? kExitOk : kExitCheckFailed;
    }

    if (*cmd_lgv) {
        std::string config = "{\"variant\":\"" + lgv_variant + "\",\"network\":\"" + lgv_network +
                             "\",\"t\":" + std::to_string(lgv_t) +
                             ",\"n\":" + std::to_string(lgv_n) +
                             ",\"ell\":" + std::to_string(lgv_ell) +
                             ",\"k\":" + std::to_string(lgv_k) +
                             ",\"m\":" + std::to_string(lgv_m) +
                             ",\"delta\":" + std::to_string(lgv_delta) +
                             ",\"sigma\":" + std::to_string(lgv_sigma) +
                             ",\"order\":" + std::to_string(lgv_order) + "}";
        if (!lgv_export.empty()) {
            OwnedString net;
            latpos_status st = latpos_network_json(config.c_str(), &net.ptr);
            if (st != LATPOS_OK) die(st);
            write_output(net.str(), lgv_export);
        }
        OwnedString rep;
        latpos_status st = latpos_lgv_report(config.c_str(), &rep.ptr);
        if (st != LATPOS_OK) die(st);
        std::cout << rep.str() << std::endl;
        return json_field_true(rep.str(), "passed") ? kExitOk : kExitCheckFailed;
    }

    if (*cmd_all) {
        OwnedString rep, timing;
        latpos_status st = latpos_verify_all(all_seed, all_threads, &rep.ptr, &timing.ptr);
        if (st != LATPOS_OK) die(st);
        std::cout << rep.str() << std::endl;
        std::cerr << timing.str();
        return json_field_true(rep.str(), "all_passed") ? kExitOk : kExitCheckFailed;
    }

    return kExitUsage;
}

#include "latpos/battery.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "latpos/catalog.hpp"
#include "latpos/lgv.hpp"
#include "latpos/riordan.hpp"
#include "latpos/seqprops.hpp"
#include "latpos/structural.hpp"

namespace latpos {

using nlohmann::json;

namespace {

struct BatteryScheme {
    std::string name;
    WeightScheme scheme;
    bool numeric = false;
    bool constant_b = false;
};

long draw(std::mt19937_64& rng, long n) {
    return static_cast<long>(rng() % static_cast<std::uint64_t>(n));
}

// Random nonnegative weight: small constant, possibly with a symbolic part.
MultiPoly random_weight(std::mt19937_64& rng, bool symbolic) {
    MultiPoly w(1 + draw(rng, 3));
    if (symbolic && draw(rng, 2) == 0)
        w += MultiPoly(1 + draw(rng, 2)) * MultiPoly::var(draw(rng, 2) ? "u" : "v");
    return w;
}

// Unrestricted random scheme for the route-agreement and identity criteria.
WeightScheme random_scheme(std::mt19937_64& rng) {
    WeightScheme s;
    s.t = static_cast<int>(draw(rng, 3));
    s.ell = 1 + static_cast<int>(draw(rng, 3));
    for (int i = 0; i <= s.ell; ++i) {
        std::vector<MultiPoly> tab;
        for (int n = 0; n < 32; ++n) tab.push_back(random_weight(rng, true));
        s.a.push_back(WeightRule::table(std::move(tab)));
    }
    std::vector<MultiPoly> btab;
    for (int n = 0; n < 32; ++n) btab.push_back(random_weight(rng, true));
    s.b = WeightRule::table(std::move(btab));
    return s;
}

// The twelve-scheme battery: the row-recursive catalog entries with numeric
// parameters plus three randomized symbolic schemes.
std::vector<BatteryScheme> battery_schemes(std::mt19937_64& rng) {
    std::vector<BatteryScheme> out;
    auto add = [&](const std::string& name, WeightScheme s, bool numeric, bool cb) {
        out.push_back(BatteryScheme{name, std::move(s), numeric, cb});
    };
    add("pascal_triangle", catalog_scheme("pascal_triangle").first, true, true);
    add("pascal_square", catalog_scheme("pascal_square").first, true, true);
    add("delannoy_square", catalog_scheme("delannoy_square").first, true, true);
    add("delannoy_triangle", catalog_scheme("delannoy_triangle").first, true, true);
    add("delannoy_like(2,3)", catalog_scheme("delannoy_like", {{"e", "2"}, {"h", "3"}}).first,
        true, false);
    add("generalized_delannoy(2,1,3)",
        catalog_scheme("generalized_delannoy", {{"a", "2"}, {"b", "1"}, {"c", "3"}}).first, true,
        true);
    add("stirling1", catalog_scheme("stirling1").first, true, false);
    add("legendre_stirling1", catalog_scheme("legendre_stirling1").first, true, false);
    add("jacobi_stirling1(2)", catalog_scheme("jacobi_stirling1", {{"z", "2"}}).first, true,
        false);
    for (int i = 0; i < 3; ++i) {
        WeightScheme s = random_scheme(rng);
        add("random_" + std::to_string(i) + "(t=" + std::to_string(s.t) +
                ",ell=" + std::to_string(s.ell) + ")",
            std::move(s), false, false);
    }
    return out;
}

// Randomized schemes satisfying the positivity hypotheses: bidiagonal bands,
// factored tridiagonal bands, and factored constant bands.
std::vector<BatteryScheme> tp_random_schemes(std::mt19937_64& rng) {
    std::vector<BatteryScheme> out;
    {
        WeightScheme s; // ell = 1, any nonnegative weights
        s.t = 1 + static_cast<int>(draw(rng, 2));
        s.ell = 1;
        std::vector<MultiPoly> a0, a1, b;
        for (int n = 0; n < 32; ++n) {
            a0.push_back(random_weight(rng, true));
            a1.push_back(random_weight(rng, true));
            b.push_back(random_weight(rng, true));
        }
        s.a.push_back(WeightRule::table(std::move(a0)));
        s.a.push_back(WeightRule::table(std::move(a1)));
        s.b = WeightRule::table(std::move(b));
        out.push_back(BatteryScheme{"random_bidiagonal", std::move(s), false, false});
    }
    {
        // ell = 2 through the factored parameters
        std::vector<MultiPoly> al, be, la, mu, b;
        for (int n = 0; n < 32; ++n) {
            al.push_back(random_weight(rng, true));
            be.push_back(random_weight(rng, false));
            la.push_back(random_weight(rng, false));
            mu.push_back(random_weight(rng, true));
            b.push_back(random_weight(rng, false));
        }
        WeightScheme s = tridiag_factor_params(
            WeightRule::table(std::move(al)), WeightRule::table(std::move(be)),
            WeightRule::table(std::move(la)), WeightRule::table(std::move(mu)),
            WeightRule::table(std::move(b)), 1 + static_cast<int>(draw(rng, 2)));
        out.push_back(BatteryScheme{"random_tridiagonal_factored", std::move(s), false, false});
    }
    {
        // constant weights with a factored band, ell <= 3
        int ell = 1 + static_cast<int>(draw(rng, 3));
        std::vector<MultiPoly> alphas, betas;
        for (int j = 0; j < ell; ++j) {
            alphas.push_back(MultiPoly(1 + draw(rng, 3)));
            betas.push_back(MultiPoly(1 + draw(rng, 3)));
        }
        ConstantScheme cs = ConstantScheme::from_factors(1 + static_cast<int>(draw(rng, 2)),
                                                         alphas, betas, MultiPoly(draw(rng, 3)));
        out.push_back(
            BatteryScheme{"random_constant_factored", cs.to_weight_scheme(), true, true});
    }
    return out;
}

struct Runner {
    std::uint64_t seed = 0;
    int threads = 1;
    BatteryReport report;

    void run(int id, const std::string& name, long budget_ms,
             const std::function<bool(std::string&)>& body) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        r.budget_ms = budget_ms;
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            r.passed = body(detail);
        } catch (const Error& e) {
            r.passed = false;
            detail += std::string("error: ") + e.what();
        }
        r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (!r.within_budget()) {
            r.passed = false;
            detail += " [budget exceeded]";
        }
        r.detail = detail;
        report.criteria.push_back(std::move(r));
    }
};

std::string plural(std::size_t n, const char* what) {
    return std::to_string(n) + " " + what;
}

} // namespace

bool BatteryReport::all_passed() const {
    for (const auto& c : criteria)
        if (!c.passed) return false;
    return !criteria.empty();
}

std::string BatteryReport::to_json() const {
    json j;
    j["seed"] = seed;
    json arr = json::array();
    for (const auto& c : criteria) {
        json cj;
        cj["id"] = c.id;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        cj["detail"] = c.detail;
        arr.push_back(std::move(cj));
    }
    j["criteria"] = std::move(arr);
    j["all_passed"] = all_passed();
    return j.dump();
}

std::string BatteryReport::timing_summary() const {
    std::ostringstream os;
    for (const auto& c : criteria)
        os << "criterion " << c.id << ": " << c.elapsed_ms << " ms (budget " << c.budget_ms
           << " ms)\n";
    return os.str();
}

BatteryReport run_battery(std::uint64_t seed, int threads) {
    Runner r;
    r.seed = seed;
    r.threads = threads;
    r.report.seed = seed;

    std::mt19937_64 rng(seed);
    std::vector<BatteryScheme> schemes = battery_schemes(rng);
    std::vector<BatteryScheme> tp_random = tp_random_schemes(rng);

    // 1. Route agreement: both recurrences equal the enumeration oracle.
    r.run(1, "route agreement: recurrences vs path enumeration", 60'000, [&](std::string& d) {
        std::size_t cells = 0;
        for (const auto& bs : schemes) {
            TriangleTruncation r1 = build_matrix_rec1(bs.scheme, 12, 12);
            TriangleTruncation r2 = build_matrix_rec2(bs.scheme, 12, 12);
            if (!(r1.entries == r2.entries)) {
                d = bs.name + ": the two recurrences disagree";
                return false;
            }
            for (int n = 0; n <= 12; ++n)
                for (int k = 0; n + k <= 12; ++k) {
                    if (r1.entries.at(n, k) != matrix_entry_oracle(bs.scheme, n, k)) {
                        d = bs.name + ": oracle mismatch at (" + std::to_string(n) + "," +
                            std::to_string(k) + ")";
                        return false;
                    }
                    ++cells;
                }
        }
        d = plural(schemes.size(), "schemes") + ", " + plural(cells, "cells vs oracle");
        return true;
    });

    // 2. Fixed-value spot checks, all precomputed independently.
    r.run(2, "fixed-value spot checks", 60'000, [&](std::string& d) {
        int checks = 0;
        auto expect = [&](const MultiPoly& got, const MultiPoly& want, const char* what) {
            ++checks;
            if (got == want) return true;
            d = std::string("mismatch: ") + what + " = " + got.str() + ", expected " + want.str();
            return false;
        };
        TriangleTruncation D = build_matrix_rec1(catalog_scheme("delannoy_square").first, 4, 4);
        TriangleTruncation dt = build_matrix_rec1(catalog_scheme("delannoy_triangle").first, 5, 5);
        TriangleTruncation c1 = build_matrix_rec1(catalog_scheme("stirling1").first, 5, 5);
        TriangleTruncation ps =
            build_matrix_rec1(catalog_scheme("legendre_stirling1").first, 4, 4);
        TriangleTruncation j1 = build_matrix_rec1(catalog_scheme("jacobi_stirling1").first, 4, 4);
        TriangleTruncation s2 = build_transpose_rec(catalog_scheme("stirling2").first, 5, 5);
        TriangleTruncation br =
            build_matrix_rec1(catalog_scheme("brenti", {{"t", "0"}}).first, 2, 2);
        bool ok = expect(D.entries.at(2, 2), MultiPoly(13), "D(2,2)") &&
                  expect(D.entries.at(3, 3), MultiPoly(63), "D(3,3)") &&
                  expect(dt.entries.at(4, 2), MultiPoly(13), "d(4,2)") &&
                  expect(c1.entries.at(4, 2), MultiPoly(11), "c(4,2)") &&
                  expect(s2.entries.at(4, 2), MultiPoly(7), "S(4,2)") &&
                  expect(ps.entries.at(3, 1), MultiPoly(12), "Ps(3,1)") &&
                  expect(ps.entries.at(3, 2), MultiPoly(8), "Ps(3,2)") &&
                  expect(ps.entries.at(3, 3), MultiPoly(1), "Ps(3,3)") &&
                  expect(j1.entries.at(3, 2), MultiPoly::parse("3*z+5"), "Jc(3,2)") &&
                  expect(br.entries.at(1, 1), MultiPoly::parse("z1*x1+y1+x1*z0"), "A(1,1)");
        if (ok) d = plural(static_cast<std::size_t>(checks), "values");
        return ok;
    });

    // 3. Structural identities on every battery scheme.
    r.run(3, "structural identities: production, decomposition, band factors", 120'000,
          [&](std::string& d) {
              std::size_t checks = 0;
              for (const auto& bs : schemes) {
                  int size = bs.numeric ? 10 : 6;
                  if (!verify_connection(bs.scheme, size)) {
                      d = bs.name + ": production-matrix identity failed";
                      return false;
                  }
                  if (!verify_decomposition(bs.scheme, 4, size)) {
                      d = bs.name + ": block decomposition failed";
                      return false;
                  }
                  checks += 2;
              }
              for (int ell = 1; ell <= 3; ++ell) {
                  std::vector<MultiPoly> al, be;
                  for (int j = 1; j <= ell; ++j) {
                      al.push_back(MultiPoly::var("a" + std::to_string(j)));
                      be.push_back(MultiPoly::var("c" + std::to_string(j)));
                  }
                  if (!verify_W_factorization(al, be, 6)) {
                      d = "bidiagonal band factorization failed at ell=" + std::to_string(ell);
                      return false;
                  }
                  ++checks;
              }
              d = plural(checks, "identities");
              return true;
          });

    // 4. Digraph suite: walk matrices realize the production/matrix/Toeplitz
    //    windows; signed disjoint-system sums match walk-matrix minors.
    r.run(4, "digraph suite: walk matrices and disjoint-system sums", 300'000,
          [&](std::string& d) {
              std::size_t eq = 0, minors = 0;
              TridiagParams sym{WeightRule::indexed("al"), WeightRule::indexed("be"),
                                WeightRule::indexed("la"), WeightRule::indexed("mu"),
                                WeightRule::indexed("b")};
              auto tri_scheme = [&](int t) {
                  return tridiag_factor_params(sym.alpha, sym.beta, sym.lambda, sym.mu, sym.b, t);
              };
              for (int t = 0; t <= 2; ++t)
                  for (int n = 1; n <= 6; ++n) {
                      PlanarNetwork net = build_gamma_tridiag(n, sym, t);
                      if (!(walk_matrix(net) == build_P_tilde(tri_scheme(t), n + 1, n + 1))) {
                          d = "single-layer walk matrix mismatch (tridiagonal)";
                          return false;
                      }
                      ++eq;
                  }
              for (int t = 1; t <= 2; ++t) {
                  for (int n = 1; n <= 6; ++n) {
                      PlanarNetwork net = build_gamma_star(n, sym, t);
                      TriangleTruncation tri = build_matrix_rec1(tri_scheme(t), n, n);
                      if (!(walk_matrix(net) == tri.entries)) {
                          d = "glued walk matrix mismatch (tridiagonal)";
                          return false;
                      }
                      ++eq;
                  }
                  for (int n = 0; n <= 4; ++n)
                      for (int k = 0; k <= 4; ++k) {
                          PlanarNetwork net = build_gamma_diamond(n, k, sym, t);
                          PolyMatrix b = walk_matrix(net);
                          TriangleTruncation tri = build_matrix_rec1(tri_scheme(t), n, n);
                          for (int i = 0; i <= k; ++i)
                              for (int j = 0; j <= k; ++j) {
                                  int col = i - j;
                                  MultiPoly want = (col >= 0 && col <= n)
                                                       ? tri.entries.at(n, col)
                                                       : MultiPoly(0);
                                  if (!(b.at(i, j) == want)) {
                                      d = "row-Toeplitz subnetwork mismatch (tridiagonal)";
                                      return false;
                                  }
                              }
                          ++eq;
                      }
              }
              for (int ell = 1; ell <= 3; ++ell) {
                  GeneralParams gp;
                  for (int j = 1; j <= ell; ++j) {
                      gp.alpha.push_back(MultiPoly::var("a" + std::to_string(j)));
                      gp.beta.push_back(MultiPoly::var("c" + std::to_string(j)));
                  }
                  gp.b = WeightRule::indexed("b");
                  WeightScheme gs;
                  gs.ell = ell;
                  for (auto& cc : band_coefficients(gp.alpha, gp.beta))
                      gs.a.push_back(WeightRule::constant(cc));
                  gs.b = gp.b;
                  for (int t = 0; t <= 2; ++t) {
                      gs.t = t;
                      for (int n = 1; n <= (ell == 3 ? 4 : 5); ++n) {
                          PlanarNetwork net = build_gamma_general(n, gp, t);
                          if (!(walk_matrix(net) == build_P_tilde(gs, n + 1, n + 1))) {
                              d = "single-layer walk matrix mismatch (general band)";
                              return false;
                          }
                          ++eq;
                      }
                  }
                  for (int t = 1; t <= 2; ++t) {
                      gs.t = t;
                      for (int n = 1; n <= (ell == 3 ? 4 : 5); ++n) {
                          PlanarNetwork net = build_gamma_star(n, gp, t);
                          TriangleTruncation tri = build_matrix_rec1(gs, n, n);
                          if (!(walk_matrix(net) == tri.entries)) {
                              d = "glued walk matrix mismatch (general band)";
                              return false;
                          }
                          ++eq;
                      }
                      for (int n = 0; n <= 3; ++n)
                          for (int k = 0; k <= 3; ++k) {
                              if (ell == 3 && n + k > 4) continue;
                              PlanarNetwork net = build_gamma_diamond(n, k, gp, t);
                              PolyMatrix b = walk_matrix(net);
                              TriangleTruncation tri = build_matrix_rec1(gs, n, n);
                              for (int i = 0; i <= k; ++i)
                                  for (int j = 0; j <= k; ++j) {
                                      int col = i - j;
                                      MultiPoly want = (col >= 0 && col <= n)
                                                           ? tri.entries.at(n, col)
                                                           : MultiPoly(0);
                                      if (!(b.at(i, j) == want)) {
                                          d = "row-Toeplitz subnetwork mismatch (general band)";
                                          return false;
                                      }
                                  }
                              ++eq;
                          }
                  }
              }
              // skew-diagonal Toeplitz windows, constant vertical weight
              {
                  GeneralParams gp;
                  gp.alpha.push_back(MultiPoly(1));
                  gp.beta.push_back(MultiPoly(1));
                  gp.b = WeightRule::constant(MultiPoly(1));
                  WeightScheme gs = catalog_scheme("delannoy_triangle").first;
                  TriangleTruncation big = build_matrix_rec1(gs, 16, 16);
                  for (int m = 0; m <= 3; ++m)
                      for (int n = 1; n <= 3; ++n)
                          for (int k = 0; k <= n; ++k)
                              for (int delta = 1; delta <= 2; ++delta)
                                  for (int sigma = std::max(k, delta) + 1; sigma <= 4; ++sigma) {
                                      if (n + m * sigma > 15) continue;
                                      PlanarNetwork net =
                                          build_gamma_circ(m, n, k, delta, sigma, gp, 1);
                                      PolyMatrix b = walk_matrix(net);
                                      for (int i = 0; i <= m; ++i)
                                          for (int j = 0; j <= m; ++j) {
                                              MultiPoly want =
                                                  i >= j ? big.entries.at(n + (i - j) * delta,
                                                                          k + (i - j) * sigma)
                                                         : MultiPoly(0);
                                              if (!(b.at(i, j) == want)) {
                                                  d = "skew-diagonal window mismatch";
                                                  return false;
                                              }
                                          }
                                      ++eq;
                                  }
              }
              // diagonal-vertex path weights on a random index grid
              {
                  std::mt19937_64 crng(seed ^ 0xC1A1u);
                  GeneralParams gp;
                  gp.alpha.push_back(MultiPoly::var("a1"));
                  gp.beta.push_back(MultiPoly::var("c1"));
                  gp.b = WeightRule::constant(MultiPoly::var("g"));
                  WeightScheme gs;
                  gs.t = 1;
                  gs.ell = 1;
                  gs.a.push_back(WeightRule::constant(MultiPoly::var("c1")));
                  gs.a.push_back(WeightRule::constant(MultiPoly::var("a1")));
                  gs.b = WeightRule::constant(MultiPoly::var("g"));
                  TriangleTruncation tri = build_matrix_rec1(gs, 6, 6);
                  for (int trial = 0; trial < 12; ++trial) {
                      int v[4];
                      for (int& x : v) x = static_cast<int>(draw(crng, 6));
                      std::sort(v, v + 4); // 0 <= a <= b <= c <= d <= 5
                      MultiPoly got = gamma_star_diag_path_weight(5, gp, 1, v[0], v[3], v[1], v[2]);
                      int row = v[1] + v[3] - v[0] - v[2], col = v[3] - v[2];
                      MultiPoly want = (row >= 0 && col >= 0 && col <= row)
                                           ? tri.entries.at(row, col)
                                           : MultiPoly(0);
                      if (!(got == want)) {
                          d = "diagonal-vertex path-weight identity failed";
                          return false;
                      }
                      ++eq;
                  }
              }
              // signed vertex-disjoint sums vs walk-matrix minors, order <= 3
              {
                  WeightRule one = WeightRule::constant(MultiPoly(1));
                  TridiagParams numeric{one, one, one, one, one};
                  std::vector<PlanarNetwork> nets;
                  nets.push_back(build_gamma_tridiag(4, sym, 1));
                  nets.push_back(build_gamma_tridiag(4, sym, 2));
                  nets.push_back(build_gamma_tridiag(3, sym, 0));
                  nets.push_back(build_gamma_star(4, sym, 1));
                  nets.push_back(build_gamma_star(5, numeric, 1));
                  nets.push_back(build_gamma_star(6, numeric, 2));
                  nets.push_back(build_gamma_diamond(2, 2, sym, 1));
                  nets.push_back(build_gamma_diamond(3, 3, numeric, 1));
                  {
                      GeneralParams gp;
                      gp.alpha.push_back(MultiPoly::var("a1"));
                      gp.beta.push_back(MultiPoly::var("c1"));
                      gp.b = WeightRule::indexed("b");
                      nets.push_back(build_gamma_star(4, gp, 1));
                      GeneralParams gd;
                      gd.alpha.push_back(MultiPoly(1));
                      gd.beta.push_back(MultiPoly(1));
                      gd.b = WeightRule::constant(MultiPoly(1));
                      nets.push_back(build_gamma_circ(2, 2, 1, 1, 3, gd, 1));
                  }
                  for (const auto& net : nets) {
                      int s = static_cast<int>(net.sources().size());
                      for (int order = 1; order <= std::min(3, s); ++order) {
                          std::vector<int> rows(static_cast<std::size_t>(order)),
                              cols(static_cast<std::size_t>(order));
                          std::function<bool(int, int, bool)> choose =
                              [&](int start, int depth, bool picking_rows) {
                                  if (depth == order) {
                                      if (picking_rows) return choose(0, 0, false);
                                      ++minors;
                                      return lgv_verify(net, MinorSpec{rows, cols});
                                  }
                                  for (int v = start; v < s; ++v) {
                                      auto& slot = picking_rows ? rows : cols;
                                      slot[static_cast<std::size_t>(depth)] = v;
                                      if (!choose(v + 1, depth + 1, picking_rows)) return false;
                                  }
                                  return true;
                              };
                          if (!choose(0, 0, true)) {
                              d = "a signed disjoint-system sum disagrees with a minor";
                              return false;
                          }
                      }
                  }
              }
              d = plural(eq, "walk-matrix identities") + ", " +
                  plural(minors, "minors vs signed sums");
              return true;
          });

    // 5. Positivity suite with negative controls.
    r.run(5, "total positivity of truncations, rows, columns, skew diagonals", 300'000,
          [&](std::string& d) {
              std::size_t checks = 0;
              std::vector<BatteryScheme> tp_set;
              for (const auto& bs : schemes)
                  if (bs.numeric) tp_set.push_back(bs);
              for (const auto& bs : tp_random) tp_set.push_back(bs);

              for (const auto& bs : tp_set) {
                  int size = bs.numeric ? 8 : 6;
                  TriangleTruncation tri = build_matrix_rec1(bs.scheme, size - 1, size - 1);
                  if (!is_tp_order(tri.entries, 4, r.threads).passed) {
                      d = bs.name + ": truncation not totally positive at order 4";
                      return false;
                  }
                  ++checks;
                  if (bs.scheme.t >= 1) {
                      TriangleTruncation wide = build_matrix_rec1(bs.scheme, 6, 6);
                      for (int n = 0; n <= 6; ++n) {
                          PolySequence row = extract(wide, Extraction::row(n), 7);
                          if (!is_tp_order(toeplitz(row.terms, 6), 4, r.threads).passed) {
                              d = bs.name + ": row " + std::to_string(n) +
                                  " Toeplitz window failed";
                              return false;
                          }
                          ++checks;
                      }
                  }
                  if (bs.constant_b && bs.scheme.constant_a()) {
                      TriangleTruncation tall = build_matrix_rec1(bs.scheme, 7, 6);
                      for (int k = 0; k <= 6; ++k) {
                          PolySequence col = extract(tall, Extraction::column(k), 6);
                          if (!is_tp_order(toeplitz(col.terms, 6), 4, r.threads).passed) {
                              d = bs.name + ": column " + std::to_string(k) +
                                  " Toeplitz window failed";
                              return false;
                          }
                          ++checks;
                      }
                  }
              }
              // skew-diagonal windows for constant numeric schemes, t >= 1
              for (const char* nm : {"delannoy_triangle", "generalized_delannoy"}) {
                  WeightScheme s =
                      std::string(nm) == "delannoy_triangle"
                          ? catalog_scheme(nm).first
                          : catalog_scheme(nm, {{"a", "2"}, {"b", "1"}, {"c", "3"}}).first;
                  TriangleTruncation big = build_matrix_rec1(s, 22, 22);
                  for (int n = 1; n <= 2; ++n)
                      for (int k = 0; k <= n; ++k)
                          for (int delta = 1; delta <= 2; ++delta)
                              for (int sigma = std::max(k, delta) + 1; sigma <= 4; ++sigma) {
                                  PolySequence diag =
                                      extract(big, Extraction::diagonal(n, k, delta, sigma), 5);
                                  if (!is_tp_order(toeplitz(diag.terms, 5), 4).passed) {
                                      d = std::string(nm) + ": skew diagonal failed";
                                      return false;
                                  }
                                  ++checks;
                              }
              }
              // negative controls must produce explicit witnesses
              {
                  WeightScheme hollow;
                  hollow.t = 0;
                  hollow.ell = 2;
                  hollow.a.push_back(WeightRule::constant(MultiPoly(1)));
                  hollow.a.push_back(WeightRule::constant(MultiPoly(0)));
                  hollow.a.push_back(WeightRule::constant(MultiPoly(1)));
                  hollow.b = WeightRule::constant(MultiPoly(1));
                  TPReport band = is_tp_order(build_A_matrix(hollow, 4), 2);
                  if (band.passed || !band.witness_minor) {
                      d = "hollow tridiagonal band unexpectedly passed";
                      return false;
                  }
                  for (auto seqv : {std::vector<long>{1, 0, 1}, std::vector<long>{1, 1, 1}}) {
                      PolySequence s;
                      for (long x : seqv) s.terms.emplace_back(x);
                      TPReport rep = is_polya_frequency_finite(s, 4, 3);
                      if (rep.passed || !rep.witness_minor) {
                          d = "negative-control sequence unexpectedly passed";
                          return false;
                      }
                  }
                  checks += 3;
              }
              d = plural(checks, "positivity checks");
              return true;
          });

    // 6. Closed-form route agreement for constant schemes.
    r.run(6, "closed-form routes: series, binomial sum, generating function", 60'000,
          [&](std::string& d) {
              std::size_t cells = 0;
              std::vector<std::pair<std::string, ConstantScheme>> cset;
              cset.emplace_back("pascal_triangle",
                                ConstantScheme::from_factors(1, {MultiPoly(0)}, {MultiPoly(1)},
                                                             MultiPoly(1)));
              cset.emplace_back("delannoy_triangle",
                                ConstantScheme::from_factors(1, {MultiPoly(1)}, {MultiPoly(1)},
                                                             MultiPoly(1)));
              cset.emplace_back("generalized_delannoy(symbolic)",
                                ConstantScheme::from_factors(1, {MultiPoly::var("c")},
                                                             {MultiPoly::var("a")},
                                                             MultiPoly::var("b")));
              cset.emplace_back(
                  "band_ell3(symbolic)",
                  ConstantScheme::from_factors(
                      2, {MultiPoly::var("a1"), MultiPoly::var("a2"), MultiPoly::var("a3")},
                      {MultiPoly::var("c1"), MultiPoly::var("c2"), MultiPoly::var("c3")},
                      MultiPoly::var("g")));
              for (const auto& [nm, cs] : cset) {
                  RiordanSpec spec = riordan_from_scheme(cs, 12);
                  TriangleTruncation tri = build_matrix_rec1(cs.to_weight_scheme(), 12, 12);
                  for (int n = 0; n <= 12; ++n)
                      for (int k = 0; k <= 12; ++k) {
                          if (riordan_entry(spec, n, k) != tri.entries.at(n, k) ||
                              explicit_entry(cs, n, k) != tri.entries.at(n, k)) {
                              d = nm + ": route mismatch at (" + std::to_string(n) + "," +
                                  std::to_string(k) + ")";
                              return false;
                          }
                          ++cells;
                      }
                  if (!bivariate_gf_check(cs, 10, 6)) {
                      d = nm + ": bivariate generating function mismatch";
                      return false;
                  }
              }
              // the weighted-square closed form and its row-sum series
              {
                  MultiPoly a = MultiPoly::var("a"), b = MultiPoly::var("b"),
                            c = MultiPoly::var("c");
                  ConstantScheme gd = ConstantScheme::from_factors(1, {c}, {a}, b);
                  TriangleTruncation tri = build_matrix_rec1(gd.to_weight_scheme(), 10, 10);
                  for (int n = 0; n <= 10; ++n)
                      for (int k = 0; n + k <= 10; ++k) {
                          MultiPoly sum;
                          for (int dd = 0; dd <= k; ++dd)
                              sum += binomial(n - dd, k) * binomial(k, dd) *
                                     pow(a, static_cast<unsigned>(k - dd)) *
                                     pow(b, static_cast<unsigned>(n - k - dd)) *
                                     pow(c, static_cast<unsigned>(dd));
                          if (!(tri.entries.at(n, k) == sum)) {
                              d = "double-binomial closed form mismatch";
                              return false;
                          }
                          ++cells;
                      }
                  const unsigned N = 8;
                  PowerSeries rows(N);
                  for (int k = 0; k <= static_cast<int>(N); ++k)
                      rows = rows + column_gf(gd, k, N);
                  PowerSeries phi = (PowerSeries::constant(MultiPoly(1), N) -
                                     PowerSeries::monomial(a + b, 1, N) -
                                     PowerSeries::monomial(c, 2, N))
                                        .invert();
                  if (!(rows == phi)) {
                      d = "row-sum generating function mismatch";
                      return false;
                  }
              }
              d = plural(cells, "cells across three routes");
              return true;
          });

    // 7. Sequence properties: route agreement, log-concavity, orthogonality.
    r.run(7, "sequence positivity: window and root routes, log-concavity", 60'000,
          [&](std::string& d) {
              std::mt19937_64 srng(seed ^ 0x5E77u);
              std::size_t agreements = 0;
              auto routes_agree = [&](const PolySequence& s) {
                  int len = static_cast<int>(s.terms.size());
                  if (pf_via_real_roots(s))
                      return is_polya_frequency_finite(s, len + 2, std::min(len + 2, 4)).passed;
                  return find_negative_toeplitz_minor(s, 2 * len + 6).has_value();
              };
              int made = 0;
              while (made < 50) {
                  int len = 2 + static_cast<int>(draw(srng, 5));
                  PolySequence s;
                  bool allzero = true;
                  for (int i = 0; i < len; ++i) {
                      long x = draw(srng, 5);
                      if (draw(srng, 4) == 0) x = -x;
                      allzero = allzero && x == 0;
                      s.terms.emplace_back(x);
                  }
                  if (allzero) continue;
                  ++made;
                  if (!routes_agree(s)) {
                      d = "route disagreement on a randomized sequence";
                      return false;
                  }
                  ++agreements;
                  // window-positive finite sequences iterate nonnegatively
                  if (is_polya_frequency_finite(s, len + 2, std::min(len + 2, 4)).passed &&
                      pf_via_real_roots(s)) {
                      if (!is_r_log_concave(s, 5).passed) {
                          d = "a window-positive sequence failed depth-5 log-concavity";
                          return false;
                      }
                  }
              }
              // battery rows and columns (numeric schemes); prefixes are
              // plain finite sequences for the two-route agreement
              for (const auto& bs : schemes) {
                  if (!bs.numeric) continue;
                  TriangleTruncation tri = build_matrix_rec1(bs.scheme, 8, 8);
                  if (bs.scheme.t >= 1) {
                      for (int n = 1; n <= 5; ++n) {
                          PolySequence row = extract(tri, Extraction::row(n), n + 2);
                          if (!routes_agree(row)) {
                              d = bs.name + ": row route disagreement";
                              return false;
                          }
                          ++agreements;
                          if (pf_via_real_roots(row) && !is_r_log_concave(row, 5).passed) {
                              d = bs.name + ": row failed depth-5 log-concavity";
                              return false;
                          }
                      }
                  }
                  for (int k = 0; k <= 3; ++k) {
                      PolySequence col = extract(tri, Extraction::column(k), 7);
                      bool allzero = true;
                      for (const auto& tm : col.terms) allzero = allzero && tm.is_zero();
                      if (allzero) continue;
                      if (!routes_agree(col)) {
                          d = bs.name + ": column route disagreement";
                          return false;
                      }
                      ++agreements;
                      if (pf_via_real_roots(col) && !is_r_log_concave(col, 5).passed) {
                          d = bs.name + ": column prefix failed depth-5 log-concavity";
                          return false;
                      }
                  }
                  // infinite-column log-concavity holds for constant weights;
                  // iterates are checked on shrinking prefixes
                  if (bs.constant_b && bs.scheme.constant_a()) {
                      for (int k = 0; k <= 3; ++k) {
                          PolySequence col = extract(tri, Extraction::column(k), 9);
                          if (!is_r_log_concave_prefix(col, 3).passed) {
                              d = bs.name + ": column failed prefix log-concavity";
                              return false;
                          }
                          ++agreements;
                      }
                  }
              }
              // first/second kind orthogonality at numeric parameter values
              for (long z : {0L, 1L, 2L}) {
                  auto first = build_matrix_rec1(
                      catalog_scheme("jacobi_stirling1", {{"z", std::to_string(z)}}).first, 6, 6);
                  auto second = build_transpose_rec(
                      catalog_scheme("gen_jacobi_stirling2",
                                     {{"a1", "1"},
                                      {"a2", std::to_string(z)},
                                      {"a3", "0"},
                                      {"b1", "0"},
                                      {"b2", "0"},
                                      {"b3", "1"}})
                          .first,
                      6, 6);
                  for (int i = 0; i <= 5; ++i)
                      for (int j = 0; j <= 5; ++j) {
                          MultiPoly acc;
                          for (int k = 0; k <= 6; ++k) {
                              MultiPoly term = second.entries.at(i, k) * first.entries.at(k, j);
                              if ((k + j) % 2 == 0)
                                  acc += term;
                              else
                                  acc -= term;
                          }
                          if (!(acc == (i == j ? MultiPoly(1) : MultiPoly(0)))) {
                              d = "orthogonality failed at z=" + std::to_string(z);
                              return false;
                          }
                      }
                  ++agreements;
              }
              d = plural(agreements, "sequence checks");
              return true;
          });

    return r.report;
}

} // namespace latpos

// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include "cgexact/cgexact.h"
#include "cgexact/clebsch_gordan.hpp"
#include "cgexact/combinatorics.hpp"
#include "cgexact/normalized.hpp"
#include "cgexact/projectors.hpp"
#include "cgexact/table_document.hpp"
#include "cgexact/verification.hpp"
#include "cgexact/weight_basis.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

using namespace cgexact;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

IntegerMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  IntegerMatrix out(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long x : row) out(r, c++) = x;
    ++r;
  }
  return out;
}

RationalMatrix scaled(const char* scale, std::initializer_list<std::initializer_list<long>> rows) {
  const IntegerMatrix base = ints(rows);
  const Rational s = parse_rational(scale);
  RationalMatrix out(base.rows(), base.cols());
  for (std::size_t r = 0; r < base.rows(); ++r)
    for (std::size_t c = 0; c < base.cols(); ++c) out(r, c) = s * Rational(base(r, c));
  return out;
}

std::vector<Rational> rationals(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(parse_rational(v));
  return out;
}

template <class Call>
std::string c_api_text(Call&& call) {
  cgx_string* out = nullptr;
  if (call(&out) != CGX_OK) return {};
  std::string text(cgx_string_data(out), cgx_string_size(out));
  cgx_string_free(out);
  return text;
}

std::string first_failure(const VerificationResult& result) {
  for (const auto& [suite, report] : result.suites)
    for (const auto& check : report.checks)
      if (!check.passed()) return suite + "/" + check.family + " at " + *check.counterexample;
  return {};
}

bool families_present(const VerificationResult& result, std::initializer_list<const char*> families,
                      std::string& missing) {
  for (const char* family : families) {
    bool found = false;
    for (const auto& [suite, report] : result.suites)
      if (const IdentityCheck* check = report.find(family); check && check->instances > 0) found = true;
    if (!found) {
      missing = family;
      return false;
    }
  }
  return true;
}

VerificationResult run_suite(unsigned suite, long bound) {
  VerifyOptions options;
  options.m_max = bound;
  options.n_max = bound;
  options.suites = suite;
  return run_verification(options);
}

Outcome suite_outcome(const VerificationResult& result, std::initializer_list<const char*> families) {
  Outcome o;
  std::string missing;
  o.require(result.passed(), first_failure(result));
  o.require(families_present(result, families, missing), "no instances of " + missing);
  return o;
}

Outcome criterion_1() {
  Outcome o;
  const auto start = Clock::now();
  const std::string json = c_api_text([](cgx_string** out) { return cgx_table(3, 4, CGX_ALL_K, CGX_FORMAT_JSON, 0, out); });
  o.require(!json.empty(), "table 3 4 failed");
  if (!o.passed) return o;
  const TableDocument doc = table_from_json(json);
  const std::vector<IntegerMatrix> coords = {
      ints({{1, 1, 1, 1, 1, 0, 0, 0}, {0, 1, 2, 3, 4, 5, 0, 0}, {0, 0, 1, 3, 6, 10, 15, 0}, {0, 0, 0, 1, 4, 10, 20, 35}}),
      ints({{3, 3, 3, 3, 0, 0}, {-4, -1, 2, 5, 8, 0}, {0, -4, -5, -3, 2, 10}, {0, 0, -4, -9, -12, -10}}),
      ints({{3, 3, 3, 0}, {-6, -3, 0, 3}, {6, 0, -3, -3}, {0, 6, 6, 3}}),
      ints({{1, 1}, {-2, -1}, {3, 1}, {-4, -1}}),
  };
  const std::vector<RationalMatrix> cgs = {
      scaled("1/35", {{35, 20, 10, 4, 1, 0, 0, 0}, {0, 15, 10, 6, 3, 1, 0, 0}, {0, 0, 5, 4, 3, 2, 1, 0}, {0, 0, 0, 1, 1, 1, 1, 1}}),
      scaled("-1/70", {{-10, -12, -9, -4, 0, 0}, {10, 2, -3, -5, -4, 0}, {0, 8, 5, 2, -1, -4}, {0, 0, 3, 3, 3, 3}}),
      scaled("1/45", {{3, 6, 6, 0}, {-3, -3, 0, 6}, {3, 0, -3, -6}, {0, 3, 3, 3}}),
      scaled("-1/10", {{-1, -4}, {1, 3}, {-1, -2}, {1, 1}}),
  };
  o.require(doc.blocks.size() == 4, "expected four blocks");
  for (std::size_t k = 0; k < 4 && o.passed; ++k) {
    o.require(doc.blocks[k].coordinates == coords[k], "coordinate matrix k=" + std::to_string(k));
    o.require(doc.blocks[k].cg == cgs[k], "Clebsch-Gordan matrix k=" + std::to_string(k));
  }
  const std::string pretty = c_api_text([](cgx_string** out) { return cgx_table(3, 4, CGX_ALL_K, CGX_FORMAT_PRETTY, 0, out); });
  for (const char* prefactor : {" 1/35 [", " -1/70 [", " 1/45 [", " -1/10 ["})
    o.require(pretty.find(prefactor) != std::string::npos, std::string("prefactor") + prefactor);
  const double elapsed = seconds_since(start);
  o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const auto start = Clock::now();
  const std::string pretty = c_api_text([](cgx_string** out) { return cgx_projector(3, 4, 3, CGX_ALL_K, CGX_FORMAT_PRETTY, out); });
  const ProjectorDocument doc = build_projectors(3, 4, 3);
  o.require(doc.ef == scaled("1", {{7, 3, 0, 0}, {6, 10, 4, 0}, {0, 6, 9, 3}, {0, 0, 4, 4}}), "ef matrix");
  const long eigenvalues[] = {16, 9, 4, 1};
  const std::vector<RationalMatrix> projectors = {
      scaled("1/35", {{4, 6, 4, 1}, {12, 18, 12, 3}, {12, 18, 12, 3}, {4, 6, 4, 1}}),
      scaled("1/70", {{27, 9, -15, -9}, {18, 6, -10, -6}, {-45, -15, 25, 15}, {-36, -12, 20, 12}}),
      scaled("1/5", {{2, -1, 0, 1}, {-2, 1, 0, -1}, {0, 0, 0, 0}, {4, -2, 0, 2}}),
      scaled("1/10", {{1, -1, 1, -1}, {-2, 2, -2, 2}, {3, -3, 3, -3}, {-4, 4, -4, 4}}),
  };
  const std::vector<std::vector<Rational>> components = {
      rationals({"4/35", "12/35", "12/35", "4/35"}),
      rationals({"-3/14", "-1/7", "5/14", "2/7"}),
      rationals({"0", "0", "0", "0"}),
      rationals({"1/10", "-1/5", "3/10", "-2/5"}),
  };
  o.require(doc.blocks.size() == 4, "expected four projectors");
  for (std::size_t k = 0; k < 4 && o.passed; ++k) {
    o.require(doc.blocks[k].eigenvalue == eigenvalues[k], "eigenvalue k=" + std::to_string(k));
    o.require(doc.blocks[k].projector == projectors[k], "projector k=" + std::to_string(k));
    o.require(doc.decomposition[2][k] == components[k], "decomposition component k=" + std::to_string(k));
  }
  o.require(doc.blocks[1].column == std::vector<Integer>{3, 2, -5, -4}, "factorization column");
  o.require(doc.blocks[1].row == rationals({"9/70", "3/70", "-5/70", "-3/70"}), "factorization row");
  o.require(pretty.find("eigenvalues: 16 (V(7)) 9 (V(5)) 4 (V(3)) 1 (V(1))") != std::string::npos,
            "eigenvalue display");
  o.require(pretty.find("factorization: column (3, 2, -5, -4) times row 1/70 (9, 3, -5, -3)") != std::string::npos,
            "factorization display");
  o.require(pretty.find("(0, 0, 1, 0) =\n  V(7): (4/35, 12/35, 12/35, 4/35)\n  V(5): (-3/14, -1/7, 5/14, 2/7)\n"
                        "  V(3): (0, 0, 0, 0)\n  V(1): (1/10, -1/5, 3/10, -2/5)\n") != std::string::npos,
            "decomposition display");
  const double elapsed = seconds_since(start);
  o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t tuple_index = 0;
  for (long m = 0; m <= 12 && o.passed; ++m)
    for (long n = 0; n <= 12 && o.passed; ++n)
      for (long k = 0; k <= std::min(m, n) && o.passed; ++k) {
        const CoordinateMatrix table = coordinate_matrix(m, n, k);
        for (long i = 0; i <= m; ++i)
          for (long j = 0; j <= n; ++j) {
            const IndexTuple t{m, n, k, i, j};
            if (!t.window_valid()) continue;
            const Integer c = coord(m, n, k, i, j);
            o.require(table.at(i, j) == c, "recursion vs summation at " + t.str());
            o.require(coord_racah(m, n, k, i, j) == c, "Racah-type sum vs summation at " + t.str());
            if (tuple_index++ % 10 == 0)
              o.require(coord_generating_function(m, n, k, i, j) == c, "generating function at " + t.str());
          }
      }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 120.0, "runtime " + std::to_string(elapsed) + " s");
  return o;
}

Outcome criterion_4() {
  const auto start = Clock::now();
  Outcome o = suite_outcome(run_suite(kSuiteOrthogonality, 12),
                            {"orthogonality.coord_dot_cg", "orthogonality.cg_completeness",
                             "orthogonality.coord_dot_reflected_coord",
                             "orthogonality.weighted_reflected_cg_completeness"});
  const double elapsed = seconds_since(start);
  o.require(elapsed < 120.0, "runtime " + std::to_string(elapsed) + " s");
  return o;
}

Outcome criterion_5() {
  return suite_outcome(run_suite(kSuiteRecurrences, 10),
                       {"recurrence.pascal", "recurrence.reverse", "recurrence.outer_lower_m",
                        "recurrence.outer_lower_n", "recurrence.outer_lower_m_or_n", "recurrence.outer_raise_k"});
}

Outcome criterion_6() {
  return suite_outcome(run_suite(kSuiteRegge, 10),
                       {"regge.symbol_line_sums", "regge.orbit_closure", "regge.orbit_factors",
                        "regge.relation.C12", "regge.relation.Transpose", "regge.relation.ModifiedTranspose",
                        "regge.relation.R13", "regge.relation.R23"});
}

Outcome criterion_7() {
  Outcome o;
  Report routes;
  for (long m = 0; m <= 10; ++m)
    for (long n = 0; n <= 10; ++n) routes.merge(verify_normalized(m, n, m <= 8 && n <= 8));
  for (const auto& check : routes.checks)
    o.require(check.passed(), check.family + " at " + check.counterexample.value_or(""));
  for (const char* family : {"normalized.wigner_equals_rescaled", "normalized.wigner_equals_racah",
                             "normalized.orthonormality"}) {
    const IdentityCheck* check = routes.find(family);
    o.require(check && check->instances > 0, std::string("no instances of ") + family);
  }
  o.require(wigner(1, 1, 1, 0, 1) == SignedSqrtRational(1, Rational(1, 2)), "wigner(1,1,1,0,1) != +sqrt(1/2)");
  return o;
}

Outcome criterion_8() {
  return suite_outcome(run_suite(kSuiteProjectors, 8),
                       {"projectors.idempotent", "projectors.sum_is_identity", "projectors.mutually_annihilating",
                        "projectors.eigen_relation", "projectors.casimir_consistency",
                        "projectors.rank_one_factorization"});
}

Outcome criterion_9() {
  Outcome o;
  for (long m = 0; m <= 64; ++m)
    for (long n = 0; n <= 64; ++n) {
      long total = 0;
      for (long k = 0; k <= std::min(m, n); ++k) total += m + n - 2 * k + 1;
      o.require(total == (m + 1) * (n + 1), "dimension identity at m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  for (long r = 0; r <= 25; ++r)
    for (long s = 0; s <= 25; ++s)
      for (long k = 0; k <= std::min(r, s); ++k)
        o.require(chu_vandermonde_lhs(r, s, k) == sign_power(k) * binomial(r + s - k, s),
                  "Chu-Vandermonde at r=" + std::to_string(r) + " s=" + std::to_string(s) + " k=" + std::to_string(k));
  return o;
}

Outcome criterion_10() {
  Outcome o;
  const auto start = Clock::now();
  const std::string json = c_api_text([](cgx_string** out) { return cgx_table(30, 30, CGX_ALL_K, CGX_FORMAT_JSON, 0, out); });
  const double elapsed = seconds_since(start);
  o.require(!json.empty(), "table 30 30 failed");
  o.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
  if (!o.passed) return o;

  const TableDocument doc = table_from_json(json);
  bool beyond_64_bits = false;
  for (const TableBlock& b : doc.blocks) {
    beyond_64_bits = beyond_64_bits || !b.normalizer.fits_slong_p();
    for (std::size_t r = 0; r < b.cg.rows(); ++r)
      for (std::size_t c = 0; c < b.cg.cols(); ++c)
        beyond_64_bits = beyond_64_bits || !b.cg(r, c).get_den().fits_slong_p();
  }
  o.require(beyond_64_bits, "no entry exceeded 64 bits");
  o.require(doc == build_table(30, 30), "serialized table differs from a fresh build");
  const Report orthogonality = verify_orthogonality(30, 30);
  for (const auto& check : orthogonality.checks)
    o.require(check.passed(), check.family + " at " + check.counterexample.value_or(""));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden table for V(3) (x) V(4): eight matrices and prefactors", criterion_1},
      {2, "golden projectors of the weight-1 space of V(3) (x) V(4)", criterion_2},
      {3, "recursion, two summations and generating function agree for m, n <= 12", criterion_3},
      {4, "orthogonality identities for m, n <= 12", criterion_4},
      {5, "Pascal, reverse and outer recurrences for m, n <= 10", criterion_5},
      {6, "Regge symbols, generator relations and orbits for m, n <= 10", criterion_6},
      {7, "unitary routes agree for m, n <= 10; orthonormality for m, n <= 8; the singlet", criterion_7},
      {8, "projector algebra for m, n <= 8", criterion_8},
      {9, "dimension identity for m, n <= 64 and Chu-Vandermonde for r, s <= 25", criterion_9},
      {10, "table 30 30 as JSON within 60 s with orthogonality on (30, 30)", criterion_10},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::ostringstream line;
    line << "criterion " << criterion.number << ": " << (outcome.passed ? "PASS" : "FAIL") << "  "
         << criterion.title;
    line.precision(3);
    line << std::fixed << "  (" << seconds_since(start) << " s)";
    if (!outcome.passed) line << "  first failure: " << outcome.detail;
    std::printf("%s\n", line.str().c_str());
    std::fflush(stdout);
    failures += outcome.passed ? 0 : 1;
  }
  std::printf("acceptance: %zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}

// cgexact: exact Clebsch-Gordan coefficients, tables, projectors and identity checks.
//
// Exit status: 0 on success, 1 when an identity check fails, 2 on a usage,
// domain or I/O error.

#include "cgexact/cgexact.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(cgx_string* s) const { cgx_string_free(s); }
};
using OwnedString = std::unique_ptr<cgx_string, StringDeleter>;

struct ReportDeleter {
  void operator()(cgx_report* r) const { cgx_report_free(r); }
};
using OwnedReport = std::unique_ptr<cgx_report, ReportDeleter>;

struct GlobalOptions {
  std::string format;
  std::string out;
  bool quiet = false;
};

int report_error(cgx_status status) {
  std::cerr << "cgexact: " << cgx_status_name(status);
  if (*cgx_last_error()) std::cerr << ": " << cgx_last_error();
  std::cerr << "\n";
  return kExitUsage;
}

int usage_error(const std::string& message) {
  std::cerr << "cgexact: " << message << "\n";
  return kExitUsage;
}

int emit(const GlobalOptions& global, const std::string& text) {
  if (global.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return std::cout ? kExitOk : usage_error("cannot write to standard output");
  }
  std::ofstream file(global.out, std::ios::binary);
  if (!file) return usage_error("cannot open " + global.out + " for writing");
  file << text;
  file.close();
  if (!file) return usage_error("error writing " + global.out);
  return kExitOk;
}

cgx_format format_or(const GlobalOptions& global, cgx_format fallback) {
  static const std::map<std::string, cgx_format> names = {
      {"json", CGX_FORMAT_JSON}, {"csv", CGX_FORMAT_CSV}, {"pretty", CGX_FORMAT_PRETTY}};
  if (global.format.empty()) return fallback;
  return names.at(global.format);
}

struct CoeffArgs {
  long m = 0, n = 0, k = 0, i = 0, j = 0;
  bool normalized = false;
  bool racah = false;
  bool su2_labels = false;
  int float_digits = 0;
};

int run_coeff(const GlobalOptions& global, const CoeffArgs& a) {
  if (a.m < 0 || a.n < 0 || a.k < 0 || a.i < 0 || a.j < 0)
    return usage_error("coeff: indices must be nonnegative");
  if (!global.format.empty() && global.format != "pretty")
    return usage_error("coeff: --format " + global.format + " is not supported");
  const cgx_coeff_kind kind =
      a.racah ? CGX_COEFF_RACAH : (a.normalized ? CGX_COEFF_WIGNER : CGX_COEFF_RATIONAL);
  cgx_string* exact = nullptr;
  cgx_string* decimal = nullptr;
  const cgx_status status = cgx_coeff(a.m, a.n, a.k, a.i, a.j, kind, a.float_digits, &exact, &decimal);
  if (status != CGX_OK) return report_error(status);
  OwnedString exact_owned(exact), decimal_owned(decimal);

  std::string text = std::string(cgx_string_data(exact)) + "\n";
  if (decimal) text += std::string(cgx_string_data(decimal)) + "\n";
  if (a.su2_labels) {
    cgx_string* labels = nullptr;
    if (cgx_su2_labels(a.m, a.n, a.k, a.i, a.j, &labels) != CGX_OK) return report_error(CGX_ERR_DOMAIN);
    OwnedString labels_owned(labels);
    text += std::string(cgx_string_data(labels)) + "\n";
  }
  return emit(global, text);
}

struct TableArgs {
  long m = 0, n = 0;
  long only_k = CGX_ALL_K;
  bool su2_labels = false;
};

int run_table(const GlobalOptions& global, const TableArgs& a) {
  if (a.m < 0 || a.n < 0) return usage_error("table: m and n must be nonnegative");
  if (a.only_k != CGX_ALL_K && a.only_k < 0) return usage_error("table: --only-k must be nonnegative");
  cgx_string* out = nullptr;
  const cgx_status status =
      cgx_table(a.m, a.n, a.only_k, format_or(global, CGX_FORMAT_PRETTY), a.su2_labels ? 1 : 0, &out);
  if (status != CGX_OK) return report_error(status);
  OwnedString owned(out);
  return emit(global, cgx_string_data(out));
}

struct VerifyArgs {
  long m_max = 0, n_max = 0;
  std::string suite = "all";
  bool fail_fast = false;
};

int run_verify(const GlobalOptions& global, const VerifyArgs& a) {
  if (a.m_max < 0 || a.n_max < 0) return usage_error("verify: bounds must be nonnegative");
  if (!global.format.empty() && global.format != "pretty")
    return usage_error("verify: --format " + global.format + " is not supported");
  const unsigned suites = cgx_suite_from_name(a.suite.c_str());
  if (suites == 0) return usage_error("verify: unknown suite " + a.suite);
  cgx_report* report = nullptr;
  const cgx_status status = cgx_verify(a.m_max, a.n_max, suites, a.fail_fast ? 1 : 0, 0, &report);
  if (status != CGX_OK) return report_error(status);
  OwnedReport owned(report);
  cgx_string* text = nullptr;
  if (cgx_report_text(report, global.quiet ? 1 : 0, &text) != CGX_OK) return report_error(CGX_ERR_INTERNAL);
  OwnedString text_owned(text);
  const int written = emit(global, cgx_string_data(text));
  if (written != kExitOk) return written;
  return cgx_report_passed(report) ? kExitOk : kExitIdentityFailure;
}

struct ProjectorArgs {
  long m = 0, n = 0, p = 0;
  long k = CGX_ALL_K;
};

int run_projector(const GlobalOptions& global, const ProjectorArgs& a) {
  if (a.m < 0 || a.n < 0) return usage_error("projector: m and n must be nonnegative");
  if (a.k != CGX_ALL_K && a.k < 0) return usage_error("projector: --k must be nonnegative");
  if (global.format == "csv") return usage_error("projector: --format csv is not supported");
  cgx_string* out = nullptr;
  const cgx_status status =
      cgx_projector(a.m, a.n, a.p, a.k, format_or(global, CGX_FORMAT_PRETTY), &out);
  if (status != CGX_OK) return report_error(status);
  OwnedString owned(out);
  return emit(global, cgx_string_data(out));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clebsch-Gordan coefficients for V(m) (x) V(n)", "cgexact"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cgx_version()));

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--out", global.out, "Write output to this file instead of standard output");
  app.add_flag("--quiet", global.quiet, "Only report failures and the summary");

  int exit_code = kExitOk;

  CoeffArgs coeff;
  auto* coeff_cmd = app.add_subcommand("coeff", "Print the coefficient at (m, n, k, i, j)");
  coeff_cmd->fallthrough();
  coeff_cmd->add_option("m", coeff.m)->required();
  coeff_cmd->add_option("n", coeff.n)->required();
  coeff_cmd->add_option("k", coeff.k)->required();
  coeff_cmd->add_option("i", coeff.i)->required();
  coeff_cmd->add_option("j", coeff.j)->required();
  coeff_cmd->add_flag("--normalized", coeff.normalized, "Unitary normalization by Wigner's sum");
  coeff_cmd->add_flag("--racah", coeff.racah, "Unitary normalization by Racah's sum");
  coeff_cmd->add_option("--float-digits", coeff.float_digits, "Also print a decimal approximation")
      ->check(CLI::Range(0, 10000));
  coeff_cmd->add_flag("--su2-labels", coeff.su2_labels, "Also print half-integer labels");
  coeff_cmd->callback([&] { exit_code = run_coeff(global, coeff); });

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Emit the coordinate and Clebsch-Gordan matrices");
  table_cmd->fallthrough();
  table_cmd->add_option("m", table.m)->required();
  table_cmd->add_option("n", table.n)->required();
  table_cmd->add_option("--only-k", table.only_k, "Emit only this summand");
  table_cmd->add_flag("--su2-labels", table.su2_labels, "Add half-integer label columns to csv");
  table_cmd->callback([&] { exit_code = run_table(global, table); });

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities for all m <= m_max, n <= n_max");
  verify_cmd->fallthrough();
  verify_cmd->add_option("m_max", verify.m_max)->required();
  verify_cmd->add_option("n_max", verify.n_max)->required();
  verify_cmd->add_option("--suite", verify.suite, "Identity suite")
      ->check(CLI::IsMember({"all", "orthogonality", "recurrences", "regge", "normalized", "projectors"}));
  verify_cmd->add_flag("--fail-fast", verify.fail_fast, "Stop at the first failing (m, n)");
  verify_cmd->callback([&] { exit_code = run_verify(global, verify); });

  ProjectorArgs projector;
  auto* projector_cmd = app.add_subcommand("projector", "Emit the spectral projectors of a weight space");
  projector_cmd->fallthrough();
  projector_cmd->add_option("m", projector.m)->required();
  projector_cmd->add_option("n", projector.n)->required();
  projector_cmd->add_option("p", projector.p)->required();
  projector_cmd->add_option("--k", projector.k, "Emit only this summand");
  projector_cmd->callback([&] { exit_code = run_projector(global, projector); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return exit_code;
}

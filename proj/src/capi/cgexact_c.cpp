#include "cgexact/cgexact.h"

#include "cgexact/clebsch_gordan.hpp"
#include "cgexact/exact.hpp"
#include "cgexact/normalized.hpp"
#include "cgexact/table_document.hpp"
#include "cgexact/verification.hpp"

#include <new>
#include <optional>
#include <string>

struct cgx_string {
  std::string text;
};

struct cgx_report {
  cgexact::VerificationResult result;
};

namespace {

thread_local std::string last_error;

cgx_status fail(cgx_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Body>
cgx_status guarded(Body&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const cgexact::IrrationalError& e) {
    return fail(CGX_ERR_IRRATIONAL, e.what());
  } catch (const cgexact::DomainError& e) {
    return fail(CGX_ERR_DOMAIN, e.what());
  } catch (const cgexact::InternalError& e) {
    return fail(CGX_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CGX_ERR_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(CGX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CGX_ERR_INTERNAL, "unknown error");
  }
}

cgx_string* make_string(std::string text) { return new cgx_string{std::move(text)}; }

std::optional<long> optional_k(long k) {
  if (k == CGX_ALL_K) return std::nullopt;
  return k;
}

std::string half(long twice) {
  return cgexact::to_string(cgexact::make_rational(twice, 2));
}

}  // namespace

extern "C" {

const char* cgx_version(void) { return "1.0.0"; }

const char* cgx_last_error(void) { return last_error.c_str(); }

const char* cgx_status_name(cgx_status status) {
  switch (status) {
    case CGX_OK: return "ok";
    case CGX_ERR_DOMAIN: return "domain error";
    case CGX_ERR_ARGUMENT: return "invalid argument";
    case CGX_ERR_IRRATIONAL: return "irrational result";
    case CGX_ERR_INTERNAL: return "internal error";
    case CGX_ERR_MEMORY: return "out of memory";
  }
  return "unknown status";
}

const char* cgx_string_data(const cgx_string* s) { return s ? s->text.c_str() : ""; }

size_t cgx_string_size(const cgx_string* s) { return s ? s->text.size() : 0; }

void cgx_string_free(cgx_string* s) { delete s; }

cgx_status cgx_coeff(long m, long n, long k, long i, long j, cgx_coeff_kind kind,
                     int float_digits, cgx_string** exact, cgx_string** decimal) {
  if (!exact) return fail(CGX_ERR_ARGUMENT, "cgx_coeff: null output");
  if (float_digits < 0) return fail(CGX_ERR_ARGUMENT, "cgx_coeff: negative float_digits");
  return guarded([&] {
    std::string text, approx;
    switch (kind) {
      case CGX_COEFF_RATIONAL: {
        const cgexact::Rational value = cgexact::cg(m, n, k, i, j);
        text = cgexact::to_string(value);
        if (float_digits > 0) approx = cgexact::to_decimal(value, float_digits);
        break;
      }
      case CGX_COEFF_WIGNER:
      case CGX_COEFF_RACAH: {
        const cgexact::SignedSqrtRational value = kind == CGX_COEFF_WIGNER
                                                      ? cgexact::wigner(m, n, k, i, j)
                                                      : cgexact::racah_normalized(m, n, k, i, j);
        text = value.str();
        if (float_digits > 0) approx = value.decimal(float_digits);
        break;
      }
      default:
        return fail(CGX_ERR_ARGUMENT, "cgx_coeff: unknown coefficient kind");
    }
    cgx_string* exact_out = make_string(std::move(text));
    if (float_digits > 0 && decimal) *decimal = make_string(std::move(approx));
    *exact = exact_out;
    return CGX_OK;
  });
}

cgx_status cgx_su2_labels(long m, long n, long k, long i, long j, cgx_string** out) {
  if (!out) return fail(CGX_ERR_ARGUMENT, "cgx_su2_labels: null output");
  return guarded([&] {
    cgexact::require_structural(m, n, k, "su2_labels");
    *out = make_string("j1=" + half(m) + " j2=" + half(n) + " j=" + half(m + n - 2 * k) +
                       " m1=" + half(m - 2 * i) + " m2=" + half(n - 2 * j));
    return CGX_OK;
  });
}

cgx_status cgx_table(long m, long n, long only_k, cgx_format format, int su2_labels,
                     cgx_string** out) {
  if (!out) return fail(CGX_ERR_ARGUMENT, "cgx_table: null output");
  return guarded([&] {
    const cgexact::TableDocument doc = cgexact::build_table(m, n, optional_k(only_k));
    switch (format) {
      case CGX_FORMAT_JSON: *out = make_string(cgexact::table_to_json(doc)); break;
      case CGX_FORMAT_CSV: *out = make_string(cgexact::table_to_csv(doc, su2_labels != 0)); break;
      case CGX_FORMAT_PRETTY: *out = make_string(cgexact::table_to_pretty(doc)); break;
      default: return fail(CGX_ERR_ARGUMENT, "cgx_table: unknown format");
    }
    return CGX_OK;
  });
}

cgx_status cgx_table_check_json(const char* json, size_t size, int* matches) {
  if (!json || !matches) return fail(CGX_ERR_ARGUMENT, "cgx_table_check_json: null argument");
  return guarded([&] {
    const cgexact::TableDocument parsed = cgexact::table_from_json(std::string_view(json, size));
    std::optional<long> only_k;
    if (parsed.blocks.size() == 1 && std::min(parsed.m, parsed.n) > 0) only_k = parsed.blocks[0].k;
    *matches = parsed == cgexact::build_table(parsed.m, parsed.n, only_k) ? 1 : 0;
    return CGX_OK;
  });
}

cgx_status cgx_projector(long m, long n, long p, long k, cgx_format format, cgx_string** out) {
  if (!out) return fail(CGX_ERR_ARGUMENT, "cgx_projector: null output");
  if (format == CGX_FORMAT_CSV) return fail(CGX_ERR_ARGUMENT, "projector output has no csv format");
  return guarded([&] {
    const cgexact::ProjectorDocument doc = cgexact::build_projectors(m, n, p, optional_k(k));
    switch (format) {
      case CGX_FORMAT_JSON: *out = make_string(cgexact::projectors_to_json(doc)); break;
      case CGX_FORMAT_PRETTY: *out = make_string(cgexact::projectors_to_pretty(doc)); break;
      default: return fail(CGX_ERR_ARGUMENT, "cgx_projector: unknown format");
    }
    return CGX_OK;
  });
}

unsigned cgx_suite_from_name(const char* name) {
  if (!name) return 0;
  return cgexact::suite_from_name(name);
}

cgx_status cgx_verify(long m_max, long n_max, unsigned suites, int fail_fast, unsigned threads,
                      cgx_report** out) {
  if (!out) return fail(CGX_ERR_ARGUMENT, "cgx_verify: null output");
  if (suites == 0 || (suites & ~static_cast<unsigned>(CGX_SUITE_ALL)))
    return fail(CGX_ERR_ARGUMENT, "cgx_verify: invalid suite mask");
  return guarded([&] {
    cgexact::VerifyOptions options;
    options.m_max = m_max;
    options.n_max = n_max;
    options.suites = suites;
    options.fail_fast = fail_fast != 0;
    options.threads = threads;
    *out = new cgx_report{cgexact::run_verification(options)};
    return CGX_OK;
  });
}

int cgx_report_passed(const cgx_report* report) { return report && report->result.passed() ? 1 : 0; }

cgx_status cgx_report_text(const cgx_report* report, int quiet, cgx_string** out) {
  if (!report || !out) return fail(CGX_ERR_ARGUMENT, "cgx_report_text: null argument");
  return guarded([&] {
    *out = make_string(report->result.text(quiet != 0));
    return CGX_OK;
  });
}

void cgx_report_free(cgx_report* report) { delete report; }

}  // extern "C"

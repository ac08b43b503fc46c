#include "cgexact/verification.hpp"

#include "cgexact/clebsch_gordan.hpp"
#include "cgexact/exact.hpp"
#include "cgexact/normalized.hpp"
#include "cgexact/projectors.hpp"
#include "cgexact/symmetries.hpp"
#include "parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>

namespace cgexact {

namespace {

struct SuiteEntry {
  Suite bit;
  const char* name;
  std::function<Report(long, long)> run;
};

const std::vector<SuiteEntry>& suite_table() {
  static const std::vector<SuiteEntry> table = {
      {kSuiteOrthogonality, "orthogonality", verify_orthogonality},
      {kSuiteRecurrences, "recurrences", verify_recurrences},
      {kSuiteRegge, "regge", verify_regge},
      {kSuiteNormalized, "normalized", [](long m, long n) { return verify_normalized(m, n); }},
      {kSuiteProjectors, "projectors", verify_projectors},
  };
  return table;
}

}  // namespace

unsigned suite_from_name(const std::string& name) {
  if (name == "all") return kSuiteAll;
  for (const auto& s : suite_table())
    if (name == s.name) return s.bit;
  return 0;
}

bool VerificationResult::passed() const {
  for (const auto& [name, report] : suites)
    if (!report.passed()) return false;
  return true;
}

std::string VerificationResult::text(bool quiet) const {
  std::ostringstream os;
  std::size_t families = 0, failures = 0;
  std::uint64_t instances = 0;
  for (const auto& [name, report] : suites)
    for (const auto& c : report.checks) {
      ++families;
      instances += c.instances;
      if (!c.passed()) ++failures;
      if (quiet && c.passed()) continue;
      os << (c.passed() ? "PASS  " : "FAIL  ") << name << "  " << c.family
         << "  instances=" << c.instances;
      if (c.counterexample) os << "  first counterexample: " << *c.counterexample;
      os << "\n";
    }
  os << "summary: " << families << " identity families, " << instances << " instances, ";
  if (failures == 0)
    os << "all passed\n";
  else
    os << failures << " failed\n";
  return os.str();
}

VerificationResult run_verification(const VerifyOptions& options) {
  if (options.m_max < 0 || options.n_max < 0)
    throw DomainError("verify: bounds must be nonnegative");
  std::vector<const SuiteEntry*> active;
  for (const auto& s : suite_table())
    if (options.suites & s.bit) active.push_back(&s);

  const std::size_t width = options.n_max + 1;
  const std::size_t count = (options.m_max + 1) * width;
  std::vector<std::vector<Report>> per_instance(count);
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};

  detail::parallel_for(
      count, detail::worker_count(options.threads),
      [&](std::size_t index) {
        const long m = static_cast<long>(index / width);
        const long n = static_cast<long>(index % width);
        std::vector<Report> reports;
        bool ok = true;
        for (const SuiteEntry* s : active) {
          reports.push_back(s->run(m, n));
          ok = ok && reports.back().passed();
        }
        per_instance[index] = std::move(reports);
        if (!ok && options.fail_fast) {
          std::size_t seen = first_failure.load();
          while (index < seen && !first_failure.compare_exchange_weak(seen, index)) {
          }
          stop.store(true);
        }
      },
      options.fail_fast ? &stop : nullptr);

  VerificationResult result;
  for (const SuiteEntry* s : active) result.suites.emplace_back(s->name, Report{});
  const std::size_t last = options.fail_fast ? std::min(count - 1, first_failure.load()) : count - 1;
  for (std::size_t index = 0; index <= last; ++index) {
    // with fail-fast, an earlier instance may have been skipped; stop there
    if (per_instance[index].size() != active.size()) break;
    for (std::size_t s = 0; s < active.size(); ++s)
      result.suites[s].second.merge(per_instance[index][s]);
  }

  if ((options.suites & kSuiteProjectors) && options.m_max >= 3 && options.n_max >= 4) {
    for (auto& [name, report] : result.suites)
      if (name == std::string("projectors")) report.merge(verify_worked_example());
  }

  if (const char* inject = std::getenv("CG_EXACT_VERIFY_INJECT_FAILURE"); inject && *inject && !result.suites.empty())
    result.suites.front().second.family("injected_failure").record(false, "CG_EXACT_VERIFY_INJECT_FAILURE is set");
  return result;
}

}  // namespace cgexact

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "schur/isomorphism.hpp"
#include "schur/parallel.hpp"

namespace schur {

/// Enumerations shared between checks, keyed by group spec.
class SRingCache {
 public:
  explicit SRingCache(Exec exec = {}) : exec_(exec) {}
  const std::vector<SRingRef>& over(const AbelianGroup& group);
  /// Every S-ring over every abelian group of the given order.
  std::vector<SRingRef> of_order(std::size_t order);

 private:
  Exec exec_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<std::vector<SRingRef>>> by_group_;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  std::string key;
  std::string detail;
  CheckStatus status = CheckStatus::Pass;
  double seconds = 0;

  std::string line() const;
};

struct VerifyOptions {
  std::vector<std::uint32_t> primes{2, 3, 5, 7};
  /// Check keys or aliases to skip (see verify_check_names).
  std::set<std::string> skip;
  std::uint64_t seed = 20240611;
  Exec exec;
  std::size_t oracle_max_order = 12;
  std::size_t multiplier_max_order = 28;
  std::size_t subdirect_max_order = 28;
  std::size_t wl_max_order = 20;
  std::size_t uniq_instances = 1000;
  std::size_t uniq_max_order = 12;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// Accepted --skip tokens: every check key plus a few aliases.
std::vector<std::string> verify_check_names();

/// Runs the battery in a fixed order. `sink`, if set, sees each line as soon
/// as it is produced.
VerifyReport run_verification(const VerifyOptions& options, const std::function<void(const CheckResult&)>& sink = {});

}  // namespace schur

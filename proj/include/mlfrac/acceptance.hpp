#ifndef MLFRAC_ACCEPTANCE_HPP
#define MLFRAC_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mlfrac {

enum class Profile { fast, strict };
Profile parse_profile(const std::string& s);
std::string to_string(Profile p);

// One measured check. A criterion may produce several checks (id "6.residual", "9.sharpness", ...).
struct Check {
  int criterion = 0;
  std::string id;
  std::string topic;  // the result the check exercises
  std::string status; // pass, fail or skipped
  double observed = 0.0;
  std::optional<double> expected;
  std::optional<double> tolerance;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  Profile profile = Profile::strict;
  int threads = 0;
  std::uint64_t seed = 7;  // random-phase families of criterion 9
};

inline constexpr int kCriteriaCount = 10;

// Checks of one criterion, 1..10.
std::vector<Check> run_criterion(int criterion, const AcceptanceOptions& opts);
// Every criterion in order; on_check sees each check as it completes.
std::vector<Check> run_acceptance(const AcceptanceOptions& opts,
                                  const std::function<void(const Check&)>& on_check = {});

}  // namespace mlfrac

#endif

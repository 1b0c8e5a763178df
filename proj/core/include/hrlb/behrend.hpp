#ifndef HRLB_BEHREND_HPP
#define HRLB_BEHREND_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace hrlb {

// Subsets of [1..m] with no non-trivial solution of
//   y_1 + ... + y_{t-1} = (t-1) y_t,
// where a solution is trivial iff all y_i are equal. For t = 3 these are the
// sets without 3-term arithmetic progressions.

enum class BehrendConstruction { sphere, greedy, exhaustive };
std::string_view to_string(BehrendConstruction c);

struct BehrendSet {
  std::int64_t m = 0;
  unsigned t = 3;
  std::vector<std::int64_t> elements;  // sorted, within [1, m]
  BehrendConstruction construction = BehrendConstruction::sphere;
  bool verified = false;  // exhaustively checked solution-free

  std::size_t size() const { return elements.size(); }
};

struct BehrendOptions {
  // Largest m handed to the exact branch-and-bound; above it the exact set
  // for [1, exhaustive_cap] is still offered as a candidate.
  std::int64_t exhaustive_cap = 24;
  // Work bound for the verification pass (see verify_solution_free).
  std::uint64_t verify_work_cap = 2'000'000'000;
};

// Largest of: the best sphere construction, the greedy set, and the exact
// optimum on [1, min(m, exhaustive_cap)]. Verified whenever within the work
// cap; throws VerificationError if a construction ever produced a solution.
BehrendSet behrend_set(std::int64_t m, unsigned t, const BehrendOptions& opt = {});

// Digit vectors x in {0..d-1}^D on the most popular sphere |x|^2 = R, read in
// base (t-1)(d-1)+1 and shifted by one. The base leaves no carries in a
// (t-1)-fold sum, so a solution forces (t-1) sphere points to average to a
// sphere point, hence all equal. d and D maximize the size within [1, m].
std::vector<std::int64_t> sphere_set(std::int64_t m, unsigned t);

// Lexicographically first maximal set: scan 1..m, keep x if still free.
std::vector<std::int64_t> greedy_set(std::int64_t m, unsigned t);

enum class SolutionStatus { free, violated, unverified };

struct SolutionCheck {
  SolutionStatus status = SolutionStatus::free;
  // (y_1, ..., y_{t-1}, y_t) when violated.
  std::vector<std::int64_t> counterexample;
};

// t = 3: pair-sum scan, O(|B|^2). t > 3: multiset-sum reachability over B,
// O(t^2 m |B|). Returns `unverified` when the work estimate exceeds work_cap.
SolutionCheck verify_solution_free(std::span<const std::int64_t> b, unsigned t, std::int64_t m,
                                   std::uint64_t work_cap = 2'000'000'000);

struct ExhaustiveResult {
  std::size_t size = 0;
  std::vector<std::int64_t> elements;
};

// Exact maximum solution-free subset of [1, m] by branch and bound on the
// optimum for shorter intervals. Throws BudgetExceeded when m > cap.
ExhaustiveResult max_solution_free_bruteforce(std::int64_t m, unsigned t, std::int64_t cap = 40);

}  // namespace hrlb

#endif  // HRLB_BEHREND_HPP

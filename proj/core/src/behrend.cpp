#include "hrlb/behrend.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "hrlb/error.hpp"

namespace hrlb {

namespace {

// Solution-free set grown in increasing order. reach_[i][s] records whether
// some multiset of i current elements sums to s. A new maximum x can only sit
// on the left-hand side of a solution (as y_t it would force all terms equal),
// so x is admissible iff no j >= 1 copies of x plus t-1-j current elements sum
// to (t-1)c for a current element c.
class AscendingBuilder {
 public:
  struct Conflict {
    unsigned copies;  // j
    std::int64_t c;   // y_t
    std::int64_t rest_sum;
  };

  AscendingBuilder(unsigned t, std::int64_t max_value)
      : t_(t),
        width_(static_cast<std::size_t>((t - 1) * max_value + 1)),
        reach_(t, std::vector<char>(width_, 0)) {
    reach_[0][0] = 1;
  }

  const std::vector<std::int64_t>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

  std::optional<Conflict> conflict(std::int64_t x) const {
    const auto t1 = static_cast<std::int64_t>(t_ - 1);
    for (unsigned j = 1; j + 1 < t_; ++j) {
      for (std::int64_t c : elems_) {
        const std::int64_t sigma = t1 * c - static_cast<std::int64_t>(j) * x;
        if (sigma < 0) continue;
        if (static_cast<std::size_t>(sigma) < width_ && reach_[t_ - 1 - j][static_cast<std::size_t>(sigma)])
          return Conflict{j, c, sigma};
      }
    }
    return std::nullopt;
  }

  void add(std::int64_t x) {
    elems_.push_back(x);
    const auto ux = static_cast<std::size_t>(x);
    for (unsigned i = 1; i < t_; ++i)
      for (std::size_t s = ux; s < width_; ++s)
        if (reach_[i - 1][s - ux]) reach_[i][s] = 1;
  }

  // Some multiset of `count` current elements summing to `sum`.
  std::vector<std::int64_t> multiset(unsigned count, std::int64_t sum) const {
    std::vector<std::int64_t> out;
    while (count > 0) {
      bool stepped = false;
      for (std::int64_t a : elems_) {
        if (a > sum || !reach_[count - 1][static_cast<std::size_t>(sum - a)]) continue;
        out.push_back(a);
        sum -= a;
        --count;
        stepped = true;
        break;
      }
      check(stepped, "AscendingBuilder: reconstruction failed");
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::int64_t> counterexample(std::int64_t x, const Conflict& c) const {
    std::vector<std::int64_t> lhs(c.copies, x);
    auto rest = multiset(t_ - 1 - c.copies, c.rest_sum);
    lhs.insert(lhs.end(), rest.begin(), rest.end());
    std::sort(lhs.begin(), lhs.end());
    lhs.push_back(c.c);
    return lhs;
  }

 private:
  unsigned t_;
  std::size_t width_;
  std::vector<std::vector<char>> reach_;
  std::vector<std::int64_t> elems_;
};

void require_params(std::int64_t m, unsigned t) {
  if (m < 1) throw ParameterError("m must be >= 1");
  if (t < 3) throw ParameterError("t must be >= 3");
}

// Every digit vector in {0..d-1}^D (little-endian, given base) with value
// <= limit.
template <class Fn>
void for_each_digit_vector(std::int64_t d, int dims, std::int64_t base, std::int64_t limit, Fn&& fn) {
  std::vector<std::int64_t> place(static_cast<std::size_t>(dims), 1);
  for (int i = 1; i < dims; ++i) place[static_cast<std::size_t>(i)] = place[static_cast<std::size_t>(i - 1)] * base;
  auto rec = [&](auto& self, int pos, std::int64_t value, std::int64_t norm) -> void {
    if (pos < 0) {
      fn(value, norm);
      return;
    }
    const auto p = place[static_cast<std::size_t>(pos)];
    for (std::int64_t digit = 0; digit < d; ++digit) {
      const std::int64_t v = value + digit * p;
      if (v > limit) break;
      self(self, pos - 1, v, norm + digit * digit);
    }
  };
  rec(rec, dims - 1, 0, 0);
}

}  // namespace

std::string_view to_string(BehrendConstruction c) {
  switch (c) {
    case BehrendConstruction::sphere: return "sphere";
    case BehrendConstruction::greedy: return "greedy";
    case BehrendConstruction::exhaustive: return "exhaustive";
  }
  return "unknown";
}

std::vector<std::int64_t> sphere_set(std::int64_t m, unsigned t) {
  require_params(m, t);
  std::vector<std::int64_t> best{1};
  const std::int64_t limit = m - 1;  // values 0..m-1, shifted to 1..m
  const auto t1 = static_cast<std::int64_t>(t - 1);
  for (std::int64_t d = 2;; ++d) {
    const std::int64_t base = t1 * (d - 1) + 1;
    if (base > limit) break;
    // Two-digit spheres are circles with few lattice points; only small d
    // can matter there.
    const bool three_digits = base <= limit / base;
    if (!three_digits && d > 64) break;
    std::int64_t reach = base;  // base^(dims-1)
    for (int dims = 2; reach <= limit; ++dims) {
      // At most min(d^dims, m) vectors fit; skip when that cannot beat best.
      std::uint64_t fit = 1;
      for (int i = 0; i < dims && fit <= static_cast<std::uint64_t>(m); ++i) fit *= static_cast<std::uint64_t>(d);
      if (std::min<std::uint64_t>(fit, static_cast<std::uint64_t>(m)) > best.size()) {
        std::vector<std::size_t> popularity(static_cast<std::size_t>(dims * (d - 1) * (d - 1) + 1), 0);
        for_each_digit_vector(d, dims, base, limit, [&](std::int64_t, std::int64_t norm) {
          ++popularity[static_cast<std::size_t>(norm)];
        });
        auto top = std::max_element(popularity.begin(), popularity.end());
        if (*top > best.size()) {
          const std::int64_t radius = top - popularity.begin();
          std::vector<std::int64_t> values;
          for_each_digit_vector(d, dims, base, limit, [&](std::int64_t value, std::int64_t norm) {
            if (norm == radius) values.push_back(value + 1);
          });
          std::sort(values.begin(), values.end());
          best = std::move(values);
        }
      }
      if (reach > limit / base) break;
      reach *= base;
    }
  }
  return best;
}

std::vector<std::int64_t> greedy_set(std::int64_t m, unsigned t) {
  require_params(m, t);
  AscendingBuilder b(t, m);
  for (std::int64_t x = 1; x <= m; ++x)
    if (!b.conflict(x)) b.add(x);
  return b.elements();
}

SolutionCheck verify_solution_free(std::span<const std::int64_t> input, unsigned t, std::int64_t m,
                                   std::uint64_t work_cap) {
  require_params(m, t);
  std::vector<std::int64_t> b(input.begin(), input.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  if (!b.empty() && (b.front() < 1 || b.back() > m))
    throw ParameterError("verify_solution_free: set is not within [1, m]");

  const auto n = static_cast<std::uint64_t>(b.size());
  if (t == 3) {
    if (n * n / 2 > work_cap) return {SolutionStatus::unverified, {}};
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        const std::int64_t s = b[i] + b[j];
        if (s % 2 == 0 && std::binary_search(b.begin(), b.end(), s / 2))
          return {SolutionStatus::violated, {b[i], b[j], s / 2}};
      }
    return {};
  }

  const std::uint64_t work = static_cast<std::uint64_t>(t - 1) * static_cast<std::uint64_t>((t - 1) * m + 1) * n;
  if (work > work_cap) return {SolutionStatus::unverified, {}};
  AscendingBuilder builder(t, m);
  for (std::int64_t x : b) {
    if (auto c = builder.conflict(x)) return {SolutionStatus::violated, builder.counterexample(x, *c)};
    builder.add(x);
  }
  return {};
}

ExhaustiveResult max_solution_free_bruteforce(std::int64_t m, unsigned t, std::int64_t cap) {
  require_params(m, t);
  if (m > cap)
    throw BudgetExceeded("max_solution_free_bruteforce: m = " + std::to_string(m) + " exceeds cap " +
                         std::to_string(cap));
  // best[n]: an optimum for [1, n]. A set beating best[n-1] on [1, n] must
  // contain both 1 and n, since otherwise a translate fits in [1, n-1].
  std::vector<std::vector<std::int64_t>> best(static_cast<std::size_t>(m + 1));
  best[1] = {1};
  for (std::int64_t n = 2; n <= m; ++n) {
    const std::size_t target = best[static_cast<std::size_t>(n - 1)].size() + 1;
    std::optional<std::vector<std::int64_t>> found;

    auto dfs = [&](auto& self, const AscendingBuilder& cur, std::int64_t from) -> void {
      if (found) return;
      if (cur.size() + 1 == target) {
        if (!cur.conflict(n)) {
          auto elems = cur.elements();
          elems.push_back(n);
          found = std::move(elems);
        }
        return;
      }
      for (std::int64_t y = from; y < n && !found; ++y) {
        // Elements still available lie in [y, n-1], an interval of length n-y.
        if (cur.size() + best[static_cast<std::size_t>(n - y)].size() + 1 < target) return;
        if (cur.conflict(y)) continue;
        AscendingBuilder next = cur;
        next.add(y);
        self(self, next, y + 1);
      }
    };
    AscendingBuilder start(t, n);
    start.add(1);
    dfs(dfs, start, 2);
    best[static_cast<std::size_t>(n)] = found ? std::move(*found) : best[static_cast<std::size_t>(n - 1)];
  }
  auto& out = best[static_cast<std::size_t>(m)];
  return {out.size(), out};
}

BehrendSet behrend_set(std::int64_t m, unsigned t, const BehrendOptions& opt) {
  require_params(m, t);
  BehrendSet out;
  out.m = m;
  out.t = t;

  const std::int64_t exact_range = std::min(m, std::max<std::int64_t>(1, opt.exhaustive_cap));
  out.elements = max_solution_free_bruteforce(exact_range, t, exact_range).elements;
  out.construction = BehrendConstruction::exhaustive;

  auto greedy = greedy_set(m, t);
  if (greedy.size() > out.elements.size()) {
    out.elements = std::move(greedy);
    out.construction = BehrendConstruction::greedy;
  }
  auto sphere = sphere_set(m, t);
  if (sphere.size() > out.elements.size()) {
    out.elements = std::move(sphere);
    out.construction = BehrendConstruction::sphere;
  }

  auto status = verify_solution_free(out.elements, t, m, opt.verify_work_cap);
  if (status.status == SolutionStatus::violated)
    throw VerificationError("behrend_set: construction " + std::string(to_string(out.construction)) +
                            " produced a non-trivial solution");
  out.verified = status.status == SolutionStatus::free;
  return out;
}

}  // namespace hrlb

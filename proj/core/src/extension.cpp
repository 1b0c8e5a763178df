#include <algorithm>
#include <cmath>
#include <numeric>

#include "hrlb/constructions.hpp"
#include "hrlb/counting.hpp"
#include "hrlb/error.hpp"
#include "hrlb/random.hpp"
#include "subsets.hpp"

namespace hrlb {

namespace {

using u128 = unsigned __int128;

std::uint64_t binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Sorted (i, j) pairs, i < j, that share >= k coordinates and agree on
// >= k - l of the coordinates from s on.
std::vector<std::pair<std::size_t, std::size_t>> violating_pairs(const CopyFamily& f, unsigned s, unsigned k,
                                                                 unsigned l) {
  const unsigned len = f.tuple_length();
  const unsigned need_new = k - l;
  auto violates = [&](std::size_t i, std::size_t j) {
    auto a = f[i], b = f[j];
    unsigned shared = 0, shared_new = 0;
    for (unsigned c = 0; c < len; ++c)
      if (a[c] == b[c]) {
        ++shared;
        if (c >= s) ++shared_new;
      }
    return shared >= k && shared_new >= need_new;
  };

  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (k == 0 || k > len) {
    if (k == 0)
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
          if (violates(i, j)) out.emplace_back(i, j);
    return out;
  }

  // Pairs sharing >= k coordinates share all values on some k positions.
  std::vector<std::vector<std::size_t>> position_sets;
  detail::for_each_subset(len, k, [&](std::span<const std::size_t> pos) {
    position_sets.emplace_back(pos.begin(), pos.end());
  });
  struct Record {
    std::uint32_t set;
    std::size_t idx;
  };
  std::vector<Record> records;
  records.reserve(f.size() * position_sets.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::uint32_t ps = 0; ps < position_sets.size(); ++ps) records.push_back({ps, i});
  auto key_less = [&](const Record& x, const Record& y) {
    if (x.set != y.set) return x.set < y.set;
    auto a = f[x.idx], b = f[y.idx];
    for (auto c : position_sets[x.set])
      if (a[c] != b[c]) return a[c] < b[c];
    return x.idx < y.idx;
  };
  auto same_key = [&](const Record& x, const Record& y) {
    if (x.set != y.set) return false;
    auto a = f[x.idx], b = f[y.idx];
    for (auto c : position_sets[x.set])
      if (a[c] != b[c]) return false;
    return true;
  };
  std::sort(records.begin(), records.end(), key_less);
  for (std::size_t g = 0; g < records.size();) {
    std::size_t h = g + 1;
    while (h < records.size() && same_key(records[g], records[h])) ++h;
    for (std::size_t a = g; a < h; ++a)
      for (std::size_t b = a + 1; b < h; ++b)
        if (violates(records[a].idx, records[b].idx)) out.emplace_back(records[a].idx, records[b].idx);
    g = h;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t smallest_prime_at_least(std::uint64_t x) {
  auto prime = [](std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  };
  while (!prime(x)) ++x;
  return x;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * b % p);
    b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

// Advances a little-endian-last odometer over [0, base)^len; false on wrap.
bool next_tuple(std::vector<Vertex>& digits, Vertex base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

ExtensionResult algebraic_design(Vertex n, unsigned r, unsigned k) {
  ExtensionResult res;
  res.family = CopyFamily(r, k);
  res.attempts = 1;
  std::vector<Vertex> a(k, 0), tuple(r);

  if (r == k || r == k + 1) {
    do {
      std::uint64_t sum = 0;
      for (unsigned j = 0; j < k; ++j) {
        tuple[j] = j * n + a[j];
        sum += a[j];
      }
      if (r == k + 1) tuple[k] = k * n + static_cast<Vertex>(sum % n);
      res.family.push_back(tuple);
    } while (next_tuple(a, n));
  } else {
    // Systematic Reed-Solomon: prescribe values at points 0..k-1, evaluate
    // the interpolating polynomial at k..r-1.
    const std::uint64_t p = smallest_prime_at_least(std::max<std::uint64_t>(n, r));
    std::vector<std::vector<std::uint64_t>> lagrange(r, std::vector<std::uint64_t>(k, 0));
    for (unsigned z = k; z < r; ++z)
      for (unsigned j = 0; j < k; ++j) {
        std::uint64_t num = 1, den = 1;
        for (unsigned m = 0; m < k; ++m) {
          if (m == j) continue;
          num = static_cast<std::uint64_t>(static_cast<u128>(num) * ((z + p - m) % p) % p);
          den = static_cast<std::uint64_t>(static_cast<u128>(den) * ((j + p - m) % p) % p);
        }
        lagrange[z][j] = static_cast<std::uint64_t>(static_cast<u128>(num) * pow_mod(den, p - 2, p) % p);
      }
    do {
      bool fits = true;
      for (unsigned j = 0; j < k; ++j) tuple[j] = j * n + a[j];
      for (unsigned z = k; z < r && fits; ++z) {
        u128 acc = 0;
        for (unsigned j = 0; j < k; ++j) acc += static_cast<u128>(lagrange[z][j]) * a[j] % p;
        const auto value = static_cast<std::uint64_t>(acc % p);
        if (value >= n) fits = false;
        else tuple[z] = z * n + static_cast<Vertex>(value);
      }
      if (fits) res.family.push_back(tuple);
    } while (next_tuple(a, n));
  }
  res.sampled = res.family.size();
  res.lower_bound = static_cast<double>(res.family.size());
  return res;
}

}  // namespace

std::uint64_t extension_constant(unsigned r, unsigned s, unsigned k, unsigned l) {
  std::uint64_t K = 0;
  for (unsigned d = k - l; d <= r; ++d) K += binom(r, d) * binom(s, d >= k ? 0 : k - d);
  return K;
}

std::optional<std::pair<std::size_t, std::size_t>> find_extension_violation(const CopyFamily& f, unsigned s,
                                                                           unsigned k, unsigned l) {
  if (l > k) throw ParameterError("find_extension_violation: l > k");
  auto pairs = violating_pairs(f, s, k, l);
  if (pairs.empty()) return std::nullopt;
  return pairs.front();
}

ExtensionResult extend_family(const CopyFamily& s_family, const ExtensionParams& p) {
  if (p.k < p.l) throw ParameterError("extend_family: requires k >= l");
  if (p.r < p.k - p.l) throw ParameterError("extend_family: requires r >= k - l");
  if (p.n == 0) throw ParameterError("extend_family: n must be positive");
  if (p.retry_cap == 0) throw ParameterError("extend_family: retry cap must be positive");
  if (s_family.tuple_length() != p.s) throw ParameterError("extend_family: family tuples must have length s");
  for (std::size_t i = 0; i < s_family.size(); ++i)
    for (unsigned c = 0; c < p.s; ++c)
      if (s_family[i][c] / p.n != c) throw ParameterError("extend_family: coordinate outside its part");
  if (s_family.size() > 1 && !verify_pairwise_disjoint(s_family, p.l).ok)
    throw PreconditionError("extend_family: input family is not l-disjoint");

  ExtensionResult res;
  res.K = extension_constant(p.r, p.s, p.k, p.l);
  res.C = std::max<std::uint64_t>(1, 2 * res.K);
  res.beta = 1.0 / (4.0 * static_cast<double>(res.C));
  res.lower_bound = res.beta * static_cast<double>(s_family.size()) *
                    std::pow(static_cast<double>(p.n), static_cast<double>(p.k - p.l));

  // Keep probability 1 / (C n^e) as an integer threshold on 64-bit draws.
  const unsigned e = p.r - p.k + p.l;
  u128 denom = res.C;
  bool overflow = false;
  for (unsigned i = 0; i < e && !overflow; ++i) {
    denom *= p.n;
    if (denom > (static_cast<u128>(1) << 64)) overflow = true;
  }
  const bool keep_all = !overflow && denom == 1;
  const std::uint64_t threshold =
      overflow || keep_all ? 0 : static_cast<std::uint64_t>((static_cast<u128>(1) << 64) / denom);

  std::uint64_t per_s = 1;
  for (unsigned i = 0; i < p.r; ++i) {
    if (per_s > UINT64_MAX / p.n) throw ParameterError("extend_family: n^r does not fit in 64 bits");
    per_s *= p.n;
  }

  const unsigned len = p.s + p.r;
  for (unsigned attempt = 0; attempt < p.retry_cap; ++attempt) {
    const std::uint64_t stream = derive_seed(p.seed, attempt);
    CopyFamily sampled(len);
    std::vector<Vertex> tuple(len), a(p.r, 0);
    for (std::size_t si = 0; si < s_family.size(); ++si) {
      auto base = s_family[si];
      std::copy(base.begin(), base.end(), tuple.begin());
      std::fill(a.begin(), a.end(), 0);
      for (std::uint64_t ai = 0; ai < per_s; ++ai) {
        const std::uint64_t index = si * per_s + ai;
        if (keep_all || stream_value(stream, index) < threshold) {
          for (unsigned j = 0; j < p.r; ++j) tuple[p.s + j] = (p.s + j) * p.n + a[j];
          sampled.push_back(tuple);
        }
        next_tuple(a, p.n);
      }
    }

    auto pairs = violating_pairs(sampled, p.s, p.k, p.l);
    std::vector<bool> dead(sampled.size(), false);
    std::uint64_t deleted = 0;
    for (auto [i, j] : pairs)
      if (!dead[i] && !dead[j]) {
        dead[j] = true;
        ++deleted;
      }
    CopyFamily kept(len, p.k);
    for (std::size_t i = 0; i < sampled.size(); ++i)
      if (!dead[i]) kept.push_back(sampled[i]);

    res.attempts = attempt + 1;
    res.sampled = sampled.size();
    res.deleted = deleted;
    const double needed = static_cast<double>(s_family.size()) *
                          std::pow(static_cast<double>(p.n), static_cast<double>(p.k - p.l));
    if (4.0 * static_cast<double>(res.C) * static_cast<double>(kept.size()) >= needed) {
      check(!find_extension_violation(kept, p.s, p.k, p.l), "extend_family: violation survived deletion");
      res.family = std::move(kept);
      return res;
    }
  }
  throw ConstructionError("extend_family: family stayed below beta |S| n^(k-l) after " +
                          std::to_string(p.retry_cap) + " attempts");
}

ExtensionResult disjoint_family(Vertex n, unsigned r, unsigned k, std::uint64_t seed, const DesignOptions& opt) {
  if (k < 1 || k > r) throw ParameterError("disjoint_family: requires 1 <= k <= r");
  if (n == 0) throw ParameterError("disjoint_family: n must be positive");
  ExtensionResult res;
  if (opt.deterministic) {
    res = algebraic_design(n, r, k);
  } else {
    CopyFamily root(0);
    root.push_back({});
    res = extend_family(root, ExtensionParams{0, r, k, 0, n, seed, opt.retry_cap});
  }
  res.family.set_disjointness(k);
  check(verify_pairwise_disjoint(res.family, k).ok, "disjoint_family: tuples are not k-disjoint");
  return res;
}

}  // namespace hrlb

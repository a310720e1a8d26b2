#pragma once

// Counting functions behind the block invariants: the partition function
// p(w), the tuple counts k(a,w), the symmetric tuple counts k^s(a,w), and
// the Brauer character counts l(B) for blocks of S_n, A_n and the spin
// blocks of the double covers. All counts are arbitrary precision.

#include <gmpxx.h>

#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "blockcore/partition.hpp"

namespace blockcore {

using Bigint = mpz_class;

namespace detail {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_odd_prime(int p) {
  require(p >= 3 && p % 2 == 1 && is_prime(p), "p must be an odd prime");
}

}  // namespace detail

// Memoized tables for p(w), k(a,w) and the self-conjugate partition count
// sc(w). Thread safe; results never depend on the caller mix. The tables
// can be persisted to a small binary file (see load/save); a missing or
// mismatched file is simply ignored.
class CountCache {
 public:
  Bigint partition_count(int w) {
    detail::require(w >= 0, "w must be non-negative");
    std::lock_guard<std::mutex> lock(mu_);
    return p_u(w);
  }

  Bigint k(int a, int w) {
    detail::require(a >= 0, "a must be non-negative");
    detail::require(w >= 0, "w must be non-negative");
    std::lock_guard<std::mutex> lock(mu_);
    return k_u(a, w);
  }

  Bigint k_sym(int a, int w) {
    detail::require(a >= 0, "a must be non-negative");
    detail::require(w >= 0, "w must be non-negative");
    std::lock_guard<std::mutex> lock(mu_);
    return k_sym_u(a, w);
  }

  Bigint self_conjugate_count(int w) {
    detail::require(w >= 0, "w must be non-negative");
    std::lock_guard<std::mutex> lock(mu_);
    ensure_sc(w);
    return sc_[w];
  }

  // Binary snapshot: magic, version, then the three tables with values as
  // decimal strings. Returns false on any mismatch without touching the
  // in-memory tables.
  bool load(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return false;
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0) return false;
    std::uint32_t version = 0;
    if (!get_u32(in, version) || version != kVersion) return false;

    std::vector<Bigint> p_table, sc_table;
    std::map<std::pair<int, int>, Bigint> k_table;
    if (!get_big_vector(in, p_table) || !get_big_vector(in, sc_table)) return false;
    std::uint32_t k_count = 0;
    if (!get_u32(in, k_count) || k_count > kMaxEntries) return false;
    for (std::uint32_t i = 0; i < k_count; ++i) {
      std::uint32_t a = 0, w = 0;
      Bigint value;
      if (!get_u32(in, a) || !get_u32(in, w) || a > kMaxEntries || w > kMaxEntries ||
          !get_big(in, value))
        return false;
      k_table.emplace(std::make_pair(static_cast<int>(a), static_cast<int>(w)),
                      std::move(value));
    }
    if (!p_table.empty() && p_table[0] != 1) return false;

    std::lock_guard<std::mutex> lock(mu_);
    if (p_table.size() > p_.size()) p_ = std::move(p_table);
    if (sc_table.size() > sc_.size()) sc_ = std::move(sc_table);
    for (auto& [key, value] : k_table) k_.emplace(key, std::move(value));
    return true;
  }

  bool save(const std::string& file) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out.write(kMagic, 8);
    put_u32(out, kVersion);
    put_big_vector(out, p_);
    put_big_vector(out, sc_);
    put_u32(out, static_cast<std::uint32_t>(k_.size()));
    for (const auto& [key, value] : k_) {
      put_u32(out, static_cast<std::uint32_t>(key.first));
      put_u32(out, static_cast<std::uint32_t>(key.second));
      put_big(out, value);
    }
    return static_cast<bool>(out);
  }

 private:
  static constexpr char kMagic[9] = "BLKCORE1";
  static constexpr std::uint32_t kVersion = 1;
  static constexpr std::uint32_t kMaxEntries = 1u << 22;

  // Euler's pentagonal-number recurrence.
  const Bigint& p_u(int w) {
    while (static_cast<int>(p_.size()) <= w) {
      const int n = static_cast<int>(p_.size());
      if (n == 0) {
        p_.emplace_back(1);
        continue;
      }
      Bigint sum = 0;
      for (int j = 1;; ++j) {
        const long long g1 = static_cast<long long>(j) * (3LL * j - 1) / 2;
        const long long g2 = static_cast<long long>(j) * (3LL * j + 1) / 2;
        if (g1 > n) break;
        if (j % 2 == 1) {
          sum += p_[n - g1];
          if (g2 <= n) sum += p_[n - g2];
        } else {
          sum -= p_[n - g1];
          if (g2 <= n) sum -= p_[n - g2];
        }
      }
      p_.push_back(std::move(sum));
    }
    return p_[w];
  }

  // k(a,w) = sum_j k(a-1, w-j) p(j).
  const Bigint& k_u(int a, int w) {
    const auto key = std::make_pair(a, w);
    if (auto it = k_.find(key); it != k_.end()) return it->second;
    p_u(w);  // materialize so p_ stays stable below
    Bigint sum = 0;
    if (a == 0) {
      sum = (w == 0) ? 1 : 0;
    } else if (a == 1) {
      sum = p_[w];
    } else {
      for (int j = 0; j <= w; ++j) sum += k_u(a - 1, w - j) * p_[j];
    }
    return k_.emplace(key, std::move(sum)).first->second;
  }

  // Self-conjugate partitions of w = partitions into distinct odd parts.
  void ensure_sc(int w) {
    if (static_cast<int>(sc_.size()) > w) return;
    std::vector<Bigint> dp(w + 1);
    dp[0] = 1;
    for (int odd = 1; odd <= w; odd += 2)
      for (int s = w; s >= odd; --s) dp[s] += dp[s - odd];
    sc_ = std::move(dp);
  }

  // Tuples fixed by simultaneous reversal and conjugation: components pair
  // up around the middle, and an odd tuple length leaves one component
  // that must be self-conjugate.
  Bigint k_sym_u(int a, int w) {
    if (a % 2 == 0) {
      if (w % 2 == 1) return 0;
      return k_u(a / 2, w / 2);
    }
    ensure_sc(w);
    Bigint sum = 0;
    for (int j = 0; 2 * j <= w; ++j) sum += k_u((a - 1) / 2, j) * sc_[w - 2 * j];
    return sum;
  }

  static void put_u32(std::ofstream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
  }
  static bool get_u32(std::ifstream& in, std::uint32_t& v) {
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    return static_cast<bool>(in);
  }
  static void put_big(std::ofstream& out, const Bigint& v) {
    const std::string s = v.get_str();
    put_u32(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
  }
  static bool get_big(std::ifstream& in, Bigint& v) {
    std::uint32_t len = 0;
    if (!get_u32(in, len) || len == 0 || len > kMaxEntries) return false;
    std::string s(len, '\0');
    in.read(s.data(), static_cast<std::streamsize>(len));
    if (!in) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    v.set_str(s, 10);
    return true;
  }
  static void put_big_vector(std::ofstream& out, const std::vector<Bigint>& v) {
    put_u32(out, static_cast<std::uint32_t>(v.size()));
    for (const Bigint& x : v) put_big(out, x);
  }
  static bool get_big_vector(std::ifstream& in, std::vector<Bigint>& v) {
    std::uint32_t count = 0;
    if (!get_u32(in, count) || count > kMaxEntries) return false;
    v.resize(count);
    for (std::uint32_t i = 0; i < count; ++i)
      if (!get_big(in, v[i])) return false;
    return true;
  }

  mutable std::mutex mu_;
  std::vector<Bigint> p_;
  std::vector<Bigint> sc_;
  std::map<std::pair<int, int>, Bigint> k_;
};

inline CountCache& count_cache() {
  static CountCache cache;
  return cache;
}

inline Bigint partition_count(int w) { return count_cache().partition_count(w); }

// Number of a-tuples of partitions with total size w.
inline Bigint k(int a, int w) { return count_cache().k(a, w); }

// Number of a-tuples fixed by reversing the tuple and conjugating each entry.
inline Bigint k_sym(int a, int w) { return count_cache().k_sym(a, w); }

inline Bigint self_conjugate_partition_count(int w) {
  return count_cache().self_conjugate_count(w);
}

// Brauer character count of a weight-w block of S_n at an odd prime p.
inline Bigint l_block_Sn(int p, int w) {
  detail::require_odd_prime(p);
  detail::require(w >= 0, "w must be non-negative");
  return k(p - 1, w);
}

// Brauer character count of a weight-w block of A_n at an odd prime p:
// k(p-1,w) for a non-self-conjugate core, (k(p-1,w) + 3 k^s(p-1,w))/2 for
// a self-conjugate one.
inline Bigint l_block_An(int p, int w, bool self_conjugate) {
  detail::require_odd_prime(p);
  detail::require(w >= 0, "w must be non-negative");
  Bigint count = k(p - 1, w);
  if (!self_conjugate) return count;
  count += 3 * k_sym(p - 1, w);
  if (mpz_odd_p(count.get_mpz_t()))
    throw std::logic_error("l_block_An: parity violation");
  return count / 2;
}

// Brauer character count of a weight-w block of A_n at p = 2:
// p(w) for odd w, p(w) + p(w/2) for even w.
inline Bigint l_block_An_p2(int w) {
  detail::require(w >= 0, "w must be non-negative");
  if (w % 2 == 1) return partition_count(w);
  return partition_count(w) + partition_count(w / 2);
}

// Sign of a spin block with the given bar-core: (-1)^(size - length).
inline int spin_block_sign(const BarPartition& core) {
  return (core.size() - core.length()) % 2 == 0 ? 1 : -1;
}

// Weight-1 spin blocks of 2.A_n at p = 3: one Brauer character for sign +1,
// two for sign -1.
inline int l_spin_An_weight1(const BarPartition& core) {
  detail::require(is_p_bar_core(core, 3), "core must be a 3-bar-core");
  return spin_block_sign(core) == 1 ? 1 : 2;
}

}  // namespace blockcore

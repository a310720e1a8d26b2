#pragma once

// Integer partitions and the beta-set machinery behind p-blocks of
// symmetric groups: conjugation, hook lengths, p-cores, p-quotients,
// and the bar analogues for strict partitions.

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blockcore {

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// "4,2,1" -> {4,2,1}; "" and "-" denote the empty partition.
inline std::vector<int> parse_parts(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "-") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok =
        trim(comma == std::string_view::npos ? text.substr(pos)
                                             : text.substr(pos, comma - pos));
    require(!tok.empty(), "partition text: empty entry");
    long long value = 0;
    for (char c : tok) {
      require(c >= '0' && c <= '9',
              "partition text: not a number: '" + std::string(tok) + "'");
      value = value * 10 + (c - '0');
      require(value <= 100000000, "partition text: part too large");
    }
    parts.push_back(static_cast<int>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return parts;
}

inline std::string parts_to_text(const std::vector<int>& parts) {
  if (parts.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

}  // namespace detail

// Weakly decreasing sequence of positive integers. size() is the integer
// being partitioned (the sum of the parts), length() the number of parts.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = std::numeric_limits<int>::max();
    for (int x : parts_) {
      detail::require(x > 0, "partition parts must be positive");
      detail::require(x <= prev, "partition parts must be weakly decreasing");
      prev = x;
      size_ += x;
    }
  }

  static Partition from_text(std::string_view text) {
    return Partition(detail::parse_parts(text));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long long size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return i < length() ? parts_[i] : 0; }

  std::string to_text() const { return detail::parts_to_text(parts_); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_text();
  }

 private:
  std::vector<int> parts_;
  long long size_ = 0;
};

// Strictly decreasing partition; labels spin characters and p-bar-cores.
class BarPartition {
 public:
  BarPartition() = default;

  explicit BarPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = std::numeric_limits<int>::max();
    for (int x : parts_) {
      detail::require(x > 0, "bar partition parts must be positive");
      detail::require(x < prev, "bar partition parts must be strictly decreasing");
      prev = x;
      size_ += x;
    }
  }

  static BarPartition from_text(std::string_view text) {
    return BarPartition(detail::parse_parts(text));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long long size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  Partition to_partition() const { return Partition(parts_); }
  std::string to_text() const { return detail::parts_to_text(parts_); }

  friend bool operator==(const BarPartition&, const BarPartition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const BarPartition& p) {
    return os << p.to_text();
  }

 private:
  std::vector<int> parts_;
  long long size_ = 0;
};

// A p-core together with the p-tuple of quotient partitions. Component i
// collects the beta numbers congruent to i mod p, taken from a beta-set
// whose length is a multiple of p; that convention makes the quotient
// independent of the beta-set length and pins down reconstruct().
struct CoreQuotient {
  Partition core;
  std::vector<Partition> quotient;
  int p = 2;
  int weight = 0;
};

inline Partition conjugate(const Partition& lam) {
  if (lam.empty()) return {};
  std::vector<int> cols(lam.parts()[0], 0);
  for (int part : lam.parts())
    for (int j = 0; j < part; ++j) ++cols[j];
  return Partition(std::move(cols));
}

inline bool is_self_conjugate(const Partition& lam) {
  return conjugate(lam) == lam;
}

// One hook length per cell, in row-major order; treat as a multiset.
inline std::vector<int> hook_lengths(const Partition& lam) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(lam.size()));
  const std::vector<int> cols = conjugate(lam).parts();
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam.parts()[i]; ++j)
      out.push_back(lam.parts()[i] - j + cols[j] - i - 1);
  return out;
}

// First-column hook lengths padded to the given length: beta_i = part(i) + L-1-i.
inline std::vector<int> beta_set(const Partition& lam, int length) {
  detail::require(length >= lam.length(), "beta-set length too small");
  std::vector<int> beta;
  beta.reserve(length);
  for (int i = 0; i < length; ++i) beta.push_back(lam.part(i) + length - 1 - i);
  return beta;
}

inline Partition partition_from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  const int length = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < length; ++i) {
    detail::require(i == 0 || beta[i] < beta[i - 1], "beta numbers must be distinct");
    detail::require(beta[i] >= 0, "beta numbers must be non-negative");
    const int part = beta[i] - (length - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

// Beta-set length used for (core, quotient) work: the smallest multiple
// of p that accommodates every part.
inline int runner_length(const Partition& lam, int p) {
  return p * ((lam.length() + p - 1) / p);
}

// p-core via runners: distribute the beta numbers mod p and push the
// beads on each runner down to the lowest positions. Order-independent
// by construction; single pass over the parts.
inline Partition p_core(const Partition& lam, int p) {
  detail::require(p >= 2, "p must be at least 2");
  const int length = runner_length(lam, p);
  std::vector<int> count(p, 0);
  for (int b : beta_set(lam, length)) ++count[b % p];
  std::vector<int> pushed;
  pushed.reserve(length);
  for (int r = 0; r < p; ++r)
    for (int j = 0; j < count[r]; ++j) pushed.push_back(r + j * p);
  return partition_from_beta_set(std::move(pushed));
}

inline bool is_p_core(const Partition& lam, int p) {
  return p_core(lam, p) == lam;
}

inline CoreQuotient p_quotient(const Partition& lam, int p) {
  detail::require(p >= 2, "p must be at least 2");
  const int length = runner_length(lam, p);
  std::vector<std::vector<int>> runner(p);
  for (int b : beta_set(lam, length)) runner[b % p].push_back(b / p);
  std::vector<Partition> quotient;
  quotient.reserve(p);
  long long quotient_size = 0;
  for (int r = 0; r < p; ++r) {
    quotient.push_back(partition_from_beta_set(std::move(runner[r])));
    quotient_size += quotient.back().size();
  }
  Partition core = p_core(lam, p);
  const long long weight = (lam.size() - core.size()) / p;
  if (weight != quotient_size)
    throw std::logic_error("p_quotient: weight does not match quotient size");
  return CoreQuotient{std::move(core), std::move(quotient), p,
                      static_cast<int>(weight)};
}

// Inverse of p_quotient: place each quotient component back on its runner
// above the core's beads.
inline Partition reconstruct(const CoreQuotient& cq) {
  detail::require(cq.p >= 2, "p must be at least 2");
  detail::require(static_cast<int>(cq.quotient.size()) == cq.p,
                  "quotient must have exactly p components");
  detail::require(is_p_core(cq.core, cq.p), "core must be a p-core");
  int max_component = 0;
  for (const Partition& q : cq.quotient)
    max_component = std::max(max_component, q.length());
  const int length = cq.p * ((cq.core.length() + cq.p - 1) / cq.p + max_component + 1);
  std::vector<int> count(cq.p, 0);
  for (int b : beta_set(cq.core, length)) ++count[b % cq.p];
  std::vector<int> beta;
  beta.reserve(length);
  for (int r = 0; r < cq.p; ++r) {
    const Partition& q = cq.quotient[r];
    const int c = count[r];
    for (int j = 0; j < c; ++j) beta.push_back(r + cq.p * (q.part(j) + c - 1 - j));
  }
  return partition_from_beta_set(std::move(beta));
}

namespace detail {

inline void require_odd_bar_prime(int p) {
  require(p >= 3 && p % 2 == 1, "p must be an odd integer >= 3");
}

// Removable p-bars of a strict partition: a part equal to p, a part a > p
// with a-p not a part, or two parts summing to p.
inline bool has_removable_bar(const std::vector<int>& parts, int p) {
  auto contains = [&parts](int v) {
    return std::find(parts.begin(), parts.end(), v) != parts.end();
  };
  for (int a : parts) {
    if (a == p) return true;
    if (a > p && !contains(a - p)) return true;
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (parts[i] + parts[j] == p) return true;
  return false;
}

}  // namespace detail

inline bool is_p_bar_core(const BarPartition& lam, int p) {
  detail::require_odd_bar_prime(p);
  return !detail::has_removable_bar(lam.parts(), p);
}

// Repeated p-bar removal, largest affected part first. The terminal value
// does not depend on the removal order; the canonical order fixes the
// intermediate sequence.
inline BarPartition p_bar_core(const BarPartition& lam, int p) {
  detail::require_odd_bar_prime(p);
  std::vector<int> parts = lam.parts();
  auto contains = [&parts](int v) {
    return std::find(parts.begin(), parts.end(), v) != parts.end();
  };
  for (;;) {
    bool removed = false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const int a = parts[i];
      if (a == p) {
        parts.erase(parts.begin() + i);
        removed = true;
        break;
      }
      if (a > p && !contains(a - p)) {
        parts[i] = a - p;
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        removed = true;
        break;
      }
    }
    if (!removed) {
      for (std::size_t i = 0; i < parts.size() && !removed; ++i)
        for (std::size_t j = i + 1; j < parts.size() && !removed; ++j)
          if (parts[i] + parts[j] == p) {
            parts.erase(parts.begin() + j);
            parts.erase(parts.begin() + i);
            removed = true;
          }
    }
    if (!removed) break;
  }
  return BarPartition(std::move(parts));
}

// All partitions of n, reverse-lexicographic: [n] first, [1,...,1] last.
inline std::vector<Partition> enumerate_partitions(int n) {
  detail::require(n >= 0, "n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, std::max(n, 1));
  return out;
}

inline std::vector<Partition> enumerate_p_cores(int n, int p) {
  detail::require(p >= 2, "p must be at least 2");
  std::vector<Partition> out;
  for (Partition& lam : enumerate_partitions(n))
    if (is_p_core(lam, p)) out.push_back(std::move(lam));
  return out;
}

inline std::vector<Partition> enumerate_self_conjugate_p_cores(int n, int p) {
  detail::require(p >= 2, "p must be at least 2");
  std::vector<Partition> out;
  for (Partition& lam : enumerate_partitions(n))
    if (is_self_conjugate(lam) && is_p_core(lam, p)) out.push_back(std::move(lam));
  return out;
}

inline std::vector<BarPartition> enumerate_bar_cores(int n, int p) {
  detail::require_odd_bar_prime(p);
  std::vector<BarPartition> out;
  for (const Partition& lam : enumerate_partitions(n)) {
    const std::vector<int>& parts = lam.parts();
    if (std::adjacent_find(parts.begin(), parts.end(),
                           [](int a, int b) { return a <= b; }) != parts.end())
      continue;
    BarPartition bar(parts);
    if (is_p_bar_core(bar, p)) out.push_back(std::move(bar));
  }
  return out;
}

}  // namespace blockcore

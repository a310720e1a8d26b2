#pragma once

// Block descriptors for S_n, A_n, 2.S_n and 2.A_n, the covering rules
// between them, and the search for blocks whose irreducible Brauer
// characters form a single orbit under the automorphism group.

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "blockcore/counting.hpp"
#include "blockcore/partition.hpp"

namespace blockcore {

enum class Family { Sn, An, SpinSn, SpinAn };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Sn: return "Sn";
    case Family::An: return "An";
    case Family::SpinSn: return "SpinSn";
    case Family::SpinAn: return "SpinAn";
  }
  return "?";
}

inline bool is_spin(Family f) {
  return f == Family::SpinSn || f == Family::SpinAn;
}

// One p-block. The core is a p-core for the ordinary families and a
// p-bar-core for the spin families; n = |core| + p * weight throughout.
// defect and l are left empty where no formula is exposed.
struct BlockDescriptor {
  Family family = Family::Sn;
  int n = 0;
  int p = 2;
  std::variant<Partition, BarPartition> core;
  int weight = 0;
  bool self_conjugate = false;
  std::optional<int> sign;
  std::optional<int> defect;
  std::optional<Bigint> l;
};

inline std::string core_text(const BlockDescriptor& b) {
  return std::visit([](const auto& core) { return core.to_text(); }, b.core);
}

// p-valuation of (pw)!, the order of the defect group's ambient Sylow
// p-subgroup.
inline long long defect_Sn(int p, int w) {
  detail::require_odd_prime(p);
  detail::require(w >= 0, "w must be non-negative");
  const long long pw = static_cast<long long>(p) * w;
  long long total = 0;
  for (long long q = p; q <= pw; q *= p) {
    total += pw / q;
    if (q > pw / p) break;
  }
  return total;
}

// Blocks of S_n at an odd prime: one per p-core of n - pw, with
// l = k(p-1, w) Brauer characters. Ascending weight, cores in
// reverse-lexicographic order.
inline std::vector<BlockDescriptor> blocks_Sn(int n, int p) {
  detail::require_odd_prime(p);
  detail::require(n >= 1, "n must be >= 1");
  std::vector<BlockDescriptor> out;
  for (int w = 0; p * w <= n; ++w) {
    for (Partition& mu : enumerate_p_cores(n - p * w, p)) {
      BlockDescriptor b;
      b.family = Family::Sn;
      b.n = n;
      b.p = p;
      b.weight = w;
      b.self_conjugate = is_self_conjugate(mu);
      b.defect = static_cast<int>(defect_Sn(p, w));
      b.l = count_cache().k(p - 1, w);
      b.core = std::move(mu);
      out.push_back(std::move(b));
    }
  }
  return out;
}

// Blocks of A_n, n >= 5. For odd p the blocks are indexed by p-cores
// modulo conjugation (the representative is the one that enumerates
// first) and the reported defect is that of the covering S_n block. For
// p = 2 the cores are the triangular partitions, every block is
// self-conjugate, and only the weight <= 1 defect-zero fact is reported.
inline std::vector<BlockDescriptor> blocks_An(int n, int p) {
  detail::require(n >= 5, "n must be >= 5 for alternating groups");
  detail::require(detail::is_prime(p), "p must be prime");
  std::vector<BlockDescriptor> out;
  for (int w = 0; p * w <= n; ++w) {
    for (Partition& mu : enumerate_p_cores(n - p * w, p)) {
      const Partition conj = conjugate(mu);
      if (mu.parts() < conj.parts()) continue;  // conjugate already listed
      BlockDescriptor b;
      b.family = Family::An;
      b.n = n;
      b.p = p;
      b.weight = w;
      b.self_conjugate = (mu == conj);
      if (p == 2) {
        b.l = l_block_An_p2(w);
        if (w <= 1) b.defect = 0;
      } else {
        b.l = l_block_An(p, w, b.self_conjugate);
        b.defect = static_cast<int>(defect_Sn(p, w));
      }
      b.core = std::move(mu);
      out.push_back(std::move(b));
    }
  }
  return out;
}

// Spin blocks of 2.A_n, exposed for p = 3: one block per 3-bar-core of
// n - 3w. Weight-1 blocks carry the sign and the resulting Brauer
// character count; other weights leave l unspecified.
inline std::vector<BlockDescriptor> spin_blocks_An(int n, int p) {
  detail::require(p == 3, "spin blocks are exposed for p = 3 only");
  detail::require(n >= 5, "n must be >= 5 for alternating groups");
  std::vector<BlockDescriptor> out;
  for (int w = 0; 3 * w <= n; ++w) {
    for (BarPartition& core : enumerate_bar_cores(n - 3 * w, 3)) {
      BlockDescriptor b;
      b.family = Family::SpinAn;
      b.n = n;
      b.p = 3;
      b.weight = w;
      if (w == 0) {
        b.defect = 0;
      } else if (w == 1) {
        b.sign = spin_block_sign(core);
        b.l = Bigint(l_spin_An_weight1(core));
        b.defect = 1;
      }
      b.core = std::move(core);
      out.push_back(std::move(b));
    }
  }
  return out;
}

enum class CaseId { Alt1, Spin2, SpinA6_3, SpinA6_4, Sporadic, ExcCover };

inline const char* case_name(CaseId c) {
  switch (c) {
    case CaseId::Alt1: return "Alt-1";
    case CaseId::Spin2: return "Spin-2";
    case CaseId::SpinA6_3: return "SpinA6-3";
    case CaseId::SpinA6_4: return "SpinA6-4";
    case CaseId::Sporadic: return "Sporadic";
    case CaseId::ExcCover: return "ExcCover";
  }
  return "?";
}

// One single-orbit block found by the classification.
struct ClassificationHit {
  CaseId case_id = CaseId::Alt1;
  std::string group;
  int n = 0;
  int p = 2;
  std::optional<std::string> core;
  std::optional<int> weight;
  std::optional<int> sign;
  int defect = 1;
  Bigint l;
  std::vector<long long> degrees;
  int multiplicity = 1;
};

// Single-orbit blocks among the covering groups of A_n for the given
// (n, p): the weight-1 self-conjugate blocks of A_n at p = 3, the
// weight-1 spin blocks of 2.A_n at p = 3, and the two fixed cases for
// the covers of A_6 at p = 5. No other (n, p) produces a hit.
inline std::vector<ClassificationHit> classify_single_orbit(int n, int p) {
  detail::require(n >= 5, "n must be >= 5");
  detail::require(p >= 2, "p must be at least 2");
  std::vector<ClassificationHit> hits;
  if (p == 3) {
    for (const BlockDescriptor& b : blocks_An(n, 3)) {
      if (b.weight != 1 || !b.self_conjugate) continue;
      ClassificationHit h;
      h.case_id = CaseId::Alt1;
      h.group = "A_" + std::to_string(n);
      h.n = n;
      h.p = 3;
      h.core = core_text(b);
      h.weight = 1;
      h.defect = 1;
      h.l = *b.l;
      hits.push_back(std::move(h));
    }
    for (const BlockDescriptor& b : spin_blocks_An(n, 3)) {
      if (b.weight != 1) continue;
      ClassificationHit h;
      h.case_id = CaseId::Spin2;
      h.group = "2.A_" + std::to_string(n);
      h.n = n;
      h.p = 3;
      h.core = core_text(b);
      h.weight = 1;
      h.sign = b.sign;
      h.defect = 1;
      h.l = *b.l;
      hits.push_back(std::move(h));
    }
  }
  if (n == 6 && p == 5) {
    // Fixed data from the Brauer character tables of the covers of A_6.
    ClassificationHit h3;
    h3.case_id = CaseId::SpinA6_3;
    h3.group = "2.A_6";
    h3.n = 6;
    h3.p = 5;
    h3.weight = 1;
    h3.defect = 1;
    h3.l = 2;
    h3.degrees = {4, 4};
    hits.push_back(std::move(h3));
    ClassificationHit h4;
    h4.case_id = CaseId::SpinA6_4;
    h4.group = "6.A_6";
    h4.n = 6;
    h4.p = 5;
    h4.defect = 1;
    h4.l = 2;
    h4.degrees = {6, 6};
    h4.multiplicity = 2;
    hits.push_back(std::move(h4));
  }
  return hits;
}

// Ascending list of all n <= n_max at which the given case occurs. The
// optional worker count only affects scheduling, never the output.
inline std::vector<int> first_occurrences(CaseId case_id, int n_max, int jobs = 1) {
  detail::require(n_max >= 5, "n_max must be >= 5");
  detail::require(case_id == CaseId::Alt1 || case_id == CaseId::Spin2 ||
                      case_id == CaseId::SpinA6_3 || case_id == CaseId::SpinA6_4,
                  "case is not indexed by n");
  const int p = (case_id == CaseId::Alt1 || case_id == CaseId::Spin2) ? 3 : 5;
  std::vector<char> found(n_max + 1, 0);
  auto probe = [&](int n) {
    for (const ClassificationHit& h : classify_single_orbit(n, p))
      if (h.case_id == case_id) {
        found[n] = 1;
        return;
      }
  };
  if (jobs <= 1) {
    for (int n = 5; n <= n_max; ++n) probe(n);
  } else {
    std::atomic<int> next{5};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int t = 0; t < jobs; ++t)
      workers.emplace_back([&] {
        for (int n = next.fetch_add(1); n <= n_max; n = next.fetch_add(1)) probe(n);
      });
    for (std::thread& t : workers) t.join();
  }
  std::vector<int> out;
  for (int n = 5; n <= n_max; ++n)
    if (found[n]) out.push_back(n);
  return out;
}

}  // namespace blockcore

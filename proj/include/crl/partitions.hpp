#pragma once

// Partitions of d in exponent form (1^e1 2^e2 ... d^ed), the degree of the
// coincident root locus, refinement, the singular-merge set, and the
// two-part regularity bound and Hilbert polynomial.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "crl/arith.hpp"
#include "crl/polyring.hpp"

namespace crl {

class Partition {
 public:
  // The empty partition of 0; a placeholder for default-constructed reports.
  Partition() = default;

  // parse_partition: multiplicities of a nonempty list of positive parts.
  static Partition from_parts(std::span<const int> parts);
  // "3,2,2" or "3 2 2".
  static Partition parse(std::string_view text);
  // Map r -> e_r; zero exponents are dropped.
  static Partition from_exponents(const std::map<int, int>& exps);

  int degree() const { return degree_; }
  int num_parts() const { return num_parts_; }
  // ceil(max over stored r of (e_r + 1) / r): the smallest alpha + 1 at which
  // every top cohomology factor is nonzero.
  int cohomology_threshold() const { return threshold_; }

  const std::map<int, int>& exponents() const { return exps_; }
  int exponent(int r) const;
  // Weakly decreasing.
  std::vector<int> parts() const;
  bool all_parts_equal() const { return exps_.size() == 1; }

  // "(1 2^3 3^2 4)".
  std::string to_string() const;
  // "3,2,2".
  std::string to_list_string() const;

  auto operator<=>(const Partition& o) const { return exps_ <=> o.exps_; }
  bool operator==(const Partition& o) const { return exps_ == o.exps_; }

 private:
  explicit Partition(std::map<int, int> exps);

  std::map<int, int> exps_;
  int degree_ = 0;
  int num_parts_ = 0;
  int threshold_ = 0;
};

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

// True iff every part of coarse is a sum of a disjoint group of parts of fine.
bool refines(const Partition& fine, const Partition& coarse);

// n! / prod e_r! * prod r^e_r.
Integer crl_degree(const Partition& p);

// Coefficient of prod t_r^e_r in (1 + t_1 + 2 t_2 + ... + d t_d)^n, by
// truncated expansion.
Integer de_jonquieres_degree(const Partition& p);

enum class MergeCase { A, B, C };

// The integers that produced a merged partition. Unused fields are zero:
// case A uses r1, r2; case B uses r1, r2, t; case C uses all but t.
struct MergeWitness {
  int r1 = 0;
  int r2 = 0;
  int r3 = 0;
  int t = 0;
  int t1 = 0;
  int t2 = 0;

  auto operator<=>(const MergeWitness&) const = default;
};

struct MergeEntry {
  Partition merged;
  std::vector<MergeWitness> witnesses;
};

struct MergeSet {
  std::vector<MergeEntry> case_a;
  std::vector<MergeEntry> case_b;
  std::vector<MergeEntry> case_c;

  bool empty() const { return case_a.empty() && case_b.empty() && case_c.empty(); }
  const std::vector<MergeEntry>& cases(MergeCase c) const;
  bool contains(MergeCase c, const Partition& mu) const;
};

nlohmann::json to_json(const MergeSet& s);

// Partitions mu whose loci X_mu make up the singular locus of X_lambda.
MergeSet singular_merge_set(const Partition& p);

// Castelnuovo-Mumford regularity bound for a two-part partition.
Integer regularity_bound(const Partition& p);

// lambda1 lambda2 m^2 + 2 over the single variable "m"; two distinct parts only.
MultiPoly hilbert_polynomial_two_part(const Partition& p);

// All partitions of d, parts weakly decreasing, in reverse lexicographic order.
std::vector<Partition> all_partitions(int d);

}  // namespace crl

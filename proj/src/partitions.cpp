#include "crl/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "crl/error.hpp"

namespace crl {

Partition::Partition(std::map<int, int> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) throw ValidationError("partition must have at least one part");
  for (const auto& [r, e] : exps_) {
    if (r <= 0) throw ValidationError("partition parts must be positive");
    if (e <= 0) throw ValidationError("partition exponents must be positive");
    degree_ += r * e;
    num_parts_ += e;
    // ceil((e + 1) / r)
    threshold_ = std::max(threshold_, (e + 1 + r - 1) / r);
  }
}

Partition Partition::from_parts(std::span<const int> parts) {
  if (parts.empty()) throw ValidationError("partition must have at least one part");
  std::map<int, int> exps;
  for (int r : parts) {
    if (r <= 0) throw ValidationError("partition parts must be positive, got " + std::to_string(r));
    ++exps[r];
  }
  return Partition(std::move(exps));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '[' ||
        c == ']') {
      ++i;
      continue;
    }
    if (c == '-') throw ValidationError("partition parts must be positive");
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ValidationError("invalid character in partition: '" + std::string(1, c) + "'");
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    parts.push_back(std::stoi(std::string(text.substr(start, i - start))));
  }
  return from_parts(parts);
}

Partition Partition::from_exponents(const std::map<int, int>& exps) {
  std::map<int, int> kept;
  for (const auto& [r, e] : exps) {
    if (e < 0) throw ValidationError("partition exponents must be nonnegative");
    if (e > 0) kept[r] = e;
  }
  return Partition(std::move(kept));
}

int Partition::exponent(int r) const {
  auto it = exps_.find(r);
  return it == exps_.end() ? 0 : it->second;
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  for (auto it = exps_.rbegin(); it != exps_.rend(); ++it) out.insert(out.end(), it->second, it->first);
  return out;
}

std::string Partition::to_string() const {
  std::string out = "(";
  bool first = true;
  for (const auto& [r, e] : exps_) {
    if (!first) out += " ";
    first = false;
    out += std::to_string(r);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out + ")";
}

std::string Partition::to_list_string() const {
  std::string out;
  for (int r : parts()) out += (out.empty() ? "" : ",") + std::to_string(r);
  return out;
}

nlohmann::json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const nlohmann::json& j) {
  return Partition::from_parts(j.get<std::vector<int>>());
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.degree() != coarse.degree())
    throw ValidationError("refines: partitions of different integers (" + std::to_string(fine.degree()) +
                          " vs " + std::to_string(coarse.degree()) + ")");
  const std::vector<int> pieces = fine.parts();
  std::set<std::pair<std::size_t, std::vector<int>>> dead;

  // Place pieces[i..] into the remaining capacities of the coarse parts.
  std::function<bool(std::size_t, std::vector<int>&)> place = [&](std::size_t i, std::vector<int>& room) {
    if (i == pieces.size()) return true;
    std::vector<int> key = room;
    std::sort(key.begin(), key.end());
    if (dead.contains({i, key})) return false;
    for (std::size_t b = 0; b < room.size(); ++b) {
      if (room[b] < pieces[i]) continue;
      bool seen = false;
      for (std::size_t c = 0; c < b; ++c) seen = seen || room[c] == room[b];
      if (seen) continue;
      room[b] -= pieces[i];
      const bool ok = place(i + 1, room);
      room[b] += pieces[i];
      if (ok) return true;
    }
    dead.insert({i, std::move(key)});
    return false;
  };
  std::vector<int> room = coarse.parts();
  return place(0, room);
}

Integer crl_degree(const Partition& p) {
  Integer out = factorial(p.num_parts());
  for (const auto& [r, e] : p.exponents()) {
    out /= factorial(e);
    Integer rp;
    mpz_ui_pow_ui(rp.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(e));
    out *= rp;
  }
  return out;
}

Integer de_jonquieres_degree(const Partition& p) {
  // Only t_r with e_r > 0 can contribute to the target monomial; everything
  // else is truncated, as is any exponent above e_r.
  std::vector<int> sizes;
  std::vector<int> caps;
  for (const auto& [r, e] : p.exponents()) {
    sizes.push_back(r);
    caps.push_back(e);
  }
  std::map<std::vector<int>, Integer> poly{{std::vector<int>(sizes.size(), 0), 1}};
  for (int factor = 0; factor < p.num_parts(); ++factor) {
    std::map<std::vector<int>, Integer> next;
    for (const auto& [mono, coeff] : poly) {
      next[mono] += coeff;  // the constant term 1
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (mono[i] == caps[i]) continue;
        std::vector<int> m = mono;
        ++m[i];
        next[m] += coeff * sizes[i];
      }
    }
    poly = std::move(next);
  }
  auto it = poly.find(caps);
  return it == poly.end() ? Integer(0) : it->second;
}

const std::vector<MergeEntry>& MergeSet::cases(MergeCase c) const {
  switch (c) {
    case MergeCase::A:
      return case_a;
    case MergeCase::B:
      return case_b;
    case MergeCase::C:
      return case_c;
  }
  throw ValidationError("unknown merge case");
}

bool MergeSet::contains(MergeCase c, const Partition& mu) const {
  const auto& v = cases(c);
  return std::any_of(v.begin(), v.end(), [&](const MergeEntry& e) { return e.merged == mu; });
}

namespace {

void record(std::vector<MergeEntry>& bucket, const std::map<int, int>& exps, const MergeWitness& w) {
  Partition mu = Partition::from_exponents(exps);
  for (auto& entry : bucket) {
    if (entry.merged == mu) {
      if (std::find(entry.witnesses.begin(), entry.witnesses.end(), w) == entry.witnesses.end())
        entry.witnesses.push_back(w);
      return;
    }
  }
  bucket.push_back({std::move(mu), {w}});
}

void sort_bucket(std::vector<MergeEntry>& bucket) {
  std::sort(bucket.begin(), bucket.end(),
            [](const MergeEntry& a, const MergeEntry& b) { return a.merged.parts() > b.merged.parts(); });
  for (auto& e : bucket) std::sort(e.witnesses.begin(), e.witnesses.end());
}

nlohmann::json bucket_json(const std::vector<MergeEntry>& bucket) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : bucket) {
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : e.witnesses)
      ws.push_back({{"r1", w.r1}, {"r2", w.r2}, {"r3", w.r3}, {"t", w.t}, {"t1", w.t1}, {"t2", w.t2}});
    out.push_back({{"partition", to_json(e.merged)}, {"exponent_form", e.merged.to_string()}, {"witnesses", ws}});
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const MergeSet& s) {
  return {{"case_a", bucket_json(s.case_a)}, {"case_b", bucket_json(s.case_b)}, {"case_c", bucket_json(s.case_c)}};
}

MergeSet singular_merge_set(const Partition& p) {
  const int d = p.degree();
  const auto& e = p.exponents();
  MergeSet out;

  // (a) two parts of distinct sizes r1 < r2 fuse into one part r1 + r2.
  for (auto i = e.begin(); i != e.end(); ++i) {
    for (auto j = std::next(i); j != e.end(); ++j) {
      std::map<int, int> f = e;
      --f[i->first];
      --f[j->first];
      ++f[i->first + j->first];
      record(out.case_a, f, {.r1 = i->first, .r2 = j->first});
    }
  }

  // (b) t parts of size r2 fuse into one more part of an existing size r1 = t r2.
  for (const auto& [r1, e1] : e) {
    for (const auto& [r2, e2] : e) {
      if (r1 == r2 || r1 % r2 != 0) continue;
      const int t = r1 / r2;
      if (e2 < t) continue;
      std::map<int, int> f = e;
      ++f[r1];
      f[r2] -= t;
      record(out.case_b, f, {.r1 = r1, .r2 = r2, .t = t});
    }
  }

  // (c) t1 parts r1 and t2 parts r2 become two parts r3 = t1 r1 = t2 r2.
  for (auto i = e.begin(); i != e.end(); ++i) {
    for (auto j = std::next(i); j != e.end(); ++j) {
      const int r1 = i->first;
      const int r2 = j->first;
      for (int r3 = 1; r3 <= d; ++r3) {
        if (r3 == r1 || r3 == r2 || r3 % r1 != 0 || r3 % r2 != 0) continue;
        const int t1 = r3 / r1;
        const int t2 = r3 / r2;
        if (i->second < t1 || j->second < t2) continue;
        std::map<int, int> f = e;
        f[r1] -= t1;
        f[r2] -= t2;
        f[r3] += 2;
        record(out.case_c, f, {.r1 = r1, .r2 = r2, .r3 = r3, .t1 = t1, .t2 = t2});
      }
    }
  }

  sort_bucket(out.case_a);
  sort_bucket(out.case_b);
  sort_bucket(out.case_c);
  return out;
}

Integer regularity_bound(const Partition& p) {
  const auto parts = p.parts();
  if (parts.size() != 2)
    throw ValidationError("regularity_bound: partition must have exactly two parts, got " + p.to_string());
  const Integer d = p.degree();
  if (parts[0] == parts[1]) return d * d / 4 - d + 3;
  const Integer prod = Integer(parts[0]) * parts[1];
  const Integer inner = 2 * prod - d + 2;
  return prod * inner * inner + 2 * prod - d + 5;
}

MultiPoly hilbert_polynomial_two_part(const Partition& p) {
  const auto parts = p.parts();
  if (parts.size() != 2 || parts[0] == parts[1])
    throw ValidationError("hilbert_polynomial_two_part: needs two distinct parts, got " + p.to_string());
  auto vars = make_vars({"m"});
  return MultiPoly::monomial(vars, {2}, Rational(parts[0] * parts[1])) + MultiPoly::constant(vars, 2);
}

std::vector<Partition> all_partitions(int d) {
  if (d <= 0) throw ValidationError("all_partitions: d must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition::from_parts(cur));
      return;
    }
    for (int r = std::min(remaining, max_part); r >= 1; --r) {
      cur.push_back(r);
      rec(remaining - r, r);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

}  // namespace crl

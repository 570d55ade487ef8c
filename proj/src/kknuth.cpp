#include "khecke/kknuth.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "khecke/enumerate.hpp"
#include "khecke/hecke.hpp"
#include "khecke/parallel.hpp"

namespace khecke {

namespace {

using Packed = std::string;

Packed pack(const Word& w) {
  Packed s;
  s.reserve(w.size());
  for (Letter x : w) {
    if (x < 1 || x > 255) throw std::invalid_argument("letters must lie in [1, 255] for search");
    s.push_back(static_cast<char>(static_cast<unsigned char>(x)));
  }
  return s;
}

Word unpack(const Packed& s) {
  std::vector<Letter> v;
  v.reserve(s.size());
  for (char c : s) v.push_back(static_cast<unsigned char>(c));
  return Word(std::move(v));
}

bool shortlex_less(const Packed& a, const Packed& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool strictly_between(unsigned char lo_or_hi, unsigned char other, unsigned char mid) {
  const auto lo = std::min(lo_or_hi, other);
  const auto hi = std::max(lo_or_hi, other);
  return lo < mid && mid < hi;
}

// Appends every one-move neighbor of s (possibly with repeats).
void neighbors(const Packed& s, std::size_t max_len, std::vector<Packed>& out) {
  const std::size_t n = s.size();
  const auto at = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
  for (std::size_t i = 0; i < n; ++i) {
    // p -> pp
    if (n + 1 <= max_len && (i == 0 || s[i - 1] != s[i])) {
      Packed t = s;
      t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), s[i]);
      out.push_back(std::move(t));
    }
    // pp -> p
    if (i + 1 < n && s[i] == s[i + 1]) {
      Packed t = s;
      t.erase(i, 1);
      out.push_back(std::move(t));
    }
    if (i + 2 >= n) continue;
    const unsigned char a = at(i), b = at(i + 1), c = at(i + 2);
    // pqp <-> qpq
    if (a == c && a != b) {
      Packed t = s;
      t[i] = static_cast<char>(b);
      t[i + 1] = static_cast<char>(a);
      t[i + 2] = static_cast<char>(b);
      out.push_back(std::move(t));
    }
    // pqs <-> qps, p < s < q
    if (strictly_between(a, b, c)) {
      Packed t = s;
      std::swap(t[i], t[i + 1]);
      out.push_back(std::move(t));
    }
    // sqp <-> spq, p < s < q
    if (strictly_between(b, c, a)) {
      Packed t = s;
      std::swap(t[i + 1], t[i + 2]);
      out.push_back(std::move(t));
    }
  }
}

// Expands a frontier in parallel; results come back in frontier order.
std::vector<std::vector<Packed>> expand(const std::vector<Packed>& frontier, std::size_t max_len) {
  constexpr std::size_t block = 512;
  const std::size_t blocks = (frontier.size() + block - 1) / block;
  std::vector<std::vector<Packed>> out(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    const std::size_t lo = b * block, hi = std::min(frontier.size(), lo + block);
    for (std::size_t i = lo; i < hi; ++i) neighbors(frontier[i], max_len, out[b]);
  });
  return out;
}

struct Invariants {
  std::vector<Letter> support;
  int lis;
  int lds;
  std::vector<int> hecke;
};

Invariants invariants_of(const Word& w) {
  return {khecke::support(w), khecke::lis(w), khecke::lds(w), hecke_permutation(w)};
}

std::string set_string(const std::vector<Letter>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string permutation_string(const std::vector<int>& p) {
  const bool wide = p.size() > 9;
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (wide && i) out += ",";
    out += std::to_string(p[i]);
  }
  return out;
}

std::optional<std::string> compare(const Invariants& x, const Invariants& y, const std::string& prefix) {
  if (x.support != y.support)
    return prefix + "support " + set_string(x.support) + " vs " + set_string(y.support);
  if (x.lis != y.lis) return prefix + "lis " + std::to_string(x.lis) + " vs " + std::to_string(y.lis);
  if (x.lds != y.lds) return prefix + "lds " + std::to_string(x.lds) + " vs " + std::to_string(y.lds);
  if (x.hecke != y.hecke)
    return prefix + "hecke permutation " + permutation_string(x.hecke) + " vs " + permutation_string(y.hecke);
  return std::nullopt;
}

}  // namespace

std::vector<int> hecke_permutation(const Word& w) {
  const Letter m = w.empty() ? 0 : max_letter(w);
  std::vector<int> perm(static_cast<std::size_t>(m) + 1);
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i) + 1;
  for (Letter x : w) {
    auto& a = perm[static_cast<std::size_t>(x) - 1];
    auto& b = perm[static_cast<std::size_t>(x)];
    if (a < b) std::swap(a, b);
  }
  return perm;
}

std::vector<Word> relation_neighbors(const Word& w, std::size_t max_len) {
  std::vector<Packed> raw;
  neighbors(pack(w), max_len, raw);
  std::sort(raw.begin(), raw.end(), shortlex_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Word> out;
  out.reserve(raw.size());
  for (const auto& s : raw) out.push_back(unpack(s));
  return out;
}

bool ClassSlice::contains(const Word& w) const {
  return std::binary_search(words.begin(), words.end(), w, [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

namespace {

// Returns the visited set; saturated reports whether the closure finished.
std::unordered_set<Packed> closure(const Packed& seed, std::size_t max_len, const SearchLimits& limits,
                                   bool& saturated) {
  std::unordered_set<Packed> seen{seed};
  std::vector<Packed> frontier{seed};
  saturated = true;
  while (!frontier.empty()) {
    std::vector<Packed> next;
    for (auto& batch : expand(frontier, max_len)) {
      for (auto& t : batch) {
        if (seen.size() >= limits.max_words) {
          saturated = false;
          return seen;
        }
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

ClassSlice class_slice(const Word& w, std::size_t max_len, const SearchLimits& limits) {
  if (max_len < w.size()) throw std::invalid_argument("max_len is shorter than the seed word");
  ClassSlice slice;
  slice.seed = w;
  slice.max_len = max_len;
  auto seen = closure(pack(w), max_len, limits, slice.saturated);
  std::vector<Packed> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), shortlex_less);
  slice.words.reserve(sorted.size());
  for (const auto& s : sorted) slice.words.push_back(unpack(s));
  return slice;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::equivalent: return "equivalent";
    case VerdictKind::distinct: return "distinct";
    case VerdictKind::unknown: return "unknown";
  }
  return "unknown";
}

std::optional<std::string> invariant_mismatch(const Word& a, const Word& b) {
  if (auto m = compare(invariants_of(a), invariants_of(b), "")) return m;
  const auto sup = khecke::support(a);
  for (std::size_t i = 0; i < sup.size(); ++i)
    for (std::size_t j = i; j < sup.size(); ++j) {
      if (i == 0 && j + 1 == sup.size()) continue;
      const Letter lo = sup[i], hi = sup[j];
      const std::string prefix =
          "interval [" + std::to_string(lo) + "," + std::to_string(hi) + "]: ";
      if (auto m = compare(invariants_of(restrict_word(a, lo, hi)),
                           invariants_of(restrict_word(b, lo, hi)), prefix))
        return m;
    }
  return std::nullopt;
}

std::size_t default_max_len(const Word& w1, const Word& w2) { return w1.size() + w2.size() + 4; }

Verdict equivalent(const Word& w1, const Word& w2, std::optional<std::size_t> max_len,
                   const SearchLimits& limits) {
  Verdict v;
  v.bound = max_len.value_or(default_max_len(w1, w2));
  if (w1 == w2) {
    v.kind = VerdictKind::equivalent;
    v.chain = {w1};
    return v;
  }
  if (auto m = invariant_mismatch(w1, w2)) {
    v.kind = VerdictKind::distinct;
    v.witness = *m;
    return v;
  }
  if (w1.size() > v.bound || w2.size() > v.bound) {
    v.witness = "input longer than bound";
    return v;
  }

  // parent maps double as visited sets; the seeds map to themselves
  const Packed a = pack(w1), b = pack(w2);
  std::unordered_map<Packed, Packed> from_a{{a, a}}, from_b{{b, b}};
  std::vector<Packed> front_a{a}, front_b{b};
  std::optional<Packed> meet;

  while (!meet && !front_a.empty() && !front_b.empty()) {
    const bool grow_a = front_a.size() <= front_b.size();
    auto& mine = grow_a ? from_a : from_b;
    auto& theirs = grow_a ? from_b : from_a;
    auto& front = grow_a ? front_a : front_b;
    std::vector<Packed> next;
    std::vector<Packed> local;
    for (std::size_t i = 0; i < front.size() && !meet; ++i) {
      local.clear();
      neighbors(front[i], v.bound, local);
      for (auto& t : local) {
        if (mine.contains(t)) continue;
        if (mine.size() + theirs.size() >= limits.max_words) {
          v.witness = "bound too large: search exceeded " + std::to_string(limits.max_words) + " words";
          return v;
        }
        mine.emplace(t, front[i]);
        if (theirs.contains(t)) {
          meet = t;
          break;
        }
        next.push_back(std::move(t));
      }
    }
    front = std::move(next);
  }

  if (!meet) {
    v.witness = "no chain within bound " + std::to_string(v.bound);
    return v;
  }
  std::vector<Packed> left;
  for (Packed cur = *meet;; cur = from_a.at(cur)) {
    left.push_back(cur);
    if (cur == a) break;
  }
  std::reverse(left.begin(), left.end());
  for (Packed cur = *meet; cur != b;) {
    cur = from_b.at(cur);
    left.push_back(cur);
  }
  v.kind = VerdictKind::equivalent;
  for (const auto& s : left) v.chain.push_back(unpack(s));
  return v;
}

bool is_valid_chain(const std::vector<Word>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const std::size_t cap = std::max(chain[i].size(), chain[i + 1].size());
    const auto nb = relation_neighbors(chain[i], cap);
    if (std::find(nb.begin(), nb.end(), chain[i + 1]) == nb.end()) return false;
  }
  return true;
}

ClassOracle::ClassOracle(Word seed, std::size_t max_len, SearchLimits limits)
    : seed_(std::move(seed)), max_len_(max_len), limits_(limits) {}

void ClassOracle::build() {
  built_ = true;
  if (seed_.size() > max_len_) return;
  members_ = closure(pack(seed_), max_len_, limits_, saturated_);
}

VerdictKind ClassOracle::classify(const Word& w) {
  if (w == seed_) return VerdictKind::equivalent;
  if (invariant_mismatch(seed_, w)) return VerdictKind::distinct;
  if (w.size() > max_len_) return VerdictKind::unknown;
  if (!built_) build();
  return members_.contains(pack(w)) ? VerdictKind::equivalent : VerdictKind::unknown;
}

TableauClass class_tableaux(const Word& w, std::size_t max_len, const SearchLimits& limits) {
  TableauClass result;
  result.bound = max_len;
  const auto sup = khecke::support(w);
  const int k = static_cast<int>(sup.size());
  const IncreasingTableau p = insertion_tableau(w);
  if (k == 0) {
    result.members.push_back(p);
    return result;
  }
  const int first_row = lis(w), first_col = lds(w);
  ClassOracle oracle(w, max_len, limits);

  for (const auto& shape : shapes_in_box(k)) {
    if (shape.row_length(1) != first_row || shape.length() != first_col) continue;
    for_each_increasing_tableau(SkewShape(shape, {}), k, [&](const IncreasingTableau& flat) {
      std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
      Rows rows = flat.rows();
      for (auto& row : rows)
        for (auto& x : row) {
          used[static_cast<std::size_t>(x)] = true;
          x = sup[static_cast<std::size_t>(x) - 1];
        }
      if (std::count(used.begin() + 1, used.end(), true) != k) return;
      IncreasingTableau cand(std::move(rows));
      if (cand == p) {
        result.members.push_back(std::move(cand));
        return;
      }
      switch (oracle.classify(reading_word(cand))) {
        case VerdictKind::equivalent: result.members.push_back(std::move(cand)); break;
        case VerdictKind::unknown: result.unresolved.push_back(std::move(cand)); break;
        case VerdictKind::distinct: break;
      }
    });
  }
  std::sort(result.members.begin(), result.members.end());
  std::sort(result.unresolved.begin(), result.unresolved.end());
  return result;
}

TableauClass equivalent_tableaux(const IncreasingTableau& t, std::size_t max_len,
                                 const SearchLimits& limits) {
  if (!t.inner().empty()) throw std::invalid_argument("equivalent_tableaux needs a straight shape");
  return class_tableaux(reading_word(t), max_len, limits);
}

std::string to_string(UrtStatus s) {
  switch (s) {
    case UrtStatus::urt_within_bound: return "urt-within-bound";
    case UrtStatus::not_urt: return "not-urt";
    case UrtStatus::unknown: return "unknown";
  }
  return "unknown";
}

UrtVerdict is_urt(const IncreasingTableau& t, std::size_t max_len, const SearchLimits& limits) {
  UrtVerdict v;
  v.bound = max_len;
  auto cls = equivalent_tableaux(t, max_len, limits);
  for (const auto& m : cls.members)
    if (m != t) {
      v.status = UrtStatus::not_urt;
      v.witness = m;
      return v;
    }
  v.unresolved = std::move(cls.unresolved);
  v.status = v.unresolved.empty() ? UrtStatus::urt_within_bound : UrtStatus::unknown;
  return v;
}

}  // namespace khecke

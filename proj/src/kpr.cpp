#include "khecke/kpr.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "khecke/enumerate.hpp"
#include "khecke/hecke.hpp"

namespace khecke {

namespace {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Letter top_letter(const Word& w) { return w.empty() ? 0 : max_letter(w); }

void require_initial(const Word& w) {
  if (!is_initial(w)) throw std::invalid_argument("word " + w.to_string() + " is not initial");
}

void shuffle_into(const Word& a, std::size_t i, const Word& b, std::size_t j, std::vector<Letter>& cur,
                  std::vector<Word>& out) {
  if (i == a.size() && j == b.size()) {
    out.emplace_back(cur);
    return;
  }
  if (i < a.size()) {
    cur.push_back(a[i]);
    shuffle_into(a, i + 1, b, j, cur, out);
    cur.pop_back();
  }
  if (j < b.size()) {
    cur.push_back(b[j]);
    shuffle_into(a, i, b, j + 1, cur, out);
    cur.pop_back();
  }
}

unsigned support_mask(const IncreasingTableau& t) {
  unsigned mask = 0;
  for (const auto& row : t.rows())
    for (Letter x : row) mask |= 1u << (x - 1);
  return mask;
}

Word representative_of(const std::vector<IncreasingTableau>& ts) {
  Word best = reading_word(ts.front());
  for (const auto& t : ts) {
    Word w = reading_word(t);
    if (shortlex_less(w, best)) best = std::move(w);
  }
  return best;
}

void require_urt(const IncreasingTableau& t, std::size_t bound) {
  if (!t.is_straight()) throw std::invalid_argument("requires straight tableaux");
  const auto v = is_urt(t, bound);
  if (v.status != UrtStatus::urt_within_bound)
    throw std::invalid_argument("requires unique rectification targets: " + t.to_string() + " is " +
                                to_string(v.status) + " at bound " + std::to_string(bound));
}

}  // namespace

std::vector<Word> shuffle(const Word& a, const Word& b) {
  std::vector<Word> out;
  std::vector<Letter> cur;
  cur.reserve(a.size() + b.size());
  shuffle_into(a, 0, b, 0, cur, out);
  return out;
}

std::vector<Word> shifted_shuffle(const Word& a, const Word& b) { return shuffle(a, shift(b, top_letter(a))); }

std::vector<std::pair<Word, Word>> word_coproduct(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  const auto& v = w.letters();
  for (std::size_t i = 0; i <= v.size(); ++i)
    out.emplace_back(flatten_word(Word(std::vector<Letter>(v.begin(), v.begin() + static_cast<long>(i)))),
                     flatten_word(Word(std::vector<Letter>(v.begin() + static_cast<long>(i), v.end()))));
  return out;
}

KPRClass make_class(const Word& w, std::size_t bound, const SearchLimits& limits) {
  auto tc = class_tableaux(w, bound, limits);
  KPRClass c;
  c.bound = bound;
  c.complete = tc.complete();
  c.tableaux = std::move(tc.members);
  c.representative = representative_of(c.tableaux);
  return c;
}

std::vector<KPRClass> group_into_classes(std::vector<IncreasingTableau> tableaux, std::size_t bound,
                                         const SearchLimits& limits) {
  std::sort(tableaux.begin(), tableaux.end());
  tableaux.erase(std::unique(tableaux.begin(), tableaux.end()), tableaux.end());
  struct Group {
    ClassOracle oracle;
    std::vector<IncreasingTableau> members;
    bool complete = true;
  };
  std::vector<Group> groups;
  for (auto& t : tableaux) {
    const Word w = reading_word(t);
    std::optional<std::size_t> home;
    std::vector<std::size_t> unsure;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto k = groups[g].oracle.classify(w);
      if (k == VerdictKind::equivalent) {
        home = g;
        break;
      }
      if (k == VerdictKind::unknown) unsure.push_back(g);
    }
    if (!home) {
      groups.push_back(Group{ClassOracle(w, bound, limits), {}, true});
      home = groups.size() - 1;
    }
    for (std::size_t g : unsure) groups[g].complete = false;
    if (!unsure.empty()) groups[*home].complete = false;
    groups[*home].members.push_back(std::move(t));
  }
  std::vector<KPRClass> out;
  for (auto& g : groups) {
    KPRClass c;
    c.bound = bound;
    c.complete = g.complete;
    c.tableaux = std::move(g.members);
    c.representative = representative_of(c.tableaux);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const KPRClass& a, const KPRClass& b) { return shortlex_less(a.representative, b.representative); });
  return out;
}

ProductTableaux product_tableaux(const Word& h, const Word& h2, std::size_t bound, const SearchLimits& limits) {
  require_initial(h);
  require_initial(h2);
  const Letter n = top_letter(h), m = top_letter(h2);
  const auto left = class_tableaux(h, bound, limits);
  ClassOracle right(shift(h2, n), bound, limits);
  const unsigned full = (1u << (n + m)) - 1;

  ProductTableaux out;
  out.complete = left.complete();
  for (const auto& t : all_increasing_tableaux(n + m)) {
    if (support_mask(t) != full) continue;
    const auto low = t.restrict_to_max(n);
    const bool known = std::binary_search(left.members.begin(), left.members.end(), low);
    if (!known) {
      if (std::binary_search(left.unresolved.begin(), left.unresolved.end(), low)) out.complete = false;
      continue;
    }
    switch (right.classify(restrict_word(reading_word(t), n + 1, n + m))) {
      case VerdictKind::equivalent: out.tableaux.push_back(t); break;
      case VerdictKind::unknown: out.complete = false; break;
      case VerdictKind::distinct: break;
    }
  }
  return out;
}

std::vector<KPRClass> class_product(const Word& h, const Word& h2, std::size_t bound, const SearchLimits& limits) {
  auto pt = product_tableaux(h, h2, bound, limits);
  auto classes = group_into_classes(std::move(pt.tableaux), bound, limits);
  if (!pt.complete)
    for (auto& c : classes) c.complete = false;
  return classes;
}

CoproductPairs coproduct_pairs(const Word& h, std::size_t bound, const SearchLimits& limits) {
  require_initial(h);
  const Letter n = top_letter(h);
  const auto all = all_increasing_tableaux(n);
  std::vector<unsigned> masks;
  std::vector<Word> rows;
  for (const auto& t : all) {
    masks.push_back(support_mask(t));
    rows.push_back(reading_word(t));
  }
  const unsigned full = n == 0 ? 0u : (1u << n) - 1;
  ClassOracle oracle(h, bound, limits);
  CoproductPairs out;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      if ((masks[i] | masks[j]) != full) continue;
      switch (oracle.classify(rows[i] + rows[j])) {
        case VerdictKind::equivalent: out.pairs.emplace_back(all[i], all[j]); break;
        case VerdictKind::unknown: out.complete = false; break;
        case VerdictKind::distinct: break;
      }
    }
  return out;
}

std::vector<TensorTerm> class_coproduct(const Word& h, std::size_t bound, const SearchLimits& limits) {
  const auto cp = coproduct_pairs(h, bound, limits);

  // classes of the unflattened sides
  auto class_index = [&](bool left_side) {
    std::vector<IncreasingTableau> side;
    for (const auto& [a, b] : cp.pairs) side.push_back(left_side ? a : b);
    auto classes = group_into_classes(side, bound, limits);
    std::map<IncreasingTableau, std::size_t> index;
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (const auto& t : classes[c].tableaux) index[t] = c;
    return std::pair{std::move(classes), std::move(index)};
  };
  const auto [left_classes, left_index] = class_index(true);
  const auto [right_classes, right_index] = class_index(false);

  std::map<std::pair<std::size_t, std::size_t>, bool> class_pairs;
  for (const auto& [a, b] : cp.pairs) class_pairs[{left_index.at(a), right_index.at(b)}] = true;

  // flatten each class pair; identical flattened classes share a term
  std::map<Word, KPRClass> flat_cache;
  auto flat_class = [&](const KPRClass& c) -> const KPRClass& {
    const Word w = flatten_word(c.representative);
    auto it = flat_cache.find(w);
    if (it == flat_cache.end()) it = flat_cache.emplace(w, make_class(w, bound, limits)).first;
    return it->second;
  };
  std::map<std::pair<std::vector<IncreasingTableau>, std::vector<IncreasingTableau>>, TensorTerm> terms;
  for (const auto& [key, unused] : class_pairs) {
    (void)unused;
    const auto& l = flat_class(left_classes[key.first]);
    const auto& r = flat_class(right_classes[key.second]);
    auto [it, fresh] = terms.try_emplace({l.tableaux, r.tableaux}, TensorTerm{l, r, 0});
    it->second.multiplicity += 1;
    if (!cp.complete || !left_classes[key.first].complete || !right_classes[key.second].complete) {
      it->second.left.complete = false;
      it->second.right.complete = false;
    }
  }
  std::vector<TensorTerm> out;
  for (auto& [key, term] : terms) out.push_back(std::move(term));
  std::sort(out.begin(), out.end(), [](const TensorTerm& a, const TensorTerm& b) {
    if (a.left.representative != b.left.representative)
      return shortlex_less(a.left.representative, b.left.representative);
    return shortlex_less(a.right.representative, b.right.representative);
  });
  return out;
}

std::vector<IncreasingTableau> urt_class_product(const IncreasingTableau& t1, const IncreasingTableau& t2,
                                                 std::size_t urt_bound) {
  require_urt(t1, urt_bound);
  require_urt(t2, urt_bound);
  const Letter n = t1.max_entry(), m = t2.max_entry();
  if (static_cast<int>(t1.support().size()) != n || static_cast<int>(t2.support().size()) != m)
    throw std::invalid_argument("tableaux must use an initial alphabet");
  const auto target = t2.shifted(n);
  const unsigned full = (1u << (n + m)) - 1;
  std::vector<IncreasingTableau> out;
  for (const auto& t : all_increasing_tableaux(n + m)) {
    if (support_mask(t) != full) continue;
    if (t.restrict_to_max(n) != t1) continue;
    if (insertion_tableau(restrict_word(reading_word(t), n + 1, n + m)) == target) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<IncreasingTableau, IncreasingTableau>> urt_class_coproduct(const IncreasingTableau& t0,
                                                                                 std::size_t urt_bound) {
  require_urt(t0, urt_bound);
  const Letter n = t0.max_entry();
  const auto all = all_increasing_tableaux(n);
  std::vector<unsigned> masks;
  for (const auto& t : all) masks.push_back(support_mask(t));
  const unsigned full = support_mask(t0);
  std::vector<std::pair<IncreasingTableau, IncreasingTableau>> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if ((masks[i] | full) != full) continue;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if ((masks[i] | masks[j]) != full) continue;
      IncreasingTableau p = all[i];
      for (Letter x : reading_word(all[j])) p = insert_letter(p, x).tableau;
      if (p == t0) out.emplace_back(all[i], all[j]);
    }
  }
  return out;
}

}  // namespace khecke

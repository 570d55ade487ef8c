#include "khecke/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "khecke/enumerate.hpp"
#include "khecke/hecke.hpp"
#include "khecke/kknuth.hpp"
#include "khecke/kpr.hpp"
#include "khecke/lr.hpp"
#include "khecke/symfun.hpp"

namespace khecke {

bool CriterionResult::pass() const {
  return within_time() && std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.ok; });
}

bool CriterionResult::acceptable() const {
  return within_time() &&
         std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.ok || c.known_conflict; });
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Word W(const char* s) { return Word::parse(s); }

struct Builder {
  std::vector<CheckItem>& items;
  void check(std::string name, bool ok, std::string detail = {}) {
    items.push_back({std::move(name), ok, false, std::move(detail)});
  }
  void conflict(std::string name, bool ok, std::string detail) {
    items.push_back({std::move(name), ok, !ok, std::move(detail)});
  }
};

std::string str(const Integer& c) { return to_string(c); }

void insertion_fidelity(Builder& b) {
  auto [p, q] = insert_word(W("15133"));
  b.check("insert 15133: P", p.rows() == Rows{{1, 3}, {5}}, p.to_string());
  b.check("insert 15133: Q", q.rows() == SetRows{{{1}, {2, 5}}, {{3, 4}}}, q.to_string());
  auto [p2, q2] = insert_word(W("13324535"));
  b.check("insert 13324535: P", p2.rows() == Rows{{1, 2, 3, 5}, {3, 4}}, p2.to_string());
  b.check("insert 13324535: Q", q2.rows() == SetRows{{{1}, {2, 3}, {5}, {6, 8}}, {{4}, {7}}}, q2.to_string());
  const auto cq = descent_composition(q2), ch = descent_composition(W("13324535"));
  b.check("C(h) = C(Q(h)) = (3,3,2)", cq == Composition{3, 3, 2} && ch == cq, ch.to_string());
  for (const char* w : {"15133", "13324535"}) {
    const Word word = W(w);
    constexpr int reps = 1000;
    const auto t0 = Clock::now();
    std::size_t sink = 0;
    for (int i = 0; i < reps; ++i) sink += insert_word(word).p.num_cells();
    const double each = since(t0) / reps;
    b.check(std::string("insert ") + w + " under 1 ms", sink > 0 && each < 1e-3,
            std::to_string(each * 1e6) + " us");
  }
}

void bijection(Builder& b) {
  std::vector<Word> words{Word{}};
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= 6; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter x = 1; x <= 4; ++x) {
        auto v = w;
        v.push_back(x);
        next.push_back(v);
      }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  int failures = 0;
  std::set<std::pair<IncreasingTableau, std::string>> images;
  for (const auto& w : words) {
    auto [p, q] = insert_word(w);
    if (reverse_word(p, q) != w) ++failures;
    images.insert({p, q.to_string()});
  }
  b.check("roundtrip over " + std::to_string(words.size()) + " words", failures == 0,
          std::to_string(failures) + " failures");
  b.check("distinct images", images.size() == words.size(), std::to_string(images.size()) + " pairs");
}

void rewriting(Builder& b) {
  const auto v = equivalent(W("34124"), W("3124"), 8);
  std::string chain;
  for (const auto& w : v.chain) chain += (chain.empty() ? "" : " ") + w.to_string();
  b.check("34124 ~ 3124 at bound 8", v.kind == VerdictKind::equivalent && is_valid_chain(v.chain), chain);
  const auto d = equivalent(W("13524"), W("15324"));
  b.check("13524 vs 15324 rejected by lds", d.kind == VerdictKind::distinct && d.witness == "lds 2 vs 3", d.witness);
  const auto cls = class_tableaux(W("3124"), 8);
  const std::vector<IncreasingTableau> expected{IncreasingTableau(Rows{{1, 2, 4}, {3}}),
                                                IncreasingTableau(Rows{{1, 2, 4}, {3, 4}})};
  auto got = cls.members;
  std::sort(got.begin(), got.end());
  b.check("class of 3124 has two tableaux", cls.complete() && got == expected,
          std::to_string(got.size()) + " tableaux");
}

void urt_suite(Builder& b) {
  int checked = 0;
  std::vector<std::string> failed;
  for (const auto& lambda : partitions_between(0, 5))
    for (const auto& t : {superstandard_tableau(lambda), minimal_tableau(lambda)}) {
      ++checked;
      if (is_urt(t, 12).status != UrtStatus::urt_within_bound) failed.push_back(t.to_string());
    }
  std::string detail = std::to_string(checked) + " tableaux";
  for (const auto& f : failed) detail += "; not confirmed " + f;
  b.check("superstandard and minimal tableaux with |lambda| <= 5", failed.empty(), detail);
  const auto p = insertion_tableau(W("3124"));
  const auto v = is_urt(p, 12);
  b.check("P(3124) is not a URT", v.status == UrtStatus::not_urt && v.witness.has_value(),
          v.witness ? "witness " + v.witness->to_string() : to_string(v.status));
}

void kpr_product(Builder& b) {
  const auto classes = class_product(W("12"), W("312"), 10);
  std::vector<std::size_t> sizes;
  std::vector<IncreasingTableau> all;
  bool complete = true;
  for (const auto& c : classes) {
    complete = complete && c.complete;
    sizes.push_back(c.tableaux.size());
    all.insert(all.end(), c.tableaux.begin(), c.tableaux.end());
  }
  std::sort(sizes.rbegin(), sizes.rend());
  b.check("six classes grouped 3/2/1/1/1/1",
          complete && classes.size() == 6 && sizes == std::vector<std::size_t>{3, 2, 1, 1, 1, 1},
          std::to_string(classes.size()) + " classes");
  std::vector<IncreasingTableau> figure{
      IncreasingTableau(Rows{{1, 2, 4}, {3}, {5}}),    IncreasingTableau(Rows{{1, 2, 4}, {3, 5}, {5}}),
      IncreasingTableau(Rows{{1, 2, 4}, {3, 4}, {5}}), IncreasingTableau(Rows{{1, 2, 3, 4}, {5}}),
      IncreasingTableau(Rows{{1, 2, 4}, {3, 5}}),      IncreasingTableau(Rows{{1, 2, 3, 4}, {3, 5}}),
      IncreasingTableau(Rows{{1, 2}, {3, 4}, {5}}),    IncreasingTableau(Rows{{1, 2, 3, 4}, {3}, {5}}),
      IncreasingTableau(Rows{{1, 2, 3, 4}, {3, 5}, {5}})};
  std::sort(figure.begin(), figure.end());
  std::sort(all.begin(), all.end());
  b.check("the nine tableaux of the figure", all == figure, std::to_string(all.size()) + " tableaux");
  std::set<std::size_t> hit;
  bool each_once = true;
  for (const char* rep : {"53124", "51234", "35124", "351234", "53412", "5351234"}) {
    const auto p = insertion_tableau(W(rep));
    int hits = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (std::count(classes[i].tableaux.begin(), classes[i].tableaux.end(), p)) ++hits, hit.insert(i);
    each_once = each_once && hits == 1;
  }
  b.check("listed representatives name the six classes", each_once && hit.size() == 6);

  const auto terms = class_coproduct(W("12"), 10);
  std::set<std::pair<Word, Word>> got;
  bool unit = true;
  for (const auto& t : terms) {
    unit = unit && t.multiplicity == 1;
    got.insert({t.left.representative, t.right.representative});
  }
  const std::set<std::pair<Word, Word>> expected{
      {W(""), W("12")}, {W("1"), W("1")}, {W("12"), W("1")}, {W("1"), W("12")}, {W("12"), W("")}};
  b.check("coproduct of [[12]] has the five terms", unit && terms.size() == 5 && got == expected,
          std::to_string(terms.size()) + " terms");
}

void counterexamples(Builder& b) {
  const auto sh = shifted_shuffle(W("12"), W("1342"));
  b.check("315642 is a shuffle term of 12 and 1342", std::count(sh.begin(), sh.end(), W("315642")) > 0);
  const auto p = insertion_tableau(W("315642"));
  b.check("P(315642) = [[1,2,6],[3,4],[5]]", p == IncreasingTableau(Rows{{1, 2, 6}, {3, 4}, {5}}), p.to_string());
  b.check("P(3156442) = P(315642)", insertion_tableau(W("3156442")) == p);
  const auto r = restrict_word(W("3156442"), 3, 6);
  b.check("3156442 restricted to [3,6] is 35644", r == W("35644"), r.to_string());
  b.check("35644 is not equivalent to 3564", insertion_tableau(r) != insertion_tableau(W("3564")),
          insertion_tableau(r).to_string() + " vs " + insertion_tableau(W("3564")).to_string());

  const Word left = W("123"), right = W("11");
  std::vector<Word> found;
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= 5; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter x = 1; x <= 4; ++x) {
        auto v = w;
        v.push_back(x);
        next.push_back(v);
      }
    layer = std::move(next);
  }
  for (const auto& h : layer) {
    if (support(h).size() != 4) continue;
    for (const auto& [a, c] : word_coproduct(h))
      if (a == left && c == right) {
        found.push_back(h);
        break;
      }
  }
  std::string list;
  for (const auto& w : found) list += (list.empty() ? "" : " ") + w.to_string();
  b.check("words h over [4] with 123 (x) 11 in Delta(h)",
          found == std::vector<Word>{W("12344"), W("12433"), W("13422"), W("23411")}, list);
  const auto target = insertion_tableau(W("1342"));
  b.check("none is equivalent to 1342", std::none_of(found.begin(), found.end(), [&](const Word& w) {
            return insertion_tableau(w) == target;
          }));
  const auto split = word_coproduct(W("1342"));
  b.check("123 (x) 1 is in Delta(1342)",
          std::count(split.begin(), split.end(), std::pair<Word, Word>{W("123"), W("1")}) > 0);
}

void generating_functions(Builder& b) {
  const auto g = grothendieck_G(Partition{2, 1}, 4, 4);
  struct Expect {
    Exponent e;
    int value;
    const char* name;
  };
  for (const auto& [e, value, name] : std::vector<Expect>{{{2, 1, 0, 0}, 1, "x1^2 x2"},
                                                          {{1, 1, 1, 0}, 2, "x1 x2 x3"},
                                                          {{2, 2, 0, 0}, -1, "x1^2 x2^2"},
                                                          {{1, 1, 1, 1}, -8, "x1 x2 x3 x4"}}) {
    const auto c = g.coefficient(e);
    b.check(std::string("G21 at ") + name + " = " + std::to_string(value), c == value, str(c));
  }
  const auto c = g.coefficient({2, 1, 1, 0});
  b.conflict("G21 at x1^2 x2 x3 = -2", c == -2,
             "computed " + str(c) + " from {1}{1,2}/{3}, {1}{1,3}/{2}, {1}{1}/{2,3}; listed -2");
  const auto j = weak_J(Partition{2, 1}, 4, 4).coefficient({2, 2, 0, 0});
  b.check("J21 at x1^2 x2^2 = 3", j == 3, str(j));
  const auto l = fundamental_L(Composition{1, 3}, 4, 4).coefficient({2, 2, 0, 0});
  b.check("L(1,3) has no x1^2 x2^2", l == 0, str(l));
  int bad = 0, total = 0;
  for (const auto& lambda : partitions_between(0, 4)) {
    ++total;
    if (substitute_neg_geometric(lambda, 6, 6) != weak_J(lambda, 6, 6)) ++bad;
  }
  b.check("J = (-1)^|lambda| G(-x/(1-x)) for |lambda| <= 4 at n=d=6", bad == 0,
          std::to_string(total) + " shapes, " + std::to_string(bad) + " mismatches");
}

void insertion_generating(Builder& b, const Progress& progress) {
  int total = 0, bad = 0;
  std::map<Partition, TruncatedPoly> cache;
  for (const auto& t : all_increasing_tableaux(4)) {
    if (t.num_cells() > 5) continue;
    ++total;
    auto it = cache.find(t.shape());
    if (it == cache.end()) it = cache.emplace(t.shape(), weak_J(t.shape(), 5, 5)).first;
    if (j_from_insertion(t, 5, 5) != it->second) ++bad;
    if (progress && total % 100 == 0) progress("criterion 8: " + std::to_string(total) + " tableaux");
  }
  b.check("j_from_insertion(T) = J_shape(T) on [4], <= 5 cells, n=d=5", bad == 0 && total > 0,
          std::to_string(total) + " tableaux, " + std::to_string(bad) + " discrepancies");
}

std::string rows_string(const std::vector<IncreasingTableau>& ts) {
  std::string s;
  for (const auto& t : ts) s += (s.empty() ? "" : " ") + t.to_string();
  return s;
}

void lr_rules(Builder& b) {
  const auto r = lr_coefficient(Partition{3, 1}, Partition{2, 1}, Partition{4, 3, 1});
  std::vector<IncreasingTableau> expected{
      IncreasingTableau(Partition{3, 1}, Rows{{2}, {1, 2}, {3}}),
      IncreasingTableau(Partition{3, 1}, Rows{{2}, {1, 3}, {3}}),
      IncreasingTableau(Partition{3, 1}, Rows{{2}, {1, 3}, {1}}),
  };
  auto got = r.witnesses;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  b.check("c^(4,3,1)_(3,1),(2,1) count 3 with the three fillings", r.count == 3 && got == expected,
          rows_string(r.witnesses));
  const auto pr = verify_product(Partition{3, 1}, superstandard_tableau(Partition{2, 1}), 8, 8);
  Integer coeff = 0;
  for (const auto& row : pr.rows)
    if (row.nu == Partition{4, 3, 1}) coeff = row.oracle;
  b.check("product oracle at (8,8) agrees, coefficient of G431 is -3", pr.ok() && coeff == -3,
          std::to_string(pr.rows.size()) + " shapes, " + std::to_string(pr.mismatches.size()) + " mismatches");

  const auto t0 = superstandard_tableau(Partition{3, 2});
  const auto d = dual_lr_coefficient(t0, Partition{2, 1}, Partition{2, 1});
  const Partition inner{2, 2};
  const std::vector<IncreasingTableau> dual_expected{
      IncreasingTableau(inner, Rows{{2, 3}, {5}, {1, 2}, {4}}),
      IncreasingTableau(inner, Rows{{2, 3}, {5}, {1, 4}, {4}}),
      IncreasingTableau(inner, Rows{{2, 3}, {5}, {1, 5}, {4}}),
  };
  b.check("d^(3,2)_(2,1),(2,1) count 3 with the three fillings", d.count == 3 && d.witnesses == dual_expected,
          rows_string(d.witnesses));
  const auto cr = verify_coproduct(t0, 6, 5);
  Integer dcoeff = 0;
  for (const auto& row : cr.rows)
    if (row.lambda == Partition{2, 1} && row.mu == Partition{2, 1}) dcoeff = row.oracle;
  b.check("coproduct oracle at (6,5) agrees, coefficient of G21 (x) G21 is -3", cr.ok() && dcoeff == -3,
          std::to_string(cr.rows.size()) + " pairs, " + std::to_string(cr.mismatches.size()) + " mismatches");
}

void non_urt(Builder& b) {
  const auto t = insertion_tableau(W("34124"));
  const auto fillings = rectifying_fillings(SkewShape(Partition{4, 3, 2}, Partition{2, 1}), t);
  const auto oracle = expand_product(Partition{2, 1}, Partition{3, 2}, 9, 9).coefficients;
  const auto it = oracle.find(Partition{4, 3, 2});
  const Integer c = it == oracle.end() ? Integer(0) : it->second;
  b.check("P(34124) gives 2 fillings of (4,3,2)/(2,1)", fillings.size() == 2, rows_string(fillings));
  b.check("oracle coefficient of G432 in G21 G32 is -3", c == -3, str(c));
  bool guarded = false;
  try {
    lr_coefficient(Partition{2, 1}, t, Partition{4, 3, 2});
  } catch (const std::invalid_argument&) {
    guarded = true;
  }
  b.check("product rule refuses P(34124)", guarded);

  const auto dual = rectifying_fillings(direct_sum_shape(Partition{2, 1}, Partition{3, 1}), t);
  const auto co = coproduct_G(Partition{3, 2}, 6, 5);
  const auto jt = co.find({Partition{2, 1}, Partition{3, 1}});
  const Integer dc = jt == co.end() ? Integer(0) : jt->second;
  b.conflict("P(34124) has no filling of (2,1)+(3,1)", dual.empty(),
             std::to_string(dual.size()) + " filling " + rows_string(dual) + "; its reading word rectifies to P(34124)");
  b.check("coproduct oracle coefficient of G21 (x) G31 is at least 1", dc >= 1, str(dc));
  b.check("counting with P(34124) undercounts the coproduct", Integer(static_cast<int>(dual.size())) < dc,
          std::to_string(dual.size()) + " vs " + str(dc));
}

void oracle_sweep(Builder& b, const Progress& progress) {
  int pairs = 0, shapes = 0;
  std::vector<std::string> bad;
  for (const auto& lambda : partitions_between(0, 3))
    for (const auto& mu : partitions_between(0, 3)) {
      const auto rep = verify_product(lambda, superstandard_tableau(mu), 8, 8, lambda.size() + mu.size() + 2);
      ++pairs;
      shapes += static_cast<int>(rep.rows.size());
      for (const auto& m : rep.mismatches)
        bad.push_back(lambda.to_string() + "*" + mu.to_string() + "->" + m.nu.to_string());
      if (progress) progress("criterion 11: " + lambda.to_string() + " * " + mu.to_string());
    }
  std::string detail = std::to_string(pairs) + " pairs, " + std::to_string(shapes) + " shapes, " +
                       std::to_string(bad.size()) + " mismatches";
  for (const auto& s : bad) detail += "; " + s;
  b.check("counting tables equal signed G expansions through |lambda|+|mu|+2 at n=d=8", bad.empty(), detail);
}

struct Entry {
  const char* title;
  double limit;
};

constexpr Entry specs[criterion_count] = {
    {"insertion fidelity", 1.0},      {"bijection", 10.0},
    {"rewriting", 5.0},               {"URT suite", 120.0},
    {"KPR product and coproduct", 60.0}, {"counterexamples", 30.0},
    {"generating functions", 60.0},   {"insertion generating functions", 300.0},
    {"LR rules", 600.0},              {"non-URT failure modes", 120.0},
    {"oracle sweep", 1800.0},
};

}  // namespace

CriterionResult run_criterion(int id, const Progress& progress) {
  if (id < 1 || id > criterion_count) throw std::out_of_range("criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.title = specs[id - 1].title;
  r.limit_seconds = specs[id - 1].limit;
  Builder b{r.items};
  const auto t0 = Clock::now();
  try {
    switch (id) {
      case 1: insertion_fidelity(b); break;
      case 2: bijection(b); break;
      case 3: rewriting(b); break;
      case 4: urt_suite(b); break;
      case 5: kpr_product(b); break;
      case 6: counterexamples(b); break;
      case 7: generating_functions(b); break;
      case 8: insertion_generating(b, progress); break;
      case 9: lr_rules(b); break;
      case 10: non_urt(b); break;
      case 11: oracle_sweep(b, progress); break;
    }
  } catch (const std::exception& e) {
    b.check("completed without error", false, e.what());
  }
  r.seconds = since(t0);
  return r;
}

std::vector<CriterionResult> run_all_criteria(const Progress& progress) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count; ++id) {
    if (progress) progress("criterion " + std::to_string(id) + ": " + specs[id - 1].title);
    out.push_back(run_criterion(id, progress));
  }
  return out;
}

std::string format_result(const CriterionResult& r, bool verbose) {
  char head[160];
  std::snprintf(head, sizeof head, "%s %2d %s (%.3f s, limit %g s)", r.pass() ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds, r.limit_seconds);
  std::ostringstream out;
  out << head;
  if (!r.pass() && r.acceptable()) out << " [known conflict]";
  if (!r.within_time()) out << " [time limit exceeded]";
  out << '\n';
  for (const auto& item : r.items) {
    if (!verbose && item.ok) continue;
    out << "    " << (item.ok ? "ok        " : item.known_conflict ? "conflict  " : "mismatch  ") << item.name;
    if (!item.detail.empty()) out << ": " << item.detail;
    out << '\n';
  }
  return out.str();
}

}  // namespace khecke

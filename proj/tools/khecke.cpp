#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "khecke/enumerate.hpp"
#include "khecke/hecke.hpp"
#include "khecke/kknuth.hpp"
#include "khecke/kpr.hpp"
#include "khecke/lr.hpp"
#include "khecke/parallel.hpp"
#include "khecke/symfun.hpp"
#include "khecke/verify.hpp"

using namespace khecke;
using json = nlohmann::ordered_json;

namespace {

enum Exit { yes = 0, no = 1, unknown = 2, usage = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  int jobs = 0;
  std::size_t max_words = SearchLimits{}.max_words;
};

Options opts;

bool as_json() { return opts.format == "json"; }

SearchLimits limits() { return SearchLimits{opts.max_words}; }

// ---- parsing ---------------------------------------------------------------

Word parse_word(const std::string& s) {
  try {
    return Word::parse(s);
  } catch (const std::exception& e) {
    throw UsageError("word '" + s + "': " + e.what());
  }
}

Partition parse_partition(const std::string& s) {
  try {
    return Partition::parse(s);
  } catch (const std::exception& e) {
    throw UsageError("partition '" + s + "': " + e.what());
  }
}

json load_json(const std::string& arg, const std::string& what) {
  std::string text = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(what + ": malformed JSON: " + e.what());
  }
}

Letter letter_at(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw UsageError(where + ": expected a positive integer");
  const auto x = v.get<long long>();
  if (x < 1 || x > 255) throw UsageError(where + ": entry " + std::to_string(x) + " outside [1,255]");
  return static_cast<Letter>(x);
}

Rows parse_rows(const json& j, const std::string& what) {
  if (!j.is_array()) throw UsageError(what + ": rows must be an array of arrays");
  Rows rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = what + " row " + std::to_string(i + 1);
    if (!j[i].is_array()) throw UsageError(where + ": expected an array");
    std::vector<Letter> row;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      row.push_back(letter_at(j[i][k], where + " entry " + std::to_string(k + 1)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// [[1,2],[3]] or {"inner":[2,1],"rows":[...]}, inline or from a file.
IncreasingTableau parse_tableau(const std::string& arg, const std::string& what = "tableau") {
  const json j = load_json(arg, what);
  Partition inner;
  Rows rows;
  if (j.is_object()) {
    if (!j.contains("rows")) throw UsageError(what + ": missing \"rows\"");
    rows = parse_rows(j["rows"], what);
    if (j.contains("inner")) {
      std::vector<int> parts;
      for (const auto& p : j["inner"]) {
        if (!p.is_number_integer() || p.get<int>() < 0) throw UsageError(what + ": bad inner shape");
        parts.push_back(p.get<int>());
      }
      try {
        inner = Partition(parts);
      } catch (const std::exception& e) {
        throw UsageError(what + ": inner shape: " + e.what());
      }
    }
  } else {
    rows = parse_rows(j, what);
  }
  if (auto v = IncreasingTableau::find_violation(inner, rows)) throw UsageError(what + ": " + *v);
  return IncreasingTableau(inner, rows);
}

SetValuedTableau parse_set_tableau(const std::string& arg, const std::string& what) {
  const json j = load_json(arg, what);
  if (!j.is_array()) throw UsageError(what + ": expected an array of rows");
  SetRows rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = what + " row " + std::to_string(i + 1);
    if (!j[i].is_array()) throw UsageError(where + ": expected an array");
    std::vector<std::vector<Letter>> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      const std::string cell = where + " box " + std::to_string(k + 1);
      if (!j[i][k].is_array()) throw UsageError(cell + ": expected an array of entries");
      std::vector<Letter> box;
      for (std::size_t m = 0; m < j[i][k].size(); ++m) box.push_back(letter_at(j[i][k][m], cell));
      row.push_back(std::move(box));
    }
    rows.push_back(std::move(row));
  }
  if (auto v = SetValuedTableau::find_violation(rows)) throw UsageError(what + ": " + *v);
  return SetValuedTableau(rows);
}

// ---- output ----------------------------------------------------------------

json to_json(const Word& w) { return json(w.letters()); }
json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const IncreasingTableau& t) {
  json rows = json::array();
  for (const auto& r : t.rows()) rows.push_back(r);
  if (t.is_straight()) return rows;
  return json{{"inner", to_json(t.inner())}, {"rows", rows}};
}

json to_json(const SetValuedTableau& q) {
  json rows = json::array();
  for (const auto& r : q.rows()) rows.push_back(r);
  return rows;
}

json to_json(const TruncatedPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> ex(e.begin(), e.end());
    terms.push_back({{"exponent", ex}, {"coefficient", to_string(c)}});
  }
  return json{{"vars", p.num_vars()}, {"deg", p.max_degree()}, {"terms", terms}};
}

json to_json(const SymPoly& p) {
  json terms = json::array();
  for (const auto& [lambda, c] : p.terms())
    terms.push_back({{"partition", to_json(lambda)}, {"coefficient", to_string(c)}});
  return json{{"vars", p.num_vars()}, {"deg", p.max_degree()}, {"basis", "m"}, {"terms", terms}};
}

json to_json(const KPRClass& c) {
  json ts = json::array();
  for (const auto& t : c.tableaux) ts.push_back(to_json(t));
  return json{{"representative", c.representative.to_string()},
              {"tableaux", ts},
              {"bound", c.bound},
              {"complete", c.complete}};
}

json to_json(const LRReport& r) {
  json w = json::array();
  for (const auto& t : r.witnesses) w.push_back(to_json(t));
  json j{{"count", r.count}, {"sign", r.sign}, {"witnesses", w}};
  if (r.oracle) j["oracle"] = to_string(*r.oracle);
  return j;
}

void emit(const json& j, const std::string& text) {
  if (as_json())
    std::cout << j.dump() << '\n';
  else
    std::cout << text;
}

std::string line(const std::string& s) { return s + '\n'; }

// ---- subcommands -----------------------------------------------------------

int cmd_insert(const std::string& word) {
  const Word w = parse_word(word);
  auto [p, q] = insert_word(w);
  const auto c = descent_composition(q);
  emit(json{{"word", w.to_string()},
            {"P", to_json(p)},
            {"Q", to_json(q)},
            {"shape", to_json(p.shape())},
            {"descent_composition", c.parts()}},
       line("P = " + p.to_string()) + line("Q = " + q.to_string()) + line("C(Q) = " + c.to_string()));
  return yes;
}

int cmd_roundtrip(const std::string& word) {
  const Word w = parse_word(word);
  auto [p, q] = insert_word(w);
  const Word back = reverse_word(p, q);
  const bool ok = back == w;
  emit(json{{"word", w.to_string()}, {"recovered", back.to_string()}, {"result", ok ? "PASS" : "FAIL"}},
       line(back.to_string() + " " + (ok ? "PASS" : "FAIL")));
  return ok ? yes : no;
}

int cmd_reverse(const std::string& p_arg, const std::string& q_arg) {
  const auto p = parse_tableau(p_arg, "P");
  const auto q = parse_set_tableau(q_arg, "Q");
  try {
    const Word w = reverse_word(p, q);
    emit(json{{"word", w.to_string()}}, line(w.to_string()));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return yes;
}

int cmd_class(const std::string& word, std::size_t max_len, bool tableaux) {
  const Word w = parse_word(word);
  if (max_len < w.size()) throw UsageError("--max-len is shorter than the word");
  if (tableaux) {
    const auto cls = class_tableaux(w, max_len, limits());
    json members = json::array(), unresolved = json::array();
    std::string text;
    for (const auto& t : cls.members) members.push_back(to_json(t)), text += line(t.to_string());
    for (const auto& t : cls.unresolved) unresolved.push_back(to_json(t)), text += line("? " + t.to_string());
    emit(json{{"word", w.to_string()},
              {"max_len", max_len},
              {"tableaux", members},
              {"unresolved", unresolved},
              {"complete", cls.complete()}},
         text);
    return cls.complete() ? yes : unknown;
  }
  const auto slice = class_slice(w, max_len, limits());
  json words = json::array();
  std::string text;
  for (const auto& v : slice.words) words.push_back(v.to_string()), text += line(v.to_string());
  if (!slice.saturated) text += line("(search cap reached)");
  emit(json{{"word", w.to_string()}, {"max_len", max_len}, {"words", words}, {"saturated", slice.saturated}},
       text);
  return slice.saturated ? yes : unknown;
}

int verdict_exit(VerdictKind k) {
  return k == VerdictKind::equivalent ? yes : k == VerdictKind::distinct ? no : unknown;
}

int cmd_equiv(const std::string& a, const std::string& b, std::optional<std::size_t> max_len) {
  const Word w1 = parse_word(a), w2 = parse_word(b);
  const auto v = equivalent(w1, w2, max_len, limits());
  json chain = json::array();
  std::string text = line(to_string(v.kind));
  for (const auto& w : v.chain) chain.push_back(w.to_string()), text += line("  " + w.to_string());
  if (!v.witness.empty()) text += line("  " + v.witness);
  emit(json{{"verdict", to_string(v.kind)}, {"chain", chain}, {"witness", v.witness}, {"bound", v.bound}}, text);
  return verdict_exit(v.kind);
}

int cmd_urt(const std::string& arg, std::size_t max_len) {
  const auto t = parse_tableau(arg);
  if (!t.is_straight()) throw UsageError("tableau: a URT must have straight shape");
  const auto v = is_urt(t, max_len, limits());
  json j{{"tableau", to_json(t)}, {"status", to_string(v.status)}, {"bound", v.bound}};
  std::string text = line(to_string(v.status));
  if (v.witness) j["witness"] = to_json(*v.witness), text += line("  equivalent to " + v.witness->to_string());
  json un = json::array();
  for (const auto& u : v.unresolved) un.push_back(to_json(u)), text += line("  unresolved " + u.to_string());
  j["unresolved"] = un;
  emit(j, text);
  return v.status == UrtStatus::urt_within_bound ? yes : v.status == UrtStatus::not_urt ? no : unknown;
}

int cmd_product(const std::string& a, const std::string& b, std::size_t bound) {
  const Word h1 = parse_word(a), h2 = parse_word(b);
  for (const auto* h : {&h1, &h2})
    if (!is_initial(*h)) throw UsageError("word " + h->to_string() + " is not initial");
  const auto classes = class_product(h1, h2, bound, limits());
  json arr = json::array();
  std::string text;
  bool complete = true;
  for (const auto& c : classes) {
    arr.push_back(to_json(c));
    complete = complete && c.complete;
    text += line("[[" + c.representative.to_string() + "]]" + (c.complete ? "" : " (incomplete)"));
    for (const auto& t : c.tableaux) text += line("  " + t.to_string());
  }
  emit(json{{"classes", arr}, {"complete", complete}}, text);
  return complete ? yes : unknown;
}

int cmd_coproduct(const std::string& a, std::size_t bound) {
  const Word h = parse_word(a);
  if (!is_initial(h)) throw UsageError("word " + h.to_string() + " is not initial");
  const auto terms = class_coproduct(h, bound, limits());
  json arr = json::array();
  std::string text;
  bool complete = true;
  for (const auto& t : terms) {
    arr.push_back({{"multiplicity", t.multiplicity}, {"left", to_json(t.left)}, {"right", to_json(t.right)}});
    complete = complete && t.left.complete && t.right.complete;
    text += line((t.multiplicity == 1 ? std::string() : std::to_string(t.multiplicity) + " ") + "[[" +
                 t.left.representative.to_string() + "]] (x) [[" + t.right.representative.to_string() + "]]");
  }
  emit(json{{"terms", arr}, {"complete", complete}}, text);
  return complete ? yes : unknown;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_urt_product(const std::string& a, const std::string& b, std::size_t bound) {
  const auto t1 = parse_tableau(a, "T1"), t2 = parse_tableau(b, "T2");
  return guarded([&] {
    const auto out = urt_class_product(t1, t2, bound);
    json arr = json::array();
    std::string text;
    for (const auto& t : out) arr.push_back(to_json(t)), text += line(t.to_string());
    emit(json{{"tableaux", arr}}, text);
    return yes;
  });
}

int cmd_urt_coproduct(const std::string& a, std::size_t bound) {
  const auto t0 = parse_tableau(a, "T0");
  return guarded([&] {
    const auto out = urt_class_coproduct(t0, bound);
    json arr = json::array();
    std::string text;
    for (const auto& [l, r] : out) {
      arr.push_back({{"left", to_json(l)}, {"right", to_json(r)}});
      text += line(l.to_string() + " (x) " + r.to_string());
    }
    emit(json{{"pairs", arr}}, text);
    return yes;
  });
}

int cmd_poly(const std::string& shape, int vars, int deg, bool weak, bool m_basis) {
  const Partition lambda = parse_partition(shape);
  if (vars <= 0) vars = deg;
  return guarded([&] {
    const SymPoly s = weak ? weak_J_sym(lambda, vars, deg) : grothendieck_G_sym(lambda, vars, deg);
    if (m_basis) {
      std::string text;
      for (const auto& [mu, c] : s.terms()) text += line(to_string(c) + " m" + mu.to_string());
      emit(to_json(s), text);
    } else {
      const auto p = s.to_poly();
      emit(to_json(p), line(p.to_string()));
    }
    return yes;
  });
}

std::string expansion_text(const BasisExpansion& e, Basis basis) {
  std::string text;
  for (const auto& [nu, c] : e.coefficients) text += line(to_string(c) + " " + to_string(basis) + nu.to_string());
  return text;
}

int cmd_expand_product(const std::string& a, const std::string& b, int vars, int deg, const std::string& basis_name) {
  const Partition lambda = parse_partition(a), mu = parse_partition(b);
  if (vars <= 0) vars = deg;
  const Basis basis = basis_name == "J" ? Basis::J : Basis::G;
  return guarded([&] {
    const auto e = expand_product(lambda, mu, vars, deg, basis);
    json coeffs = json::array();
    for (const auto& [nu, c] : e.coefficients)
      coeffs.push_back({{"partition", to_json(nu)}, {"coefficient", to_string(c)}});
    emit(json{{"basis", to_string(basis)},
              {"vars", vars},
              {"deg", deg},
              {"coefficients", coeffs},
              {"residual_zero", e.residual.is_zero()}},
         expansion_text(e, basis));
    return yes;
  });
}

int cmd_coproduct_g(const std::string& shape, int vars, int deg) {
  const Partition nu = parse_partition(shape);
  if (vars <= 0) vars = deg;
  return guarded([&] {
    const auto terms = coproduct_G(nu, vars, deg);
    json arr = json::array();
    std::string text;
    for (const auto& [k, c] : terms) {
      arr.push_back({{"lambda", to_json(k.first)}, {"mu", to_json(k.second)}, {"coefficient", to_string(c)}});
      text += line(to_string(c) + " G" + k.first.to_string() + " (x) G" + k.second.to_string());
    }
    emit(json{{"nu", to_json(nu)}, {"vars", vars}, {"deg", deg}, {"terms", arr}}, text);
    return yes;
  });
}

int cmd_phi(const std::string& word, int vars, int deg, std::size_t bound) {
  const Word h = parse_word(word);
  if (vars <= 0) vars = deg;
  return guarded([&] {
    const auto r = phi_class(h, vars, deg, bound);
    json j{{"word", h.to_string()}, {"complete", r.complete}, {"value", to_json(r.value)}};
    std::string text = line(r.value.to_string());
    try {
      const auto e = expand_in_basis(r.value, Basis::J);
      json coeffs = json::array();
      for (const auto& [nu, c] : e.coefficients)
        coeffs.push_back({{"partition", to_json(nu)}, {"coefficient", to_string(c)}});
      j["J_expansion"] = coeffs;
      text += expansion_text(e, Basis::J);
    } catch (const std::invalid_argument&) {
    }
    emit(j, text);
    return r.complete ? yes : unknown;
  });
}

IncreasingTableau choose_urt(const Partition& shape, const std::string& urt) {
  if (urt == "superstandard" || urt == "minimal") return urt_for(shape, parse_urt_choice(urt));
  auto t = parse_tableau(urt, "URT");
  if (!t.is_straight() || t.shape() != shape)
    throw UsageError("URT: shape " + t.shape().to_string() + " does not match " + shape.to_string());
  return t;
}

std::string report_text(const std::string& label, const LRReport& r) {
  std::string text = line(label + " count " + std::to_string(r.count) + " sign " + (r.sign > 0 ? "+" : "-") +
                          (r.oracle ? " oracle " + to_string(*r.oracle) : ""));
  for (const auto& w : r.witnesses) text += line("  " + w.to_string());
  return text;
}

std::string oracle_text(const OracleReport& rep) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "lambda" << std::setw(14) << "mu" << std::setw(14) << "nu" << std::setw(7)
      << "count" << std::setw(6) << "sign" << std::setw(8) << "oracle" << "\n";
  for (const auto& r : rep.rows)
    out << std::setw(14) << r.lambda.to_string() << std::setw(14) << r.mu.to_string() << std::setw(14)
        << r.nu.to_string() << std::setw(7) << r.count << std::setw(6) << (r.sign > 0 ? "+" : "-") << std::setw(8)
        << to_string(r.oracle) << (r.agrees() ? "" : "  MISMATCH") << "\n";
  out << (rep.ok() ? "agreement" : "mismatches: " + std::to_string(rep.mismatches.size())) << "\n";
  return out.str();
}

json oracle_json(const OracleReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"lambda", to_json(r.lambda)},
                    {"mu", to_json(r.mu)},
                    {"nu", to_json(r.nu)},
                    {"count", r.count},
                    {"sign", r.sign},
                    {"oracle", to_string(r.oracle)},
                    {"agrees", r.agrees()}});
  return json{{"rows", rows}, {"mismatches", rep.mismatches.size()}, {"ok", rep.ok()}};
}

int cmd_lr(const std::string& a, const std::string& b, const std::string& nu_arg, const std::string& urt,
           int max_extra, bool verify, int vars, int deg, std::size_t urt_bound) {
  const Partition lambda = parse_partition(a), mu = parse_partition(b);
  const auto t = choose_urt(mu, urt);
  return guarded([&] {
    json j{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"urt", to_json(t)}};
    std::string text;
    if (verify) {
      if (deg <= 0) deg = lambda.size() + mu.size() + std::max(0, max_extra);
      if (vars <= 0) vars = deg;
      const auto rep = verify_product(lambda, t, vars, deg, {}, urt_bound);
      j["vars"] = vars;
      j["deg"] = deg;
      j["verification"] = oracle_json(rep);
      emit(j, oracle_text(rep));
      return rep.ok() ? yes : no;
    }
    if (!nu_arg.empty()) {
      const Partition nu = parse_partition(nu_arg);
      const auto r = lr_coefficient(lambda, t, nu, urt_bound);
      j["nu"] = to_json(nu);
      j["report"] = to_json(r);
      emit(j, report_text(nu.to_string(), r));
      return yes;
    }
    const auto table = lr_table(lambda, t, max_extra, urt_bound);
    json rows = json::array();
    std::ostringstream out;
    out << std::left << std::setw(16) << "nu" << std::setw(7) << "count" << "sign\n";
    for (const auto& [nu, r] : table) {
      json row = to_json(r);
      row["nu"] = to_json(nu);
      rows.push_back(row);
      out << std::setw(16) << nu.to_string() << std::setw(7) << r.count << (r.sign > 0 ? "+" : "-") << "\n";
    }
    j["max_extra"] = max_extra;
    j["table"] = rows;
    emit(j, out.str());
    return yes;
  });
}

int cmd_dual_lr(const std::string& nu_arg, const std::string& a, const std::string& b, const std::string& urt,
                bool verify, int vars, int deg, std::size_t urt_bound) {
  const Partition nu = parse_partition(nu_arg);
  const auto t0 = choose_urt(nu, urt);
  return guarded([&] {
    json j{{"nu", to_json(nu)}, {"urt", to_json(t0)}};
    if (verify) {
      if (deg <= 0) deg = nu.size();
      if (vars <= 0) vars = deg + 1;
      const auto rep = verify_coproduct(t0, vars, deg, urt_bound);
      j["vars"] = vars;
      j["deg"] = deg;
      j["verification"] = oracle_json(rep);
      emit(j, oracle_text(rep));
      return rep.ok() ? yes : no;
    }
    if (!a.empty() || !b.empty()) {
      const Partition lambda = parse_partition(a), mu = parse_partition(b);
      const auto r = dual_lr_coefficient(t0, lambda, mu, urt_bound);
      j["lambda"] = to_json(lambda);
      j["mu"] = to_json(mu);
      j["report"] = to_json(r);
      emit(j, report_text(lambda.to_string() + " (+) " + mu.to_string(), r));
      return yes;
    }
    const auto table = dual_lr_table(t0, urt_bound);
    json rows = json::array();
    std::ostringstream out;
    out << std::left << std::setw(14) << "lambda" << std::setw(14) << "mu" << std::setw(7) << "count" << "sign\n";
    for (const auto& [k, r] : table) {
      json row = to_json(r);
      row["lambda"] = to_json(k.first);
      row["mu"] = to_json(k.second);
      rows.push_back(row);
      out << std::setw(14) << k.first.to_string() << std::setw(14) << k.second.to_string() << std::setw(7) << r.count
          << (r.sign > 0 ? "+" : "-") << "\n";
    }
    j["table"] = rows;
    emit(j, out.str());
    return yes;
  });
}

int cmd_verify(bool all, const std::vector<int>& only, bool verbose) {
  if (!all && only.empty()) throw UsageError("verify: pass --all or --criterion");
  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= criterion_count; ++i) ids.push_back(i);
  json arr = json::array();
  std::string text;
  bool ok = true;
  for (int id : ids) {
    if (id < 1 || id > criterion_count) throw UsageError("no criterion " + std::to_string(id));
    std::cerr << "criterion " << id << "...\n";
    const auto r = run_criterion(id, [](const std::string& msg) { std::cerr << msg << '\n'; });
    ok = ok && r.acceptable();
    json items = json::array();
    for (const auto& it : r.items)
      items.push_back(
          {{"name", it.name}, {"ok", it.ok}, {"known_conflict", it.known_conflict}, {"detail", it.detail}});
    arr.push_back({{"id", r.id},
                   {"title", r.title},
                   {"pass", r.pass()},
                   {"acceptable", r.acceptable()},
                   {"seconds", r.seconds},
                   {"limit_seconds", r.limit_seconds},
                   {"items", items}});
    text += format_result(r, verbose);
  }
  emit(json{{"criteria", arr}, {"ok", ok}}, text);
  return ok ? yes : no;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke insertion, K-Knuth classes, the KPR bialgebra and K-theoretic LR rules"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", opts.jobs, "Worker threads (default KHECKE_JOBS, else all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-words", opts.max_words, "Cap on words held by one class search")
      ->check(CLI::PositiveNumber);

  std::string s1, s2, s3, nu, urt = "superstandard", basis = "G";
  std::size_t max_len = 0, bound = 10, urt_bound = 12;
  int vars = 0, deg = 0, max_extra = 2;
  bool flag = false, verify = false, verbose = false;
  std::vector<int> criteria;
  std::function<int()> run;

  auto* insert = app.add_subcommand("insert", "Hecke insertion: P and Q of a word");
  insert->add_option("word", s1)->required();
  insert->callback([&] { run = [&] { return cmd_insert(s1); }; });

  auto* roundtrip = app.add_subcommand("roundtrip", "Insert and reverse a word");
  roundtrip->add_option("word", s1)->required();
  roundtrip->callback([&] { run = [&] { return cmd_roundtrip(s1); }; });

  auto* reverse = app.add_subcommand("reverse", "Word with the given P and Q");
  reverse->add_option("P", s1, "Tableau JSON or file")->required();
  reverse->add_option("Q", s2, "Set-valued tableau JSON or file")->required();
  reverse->callback([&] { run = [&] { return cmd_reverse(s1, s2); }; });

  auto* cls = app.add_subcommand("class", "K-Knuth class of a word up to a length bound");
  cls->add_option("word", s1)->required();
  cls->add_option("--max-len", max_len, "Longest word searched")->required()->check(CLI::PositiveNumber);
  cls->add_flag("--tableaux", flag, "List insertion tableaux of the class instead of words");
  cls->callback([&] { run = [&] { return cmd_class(s1, max_len, flag); }; });

  auto* equiv = app.add_subcommand("equiv", "Decide K-Knuth equivalence within a bound");
  equiv->add_option("w1", s1)->required();
  equiv->add_option("w2", s2)->required();
  equiv->add_option("--max-len", max_len, "Longest word searched (default |w1|+|w2|+4)")
      ->check(CLI::PositiveNumber);
  equiv->callback([&] {
    run = [&] { return cmd_equiv(s1, s2, max_len ? std::optional<std::size_t>(max_len) : std::nullopt); };
  });

  auto* urt_cmd = app.add_subcommand("urt", "Is a tableau a unique rectification target");
  urt_cmd->add_option("tableau", s1, "Tableau JSON or file")->required();
  urt_cmd->add_option("--max-len", urt_bound, "Search bound")->check(CLI::PositiveNumber);
  urt_cmd->callback([&] { run = [&] { return cmd_urt(s1, urt_bound); }; });

  auto* product = app.add_subcommand("product", "Product of two classes of initial words");
  product->add_option("h1", s1)->required();
  product->add_option("h2", s2)->required();
  product->add_option("--bound", bound, "Search bound")->check(CLI::PositiveNumber);
  product->callback([&] { run = [&] { return cmd_product(s1, s2, bound); }; });

  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of the class of an initial word");
  coproduct->add_option("word", s1)->required();
  coproduct->add_option("--bound", bound, "Search bound")->check(CLI::PositiveNumber);
  coproduct->callback([&] { run = [&] { return cmd_coproduct(s1, bound); }; });

  auto* uprod = app.add_subcommand("urt-product", "Product of two URT classes as a tableau set");
  uprod->add_option("T1", s1)->required();
  uprod->add_option("T2", s2)->required();
  uprod->add_option("--urt-bound", urt_bound, "Bound for the URT check")->check(CLI::PositiveNumber);
  uprod->callback([&] { run = [&] { return cmd_urt_product(s1, s2, urt_bound); }; });

  auto* ucoprod = app.add_subcommand("urt-coproduct", "Coproduct of a URT class as tableau pairs");
  ucoprod->add_option("T0", s1)->required();
  ucoprod->add_option("--urt-bound", urt_bound, "Bound for the URT check")->check(CLI::PositiveNumber);
  ucoprod->callback([&] { run = [&] { return cmd_urt_coproduct(s1, urt_bound); }; });

  auto add_window = [&](CLI::App* c, bool deg_required) {
    auto* d = c->add_option("--deg", deg, "Degree cap")->check(CLI::PositiveNumber);
    if (deg_required) d->required();
    c->add_option("--vars", vars, "Number of variables (default: the degree cap)")->check(CLI::PositiveNumber);
  };

  auto* gpoly = app.add_subcommand("gpoly", "Stable Grothendieck polynomial G_lambda");
  gpoly->add_option("lambda", s1)->required();
  add_window(gpoly, true);
  gpoly->add_flag("--m-basis", flag, "Print monomial symmetric coefficients");
  gpoly->callback([&] { run = [&] { return cmd_poly(s1, vars, deg, false, flag); }; });

  auto* jpoly = app.add_subcommand("jpoly", "Weak stable Grothendieck polynomial J_lambda");
  jpoly->add_option("lambda", s1)->required();
  add_window(jpoly, true);
  jpoly->add_flag("--m-basis", flag, "Print monomial symmetric coefficients");
  jpoly->callback([&] { run = [&] { return cmd_poly(s1, vars, deg, true, flag); }; });

  auto* eprod = app.add_subcommand("expand-product", "B_lambda B_mu in the G or J basis");
  eprod->add_option("lambda", s1)->required();
  eprod->add_option("mu", s2)->required();
  add_window(eprod, true);
  eprod->add_option("--basis", basis, "G or J")->check(CLI::IsMember({"G", "J"}));
  eprod->callback([&] { run = [&] { return cmd_expand_product(s1, s2, vars, deg, basis); }; });

  auto* cog = app.add_subcommand("coproduct-g", "Coproduct of G_nu in G (x) G");
  cog->add_option("nu", s1)->required();
  add_window(cog, true);
  cog->callback([&] { run = [&] { return cmd_coproduct_g(s1, vars, deg); }; });

  auto* phi = app.add_subcommand("phi", "Sum of L_C(w) over the class of a word");
  phi->add_option("word", s1)->required();
  add_window(phi, true);
  phi->add_option("--bound", bound, "Search bound")->check(CLI::PositiveNumber);
  phi->callback([&] { run = [&] { return cmd_phi(s1, vars, deg, bound); }; });

  auto* lr = app.add_subcommand("lr", "Product rule: fillings of nu/lambda rectifying to a URT of shape mu");
  lr->add_option("lambda", s1)->required();
  lr->add_option("mu", s2)->required();
  lr->add_option("--nu", nu, "Single outer shape (default: a table)");
  lr->add_option("--urt", urt, "superstandard, minimal, or tableau JSON/file");
  lr->add_option("--max-extra", max_extra, "Table depth above |lambda|+|mu|")->check(CLI::NonNegativeNumber);
  lr->add_flag("--verify", verify, "Compare the table with the polynomial oracle");
  add_window(lr, false);
  lr->add_option("--urt-bound", urt_bound, "Bound for the URT check")->check(CLI::PositiveNumber);
  lr->callback([&] {
    run = [&] { return cmd_lr(s1, s2, nu, urt, max_extra, verify, vars, deg, urt_bound); };
  });

  auto* dlr = app.add_subcommand("dual-lr", "Coproduct rule: fillings of lambda (+) mu rectifying to a URT of shape nu");
  dlr->add_option("nu", s1)->required();
  dlr->add_option("lambda", s2);
  dlr->add_option("mu", s3);
  dlr->add_option("--urt", urt, "superstandard, minimal, or tableau JSON/file");
  dlr->add_flag("--verify", verify, "Compare the table with the polynomial oracle");
  add_window(dlr, false);
  dlr->add_option("--urt-bound", urt_bound, "Bound for the URT check")->check(CLI::PositiveNumber);
  dlr->callback([&] {
    run = [&] {
      if (s2.empty() != s3.empty()) throw UsageError("dual-lr: give both lambda and mu, or neither");
      return cmd_dual_lr(s1, s2, s3, urt, verify, vars, deg, urt_bound);
    };
  });

  auto* ver = app.add_subcommand("verify", "Run the acceptance checks");
  ver->add_flag("--all,--paper-examples", flag, "Run every check");
  ver->add_option("--criterion", criteria, "Run only these checks (1-11)");
  ver->add_flag("-v,--verbose", verbose, "List passing items too");
  ver->callback([&] { run = [&] { return cmd_verify(flag, criteria, verbose); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }
  if (opts.jobs > 0) set_jobs(static_cast<std::size_t>(opts.jobs));
  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const SearchLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return unknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
}

#include "khecke/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace khecke {

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter x : letters_)
    if (x < 1) throw std::invalid_argument("word letters must be positive");
}

Word Word::parse(std::string_view text) {
  if (text.empty() || text == "-") return {};
  std::vector<Letter> letters;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument("malformed word: '" + std::string(text) +
                                    "' (use commas for letters above 9)");
      letters.push_back(ch - '0');
    }
    return Word(std::move(letters));
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed word: '" + std::string(text) + "'");
    letters.push_back(value);
    pos = comma + 1;
  }
  return Word(std::move(letters));
}

void Word::push_back(Letter x) {
  if (x < 1) throw std::invalid_argument("word letters must be positive");
  letters_.push_back(x);
}

Word& Word::operator+=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

std::string Word::to_string() const {
  const bool compact =
      std::all_of(letters_.begin(), letters_.end(), [](Letter x) { return x < 10; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::vector<Letter> support(const Word& w) {
  std::vector<Letter> out(w.begin(), w.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Letter max_letter(const Word& w) {
  return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

bool is_initial(const Word& w) {
  auto s = support(w);
  return s.empty() || s.back() == static_cast<Letter>(s.size());
}

Word flatten_word(const Word& w) {
  auto s = support(w);
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w)
    out.push_back(static_cast<Letter>(std::lower_bound(s.begin(), s.end(), x) - s.begin()) + 1);
  return Word(std::move(out));
}

Word restrict_word(const Word& w, Letter lo, Letter hi) {
  std::vector<Letter> out;
  for (Letter x : w)
    if (x >= lo && x <= hi) out.push_back(x);
  return Word(std::move(out));
}

Word shift(const Word& w, int n) {
  if (n < 0) throw std::invalid_argument("shift amount must be nonnegative");
  std::vector<Letter> out(w.begin(), w.end());
  for (auto& x : out) x += n;
  return Word(std::move(out));
}

std::vector<int> descent_set(const Word& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

Composition descent_composition(const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word has no descent composition");
  return Composition::from_descent_set(descent_set(w), static_cast<int>(w.size()));
}

int lis(const Word& w) {
  // tails[k] = smallest possible last letter of a strictly increasing run of length k+1
  std::vector<Letter> tails;
  for (Letter x : w) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

int lds(const Word& w) {
  std::vector<Letter> negated;
  negated.reserve(w.size());
  for (Letter x : w) negated.push_back(-x);
  std::vector<Letter> tails;
  for (Letter x : negated) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

}  // namespace khecke

std::size_t std::hash<khecke::Word>::operator()(const khecke::Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : w) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

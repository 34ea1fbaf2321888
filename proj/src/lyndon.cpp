#include "hopfchain/lyndon.hpp"

#include "hopfchain/error.hpp"

#include <algorithm>
#include <numeric>

namespace hopfchain {

bool is_lyndon(const Word& w) {
  if (w.empty()) fail(ErrorCode::invalid_input, "is_lyndon: empty word");
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    // compare w with its rotation starting at r
    for (std::size_t i = 0; i < n; ++i) {
      GenId x = w[i], y = w[(r + i) % n];
      if (x < y) break;
      if (x > y) return false;
      if (i + 1 == n) return false;  // equal rotation: periodic
    }
  }
  return true;
}

std::vector<Word> lyndon_factorize(const Word& w) {
  if (w.empty()) fail(ErrorCode::invalid_input, "lyndon_factorize: empty word");
  // Duval
  std::vector<Word> out;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && w[k] <= w[j]) {
      k = (w[k] < w[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.emplace_back(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + j - k));
      i += j - k;
    }
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& l) {
  if (l.size() < 2) return {l, {}};
  for (std::size_t s = 1; s < l.size(); ++s) {
    Word suffix(l.begin() + static_cast<long>(s), l.end());
    if (is_lyndon(suffix)) return {Word(l.begin(), l.begin() + static_cast<long>(s)), suffix};
  }
  return {l, {}};
}

Vec concat_product(const Vec& x, const Vec& y) {
  Vec out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) out.add(concat(u, v), cu * cv);
  return out;
}

Vec bracket_with(const Word& l, const LetterImage& image, const Product& mul) {
  if (l.empty() || !is_lyndon(l)) fail(ErrorCode::invalid_input, "bracketing needs a Lyndon word");
  if (l.size() == 1) return image(l[0]);
  auto [l1, l2] = standard_factorization(l);
  Vec a = bracket_with(l1, image, mul);
  Vec b = bracket_with(l2, image, mul);
  return mul(a, b) - mul(b, a);
}

Vec sym_with(const Word& w, const LetterImage& image, const Product& mul) {
  std::vector<Word> factors = lyndon_factorize(w);
  std::vector<Vec> brackets;
  brackets.reserve(factors.size());
  for (const Word& f : factors) brackets.push_back(bracket_with(f, image, mul));
  std::vector<std::size_t> order(factors.size());
  std::iota(order.begin(), order.end(), 0);
  Vec out;
  do {
    Vec term = brackets[order[0]];
    for (std::size_t i = 1; i < order.size(); ++i) term = mul(term, brackets[order[i]]);
    out += term;
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

namespace {
Vec letter_as_word(GenId c) { return Vec(Element{c}, 1); }
}  // namespace

Vec standard_bracketing(const Word& l) { return bracket_with(l, letter_as_word, concat_product); }

Vec sym(const Word& w) { return sym_with(w, letter_as_word, concat_product); }

Word word_from_digits(const std::string& digits) {
  Word w;
  for (char ch : digits) {
    if (ch < '1' || ch > '9') fail(ErrorCode::invalid_input, std::string("bad letter '") + ch + "'");
    w.push_back(make_gen(1, static_cast<std::uint64_t>(ch - '0')));
  }
  return w;
}

std::string word_to_digits(const Word& w) {
  std::string s;
  for (GenId c : w) s += std::to_string(gen_key(c));
  return s;
}

}  // namespace hopfchain

#pragma once

#include "hopfchain/element.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hopfchain {

bool is_lyndon(const Word& w);
std::vector<Word> lyndon_factorize(const Word& w);
std::pair<Word, Word> standard_factorization(const Word& l);

// Words whose letters are concatenated (the free associative product).
Vec standard_bracketing(const Word& l);
Vec sym(const Word& w);

using LetterImage = std::function<Vec(GenId)>;
using Product = std::function<Vec(const Vec&, const Vec&)>;

// The bracketing / symmetrization with each letter replaced by an element
// of some algebra and the product supplied by the caller.
Vec bracket_with(const Word& l, const LetterImage& image, const Product& mul);
Vec sym_with(const Word& w, const LetterImage& image, const Product& mul);

Vec concat_product(const Vec& x, const Vec& y);

// Words over single-digit letters, e.g. word_from_digits("35142").
Word word_from_digits(const std::string& digits);
std::string word_to_digits(const Word& w);

}  // namespace hopfchain

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "affine.hpp"

namespace affweyl {

// Words in the generators; letter 0 is the affine generator s_{delta-rho},
// letters 1..rank are the finite simple reflections.
using Word = std::vector<int>;

std::string word_str(const Word& w);            // "1,2,0" ("e" when empty)
Word parse_word(const std::string& csv, int rank);

AffineElement evaluate(const RootSystem& rs, const Word& w);

// A word is reduced iff every prefix keeps the next simple affine root
// positive.
bool is_reduced(const RootSystem& rs, const Word& w);
// Index of the first letter at which the word stops being reduced, or -1.
int first_non_reduced_prefix(const RootSystem& rs, const Word& w);

// Canonical reduced word of a finite element: repeatedly peel the
// smallest left descent.
Word canonical_word(const RootSystem& rs, const AffineElement& w);

// Longest element of the standard parabolic generated by J (1-based
// finite indices).
AffineElement longest_element(const RootSystem& rs, const std::vector<int>& J);

// Word for w0^{W_J} * w0 with J = S minus {i}.
Word quotient_word(const RootSystem& rs, int i);

// Minimal-length representative of w W_J.
AffineElement coset_min_rep(const RootSystem& rs, const AffineElement& w,
                            const std::vector<int>& J);

// All length-additive factorizations target = u * v, as pairs of
// canonical words, ordered by (ell(u), u).
std::vector<std::pair<Word, Word>> enumerate_splits(const RootSystem& rs, const Word& target);

// Fully commutative: no word in the commutation class contains an
// alternating factor s t s ... of length m(s,t) >= 3.
bool is_fully_commutative(const RootSystem& rs, const Word& w);

}  // namespace affweyl

#pragma once

#include "biclosed.hpp"
#include "report.hpp"
#include "words.hpp"

namespace affweyl {

// For each simple root index i there is a distinguished translation
// t_lambda whose infinite reduced word realizes a minimal element of the
// biclosed poset; lambda and an explicit word for t_lambda (as the
// quotient word w0^{W_{S-{i}}} w0 followed by a tail in the affine
// generators) are tabulated per type.
QVec distinguished_coroot(const RootSystem& rs, int i);
Word tail_word(const RootSystem& rs, int i);
Word distinguished_word(const RootSystem& rs, int i);  // quotient_word + tail

// Period word v . tail(i) . u for a length-additive factorization
// (u, v) of the quotient element; evaluates to u^-1 t u.
Word period_word(const RootSystem& rs, int i, const Word& u, const Word& v);

// Checks on one (i, split) instance:
//  (a) the period word is reduced,
//  (b) it evaluates to u^-1 t_lambda u,
//  (c) powers stay straight up to depth,
//  (d) inversion sets of powers stay inside the hat-lift of
//      u^-1(Phi+ \ Phi_{S-{i}}),
//  (e) ell(p^k) grows by exactly the word length each power.
Report verify_minimal_instance(const RootSystem& rs, int i, const Word& u, const Word& v,
                               int depth);

// The three checks on the tabulated translation identity itself:
// reduced, equals t_lambda, and straight.
Report verify_translation_identity(const RootSystem& rs, int i, int depth);

// Number of minimal infinite reduced words: |W| * sum_i 1/|W_{S-{i}}|.
long long count_minimal_formula(const RootSystem& rs);
// Same number by enumerating the sets w(Phi+ \ Phi_{S-{i}}) over all w.
long long count_minimal_bruteforce(const RootSystem& rs);

// All elements of the finite Weyl group, by breadth-first products of the
// simple reflections.
std::vector<AffineElement> enumerate_weyl_group(const RootSystem& rs);

// The sets w(Phi+ \ Phi_{S-{i}}), deduplicated, together with a coset-
// minimal representative for each.
struct MinimalTarget {
  RootSet set;
  int i;
  AffineElement rep;
};
std::vector<MinimalTarget> enumerate_minimal_targets(const RootSystem& rs);

}  // namespace affweyl

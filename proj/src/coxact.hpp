#pragma once

#include "report.hpp"
#include "words.hpp"

namespace affweyl {

// Coxeter elements of the affine group: products of all n+1 generators in
// some order, deduplicated.
std::vector<AffineElement> coxeter_elements(const RootSystem& rs);
bool is_coxeter_element(const RootSystem& rs, const AffineElement& e);

// Acyclic orientation of the affine Coxeter graph attached to a Coxeter
// element: edge (a, b) is oriented a -> b when s_a occurs to the left of
// s_b in any reduced word for it.
std::vector<std::pair<int, int>> orientation(const RootSystem& rs, const AffineElement& c);
// Inverse of `orientation`: rebuild the element from an acyclic
// orientation by multiplying the generators in a topological order.
// Throws on cyclic input.
AffineElement coxeter_from_orientation(const RootSystem& rs,
                                       const std::vector<std::pair<int, int>>& edges);

// Action of the finite Weyl group on Coxeter elements: s_i . c = s_i c s_i
// when s_i is a left or right descent of c, and c otherwise. Only finite
// generators act (i in 1..rank).
AffineElement act_simple(const RootSystem& rs, int i, const AffineElement& c);
// w . c for w given by a word, applied right to left.
AffineElement act_word(const RootSystem& rs, const Word& w, const AffineElement& c);

// Check s_i.(s_i.c) = c and all braid relations of the finite group on
// every Coxeter element. One failing check carries the witness words.
Report verify_action_well_defined(const RootSystem& rs);

// Orbit of c under the generators 1..rank.
std::vector<AffineElement> orbit(const RootSystem& rs, const AffineElement& c);
// Order of the stabilizer of c in the finite Weyl group, by direct count.
long long stabilizer_order(const RootSystem& rs, const AffineElement& c);

// Type C support words: c_n = (n, n-1, ..., 1, 0) and the nested reduced
// expression (n..1)(n..2)...(n,n-1)(n) of the quotient element.
Word type_c_coxeter_word(const RootSystem& rs);
Word type_c_quotient_expression(const RootSystem& rs);

// Quotient identity, c^n translation identity, orbit size 2^n and
// stabilizer order n! for type C.
Report verify_cox_lemma(const RootSystem& rs);

// Both directions of the correspondence between splits of the quotient
// word and Coxeter elements in type C: each period word evaluates to the
// n-th power of the conjugated Coxeter element u^-1 c u, and the
// conjugates exhaust all Coxeter elements.
Report verify_cox_theorem(const RootSystem& rs);

// In affine B4 the action is not well-defined; the expected witness is
// frozen here and the report *passes* when the discrepancy is present.
Report verify_b4_counterexample();

// Explicit period identities: affine G2 (squares of the four Coxeter
// words) and affine F4 (sixth powers of the sixteen Coxeter words).
Report verify_g2_remark();
Report verify_f4_remark();

}  // namespace affweyl

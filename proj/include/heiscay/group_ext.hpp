#pragma once

// Semidirect extensions of a Heisenberg quotient H:
//
//   R = H x| <t>      (t: x_i -> x_i^{-1})
//   G = R x| <b>      (b extended to R by t^b = x_{n+1} t)
//   L = H x| <b>
//
// Elements are written h t^eps b^j. Automorphisms act on the right,
// x^y = y^{-1} x y, so b^j y = y^{b^{-j}} b^j and t y = y^t t.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "heiscay/heisenberg.hpp"

namespace heiscay {

struct ExtElem {
  HeisElem h;
  int eps = 0;  // exponent of t, mod 2
  int j = 0;    // exponent of b, mod k

  auto operator<=>(const ExtElem&) const = default;
};

ExtElem ext_identity(const Params& p);
ExtElem ext_from(const HeisElem& h, int eps = 0, int j = 0);
/// The involution t.
ExtElem ext_t(const Params& p);
/// The automorphism b as a group element (h = 1, eps = 0, j = 1).
ExtElem ext_b(const Params& p);

ExtElem ext_multiply(const Params& p, const ExtElem& g1, const ExtElem& g2);
ExtElem ext_inverse(const Params& p, const ExtElem& g);

/// g^b for g in R. Throws HasBPart when g.j != 0.
ExtElem apply_b_ext(const Params& p, const ExtElem& g);

/// Repeated apply_b_ext, exponent taken mod k.
ExtElem apply_b_ext_power(const Params& p, const ExtElem& g, long long times);

struct GenSets {
  std::vector<ExtElem> S;   // t, t^b, ..., t^{b^{2n}}
  std::vector<HeisElem> P;  // x_{n+1}, x_{n+1}^b, ..., x_{n+1}^{b^{2n}}
};

/// Builds S and P and verifies distinctness, involutions, the inverse-free
/// property of P, and the closed forms
///   t^{b^i} = x_{n+i} ... x_{n+1} t,   t^{b^{n+i}} = x_i^{-1} t   (1 <= i <= n).
/// Throws DegenerateGenerators when any check fails.
GenSets gen_sets(const Params& p);

/// x_{n+i} x_{n+i-1} ... x_{n+1} (descending product).
HeisElem descending_product(const Params& p, int i);

/// Elements of R, ordered lexicographically by (a, c, eps); index of
/// (h, eps) is 2 * index_of(h) + eps.
std::vector<ExtElem> enumerate_r(const Params& p,
                                 std::size_t budget = element_budget());
std::size_t index_of_r(const Params& p, const ExtElem& g);
ExtElem r_element_at(const Params& p, std::size_t index);

/// "(a_1,...,a_{2n}|c;eps)" with ";b^j" appended when j != 0.
std::string label(const ExtElem& g);

}  // namespace heiscay

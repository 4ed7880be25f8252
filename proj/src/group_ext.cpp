#include "heiscay/group_ext.hpp"

#include <algorithm>
#include <set>

#include "heiscay/error.hpp"

namespace heiscay {

ExtElem ext_identity(const Params& p) { return ExtElem{identity(p), 0, 0}; }

ExtElem ext_from(const HeisElem& h, int eps, int j) {
  return ExtElem{h, eps, j};
}

ExtElem ext_t(const Params& p) { return ExtElem{identity(p), 1, 0}; }

ExtElem ext_b(const Params& p) { return ExtElem{identity(p), 0, 1}; }

ExtElem apply_b_ext(const Params& p, const ExtElem& g) {
  if (g.j != 0) {
    throw Error(ErrorCode::HasBPart,
                "apply_b_ext needs an element of R, got " + label(g));
  }
  // (h t^eps)^b = h^b (x_{n+1} t)^eps
  HeisElem h = auto_b(p, g.h);
  if (g.eps == 1) h = multiply(p, h, gen_x(p, p.n + 1));
  return ExtElem{std::move(h), g.eps, 0};
}

ExtElem apply_b_ext_power(const Params& p, const ExtElem& g, long long times) {
  long long reduced = times % p.k;
  if (reduced < 0) reduced += p.k;
  if (reduced == 0) return g;
  if (g.j != 0) {
    throw Error(ErrorCode::HasBPart,
                "apply_b_ext needs an element of R, got " + label(g));
  }
  const HeisMorphism b = HeisMorphism::b(p);
  const HeisElem x = gen_x(p, p.n + 1);
  ExtElem out = g;
  for (long long i = 0; i < reduced; ++i) {
    HeisElem h = b(out.h);
    if (out.eps == 1) h = multiply(p, h, x);
    out.h = std::move(h);
  }
  return out;
}

ExtElem ext_multiply(const Params& p, const ExtElem& g1, const ExtElem& g2) {
  // h1 t^e1 b^j1 . h2 t^e2 b^j2 = h1 t^e1 (h2 t^e2)^{b^{-j1}} b^{j1+j2}
  ExtElem moved = apply_b_ext_power(p, ExtElem{g2.h, g2.eps, 0}, -g1.j);
  HeisElem h2 = g1.eps == 1 ? auto_t(p, moved.h) : moved.h;
  return ExtElem{multiply(p, g1.h, h2), (g1.eps + moved.eps) % 2,
                 (g1.j + g2.j) % p.k};
}

ExtElem ext_inverse(const Params& p, const ExtElem& g) {
  // (h t^e b^j)^{-1} = b^{-j} t^e h^{-1}
  const ExtElem b_part{identity(p), 0, (p.k - g.j) % p.k};
  const ExtElem t_part{identity(p), g.eps, 0};
  const ExtElem h_part{inverse(p, g.h), 0, 0};
  return ext_multiply(p, ext_multiply(p, b_part, t_part), h_part);
}

HeisElem descending_product(const Params& p, int i) {
  HeisElem out = identity(p);
  for (int idx = p.n + i; idx >= p.n + 1; --idx) {
    out = multiply(p, out, gen_x(p, idx));
  }
  return out;
}

GenSets gen_sets(const Params& p) {
  GenSets sets;
  const HeisMorphism b = HeisMorphism::b(p);
  ExtElem s = ext_t(p);
  HeisElem x = gen_x(p, p.n + 1);
  for (int i = 0; i < p.k; ++i) {
    sets.S.push_back(s);
    sets.P.push_back(x);
    s = apply_b_ext(p, s);
    x = b(x);
  }

  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::DegenerateGenerators, what);
  };
  if (std::set<ExtElem>(sets.S.begin(), sets.S.end()).size() !=
      static_cast<std::size_t>(p.k)) {
    fail("S has repeated elements");
  }
  if (std::set<HeisElem>(sets.P.begin(), sets.P.end()).size() !=
      static_cast<std::size_t>(p.k)) {
    fail("P has repeated elements");
  }
  const ExtElem e = ext_identity(p);
  for (const auto& si : sets.S) {
    if (ext_multiply(p, si, si) != e) fail(label(si) + " is not an involution");
  }
  for (const auto& pi : sets.P) {
    const HeisElem inv = inverse(p, pi);
    if (std::find(sets.P.begin(), sets.P.end(), inv) != sets.P.end()) {
      fail("P contains the inverse of " + label(pi));
    }
  }
  for (int i = 1; i <= p.n; ++i) {
    if (sets.S[static_cast<std::size_t>(i)] !=
        ExtElem{descending_product(p, i), 1, 0}) {
      fail("t^{b^" + std::to_string(i) + "} does not match its closed form");
    }
    if (sets.S[static_cast<std::size_t>(p.n + i)] !=
        ExtElem{inverse(p, gen_x(p, i)), 1, 0}) {
      fail("t^{b^" + std::to_string(p.n + i) +
           "} does not match its closed form");
    }
  }
  // b has order k on R: one more application returns to t.
  if (apply_b_ext(p, sets.S.back()) != ext_t(p)) fail("b does not have order k on t");
  return sets;
}

std::vector<ExtElem> enumerate_r(const Params& p, std::size_t budget) {
  const std::uint64_t order = saturating_mul(2, group_order(p));
  if (order > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "2 m^k = " + std::to_string(order) + " exceeds budget " +
                    std::to_string(budget));
  }
  std::vector<ExtElem> out;
  out.reserve(static_cast<std::size_t>(order));
  for (std::size_t idx = 0; idx < order; ++idx) out.push_back(r_element_at(p, idx));
  return out;
}

std::size_t index_of_r(const Params& p, const ExtElem& g) {
  return 2 * index_of(p, g.h) + static_cast<std::size_t>(g.eps);
}

ExtElem r_element_at(const Params& p, std::size_t index) {
  return ExtElem{element_at(p, index / 2), static_cast<int>(index % 2), 0};
}

std::string label(const ExtElem& g) {
  std::string out = label(g.h);
  out.insert(out.size() - 1, ";" + std::to_string(g.eps));
  if (g.j != 0) out += "b^" + std::to_string(g.j);
  return out;
}

}  // namespace heiscay

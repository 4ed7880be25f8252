#pragma once

// Finite quotients of the discrete Heisenberg group in prime dimension
// k = 2n + 1.
//
// Elements are kept in the normal form
//
//     x_1^{a_1} x_2^{a_2} ... x_{2n}^{a_{2n}} z^c,    0 <= a_i, c < m,
//
// subject to [x_i, x_{i+n}] = z, every other pair of generators commuting,
// and z central. Two quotients are supported:
//
//   kind N (m odd):  x_i^m = 1, z^m = 1
//   kind E (m even): x_i^m = z^{-v_i m / 2}, z^m = 1
//
// where v is the 0/1 pattern returned by v_vector(). Both quotients have
// exactly m^k elements.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "heiscay/budget.hpp"

namespace heiscay {

enum class QuotientKind { N, E };

struct Params {
  int k = 3;
  int n = 1;
  int m = 3;
  QuotientKind kind = QuotientKind::N;
  /// v_1..v_{2n} stored at indices 0..2n-1. Only consulted for kind E.
  std::vector<int> v;

  friend bool operator==(const Params&, const Params&) = default;
};

/// Throws NonPrimeK unless k is an odd prime, VacuousM when m < 2.
Params make_params(int k, int m);

/// v_i = 1 for n <= i <= 2n; below n the values alternate downward starting
/// from v_{n-1} = 0, so that v_1 + v_{n+1} + ... + v_{2n} is even.
std::vector<int> v_vector(int n);

struct HeisElem {
  std::vector<int> a;  // exponents of x_1..x_{2n}
  int c = 0;           // exponent of z
  // Group tag; elements built under different parameters never mix.
  int k = 0;
  int m = 0;

  auto operator<=>(const HeisElem&) const = default;
};

/// Reduces an arbitrary integer word x_1^{e_1}...x_{2n}^{e_{2n}} z^c into
/// normal form.
HeisElem make_elem(const Params& p, const std::vector<long long>& exponents,
                   long long c = 0);

HeisElem identity(const Params& p);
/// The generator x_i, 1-based.
HeisElem gen_x(const Params& p, int i);
HeisElem gen_z(const Params& p);

HeisElem multiply(const Params& p, const HeisElem& g, const HeisElem& h);
HeisElem inverse(const Params& p, const HeisElem& g);
HeisElem power(const Params& p, const HeisElem& g, long long e);
std::uint64_t element_order(const Params& p, const HeisElem& g);
/// g^{-1} h^{-1} g h.
HeisElem commutator(const Params& p, const HeisElem& g, const HeisElem& h);

/// An endomorphism of the quotient fixed by the images of x_1..x_{2n}; z is
/// sent to z. Images of arbitrary elements are computed by expanding the
/// normal-form word and multiplying generator images.
class HeisMorphism {
 public:
  /// x_i -> x_i^{-1}.
  static HeisMorphism t(const Params& p);
  /// x_i -> x_{i+1} x_{n+1}      (1 <= i <= n-1)
  /// x_i -> x_{i+1}              (n <= i <= 2n-1)
  /// x_{2n} -> x_1^{-1} x_{n+1}^{-1} ... x_{2n}^{-1}
  static HeisMorphism b(const Params& p);

  HeisElem operator()(const HeisElem& g) const;
  const std::vector<HeisElem>& generator_images() const& { return images_; }
  std::vector<HeisElem> generator_images() && { return std::move(images_); }

 private:
  HeisMorphism(Params p, std::vector<HeisElem> images)
      : params_(std::move(p)), images_(std::move(images)) {}

  Params params_;
  std::vector<HeisElem> images_;
};

HeisElem auto_t(const Params& p, const HeisElem& g);
HeisElem auto_b(const Params& p, const HeisElem& g);

/// m^k, saturating.
std::uint64_t group_order(const Params& p);

/// All m^k elements in lexicographic order of (a_1, ..., a_{2n}, c); index 0
/// is the identity. Throws BudgetExceeded when m^k > budget.
std::vector<HeisElem> enumerate_elements(const Params& p,
                                         std::size_t budget = element_budget());

/// Position of g in enumerate_elements() order.
std::size_t index_of(const Params& p, const HeisElem& g);
HeisElem element_at(const Params& p, std::size_t index);

/// "(a_1,...,a_{2n}|c)"
std::string label(const HeisElem& g);

struct StructureReport {
  std::uint64_t group_order = 0;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  bool central_quotient_elementary_abelian = false;
  std::uint64_t z_order = 0;
};

StructureReport structure_report(const Params& p,
                                 std::size_t budget = element_budget());

}  // namespace heiscay

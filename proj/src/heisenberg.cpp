#include "heiscay/heisenberg.hpp"

#include <deque>
#include <sstream>

#include "heiscay/error.hpp"

namespace heiscay {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod(long long a, int m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void check_elem(const Params& p, const HeisElem& g) {
  if (g.k != p.k || g.m != p.m ||
      g.a.size() != static_cast<std::size_t>(2 * p.n)) {
    std::ostringstream msg;
    msg << "element " << label(g) << " built for (k=" << g.k << ", m=" << g.m
        << ") used with (k=" << p.k << ", m=" << p.m << ")";
    throw Error(ErrorCode::ParamMismatch, msg.str());
  }
}

}  // namespace

std::vector<int> v_vector(int n) {
  std::vector<int> v(static_cast<std::size_t>(2 * n), 1);
  for (int i = 1; i < n; ++i) {
    v[static_cast<std::size_t>(i - 1)] = ((n - i) % 2 == 0) ? 1 : 0;
  }
  return v;
}

Params make_params(int k, int m) {
  if (k < 3 || !is_prime(k)) {
    throw Error(ErrorCode::NonPrimeK,
                "k = " + std::to_string(k) + " is not an odd prime");
  }
  if (m < 2) {
    throw Error(ErrorCode::VacuousM,
                "m = " + std::to_string(m) +
                    ": block size must be at least 2 (the case that m=1 is "
                    "vacuous)");
  }
  Params p;
  p.k = k;
  p.n = (k - 1) / 2;
  p.m = m;
  p.kind = (m % 2 == 1) ? QuotientKind::N : QuotientKind::E;
  p.v = v_vector(p.n);
  return p;
}

HeisElem make_elem(const Params& p, const std::vector<long long>& exponents,
                   long long c) {
  if (exponents.size() != static_cast<std::size_t>(2 * p.n)) {
    throw Error(ErrorCode::ParamMismatch,
                "exponent vector of length " +
                    std::to_string(exponents.size()) + " for k = " +
                    std::to_string(p.k));
  }
  HeisElem g;
  g.k = p.k;
  g.m = p.m;
  g.a.resize(exponents.size());
  long long central = c;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const long long wraps = floor_div(exponents[i], p.m);
    g.a[i] = static_cast<int>(exponents[i] - wraps * p.m);
    if (p.kind == QuotientKind::E) central -= wraps * p.v[i] * (p.m / 2);
  }
  g.c = mod(central, p.m);
  return g;
}

HeisElem identity(const Params& p) {
  return make_elem(p, std::vector<long long>(2 * p.n, 0));
}

HeisElem gen_x(const Params& p, int i) {
  std::vector<long long> e(2 * p.n, 0);
  e.at(static_cast<std::size_t>(i - 1)) = 1;
  return make_elem(p, e);
}

HeisElem gen_z(const Params& p) {
  return make_elem(p, std::vector<long long>(2 * p.n, 0), 1);
}

HeisElem multiply(const Params& p, const HeisElem& g, const HeisElem& h) {
  check_elem(p, g);
  check_elem(p, h);
  const int dim = 2 * p.n;
  HeisElem r;
  r.k = p.k;
  r.m = p.m;
  r.a.resize(static_cast<std::size_t>(dim));
  long long central = static_cast<long long>(g.c) + h.c;
  // Moving x_i^{h.a_i} left past x_{i+n}^{g.a_{i+n}} costs z^{-g.a_{i+n} h.a_i}.
  for (int i = 0; i < p.n; ++i) {
    central -= static_cast<long long>(g.a[i + p.n]) * h.a[i];
  }
  for (int i = 0; i < dim; ++i) {
    int s = g.a[i] + h.a[i];
    if (s >= p.m) {
      s -= p.m;
      if (p.kind == QuotientKind::E) central -= p.v[i] * (p.m / 2);
    }
    r.a[i] = s;
  }
  r.c = mod(central, p.m);
  return r;
}

HeisElem inverse(const Params& p, const HeisElem& g) {
  check_elem(p, g);
  HeisElem h = g;
  for (auto& ai : h.a) ai = (p.m - ai) % p.m;
  h.c = 0;
  const HeisElem central = multiply(p, g, h);
  h.c = mod(-static_cast<long long>(central.c), p.m);
  return h;
}

HeisElem power(const Params& p, const HeisElem& g, long long e) {
  HeisElem base = e < 0 ? inverse(p, g) : g;
  unsigned long long remaining =
      e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
            : static_cast<unsigned long long>(e);
  HeisElem result = identity(p);
  while (remaining != 0) {
    if (remaining & 1ULL) result = multiply(p, result, base);
    remaining >>= 1;
    if (remaining != 0) base = multiply(p, base, base);
  }
  return result;
}

std::uint64_t element_order(const Params& p, const HeisElem& g) {
  const HeisElem e = identity(p);
  HeisElem acc = g;
  std::uint64_t order = 1;
  while (acc != e) {
    acc = multiply(p, acc, g);
    ++order;
  }
  return order;
}

HeisElem commutator(const Params& p, const HeisElem& g, const HeisElem& h) {
  return multiply(p, multiply(p, inverse(p, g), inverse(p, h)),
                  multiply(p, g, h));
}

HeisMorphism HeisMorphism::t(const Params& p) {
  std::vector<HeisElem> images;
  for (int i = 1; i <= 2 * p.n; ++i) images.push_back(inverse(p, gen_x(p, i)));
  return HeisMorphism(p, std::move(images));
}

HeisMorphism HeisMorphism::b(const Params& p) {
  const int n = p.n;
  std::vector<HeisElem> images;
  for (int i = 1; i <= 2 * n; ++i) {
    if (i <= n - 1) {
      images.push_back(multiply(p, gen_x(p, i + 1), gen_x(p, n + 1)));
    } else if (i <= 2 * n - 1) {
      images.push_back(gen_x(p, i + 1));
    } else {
      HeisElem img = inverse(p, gen_x(p, 1));
      for (int j = n + 1; j <= 2 * n; ++j) {
        img = multiply(p, img, inverse(p, gen_x(p, j)));
      }
      images.push_back(std::move(img));
    }
  }
  return HeisMorphism(p, std::move(images));
}

HeisElem HeisMorphism::operator()(const HeisElem& g) const {
  check_elem(params_, g);
  HeisElem result = identity(params_);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (g.a[i] != 0) {
      result = multiply(params_, result, power(params_, images_[i], g.a[i]));
    }
  }
  result.c = mod(static_cast<long long>(result.c) + g.c, params_.m);
  return result;
}

HeisElem auto_t(const Params& p, const HeisElem& g) {
  return HeisMorphism::t(p)(g);
}

HeisElem auto_b(const Params& p, const HeisElem& g) {
  return HeisMorphism::b(p)(g);
}

std::uint64_t group_order(const Params& p) {
  return saturating_pow(static_cast<std::uint64_t>(p.m),
                        static_cast<unsigned>(p.k));
}

std::vector<HeisElem> enumerate_elements(const Params& p, std::size_t budget) {
  const std::uint64_t order = group_order(p);
  if (order > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "m^k = " + std::to_string(order) + " exceeds budget " +
                    std::to_string(budget));
  }
  std::vector<HeisElem> out;
  out.reserve(static_cast<std::size_t>(order));
  for (std::size_t idx = 0; idx < order; ++idx) out.push_back(element_at(p, idx));
  return out;
}

std::size_t index_of(const Params& p, const HeisElem& g) {
  check_elem(p, g);
  std::size_t idx = 0;
  for (int ai : g.a) idx = idx * static_cast<std::size_t>(p.m) + ai;
  return idx * static_cast<std::size_t>(p.m) + g.c;
}

HeisElem element_at(const Params& p, std::size_t index) {
  HeisElem g;
  g.k = p.k;
  g.m = p.m;
  g.a.assign(static_cast<std::size_t>(2 * p.n), 0);
  const auto m = static_cast<std::size_t>(p.m);
  g.c = static_cast<int>(index % m);
  index /= m;
  for (std::size_t i = g.a.size(); i-- > 0;) {
    g.a[i] = static_cast<int>(index % m);
    index /= m;
  }
  return g;
}

std::string label(const HeisElem& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.a.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(g.a[i]);
  }
  out += '|';
  out += std::to_string(g.c);
  out += ')';
  return out;
}

namespace {

// Subgroup generated by `gens`, as a membership mask over element indices.
std::vector<char> subgroup_mask(const Params& p,
                                const std::vector<HeisElem>& gens,
                                std::size_t order) {
  std::vector<char> member(order, 0);
  std::deque<HeisElem> queue;
  const HeisElem e = identity(p);
  member[index_of(p, e)] = 1;
  queue.push_back(e);
  while (!queue.empty()) {
    const HeisElem g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      HeisElem h = multiply(p, g, s);
      const std::size_t idx = index_of(p, h);
      if (!member[idx]) {
        member[idx] = 1;
        queue.push_back(std::move(h));
      }
    }
  }
  return member;
}

std::uint64_t count(const std::vector<char>& mask) {
  std::uint64_t total = 0;
  for (char c : mask) total += c ? 1 : 0;
  return total;
}

}  // namespace

StructureReport structure_report(const Params& p, std::size_t budget) {
  const std::vector<HeisElem> elements = enumerate_elements(p, budget);
  const std::size_t order = elements.size();
  std::vector<HeisElem> gens;
  for (int i = 1; i <= 2 * p.n; ++i) gens.push_back(gen_x(p, i));
  const HeisElem e = identity(p);

  StructureReport report;
  report.group_order = order;
  report.z_order = element_order(p, gen_z(p));

  std::vector<char> center(order, 0);
  std::vector<char> seen(order, 0);
  std::vector<HeisElem> commutators;
  for (const auto& g : elements) {
    bool central = true;
    for (const auto& x : gens) {
      HeisElem c = commutator(p, g, x);
      if (c == e) continue;
      central = false;
      const std::size_t idx = index_of(p, c);
      if (!seen[idx]) {
        seen[idx] = 1;
        commutators.push_back(std::move(c));
      }
    }
    if (central) center[index_of(p, g)] = 1;
  }
  report.center_order = count(center);

  // Normal closure of {[g, x_i]}; this is the derived subgroup.
  std::vector<char> derived = subgroup_mask(p, commutators, order);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t idx = 0; idx < order; ++idx) {
      if (!derived[idx]) continue;
      for (const auto& x : gens) {
        HeisElem conj = multiply(p, multiply(p, inverse(p, x), elements[idx]), x);
        if (!derived[index_of(p, conj)]) {
          commutators.push_back(std::move(conj));
          grew = true;
        }
      }
    }
    if (grew) derived = subgroup_mask(p, commutators, order);
  }
  report.derived_order = count(derived);

  bool elementary = true;
  for (std::size_t idx = 0; idx < order && elementary; ++idx) {
    if (derived[idx] && !center[idx]) elementary = false;
  }
  for (std::size_t idx = 0; idx < order && elementary; ++idx) {
    if (!center[index_of(p, power(p, elements[idx], p.m))]) elementary = false;
  }
  report.central_quotient_elementary_abelian = elementary;
  return report;
}

}  // namespace heiscay

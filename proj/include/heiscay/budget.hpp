#pragma once

#include <cstddef>
#include <cstdint>

namespace heiscay {

inline constexpr std::size_t kDefaultElementBudget = 1'000'000;

/// Vertex/element budget for enumerations. Reads HEISCAY_BUDGET when set to a
/// positive integer, otherwise kDefaultElementBudget.
std::size_t element_budget();

/// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, unsigned exp);

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

bool is_prime(long long value);

}  // namespace heiscay

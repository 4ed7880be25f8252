#include "heiscay/budget.hpp"
#include "heiscay/error.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace heiscay {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeK: return "NonPrimeK";
    case ErrorCode::VacuousM: return "VacuousM";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::HasBPart: return "HasBPart";
    case ErrorCode::DegenerateGenerators: return "DegenerateGenerators";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::LoopGenerated: return "LoopGenerated";
    case ErrorCode::InvalidArc: return "InvalidArc";
    case ErrorCode::InvalidPerm: return "InvalidPerm";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
  }
  return "Unknown";
}

std::size_t element_budget() {
  if (const char* env = std::getenv("HEISCAY_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<std::size_t>(value);
    }
  }
  return kDefaultElementBudget;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) result = saturating_mul(result, base);
  return result;
}

bool is_prime(long long value) {
  if (value < 2) return false;
  for (long long d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

}  // namespace heiscay

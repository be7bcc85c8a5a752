#include "sb3/formal_sum.hpp"

#include "sb3/errors.hpp"
#include "sb3/laurent_poly.hpp"

namespace sb3 {

void FormalSum::add(const std::string& key, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

void FormalSum::combine(const FormalSum& other, int sign) {
  if (sign != 1 && sign != -1) throw UsageError("formal sum sign must be +1 or -1");
  for (const auto& [key, c] : other.terms_) add(key, checked_mul(c, sign));
}

std::int64_t FormalSum::coefficient(const std::string& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

FormalSum fs_combine(const FormalSum& x, const FormalSum& y, int sign) {
  FormalSum out = x;
  out.combine(y, sign);
  return out;
}

}  // namespace sb3

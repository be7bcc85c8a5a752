#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace sb3 {

/// Integer formal sum over canonical string keys. Zero coefficients are never stored.
class FormalSum {
 public:
  using Map = std::map<std::string, std::int64_t>;

  FormalSum() = default;

  void add(const std::string& key, std::int64_t coeff);
  /// this + sign * other
  void combine(const FormalSum& other, int sign = 1);

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coefficient(const std::string& key) const;

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Map terms_;
};

FormalSum fs_combine(const FormalSum& x, const FormalSum& y, int sign);
inline bool fs_eq(const FormalSum& x, const FormalSum& y) { return x == y; }

}  // namespace sb3

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace frobgen {

/// Exponent vector in N^d.
///
/// The natural partial order is componentwise: a <= b iff a_i <= b_i for
/// all i. `operator<` is a plain lexicographic order used only as a
/// container key; it carries no algebraic meaning.
class MultiIndex {
 public:
  using value_type = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : e_(dim, 0) {}
  MultiIndex(std::initializer_list<value_type> e) : e_(e) {}
  explicit MultiIndex(std::vector<value_type> e) : e_(std::move(e)) {}

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const noexcept { return e_[i]; }
  value_type& operator[](std::size_t i) noexcept { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }
  std::span<const value_type> values() const noexcept { return e_; }

  /// |a|, the total degree.
  std::uint64_t total() const noexcept;
  bool is_zero() const noexcept;

  /// Componentwise a <= b.
  bool divides(const MultiIndex& b) const noexcept;
  /// Componentwise a_i < bound for every i.
  bool all_below(std::uint64_t bound) const noexcept;

  /// Componentwise sum; throws ResourceLimit on overflow.
  MultiIndex operator+(const MultiIndex& o) const;
  /// Componentwise difference; requires o <= *this.
  MultiIndex operator-(const MultiIndex& o) const;
  /// Componentwise product by a scalar; throws ResourceLimit on overflow.
  MultiIndex scaled(std::uint64_t factor) const;

  static MultiIndex lcm(const MultiIndex& a, const MultiIndex& b);
  static MultiIndex min(const MultiIndex& a, const MultiIndex& b);
  static bool coprime(const MultiIndex& a, const MultiIndex& b) noexcept;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<value_type> e_;
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : m) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace frobgen

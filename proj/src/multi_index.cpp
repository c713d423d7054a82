#include "frobgen/multi_index.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "frobgen/error.hpp"

namespace frobgen {

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::uint32_t>::max();

void check_dims(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::ContextMismatch, "multi-index dimension mismatch");
  }
}

}  // namespace

std::uint64_t MultiIndex::total() const noexcept {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool MultiIndex::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](auto v) { return v == 0; });
}

bool MultiIndex::divides(const MultiIndex& b) const noexcept {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > b.e_[i]) return false;
  }
  return true;
}

bool MultiIndex::all_below(std::uint64_t bound) const noexcept {
  return std::all_of(e_.begin(), e_.end(), [&](auto v) { return v < bound; });
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  check_dims(*this, o);
  MultiIndex r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    std::uint64_t s = std::uint64_t{e_[i]} + o.e_[i];
    if (s > kMaxExponent) {
      throw Error(ErrorKind::ResourceLimit, "exponent overflow");
    }
    r.e_[i] = static_cast<value_type>(s);
  }
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  check_dims(*this, o);
  MultiIndex r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] = e_[i] - o.e_[i];
  }
  return r;
}

MultiIndex MultiIndex::scaled(std::uint64_t factor) const {
  MultiIndex r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != 0 && factor > kMaxExponent / e_[i]) {
      throw Error(ErrorKind::ResourceLimit, "exponent overflow");
    }
    r.e_[i] = static_cast<value_type>(e_[i] * factor);
  }
  return r;
}

MultiIndex MultiIndex::lcm(const MultiIndex& a, const MultiIndex& b) {
  check_dims(a, b);
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

MultiIndex MultiIndex::min(const MultiIndex& a, const MultiIndex& b) {
  check_dims(a, b);
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
  return r;
}

bool MultiIndex::coprime(const MultiIndex& a, const MultiIndex& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.e_[i] != 0 && b.e_[i] != 0) return false;
  }
  return true;
}

}  // namespace frobgen

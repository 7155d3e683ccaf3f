#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>

#include "awstar/error.hpp"

namespace awstar {

/// Exact cardinal: a natural number or aleph_k for a natural index k.
///
/// Limit alephs and weakly inaccessible cardinals are not representable, so
/// every nonzero infinite value is a successor or aleph_0.
class Cardinal {
 public:
  enum class Tag : std::uint8_t { Finite = 0, Aleph = 1 };

  constexpr Cardinal() = default;

  static constexpr Cardinal finite(std::uint64_t n) { return {Tag::Finite, n}; }
  static constexpr Cardinal aleph(std::uint64_t k) { return {Tag::Aleph, k}; }

  constexpr Tag tag() const { return tag_; }
  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_finite() const { return tag_ == Tag::Finite; }
  constexpr bool is_infinite() const { return tag_ == Tag::Aleph; }
  constexpr bool is_zero() const { return is_finite() && value_ == 0; }

  // Tag first, then value: every finite cardinal lies below every aleph.
  constexpr auto operator<=>(const Cardinal&) const = default;

  std::string str() const {
    return is_finite() ? std::to_string(value_)
                       : "aleph_" + std::to_string(value_);
  }

 private:
  constexpr Cardinal(Tag t, std::uint64_t v) : tag_(t), value_(v) {}

  Tag tag_ = Tag::Finite;
  std::uint64_t value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Cardinal& c) {
  return os << c.str();
}

constexpr Cardinal succ(Cardinal a) {
  return a.is_finite() ? Cardinal::finite(a.value() + 1)
                       : Cardinal::aleph(a.value() + 1);
}

/// Maximum of a nonempty finite list.
inline Cardinal sup(std::span<const Cardinal> s) {
  if (s.empty()) throw InputError("empty supremum");
  return *std::max_element(s.begin(), s.end());
}

/// Least cardinal strictly above every element; 0 for the empty list.
inline Cardinal sup_plus(std::span<const Cardinal> s) {
  return s.empty() ? Cardinal::finite(0) : succ(sup(s));
}

constexpr Cardinal mul(Cardinal a, Cardinal b) {
  if (a.is_finite() && b.is_finite())
    return Cardinal::finite(a.value() * b.value());
  if (a.is_zero() || b.is_zero()) return Cardinal::finite(0);
  return std::max(a, b);
}

constexpr Cardinal add(Cardinal a, Cardinal b) {
  if (a.is_finite() && b.is_finite())
    return Cardinal::finite(a.value() + b.value());
  return std::max(a, b);
}

}  // namespace awstar

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cactus_forge {

// Exact value in steps of 0.5, stored as a count of halves.
class Half {
 public:
  constexpr Half() = default;
  static constexpr Half from_halves(std::int64_t halves) { return Half(halves); }
  static constexpr Half whole(std::int64_t value) { return Half(2 * value); }

  constexpr std::int64_t halves() const { return halves_; }
  constexpr double to_double() const { return static_cast<double>(halves_) / 2.0; }

  constexpr Half operator+(Half o) const { return Half(halves_ + o.halves_); }
  constexpr Half operator-(Half o) const { return Half(halves_ - o.halves_); }
  constexpr Half& operator+=(Half o) { halves_ += o.halves_; return *this; }
  constexpr Half& operator-=(Half o) { halves_ -= o.halves_; return *this; }
  constexpr auto operator<=>(const Half&) const = default;

  std::string str() const {
    std::int64_t whole_part = halves_ / 2;
    bool odd = halves_ % 2 != 0;
    if (!odd) return std::to_string(whole_part);
    if (halves_ < 0 && whole_part == 0) return "-0.5";
    return std::to_string(whole_part) + ".5";
  }

 private:
  constexpr explicit Half(std::int64_t halves) : halves_(halves) {}
  std::int64_t halves_ = 0;
};

}  // namespace cactus_forge

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <variant>

namespace formplan {

/// Minimal expected-style carrier: holds either a value or a typed error.
/// Accessors assert on misuse; callers branch on ok() first.
template <typename T, typename E>
class Result {
public:
  Result(T value) : slot_(std::in_place_index<0>, std::move(value)) {}
  Result(E error) : slot_(std::in_place_index<1>, std::move(error)) {}

  static Result ok(T value) { return Result(std::move(value)); }
  static Result err(E error) { return Result(std::move(error)); }

  bool ok() const { return slot_.index() == 0; }
  explicit operator bool() const { return ok(); }

  T& value() {
    assert(ok());
    return std::get<0>(slot_);
  }
  const T& value() const {
    assert(ok());
    return std::get<0>(slot_);
  }
  E& error() {
    assert(!ok());
    return std::get<1>(slot_);
  }
  const E& error() const {
    assert(!ok());
    return std::get<1>(slot_);
  }

  T value_or(T fallback) const { return ok() ? std::get<0>(slot_) : std::move(fallback); }

private:
  std::variant<T, E> slot_;
};

/// Unit type for Result<Unit, E> when an operation has no payload.
struct Unit {
  bool operator==(const Unit&) const = default;
};

} // namespace formplan

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace skewmorph {

using Element = std::uint32_t;

/// Malformed group description: a factor below 2 or an unparseable literal.
class GroupError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size guard was exceeded. Never silently truncated.
class GuardError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Constructor parameters violate one of the family's side conditions.
/// `condition()` names it, e.g. "(b)".
class ParameterError : public std::invalid_argument {
  public:
    ParameterError(std::string condition, const std::string& what)
        : std::invalid_argument(what), condition_(std::move(condition)) {}
    const std::string& condition() const noexcept { return condition_; }

  private:
    std::string condition_;
};

/// Internal consistency failure: a closed form or a structural identity that
/// must hold did not. Signals a bug (or a genuine counterexample), never bad input.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Why a candidate was refused, with the smallest witness available.
struct Rejection {
    std::string reason;
    std::optional<Element> a;
    std::optional<Element> b;
};

/// Either a value or a Rejection. Rejections are ordinary outcomes (a
/// permutation that is not a skew morphism), not errors.
template <class T>
class Result {
  public:
    Result(T value) : v_(std::move(value)) {}
    Result(Rejection r) : v_(std::move(r)) {}

    bool ok() const noexcept { return v_.index() == 0; }
    explicit operator bool() const noexcept { return ok(); }

    const T& value() const& {
        if (!ok()) throw std::logic_error("Result::value on rejection: " + rejection().reason);
        return std::get<0>(v_);
    }
    T&& value() && {
        if (!ok()) throw std::logic_error("Result::value on rejection: " + rejection().reason);
        return std::get<0>(std::move(v_));
    }
    const T* operator->() const { return &value(); }
    const T& operator*() const& { return value(); }

    const Rejection& rejection() const { return std::get<1>(v_); }

  private:
    std::variant<T, Rejection> v_;
};

}  // namespace skewmorph

#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace ns1d {

/// Thrown whenever a quantity that must stay positive (specific volume or
/// temperature) is found nonpositive or non-finite. Carries the offending
/// field, value, and, when known, the element index and simulation time.
class PositivityViolation : public std::runtime_error {
 public:
  enum class Field { tau, theta };

  static constexpr std::size_t no_element = std::numeric_limits<std::size_t>::max();

  PositivityViolation(Field field, double value,
                      std::size_t element = no_element,
                      double time = std::numeric_limits<double>::quiet_NaN())
      : std::runtime_error(describe(field, value, element, time)),
        field_(field),
        value_(value),
        element_(element),
        time_(time) {}

  Field field() const { return field_; }
  double value() const { return value_; }
  /// Zero-based element index, or no_element when the check was pointwise.
  std::size_t element() const { return element_; }
  double time() const { return time_; }

 private:
  static std::string describe(Field field, double value, std::size_t element,
                              double time) {
    std::string msg = "nonpositive ";
    msg += field == Field::tau ? "tau" : "theta";
    msg += " (= " + std::to_string(value) + ")";
    if (element != no_element) {
      msg += " on element " + std::to_string(element + 1);
    }
    if (time == time) {
      msg += " at t = " + std::to_string(time);
    }
    return msg;
  }

  Field field_;
  double value_;
  std::size_t element_;
  double time_;
};

/// Raised by the time loop when a step cannot be completed within the
/// configured retry budget.
class StepFailure : public std::runtime_error {
 public:
  StepFailure(std::string what, double t, double dt, int retries)
      : std::runtime_error(std::move(what)), t_(t), dt_(dt), retries_(retries) {}

  double t() const { return t_; }
  double dt() const { return dt_; }
  int retries() const { return retries_; }

 private:
  double t_;
  double dt_;
  int retries_;
};

/// Configuration parse or validation failure; the message names the
/// offending key path and the violated constraint.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ns1d

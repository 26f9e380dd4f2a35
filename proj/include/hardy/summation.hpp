#pragma once

#include <cmath>

namespace hardy {

/// Neumaier's variant of Kahan summation. The carried error term also
/// absorbs the case where the incoming value is larger than the running sum.
template <class T = double>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(T initial) : sum_(initial) {}

  CompensatedSum& operator+=(T value) {
    using std::abs;
    const T t = sum_ + value;
    if (abs(sum_) >= abs(value)) {
      err_ += (sum_ - t) + value;
    } else {
      err_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator-=(T value) { return *this += -value; }

  T value() const { return sum_ + err_; }

 private:
  T sum_{0};
  T err_{0};
};

}  // namespace hardy

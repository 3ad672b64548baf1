#pragma once

#include <cmath>

namespace lvg {

// Neumaier's variant of Kahan summation
template <class Real>
class compensated_sum {
public:
    compensated_sum() = default;
    explicit compensated_sum(Real start) : sum_(start) {}

    void add(Real x) {
        using std::abs;
        Real t = sum_ + x;
        if (abs(sum_) >= abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    compensated_sum& operator+=(Real x) {
        add(x);
        return *this;
    }

    Real value() const { return sum_ + comp_; }

    void scale(Real f) {
        sum_ *= f;
        comp_ *= f;
    }

private:
    Real sum_{};
    Real comp_{};
};

} // namespace lvg

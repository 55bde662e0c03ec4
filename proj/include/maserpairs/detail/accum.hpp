#ifndef MASERPAIRS_DETAIL_ACCUM_HPP
#define MASERPAIRS_DETAIL_ACCUM_HPP

#include <cmath>

namespace maserpairs::detail {

// Neumaier-compensated accumulator. Probability and trace reductions have to
// hold 1e-12..1e-14 tolerances over up to ~1e4 terms, which plain summation
// does not guarantee.
class NeumaierSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace maserpairs::detail

#endif

#ifndef LDMAX_BOREL_SET_HPP
#define LDMAX_BOREL_SET_HPP

#include <limits>
#include <vector>

namespace ldmax {

struct Interval {
    double low = 1.0;
    double high = std::numeric_limits<double>::infinity();
    bool low_closed = false;
    bool high_closed = false;

    bool is_null() const { return low == high; }
    bool operator==(const Interval&) const = default;
};

// A finite union of intervals inside [1, infinity), the set A of the LDP.
// Construction normalizes: sorts, merges overlapping pieces, keeps degenerate
// single points as Lebesgue-null members.
class BorelSubset {
public:
    BorelSubset() = default;
    explicit BorelSubset(std::vector<Interval> intervals);

    const std::vector<Interval>& intervals() const noexcept { return intervals_; }

    // True when the whole set has Lebesgue measure zero.
    bool is_null() const;

    bool contains(double x) const;

    bool operator==(const BorelSubset&) const = default;

private:
    std::vector<Interval> intervals_;
};

// ln of the smallest left endpoint among positive-length intervals;
// +infinity when A is Lebesgue-null.
double essential_infimum(const BorelSubset& a);

} // namespace ldmax

#endif

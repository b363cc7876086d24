#include "ldmax/borel_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ldmax {

BorelSubset::BorelSubset(std::vector<Interval> intervals) {
    for (const auto& iv : intervals) {
        if (std::isnan(iv.low) || std::isnan(iv.high))
            throw std::domain_error("interval endpoints must not be NaN");
        if (!(iv.low >= 1.0))
            throw std::domain_error("intervals must lie inside [1, inf)");
        if (!(iv.low <= iv.high))
            throw std::domain_error("interval has low > high");
        if (iv.is_null() && !(iv.low_closed && iv.high_closed))
            throw std::domain_error("degenerate interval must be closed");
    }
    std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
        if (a.low != b.low) return a.low < b.low;
        return a.high < b.high;
    });
    for (const auto& iv : intervals) {
        if (intervals_.empty()) {
            intervals_.push_back(iv);
            continue;
        }
        Interval& last = intervals_.back();
        const bool overlaps = iv.low < last.high
            || (iv.low == last.high && (iv.low_closed || last.high_closed));
        if (overlaps) {
            if (iv.high > last.high) {
                last.high = iv.high;
                last.high_closed = iv.high_closed;
            } else if (iv.high == last.high) {
                last.high_closed = last.high_closed || iv.high_closed;
            }
            if (iv.low == last.low) last.low_closed = last.low_closed || iv.low_closed;
        } else {
            intervals_.push_back(iv);
        }
    }
}

bool BorelSubset::is_null() const {
    return std::all_of(intervals_.begin(), intervals_.end(),
                       [](const Interval& iv) { return iv.is_null(); });
}

bool BorelSubset::contains(double x) const {
    for (const auto& iv : intervals_) {
        const bool above_low = iv.low_closed ? x >= iv.low : x > iv.low;
        const bool below_high = iv.high_closed ? x <= iv.high : x < iv.high;
        if (above_low && below_high) return true;
    }
    return false;
}

double essential_infimum(const BorelSubset& a) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& iv : a.intervals())
        if (!iv.is_null()) best = std::min(best, iv.low);
    return std::log(best);
}

} // namespace ldmax

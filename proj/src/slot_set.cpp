#include "eonsp/slot_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "eonsp/errors.hpp"

namespace eonsp {

SlotSet::SlotSet(std::vector<Interval> intervals)
{
    std::erase_if(intervals, [](const Interval& iv) { return iv.lo >= iv.hi; });
    std::sort(intervals.begin(), intervals.end());
    for (const Interval& iv : intervals) {
        if (!intervals_.empty() && iv.lo <= intervals_.back().hi)
            intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
        else
            intervals_.push_back(iv);
    }
}

SlotSet SlotSet::full(int units)
{
    SlotSet s;
    if (units > 0)
        s.intervals_.push_back({0, units});
    return s;
}

int SlotSet::count() const
{
    int total = 0;
    for (const Interval& iv : intervals_)
        total += iv.width();
    return total;
}

bool SlotSet::contains_unit(int unit) const
{
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), unit,
                               [](int u, const Interval& iv) { return u < iv.lo; });
    return it != intervals_.begin() && unit < std::prev(it)->hi;
}

bool SlotSet::contains_window(const Window& w) const
{
    if (w.width <= 0)
        return false;
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), w.start,
                               [](int u, const Interval& iv) { return u < iv.lo; });
    return it != intervals_.begin() && std::prev(it)->lo <= w.start
        && w.end() <= std::prev(it)->hi;
}

SlotSet SlotSet::intersect(const SlotSet& other) const
{
    SlotSet out;
    auto a = intervals_.begin();
    auto b = other.intervals_.begin();
    while (a != intervals_.end() && b != other.intervals_.end()) {
        const int lo = std::max(a->lo, b->lo);
        const int hi = std::min(a->hi, b->hi);
        if (lo < hi)
            out.intervals_.push_back({lo, hi});
        if (a->hi < b->hi)
            ++a;
        else
            ++b;
    }
    return out;
}

SlotSet SlotSet::subtract(const Window& w) const
{
    if (!contains_window(w))
        throw WindowNotContained("subtract: window " + std::to_string(w.start) + "+"
                                 + std::to_string(w.width) + " not contained in " + to_string());
    SlotSet out;
    out.intervals_.reserve(intervals_.size() + 1);
    for (const Interval& iv : intervals_) {
        if (w.start >= iv.hi || w.end() <= iv.lo) {
            out.intervals_.push_back(iv);
            continue;
        }
        if (iv.lo < w.start)
            out.intervals_.push_back({iv.lo, w.start});
        if (w.end() < iv.hi)
            out.intervals_.push_back({w.end(), iv.hi});
    }
    return out;
}

SlotSet SlotSet::constrict(int min_width) const
{
    SlotSet out;
    for (const Interval& iv : intervals_)
        if (iv.width() >= min_width)
            out.intervals_.push_back(iv);
    return out;
}

std::optional<Window> SlotSet::first_fit(int width) const
{
    for (const Interval& iv : intervals_)
        if (iv.width() >= width)
            return Window{iv.lo, width};
    return std::nullopt;
}

std::optional<Window> SlotSet::last_fit(int width) const
{
    for (auto it = intervals_.rbegin(); it != intervals_.rend(); ++it)
        if (it->width() >= width)
            return Window{it->hi - width, width};
    return std::nullopt;
}

bool SlotSet::is_superset(const SlotSet& other) const
{
    auto a = intervals_.begin();
    for (const Interval& b : other.intervals_) {
        while (a != intervals_.end() && a->hi < b.hi)
            ++a;
        if (a == intervals_.end() || a->lo > b.lo || b.hi > a->hi)
            return false;
    }
    return true;
}

std::string SlotSet::to_string() const
{
    if (intervals_.empty())
        return "-";
    std::string out;
    for (const Interval& iv : intervals_) {
        if (!out.empty())
            out += ',';
        out += std::to_string(iv.lo);
        out += '-';
        out += std::to_string(iv.hi);
    }
    return out;
}

SlotSet SlotSet::from_string(const std::string& text)
{
    if (text == "-" || text.empty())
        return {};
    std::vector<Interval> ivs;
    const char* p = text.data();
    const char* end = text.data() + text.size();
    while (p < end) {
        Interval iv;
        auto r1 = std::from_chars(p, end, iv.lo);
        if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != '-')
            throw ParseError("slot set: expected 'lo-hi' in '" + text + "'");
        auto r2 = std::from_chars(r1.ptr + 1, end, iv.hi);
        if (r2.ec != std::errc{} || iv.lo >= iv.hi)
            throw ParseError("slot set: bad interval in '" + text + "'");
        ivs.push_back(iv);
        p = r2.ptr;
        if (p < end) {
            if (*p != ',')
                throw ParseError("slot set: expected ',' in '" + text + "'");
            ++p;
        }
    }
    SlotSet out{std::move(ivs)};
    return out;
}

} // namespace eonsp

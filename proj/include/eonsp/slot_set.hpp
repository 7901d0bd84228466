#ifndef EONSP_SLOT_SET_HPP
#define EONSP_SLOT_SET_HPP

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eonsp {

// A contiguous block of spectrum units [start, start + width).
struct Window {
    int start = 0;
    int width = 0;

    int end() const { return start + width; }
    auto operator<=>(const Window&) const = default;
};

// Set of spectrum units kept as disjoint half-open intervals [lo, hi),
// sorted and merged so that the representation of a set is unique
// (hi_i < lo_{i+1} for consecutive intervals). All operations preserve
// canonical form; values are immutable once built.
class SlotSet {
public:
    struct Interval {
        int lo = 0;
        int hi = 0;

        int width() const { return hi - lo; }
        auto operator<=>(const Interval&) const = default;
    };

    SlotSet() = default;
    SlotSet(std::initializer_list<Interval> intervals)
        : SlotSet(std::vector<Interval>(intervals))
    {
    }
    // Canonicalizes arbitrary interval input: sorts, drops empty intervals,
    // merges overlapping and touching ones.
    explicit SlotSet(std::vector<Interval> intervals);

    // The full set [0, units).
    static SlotSet full(int units);

    bool empty() const { return intervals_.empty(); }
    int count() const; // total units
    const std::vector<Interval>& intervals() const { return intervals_; }

    bool contains_unit(int unit) const;

    // True iff one interval fully covers the window. Because the set is
    // canonical this is the same as "every unit of the window is present".
    bool contains_window(const Window& w) const;

    // Units present in both sets; single linear merge.
    SlotSet intersect(const SlotSet& other) const;

    // Removes the window's units. Throws WindowNotContained unless the
    // window lies fully inside the set.
    SlotSet subtract(const Window& w) const;

    // Keeps only intervals at least min_width wide.
    SlotSet constrict(int min_width) const;

    // Lowest-start window of the given width, or nullopt.
    std::optional<Window> first_fit(int width) const;

    // Highest-start window of the given width, or nullopt. Verification
    // hook only (mutation runs); production policy is first_fit.
    std::optional<Window> last_fit(int width) const;

    // True iff every unit of other is present here.
    bool is_superset(const SlotSet& other) const;

    // "lo-hi,lo-hi" with half-open bounds; "-" for the empty set.
    std::string to_string() const;
    static SlotSet from_string(const std::string& text);

    // Lexicographic over the interval list; the unique canonical form makes
    // this a total order on set values.
    auto operator<=>(const SlotSet&) const = default;

private:
    std::vector<Interval> intervals_;
};

} // namespace eonsp

#endif

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ivbounds/rational.hpp"

namespace ivbounds {

inline constexpr int kNumCells = 4;
inline constexpr int kNumEvents = 16;
inline constexpr int kNumResponseTypes = 16;
inline constexpr int kNumObservedCells = 8;

/// A pair (y0, y1) of potential outcomes. Canonical index is 2*y0 + y1.
class OutcomeCell {
public:
    OutcomeCell(int y0, int y1);
    static OutcomeCell from_index(int index);

    int y0() const noexcept { return y0_; }
    int y1() const noexcept { return y1_; }
    int index() const noexcept { return 2 * y0_ + y1_; }

    /// The two digits "y0y1", e.g. "01".
    std::string label() const;

    auto operator<=>(const OutcomeCell&) const = default;

private:
    int y0_;
    int y1_;
};

/// Subset of {0,1}^2, stored as a 4-bit mask where bit k marks the cell with index k.
class Event {
public:
    constexpr Event() noexcept = default;
    Event(std::initializer_list<OutcomeCell> cells);
    explicit Event(const std::vector<OutcomeCell>& cells);

    static Event from_mask(unsigned mask);
    static constexpr Event empty() noexcept { return Event{}; }
    static Event full() noexcept { return from_mask(0xF); }
    static Event singleton(int y0, int y1) { return Event{OutcomeCell(y0, y1)}; }

    /// Parse the command-line form: comma-separated "y0y1" cells ("01,10"); "" or "none" is empty, "all" is full.
    static Event parse(std::string_view text);

    unsigned mask() const noexcept { return mask_; }
    bool contains(const OutcomeCell& cell) const noexcept { return (mask_ >> cell.index()) & 1U; }
    int size() const noexcept;
    bool is_empty() const noexcept { return mask_ == 0; }
    bool is_subset_of(const Event& other) const noexcept { return (mask_ & ~other.mask_) == 0; }
    bool is_disjoint_from(const Event& other) const noexcept { return (mask_ & other.mask_) == 0; }

    /// Member cells in canonical index order.
    std::vector<OutcomeCell> cells() const;
    std::string label() const;

    Event operator|(const Event& other) const noexcept { return Event(mask_ | other.mask_); }
    Event operator&(const Event& other) const noexcept { return Event(mask_ & other.mask_); }

    auto operator<=>(const Event&) const = default;

private:
    explicit constexpr Event(unsigned mask) noexcept : mask_(mask & 0xFU) {}
    unsigned mask_ = 0;
};

Event complement(const Event& event) noexcept;

/// All 16 events in mask order.
std::array<Event, kNumEvents> all_events();

/// A response type w = (y0, y1, d0, d1). Canonical index is 8*y0 + 4*y1 + 2*d0 + d1.
class ResponseType {
public:
    ResponseType(int y0, int y1, int d0, int d1);
    static ResponseType from_index(int index);

    int y0() const noexcept { return y0_; }
    int y1() const noexcept { return y1_; }
    int d0() const noexcept { return d0_; }
    int d1() const noexcept { return d1_; }
    int index() const noexcept { return 8 * y0_ + 4 * y1_ + 2 * d0_ + d1_; }

    /// Potential outcome under treatment d.
    int outcome(int d) const noexcept { return d == 0 ? y0_ : y1_; }
    /// Treatment received when the instrument equals z.
    int treatment(int z) const noexcept { return z == 0 ? d0_ : d1_; }
    /// Observed outcome when the instrument equals z.
    int observed_outcome(int z) const noexcept { return outcome(treatment(z)); }

    bool is_defier() const noexcept { return d0_ == 1 && d1_ == 0; }
    OutcomeCell outcome_cell() const { return OutcomeCell(y0_, y1_); }
    std::string label() const;

    auto operator<=>(const ResponseType&) const = default;

private:
    int y0_;
    int y1_;
    int d0_;
    int d1_;
};

std::array<ResponseType, kNumResponseTypes> all_response_types();

/// One observable cell (Y = y, D = d | Z = z). Index is 4*z + 2*d + y.
struct ObservedCell {
    int y;
    int d;
    int z;

    int index() const noexcept { return 4 * z + 2 * d + y; }
    static ObservedCell from_index(int index) noexcept { return {index & 1, (index >> 1) & 1, (index >> 2) & 1}; }
    /// "y0d1|z0" style label.
    std::string label() const;

    auto operator<=>(const ObservedCell&) const = default;
};

/// The eight conditional probabilities P(Y=y, D=d | Z=z). Always validated.
class DataDistribution {
public:
    /// Validate and build from values indexed by ObservedCell::index().
    static DataDistribution from_table(const std::array<Rational, kNumObservedCells>& values);

    /**
     * Convenience constructor. Each list is ordered (y,d) = (0,0), (1,0), (0,1), (1,1),
     * i.e. P_{0,0|z}, P_{1,0|z}, P_{0,1|z}, P_{1,1|z}.
     */
    static DataDistribution from_conditionals(const std::array<Rational, 4>& given_z0,
                                              const std::array<Rational, 4>& given_z1);

    const Rational& operator()(int y, int d, int z) const { return values_[ObservedCell{y, d, z}.index()]; }
    const Rational& at(const ObservedCell& cell) const { return values_[cell.index()]; }
    const std::array<Rational, kNumObservedCells>& values() const noexcept { return values_; }

    /// P(D = d | Z = z).
    Rational treatment_probability(int d, int z) const;

    bool operator==(const DataDistribution&) const = default;

private:
    explicit DataDistribution(const std::array<Rational, kNumObservedCells>& values) : values_(values) {}
    std::array<Rational, kNumObservedCells> values_;
};

/// Labels are ObservedCell labels ("y0d0|z0", ...); values are rational or decimal strings.
using RawDistribution = std::map<std::string, std::string>;

DataDistribution parse_data_distribution(const RawDistribution& raw);

/// A probability mass function over the 16 response types, in canonical order.
class MassFunction {
public:
    /// Validate (entries in [0,1], exact sum 1) and build.
    static MassFunction from_values(const std::array<Rational, kNumResponseTypes>& values);
    static MassFunction point_mass(const ResponseType& type);
    static MassFunction uniform();

    const Rational& operator[](const ResponseType& type) const { return values_[type.index()]; }
    const Rational& operator[](int index) const { return values_[index]; }
    const std::array<Rational, kNumResponseTypes>& values() const noexcept { return values_; }

    Rational defier_mass() const;

    bool operator==(const MassFunction&) const = default;

private:
    explicit MassFunction(const std::array<Rational, kNumResponseTypes>& values) : values_(values) {}
    std::array<Rational, kNumResponseTypes> values_;
};

/// Closed interval [lo, hi] with 0 <= lo <= hi <= 1.
class Interval {
public:
    Interval() = default;  // [0, 0]
    Interval(Rational lo, Rational hi);

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    bool contains(const Rational& t) const { return lo_ <= t && t <= hi_; }
    /// True when this interval is a subset of `outer` and differs from it.
    bool strictly_inside(const Interval& outer) const;

    bool operator==(const Interval&) const = default;

private:
    Rational lo_;
    Rational hi_;
};

enum class AssumptionSet { ExogeneityOnly, ExogeneityPlusMonotonicity };

inline constexpr std::array<AssumptionSet, 2> kAssumptionSets{AssumptionSet::ExogeneityOnly,
                                                              AssumptionSet::ExogeneityPlusMonotonicity};

/// "E" or "EM".
std::string to_string(AssumptionSet assumptions);
/// Accepts "E"/"EM" (case-insensitive) and the long names.
AssumptionSet parse_assumption_set(std::string_view text);

/// Response types compatible with observing (Y=y, D=d) at Z=z, in canonical order.
std::vector<ResponseType> response_types_for_cell(int y, int d, int z);

/// Response types whose (y0, y1) lies in the event, in canonical order.
std::vector<ResponseType> response_types_for_event(const Event& event);

/// Distribution of the observables induced by a mass function over response types.
DataDistribution push_forward(const MassFunction& q);

}  // namespace ivbounds

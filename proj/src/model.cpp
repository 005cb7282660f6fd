#include "ivbounds/model.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "ivbounds/errors.hpp"

namespace ivbounds {

namespace {

int require_bit(int value, const char* name) {
    if (value != 0 && value != 1) {
        throw std::invalid_argument(std::string(name) + " must be 0 or 1");
    }
    return value;
}

}  // namespace

// ---------------------------------------------------------------- OutcomeCell

OutcomeCell::OutcomeCell(int y0, int y1) : y0_(require_bit(y0, "y0")), y1_(require_bit(y1, "y1")) {}

OutcomeCell OutcomeCell::from_index(int index) {
    if (index < 0 || index >= kNumCells) throw std::out_of_range("outcome cell index");
    return OutcomeCell(index >> 1, index & 1);
}

std::string OutcomeCell::label() const {
    return std::to_string(y0_) + std::to_string(y1_);
}

// ---------------------------------------------------------------------- Event

Event::Event(std::initializer_list<OutcomeCell> cells) {
    for (const auto& c : cells) mask_ |= 1U << c.index();
}

Event::Event(const std::vector<OutcomeCell>& cells) {
    for (const auto& c : cells) mask_ |= 1U << c.index();
}

Event Event::from_mask(unsigned mask) {
    if (mask > 0xFU) throw std::out_of_range("event mask must fit in 4 bits");
    return Event(mask);
}

Event Event::parse(std::string_view text) {
    std::string lowered;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) lowered += static_cast<char>(std::tolower(c));
    }
    if (lowered.empty() || lowered == "none" || lowered == "empty") return Event::empty();
    if (lowered == "all" || lowered == "full") return Event::full();

    unsigned mask = 0;
    std::size_t start = 0;
    while (start <= lowered.size()) {
        auto end = lowered.find(',', start);
        if (end == std::string::npos) end = lowered.size();
        auto token = lowered.substr(start, end - start);
        if (token.size() != 2 || (token[0] != '0' && token[0] != '1') || (token[1] != '0' && token[1] != '1')) {
            throw std::invalid_argument("event cell '" + token + "' must be two binary digits y0y1");
        }
        mask |= 1U << OutcomeCell(token[0] - '0', token[1] - '0').index();
        start = end + 1;
    }
    return Event(mask);
}

int Event::size() const noexcept {
    return std::popcount(mask_);
}

std::vector<OutcomeCell> Event::cells() const {
    std::vector<OutcomeCell> out;
    for (int k = 0; k < kNumCells; ++k) {
        if ((mask_ >> k) & 1U) out.push_back(OutcomeCell::from_index(k));
    }
    return out;
}

std::string Event::label() const {
    if (mask_ == 0) return "{}";
    std::string out = "{";
    bool first = true;
    for (const auto& c : cells()) {
        if (!first) out += ",";
        out += "(" + std::to_string(c.y0()) + "," + std::to_string(c.y1()) + ")";
        first = false;
    }
    return out + "}";
}

Event complement(const Event& event) noexcept {
    return Event::from_mask(~event.mask() & 0xFU);
}

std::array<Event, kNumEvents> all_events() {
    std::array<Event, kNumEvents> out;
    for (unsigned m = 0; m < kNumEvents; ++m) out[m] = Event::from_mask(m);
    return out;
}

// --------------------------------------------------------------- ResponseType

ResponseType::ResponseType(int y0, int y1, int d0, int d1)
    : y0_(require_bit(y0, "y0")), y1_(require_bit(y1, "y1")), d0_(require_bit(d0, "d0")), d1_(require_bit(d1, "d1")) {}

ResponseType ResponseType::from_index(int index) {
    if (index < 0 || index >= kNumResponseTypes) throw std::out_of_range("response type index");
    return ResponseType((index >> 3) & 1, (index >> 2) & 1, (index >> 1) & 1, index & 1);
}

std::string ResponseType::label() const {
    return std::to_string(y0_) + std::to_string(y1_) + std::to_string(d0_) + std::to_string(d1_);
}

std::array<ResponseType, kNumResponseTypes> all_response_types() {
    std::array<ResponseType, kNumResponseTypes> out{
        ResponseType(0, 0, 0, 0), ResponseType(0, 0, 0, 1), ResponseType(0, 0, 1, 0), ResponseType(0, 0, 1, 1),
        ResponseType(0, 1, 0, 0), ResponseType(0, 1, 0, 1), ResponseType(0, 1, 1, 0), ResponseType(0, 1, 1, 1),
        ResponseType(1, 0, 0, 0), ResponseType(1, 0, 0, 1), ResponseType(1, 0, 1, 0), ResponseType(1, 0, 1, 1),
        ResponseType(1, 1, 0, 0), ResponseType(1, 1, 0, 1), ResponseType(1, 1, 1, 0), ResponseType(1, 1, 1, 1),
    };
    return out;
}

std::string ObservedCell::label() const {
    return "y" + std::to_string(y) + "d" + std::to_string(d) + "|z" + std::to_string(z);
}

// ----------------------------------------------------------- DataDistribution

DataDistribution DataDistribution::from_table(const std::array<Rational, kNumObservedCells>& values) {
    for (int i = 0; i < kNumObservedCells; ++i) {
        auto cell = ObservedCell::from_index(i);
        if (values[i] < 0) {
            throw ValidationError(ValidationKind::NegativeEntry,
                                  "P(" + cell.label() + ") = " + to_string(values[i]) + " is negative", cell.z);
        }
        if (values[i] > 1) {
            throw ValidationError(ValidationKind::EntryAboveOne,
                                  "P(" + cell.label() + ") = " + to_string(values[i]) + " exceeds 1", cell.z);
        }
    }
    for (int z = 0; z < 2; ++z) {
        Rational sum = 0;
        for (int d = 0; d < 2; ++d) {
            for (int y = 0; y < 2; ++y) sum += values[ObservedCell{y, d, z}.index()];
        }
        if (sum != 1) {
            throw ValidationError(ValidationKind::ConditionalSumNotOne,
                                  "probabilities given z=" + std::to_string(z) + " sum to " + to_string(sum) +
                                      ", not 1",
                                  z);
        }
    }
    return DataDistribution(values);
}

DataDistribution DataDistribution::from_conditionals(const std::array<Rational, 4>& given_z0,
                                                     const std::array<Rational, 4>& given_z1) {
    std::array<Rational, kNumObservedCells> table;
    for (int k = 0; k < 4; ++k) {
        // k runs over (y,d) = (0,0), (1,0), (0,1), (1,1), i.e. k = 2*d + y
        table[ObservedCell{k & 1, k >> 1, 0}.index()] = given_z0[k];
        table[ObservedCell{k & 1, k >> 1, 1}.index()] = given_z1[k];
    }
    return from_table(table);
}

Rational DataDistribution::treatment_probability(int d, int z) const {
    return (*this)(0, d, z) + (*this)(1, d, z);
}

DataDistribution parse_data_distribution(const RawDistribution& raw) {
    for (const auto& [label, value] : raw) {
        bool known = false;
        for (int i = 0; i < kNumObservedCells; ++i) known = known || ObservedCell::from_index(i).label() == label;
        if (!known) throw ValidationError(ValidationKind::UnknownEntry, "unknown cell label '" + label + "'");
    }
    std::array<Rational, kNumObservedCells> table;
    for (int i = 0; i < kNumObservedCells; ++i) {
        auto cell = ObservedCell::from_index(i);
        auto it = raw.find(cell.label());
        if (it == raw.end()) {
            throw ValidationError(ValidationKind::MissingEntry, "missing P(" + cell.label() + ")", cell.z);
        }
        table[i] = parse_rational(it->second);
    }
    return DataDistribution::from_table(table);
}

// --------------------------------------------------------------- MassFunction

MassFunction MassFunction::from_values(const std::array<Rational, kNumResponseTypes>& values) {
    Rational sum = 0;
    for (int i = 0; i < kNumResponseTypes; ++i) {
        if (values[i] < 0) {
            throw ValidationError(ValidationKind::NegativeEntry,
                                  "Q(" + ResponseType::from_index(i).label() + ") is negative");
        }
        if (values[i] > 1) {
            throw ValidationError(ValidationKind::EntryAboveOne,
                                  "Q(" + ResponseType::from_index(i).label() + ") exceeds 1");
        }
        sum += values[i];
    }
    if (sum != 1) {
        throw ValidationError(ValidationKind::ConditionalSumNotOne, "mass function sums to " + to_string(sum));
    }
    return MassFunction(values);
}

MassFunction MassFunction::point_mass(const ResponseType& type) {
    std::array<Rational, kNumResponseTypes> values;
    values[type.index()] = 1;
    return MassFunction(values);
}

MassFunction MassFunction::uniform() {
    std::array<Rational, kNumResponseTypes> values;
    values.fill(Rational(1, kNumResponseTypes));
    return MassFunction(values);
}

Rational MassFunction::defier_mass() const {
    Rational sum = 0;
    for (const auto& w : all_response_types()) {
        if (w.is_defier()) sum += values_[w.index()];
    }
    return sum;
}

// ------------------------------------------------------------------- Interval

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ < 0 || hi_ > 1 || lo_ > hi_) {
        throw std::invalid_argument("invalid probability interval [" + to_string(lo_) + ", " + to_string(hi_) + "]");
    }
}

bool Interval::strictly_inside(const Interval& outer) const {
    return outer.lo_ <= lo_ && hi_ <= outer.hi_ && (outer.lo_ < lo_ || hi_ < outer.hi_);
}

// -------------------------------------------------------------- AssumptionSet

std::string to_string(AssumptionSet assumptions) {
    return assumptions == AssumptionSet::ExogeneityOnly ? "E" : "EM";
}

AssumptionSet parse_assumption_set(std::string_view text) {
    std::string lowered;
    for (char c : text) lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lowered == "e" || lowered == "exogeneity" || lowered == "exogeneityonly") return AssumptionSet::ExogeneityOnly;
    if (lowered == "em" || lowered == "exogeneity+monotonicity" || lowered == "exogeneityplusmonotonicity") {
        return AssumptionSet::ExogeneityPlusMonotonicity;
    }
    throw std::invalid_argument("unknown assumption set '" + std::string(text) + "' (expected E or EM)");
}

// ----------------------------------------------------------------- operations

std::vector<ResponseType> response_types_for_cell(int y, int d, int z) {
    require_bit(y, "y");
    require_bit(d, "d");
    require_bit(z, "z");
    std::vector<ResponseType> out;
    for (const auto& w : all_response_types()) {
        if (w.treatment(z) == d && w.outcome(d) == y) out.push_back(w);
    }
    return out;
}

std::vector<ResponseType> response_types_for_event(const Event& event) {
    std::vector<ResponseType> out;
    for (const auto& w : all_response_types()) {
        if (event.contains(w.outcome_cell())) out.push_back(w);
    }
    return out;
}

DataDistribution push_forward(const MassFunction& q) {
    std::array<Rational, kNumObservedCells> table;
    for (const auto& w : all_response_types()) {
        for (int z = 0; z < 2; ++z) {
            table[ObservedCell{w.observed_outcome(z), w.treatment(z), z}.index()] += q[w];
        }
    }
    return DataDistribution::from_table(table);
}

}  // namespace ivbounds

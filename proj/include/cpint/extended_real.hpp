#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cpint {

/// Raised for inputs that violate an operation's contract.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a product or convolution would exceed the degree budget.
class DegreeOverflow : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A point of the extended real line. Infinities are a tag, never a double.
class ExtendedReal {
public:
    enum class Kind { NegInf, Finite, PosInf };

    constexpr ExtendedReal(double v = 0.0) : kind_(Kind::Finite), value_(v) {} // NOLINT(implicit)

    static constexpr ExtendedReal neg_inf() { return ExtendedReal(Kind::NegInf); }
    static constexpr ExtendedReal pos_inf() { return ExtendedReal(Kind::PosInf); }

    [[nodiscard]] constexpr Kind kind() const { return kind_; }
    [[nodiscard]] constexpr bool is_finite() const { return kind_ == Kind::Finite; }
    [[nodiscard]] constexpr double value() const { return value_; }

    /// Parses "-inf", "inf", "+inf" or a decimal literal.
    static ExtendedReal parse(std::string_view text) {
        if (text == "-inf") return neg_inf();
        if (text == "inf" || text == "+inf") return pos_inf();
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(std::string(text), &used);
        } catch (const std::exception&) {
            throw InputError("not an extended real: '" + std::string(text) + "'");
        }
        if (used != text.size() || !std::isfinite(v))
            throw InputError("not an extended real: '" + std::string(text) + "'");
        return ExtendedReal(v);
    }

    friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }

private:
    constexpr explicit ExtendedReal(Kind k) : kind_(k), value_(0.0) {}

    Kind kind_;
    double value_;
};

} // namespace cpint

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace pmseq {

/// Exact rational number. All step-function jump locations and values are
/// kept as rationals so that order comparisons (e.g. h(r) > 1-r) are exact.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Exact conversion: every finite binary64 value is a dyadic rational.
inline Rat rat_from_double(double x) {
    if (std::isnan(x) || std::isinf(x)) {
        throw std::invalid_argument("rat_from_double: non-finite input");
    }
    return Rat(x);
}

inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// A point of the extended real line [-inf, +inf].
class ExtReal {
public:
    ExtReal() : tag_(Tag::Finite), value_(0) {}
    ExtReal(Rat v) : tag_(Tag::Finite), value_(std::move(v)) {}
    ExtReal(int v) : tag_(Tag::Finite), value_(v) {}

    static ExtReal neg_inf() { return ExtReal(Tag::NegInf); }
    static ExtReal pos_inf() { return ExtReal(Tag::PosInf); }

    /// Maps +-HUGE_VAL to the infinities, finite doubles exactly.
    static ExtReal from_double(double x) {
        if (std::isnan(x)) throw std::invalid_argument("ExtReal: NaN");
        if (std::isinf(x)) return x > 0 ? pos_inf() : neg_inf();
        return ExtReal(rat_from_double(x));
    }

    bool is_finite() const { return tag_ == Tag::Finite; }
    bool is_neg_inf() const { return tag_ == Tag::NegInf; }
    bool is_pos_inf() const { return tag_ == Tag::PosInf; }

    const Rat& value() const {
        if (!is_finite()) throw std::logic_error("ExtReal: value() on infinity");
        return value_;
    }

    double to_double() const {
        if (is_neg_inf()) return -HUGE_VAL;
        if (is_pos_inf()) return HUGE_VAL;
        return pmseq::to_double(value_);
    }

    std::string str() const {
        if (is_neg_inf()) return "-inf";
        if (is_pos_inf()) return "inf";
        return rat_str(value_);
    }

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        if (a.tag_ != b.tag_) return false;
        return a.tag_ != Tag::Finite || a.value_ == b.value_;
    }
    friend bool operator<(const ExtReal& a, const ExtReal& b) {
        if (a.tag_ == Tag::NegInf) return b.tag_ != Tag::NegInf;
        if (a.tag_ == Tag::PosInf) return false;
        if (b.tag_ == Tag::NegInf) return false;
        if (b.tag_ == Tag::PosInf) return true;
        return a.value_ < b.value_;
    }
    friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }
    friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
    friend bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

private:
    enum class Tag { NegInf, Finite, PosInf };
    explicit ExtReal(Tag t) : tag_(t), value_(0) {}
    Tag tag_;
    Rat value_;
};

}  // namespace pmseq

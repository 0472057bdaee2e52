#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace apollodom {

using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative dyadic rational: numerator / 2^exponent, kept in lowest
/// terms (numerator odd unless the exponent is zero; zero is 0/2^0). This is
/// the only number type domination weights are computed in, so the predicate
/// "weight >= 1" is always an exact integer comparison.
class DyadicWeight {
public:
    DyadicWeight() = default; // zero

    DyadicWeight(BigInt numerator, unsigned exponent) : num_(std::move(numerator)), exp_(exponent) {
        if (num_ < 0) throw std::invalid_argument("DyadicWeight: negative numerator");
        canonicalize();
    }

    static DyadicWeight zero() { return {}; }
    static DyadicWeight one() { return {1, 0}; }

    /// The weight a set member at hop distance d contributes: 1/2^(d-1).
    /// At d = 0 (the member itself) that is 2.
    static DyadicWeight distance_term(std::uint32_t d) {
        if (d == 0) return {2, 0};
        return {1, d - 1};
    }

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }
    bool is_zero() const { return num_ == 0; }

    DyadicWeight& operator+=(const DyadicWeight& o) {
        if (o.num_ == 0) return *this;
        if (num_ == 0) {
            *this = o;
            return *this;
        }
        if (exp_ >= o.exp_) {
            num_ += o.num_ << (exp_ - o.exp_);
        } else {
            num_ = (num_ << (o.exp_ - exp_)) + o.num_;
            exp_ = o.exp_;
        }
        canonicalize();
        return *this;
    }

    friend DyadicWeight operator+(DyadicWeight a, const DyadicWeight& b) {
        a += b;
        return a;
    }

    friend bool operator==(const DyadicWeight& a, const DyadicWeight& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }

    friend std::strong_ordering operator<=>(const DyadicWeight& a, const DyadicWeight& b) {
        // a/2^p vs b/2^q  <=>  a*2^q vs b*2^p, aligned on the larger exponent
        const unsigned e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        const BigInt lhs = a.num_ << (e - a.exp_);
        const BigInt rhs = b.num_ << (e - b.exp_);
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool at_least_one() const { return num_ >= (BigInt(1) << exp_); }

    /// Exact decimal rendering; dyadic fractions always terminate.
    std::string to_decimal_string() const {
        if (exp_ == 0) return num_.str();
        const BigInt ipart = num_ >> exp_;
        BigInt frac = num_ - (ipart << exp_);
        BigInt five = 1;
        for (unsigned i = 0; i < exp_; ++i) five *= 5;
        frac *= five;
        std::string digits = frac.str();
        if (digits.size() < exp_) digits.insert(0, exp_ - digits.size(), '0');
        return ipart.str() + "." + digits;
    }

    /// "num/2^exp" form, handy in logs and CSV.
    std::string to_fraction_string() const {
        if (exp_ == 0) return num_.str();
        return num_.str() + "/2^" + std::to_string(exp_);
    }

private:
    void canonicalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
    }

    BigInt num_ = 0;
    unsigned exp_ = 0;
};

} // namespace apollodom

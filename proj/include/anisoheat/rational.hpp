#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace anisoheat {

// Exact rational on int64, always kept in lowest terms with positive
// denominator. Covers weighted degrees and homogeneous orders; magnitudes
// stay tiny so overflow checks are not needed beyond the gcd reduction.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num) : p_(num), q_(1) {}
    Rational(std::int64_t num, std::int64_t den) : p_(num), q_(den) {
        if (q_ == 0) throw std::invalid_argument("Rational: zero denominator");
        reduce();
    }

    std::int64_t num() const { return p_; }
    std::int64_t den() const { return q_; }

    double value() const { return static_cast<double>(p_) / static_cast<double>(q_); }

    Rational operator+(const Rational& o) const { return {p_ * o.q_ + o.p_ * q_, q_ * o.q_}; }
    Rational operator-(const Rational& o) const { return {p_ * o.q_ - o.p_ * q_, q_ * o.q_}; }
    Rational operator*(const Rational& o) const { return {p_ * o.p_, q_ * o.q_}; }

    bool operator==(const Rational& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return p_ * o.q_ < o.p_ * q_; }
    bool operator<=(const Rational& o) const { return p_ * o.q_ <= o.p_ * q_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::string str() const {
        if (q_ == 1) return std::to_string(p_);
        return std::to_string(p_) + "/" + std::to_string(q_);
    }

private:
    void reduce() {
        if (q_ < 0) { p_ = -p_; q_ = -q_; }
        std::int64_t g = std::gcd(p_ < 0 ? -p_ : p_, q_);
        if (g > 1) { p_ /= g; q_ /= g; }
        if (p_ == 0) q_ = 1;
    }

    std::int64_t p_ = 0;
    std::int64_t q_ = 1;
};

} // namespace anisoheat

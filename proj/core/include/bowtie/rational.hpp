#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "bowtie/errors.hpp"

namespace bowtie {

// Exact rational over 64-bit integers. Intermediates go through 128-bit
// arithmetic; values that do not reduce back into 64 bits throw. Densities,
// average degrees and lemma thresholds at the scales this library handles
// stay far below that limit.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {} // NOLINT: implicit by design
    Rational(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    // "p/q" with q > 0, always including the denominator ("8/1").
    std::string str() const;

    // Accepts "p" or "p/q"; q must be nonzero.
    static Rational parse(const std::string& text);

private:
    static Rational from_i128(__int128 num, __int128 den);

    long long num_; // sign lives here
    long long den_; // > 0, coprime with |num_|
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exact binomial coefficient; throws on 64-bit overflow.
long long binom(long long n, long long k);

// Binomial coefficient saturating at `cap` (for feasibility tests where the
// true value may be astronomically large).
long long binom_capped(long long n, long long k, long long cap);

} // namespace bowtie

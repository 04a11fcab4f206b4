#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopfd2 {

/// Field descriptor: p == 0 means the rationals, otherwise the prime field F_p.
struct Field {
    std::uint64_t p = 0;

    bool is_rational() const { return p == 0; }
    std::string name() const;
    bool operator==(const Field&) const = default;
};

class FieldMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact element of Q or F_p.
///
/// A scalar created without a field (integer literals) is "untagged" and
/// adopts the field of whatever it is combined with.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}
    Scalar(int v) : q_(v) {}
    explicit Scalar(const mpq_class& q, std::uint64_t p = 0);
    Scalar(long num, long den, std::uint64_t p = 0);

    static Scalar in(const Field& f, long v) { return Scalar(mpq_class(v), f.p); }

    std::uint64_t modulus() const { return p_; }
    const mpq_class& value() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    // Equality compares values; an untagged integer equals its image mod p.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;

    /// "p/q" for rationals (or "p" when integral); the residue for F_p.
    std::string str() const;
    static Scalar parse(const std::string& s, std::uint64_t p = 0);

private:
    void adopt(const Scalar& o);
    void reduce();

    mpq_class q_{0};
    std::uint64_t p_ = 0;
};

}  // namespace hopfd2

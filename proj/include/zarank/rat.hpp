#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zarank {

using Int = mpz_class;

// Exact rational, always in lowest terms with positive denominator.
// All bound values in this library are Rat; nothing is ever rounded
// through floating point.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long long n) : v_(static_cast<long>(n)) {
        // mpq_class(long) is exact; long long on this platform is long.
    }
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rat(long long num, long long den) : Rat(Int(static_cast<long>(num)), Int(static_cast<long>(den))) {}

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    // floor/ceil are exact on negatives too: floor(-7/2) = -4.
    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }
    Int ceil() const {
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    Rat operator-() const { Rat r; r.v_ = -v_; return r; }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.v_ == 0) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    int sign() const { return sgn(v_); }

    // "p/q", or just "p" when integral.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

// Int from a long long without relying on gmpxx's (long-only) operator set.
inline Int I(long long v) { return Int(static_cast<long>(v)); }

inline Int binom2(const Int& n) {
    if (n < 2) return 0;
    return n * (n - 1) / 2;
}

inline Int binom2(long long n) { return binom2(I(n)); }

// Least nonnegative residue of a mod mod, for mod >= 1.
inline Int mod_floor(const Int& a, const Int& mod) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
    return r;
}

inline long long to_ll(const Int& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("Int does not fit in long long: " + n.get_str());
    return n.get_si();
}

}  // namespace zarank

#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace andcc {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMat = Mat<Rational>;
using RationalVec = Vec<Rational>;

// Canonical text form: "p/q" in lowest terms, or plain "p" when q = 1.
inline std::string fraction_str(const Rational& r) { return r.str(); }

// Parses "p", "-p", "p/q"; reduces to lowest terms.  The mpq string
// constructor neither canonicalizes nor rejects a zero denominator, so we
// go through the two-integer constructor instead.
inline Rational parse_fraction(const std::string& text) {
    const auto parse_int = [](const std::string& part) {
        if (part.empty() || (part.size() == 1 && part[0] == '-'))
            throw std::invalid_argument("empty integer");
        for (std::size_t i = part[0] == '-' ? 1 : 0; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("bad digit");
        return BigInt(part);
    };
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(parse_int(text));
        const BigInt num = parse_int(text.substr(0, slash));
        const BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: \"" + text + "\"");
    }
}

// Prime field F_p with a process-wide modulus (set once at startup, before
// any arithmetic).  Values are stored reduced to [0, p).
class Fp {
public:
    Fp() = default;
    Fp(long long v) {  // NOLINT: implicit, needed for Scalar(0)/Scalar(1)
        const long long p = static_cast<long long>(p_);
        v %= p;
        if (v < 0) v += p;
        v_ = static_cast<std::uint64_t>(v);
    }

    static void set_modulus(std::uint64_t p) {
        if (!is_prime_u64(p)) throw std::invalid_argument("Fp modulus must be prime");
        if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("Fp modulus must fit in 31 bits");
        p_ = p;
    }
    static std::uint64_t modulus() { return p_; }

    std::uint64_t value() const { return v_; }

    friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % p_); }
    friend Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + p_ - b.v_) % p_); }
    friend Fp operator*(Fp a, Fp b) { return from_raw((a.v_ * b.v_) % p_); }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_); }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in F_p");
        // extended Euclid on (v, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
        while (new_r != 0) {
            const std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return from_raw(static_cast<std::uint64_t>(t));
    }

private:
    static bool is_prime_u64(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
    static Fp from_raw(std::uint64_t v) {
        Fp x;
        x.v_ = v;
        return x;
    }

    static inline std::uint64_t p_ = 2;
    std::uint64_t v_ = 0;
};

// Reduction Q -> F_p for loading rational files into a prime field.
inline Fp to_fp(const Rational& r) {
    const BigInt p(Fp::modulus());
    const BigInt num = numerator(r) % p;
    const BigInt den = denominator(r) % p;
    if (den == 0) throw std::domain_error("denominator divisible by the field characteristic");
    const Fp n(static_cast<long long>(num));
    const Fp d(static_cast<long long>(den));
    return n / d;
}

template <class Scalar>
Scalar scalar_from_rational(const Rational& r);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& r) { return r; }

template <>
inline Fp scalar_from_rational<Fp>(const Rational& r) { return to_fp(r); }

}  // namespace andcc

namespace Eigen {

template <>
struct NumTraits<andcc::Fp> : GenericNumTraits<andcc::Fp> {
    typedef andcc::Fp Real;
    typedef andcc::Fp NonInteger;
    typedef andcc::Fp Nested;
    typedef andcc::Fp Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3,
    };
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace walkbench {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact dyadic rational m / 2^k.
///
/// Canonical form: exponent == 0, or numerator odd. Enforced at
/// construction, so equality and ordering are plain member compares.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long long n) : num_(n), exp_(0) {}
    Dyadic(BigInt n) : num_(std::move(n)), exp_(0) {}
    Dyadic(BigInt n, unsigned k) : num_(std::move(n)), exp_(k) { canonicalize(); }

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        unsigned k = std::max(a.exp_, b.exp_);
        return Dyadic(shifted(a, k) + shifted(b, k), k);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
        unsigned k = std::max(a.exp_, b.exp_);
        return Dyadic(shifted(a, k) - shifted(b, k), k);
    }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
    }
    Dyadic operator-() const {
        Dyadic r = *this;
        r.num_ = -r.num_;
        return r;
    }

    /// Exact multiplication by 2^k, any sign of k.
    Dyadic scale_pow2(long k) const {
        if (k >= 0) {
            long drop = std::min<long>(k, exp_);
            return Dyadic(num_ << (k - drop), exp_ - static_cast<unsigned>(drop));
        }
        return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
    }

    /// Largest integer <= value.
    BigInt floor() const {
        if (exp_ == 0) return num_;
        BigInt d = BigInt(1) << exp_;
        BigInt q = num_ / d;  // truncates toward zero
        if (num_ < 0 && q * d != num_) q -= 1;
        return q;
    }

    Rational to_rational() const {
        Rational r(num_, BigInt(1) << exp_);
        return r;
    }
    double to_double() const { return static_cast<double>(to_rational()); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        unsigned k = std::max(a.exp_, b.exp_);
        return shifted(a, k) < shifted(b, k);
    }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

    /// Canonical text form: "m" when integral, else "m/2^k".
    std::string format() const {
        if (exp_ == 0) return num_.str();
        return num_.str() + "/2^" + std::to_string(exp_);
    }

    /// Accepts "m" or "m/2^k". Throws std::invalid_argument on malformed text.
    static Dyadic parse(std::string_view s) {
        auto bad = [&] { throw std::invalid_argument("bad dyadic: '" + std::string(s) + "'"); };
        if (s.empty()) bad();
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return Dyadic(BigInt(std::string(s)));
            std::string_view den = s.substr(slash + 1);
            if (den.size() < 3 || den[0] != '2' || den[1] != '^') bad();
            std::string num(s.substr(0, slash));
            unsigned long k = std::stoul(std::string(den.substr(2)));
            return Dyadic(BigInt(num), static_cast<unsigned>(k));
        } catch (const std::invalid_argument&) {
            throw;
        } catch (...) {
            bad();
        }
        return Dyadic();  // unreachable
    }

private:
    static BigInt shifted(const Dyadic& a, unsigned k) { return a.num_ << (k - a.exp_); }

    void canonicalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && num_ % 2 == 0) {
            num_ /= 2;
            --exp_;
        }
    }

    BigInt num_;
    unsigned exp_;
};

inline Dyadic abs(const Dyadic& a) { return a.sign() < 0 ? -a : a; }

}  // namespace walkbench

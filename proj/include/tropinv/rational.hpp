#ifndef TROPINV_RATIONAL_HPP
#define TROPINV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

#include "tropinv/errors.hpp"

namespace tropinv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense exact vectors/matrices. Note: only storage, element access, dot and
// +/- go through Eigen here; solves and scalar scaling are explicit loops
// (the Boost<->Eigen scalar-promotion paths are broken for this pairing).
using RationalVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline bool vec_eq(const RationalVec& a, const RationalVec& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

inline bool lex_less(const RationalVec& a, const RationalVec& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (a(i) > b(i)) return false;
    }
    return a.size() < b.size();
}

inline bool all_nonneg(const RationalVec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) < 0) return false;
    return true;
}

inline bool is_zero_vec(const RationalVec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) return false;
    return true;
}

// a >= b componentwise
inline bool dominates(const RationalVec& a, const RationalVec& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) < b(i)) return false;
    return true;
}

inline RationalVec scaled(const RationalVec& v, const Rational& c) {
    RationalVec r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = v(i) * c;
    return r;
}

inline Rational dot(const RationalVec& a, const RationalVec& b) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
    return s;
}

// A rational extended with a single +infinity value (used for covolumes,
// masses and Lojasiewicz exponents of non-convenient data).
class ExtRational {
public:
    ExtRational() : finite_(true), value_(0) {}
    ExtRational(Rational v) : finite_(true), value_(std::move(v)) {}
    ExtRational(int v) : finite_(true), value_(v) {}
    static ExtRational infinity() {
        ExtRational e;
        e.finite_ = false;
        return e;
    }

    bool is_finite() const { return finite_; }
    const Rational& value() const {
        if (!finite_) throw InternalError("value() on infinite ExtRational");
        return value_;
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) {
        return a == b || a < b;
    }

private:
    bool finite_;
    Rational value_;
};

// "p", "-p" or "p/q", q > 0 after normalization.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("malformed rational literal '" + s + "'");
    }
}

inline std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string format_ext(const ExtRational& e) {
    return e.is_finite() ? format_rational(e.value()) : std::string("inf");
}

inline Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Rational pow_rational(const Rational& base, int e) {
    Rational p = 1;
    for (int i = 0; i < e; ++i) p *= base;
    return p;
}

} // namespace tropinv

#endif

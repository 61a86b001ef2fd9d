#include "tropinv/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace tropinv {

namespace {

struct Cursor {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at byte " + std::to_string(i));
    }
    bool is_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

    Integer read_uint(const char* what) {
        skip_ws();
        if (!is_digit()) fail(std::string("expected ") + what);
        Integer v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return v;
    }
};

// coeff := int | int "/" uint, where int may carry a sign. A bare sign (no
// digits) is treated as +-1 so printed canonical forms like "-z1^2" re-parse.
bool read_coefficient(Cursor& c, Rational& out) {
    char p = c.peek();
    int sign = 1;
    bool saw_sign = false;
    if (p == '+' || p == '-') {
        sign = (p == '-') ? -1 : 1;
        saw_sign = true;
        ++c.i;
    }
    if (!c.is_digit()) {
        if (saw_sign) {
            if (c.peek() != 'z') c.fail("expected digits or a variable after sign");
            out = sign;
            return true;
        }
        return false;
    }
    Integer num = c.read_uint("integer");
    if (c.peek() == '/') {
        ++c.i;
        Integer den = c.read_uint("denominator");
        if (den == 0) c.fail("zero denominator");
        out = Rational(sign * num, den);
    } else {
        out = Rational(sign * num);
    }
    return true;
}

} // namespace

Polynomial::Polynomial(int n, Terms terms) : n_(n), terms_(std::move(terms)) {
    if (n < 1) throw DimensionMismatch("polynomial dimension must be >= 1");
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (static_cast<int>(it->first.size()) != n)
            throw DimensionMismatch("term exponent has wrong dimension");
        for (int e : it->first)
            if (e < 0) throw InvalidExponent("negative exponent in polynomial term");
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
}

Polynomial Polynomial::parse(std::string_view text, int n) {
    if (n < 1) throw DimensionMismatch("polynomial dimension must be >= 1");
    Cursor c{text};
    Terms terms;

    bool first = true;
    while (true) {
        if (c.done()) {
            if (first) c.fail("empty polynomial");
            break;
        }
        int term_sign = 1;
        if (!first) {
            char op = c.peek();
            if (op != '+' && op != '-') c.fail("expected '+' or '-'");
            term_sign = (op == '-') ? -1 : 1;
            ++c.i;
        }
        Rational coeff = 1;
        bool have_coeff = read_coefficient(c, coeff);
        std::vector<int> exps(n, 0);
        bool have_factor = false;
        while (true) {
            size_t before = c.i;
            if (c.peek() == '*') ++c.i;
            if (c.peek() != 'z') {
                c.i = before;
                break;
            }
            ++c.i;
            size_t at = c.i;
            Integer idx = c.read_uint("variable index");
            if (idx < 1 || idx > n)
                throw VariableOutOfRange("variable z" + idx.str() + " out of range at byte " +
                                         std::to_string(at));
            int k = static_cast<int>(idx) - 1;
            int e = 1;
            if (c.peek() == '^') {
                ++c.i;
                Integer ev = c.read_uint("exponent");
                if (ev > 1 << 20) c.fail("exponent too large");
                e = static_cast<int>(ev);
            }
            exps[k] += e;
            have_factor = true;
        }
        if (!have_coeff && !have_factor) c.fail("expected a term");
        Rational value = coeff * term_sign;
        auto [it, inserted] = terms.emplace(exps, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) terms.erase(it);
        }
        first = false;
    }
    if (terms.empty()) throw ZeroPolynomial("all terms cancel");
    return Polynomial(n, std::move(terms));
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(std::vector<int>(n_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
        if (first) {
            if (coeff < 0) out << "-";
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        std::string factors;
        for (int k = 0; k < n_; ++k) {
            if (exps[k] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += "z" + std::to_string(k + 1);
            if (exps[k] > 1) factors += "^" + std::to_string(exps[k]);
        }
        if (factors.empty()) {
            out << format_rational(mag);
        } else {
            if (mag != 1) out << format_rational(mag) << "*";
            out << factors;
        }
        first = false;
    }
    return out.str();
}

std::complex<double> Polynomial::eval(const Eigen::VectorXcd& x) const {
    std::complex<double> total = 0;
    for (const auto& [exps, coeff] : terms_) {
        std::complex<double> t = coeff.convert_to<double>();
        for (int k = 0; k < n_; ++k) {
            std::complex<double> p = 1;
            std::complex<double> b = x(k);
            int e = exps[k];
            while (e > 0) {
                if (e & 1) p *= b;
                b *= b;
                e >>= 1;
            }
            t *= p;
        }
        total += t;
    }
    return total;
}

Polynomial recenter(const Polynomial& p, const RationalVec& zeta) {
    const int n = p.dimension();
    if (zeta.size() != n) throw DimensionMismatch("recenter point has wrong dimension");

    Polynomial::Terms result;
    for (const auto& [exps, coeff] : p.terms()) {
        // expand coeff * prod_k (w_k + zeta_k)^{e_k}
        std::map<std::vector<int>, Rational> cur;
        cur.emplace(std::vector<int>(n, 0), coeff);
        for (int k = 0; k < n; ++k) {
            const int e = exps[k];
            if (e == 0) continue;
            std::map<std::vector<int>, Rational> next;
            if (zeta(k) == 0) {
                for (auto& [ex, cc] : cur) {
                    std::vector<int> ex2 = ex;
                    ex2[k] += e;
                    next[ex2] += cc;
                }
            } else {
                // binomial row for (w + z)^e
                std::vector<Rational> pow_z(e + 1);
                pow_z[0] = 1;
                for (int j = 1; j <= e; ++j) pow_z[j] = pow_z[j - 1] * zeta(k);
                Integer binom = 1;
                std::vector<Integer> binoms(e + 1);
                for (int j = 0; j <= e; ++j) {
                    binoms[j] = binom;
                    binom = binom * (e - j) / (j + 1);
                }
                for (auto& [ex, cc] : cur) {
                    for (int j = 0; j <= e; ++j) {  // w^j z^{e-j}
                        std::vector<int> ex2 = ex;
                        ex2[k] += j;
                        next[ex2] += cc * Rational(binoms[j]) * pow_z[e - j];
                    }
                }
            }
            cur = std::move(next);
        }
        for (auto& [ex, cc] : cur) {
            auto [it, inserted] = result.emplace(ex, cc);
            if (!inserted) it->second += cc;
        }
    }
    return Polynomial(n, std::move(result));
}

namespace {

void check_map(const PolynomialMap& f, const RationalVec& zeta) {
    if (f.components.empty()) throw EmptyGenerators("polynomial map has no components");
    for (const auto& c : f.components)
        if (c.dimension() != f.n) throw DimensionMismatch("map component has wrong dimension");
    if (zeta.size() != f.n) throw DimensionMismatch("zeta has wrong dimension");
}

} // namespace

NewtonPolyhedron newton_polyhedron_of_map(const PolynomialMap& f, const RationalVec& zeta) {
    check_map(f, zeta);
    std::vector<RationalVec> support;
    for (size_t ci = 0; ci < f.components.size(); ++ci) {
        Polynomial q = recenter(f.components[ci], zeta);
        if (q.constant_term() != 0)
            throw NotAZero("component " + std::to_string(ci + 1) + " does not vanish at zeta");
        for (const auto& [exps, coeff] : q.terms()) {
            RationalVec v(f.n);
            for (int k = 0; k < f.n; ++k) v(k) = exps[k];
            support.push_back(std::move(v));
        }
    }
    return NewtonPolyhedron::from_generators(f.n, std::move(support));
}

ExtRational newton_number(const PolynomialMap& f, const RationalVec& zeta) {
    const ExtRational c = covolume(newton_polyhedron_of_map(f, zeta));
    if (!c.is_finite()) return c;
    return factorial(f.n) * c.value();
}

TropicalGerm indicator_of_map(const PolynomialMap& f, const RationalVec& zeta) {
    return TropicalGerm(newton_polyhedron_of_map(f, zeta));
}

KouchnirenkoReport kouchnirenko_report(const PolynomialMap& f, const RationalVec& zeta) {
    TropicalGerm ind = indicator_of_map(f, zeta);
    KouchnirenkoReport r{ExtRational(0), false, ind, {}, {}};
    r.convenient = is_convenient(ind.polyhedron());
    r.newton_num = r.convenient ? residual_mass(ind) : ExtRational::infinity();
    r.profile = weight_profile(ind);
    if (r.convenient) {
        r.statement = "multiplicity at zeta >= " + format_ext(r.newton_num) +
                      " (Newton number lower bound; multiplicity not computed)";
    } else {
        r.statement = "no isolated-zero bound: Newton polyhedron is not convenient";
    }
    return r;
}

} // namespace tropinv

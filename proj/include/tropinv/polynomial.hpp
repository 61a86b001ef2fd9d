#ifndef TROPINV_POLYNOMIAL_HPP
#define TROPINV_POLYNOMIAL_HPP

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "tropinv/tropical.hpp"

namespace tropinv {

// Exact-coefficient multivariate polynomial. Terms are kept in a lex-ordered
// map from exponent vector to nonzero rational coefficient.
class Polynomial {
public:
    using Terms = std::map<std::vector<int>, Rational>;

    // Grammar: poly := term (("+"|"-") term)* ; term := coeff? ("*"? factor)* ;
    // factor := "z" index ("^" uint)? ; coeff := int | int "/" uint.
    // Whitespace is ignored, indices are 1-based. A term that cancels to the
    // zero polynomial is rejected (ZeroPolynomial).
    static Polynomial parse(std::string_view text, int n);

    Polynomial(int n, Terms terms);

    int dimension() const { return n_; }
    const Terms& terms() const { return terms_; }
    Rational constant_term() const;
    bool is_zero() const { return terms_.empty(); }

    std::string to_string() const;

    std::complex<double> eval(const Eigen::VectorXcd& x) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    Terms terms_;
};

// q(w) = p(w + zeta), exact binomial expansion.
Polynomial recenter(const Polynomial& p, const RationalVec& zeta);

struct PolynomialMap {
    int n = 0;
    std::vector<Polynomial> components;
};

// Hull of the union of the component supports after recentering at zeta.
// Every component must vanish at zeta.
NewtonPolyhedron newton_polyhedron_of_map(const PolynomialMap& f, const RationalVec& zeta);

// n! * covolume of the Newton polyhedron; infinite when not convenient.
ExtRational newton_number(const PolynomialMap& f, const RationalVec& zeta);

// The germ recording all directional data of log|f| at zeta.
TropicalGerm indicator_of_map(const PolynomialMap& f, const RationalVec& zeta);

struct KouchnirenkoReport {
    ExtRational newton_num;
    bool convenient = false;
    TropicalGerm indicator;
    WeightProfile profile;
    std::string statement;  // the multiplicity lower bound, phrased without computing it
};

KouchnirenkoReport kouchnirenko_report(const PolynomialMap& f, const RationalVec& zeta);

} // namespace tropinv

#endif

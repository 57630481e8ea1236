#pragma once

#include <map>
#include <string>
#include <vector>

#include "ecsf/compositions.hpp"
#include "ecsf/rational.hpp"

namespace ecsf {

/// A sparse linear combination of power sum basis elements p_lambda with
/// exact rational coefficients.  The empty partition indexes the constant
/// term.  Zero coefficients are never stored, so equality of values is
/// equality of term maps.
class SymFunc {
public:
    SymFunc() = default; // zero

    static SymFunc constant(const Rational& c);

    const std::map<Partition, Rational>& terms() const { return terms_; }
    Rational coeff(const Partition& p) const;
    bool is_zero() const { return terms_.empty(); }
    /// Largest |lambda| over stored terms (0 for the zero function).
    int degree() const;

    void add_term(const Partition& p, const Rational& c);

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const Rational& c);
    SymFunc& operator*=(const SymFunc& other);

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const SymFunc& b) { return a *= b; }
    friend SymFunc operator*(const Rational& c, SymFunc f) { return f *= c; }

    bool operator==(const SymFunc&) const = default;

    /// "p(3,1) - p(4)" in canonical term order.
    std::string str() const;

private:
    std::map<Partition, Rational> terms_;
};

SymFunc p_of(const Partition& l);
SymFunc e_to_p(int n);
SymFunc h_to_p(int n);
SymFunc e_of(const Partition& l);
SymFunc h_of(const Partition& l);

/// Signed expansion of the ribbon r_alpha over complete homogeneous
/// functions, aggregated by underlying partition.
std::map<Partition, Integer> ribbon_to_h(const Composition& a);
SymFunc ribbon_to_p(const Composition& a);

/// The involution with h <-> e; on power sums p_lambda picks up the sign
/// (-1)^(|lambda| - len(lambda)).
SymFunc omega(const SymFunc& f);

/// Coefficients of f written in the h basis (exact, solved degreewise; the
/// change of basis is triangular in partition length).
std::map<Partition, Rational> to_h_basis(const SymFunc& f);

/// The graded algebra automorphism with h_lambda -> p_lambda
/// (equivalently e_lambda -> chromatic symmetric function of the path union).
SymFunc U_map(const SymFunc& f);
SymFunc U_inverse(const SymFunc& f);

/// Substitute p_i -> k for every i, i.e. p_lambda -> k^len(lambda).
Rational evaluate_all_ones(const SymFunc& f, const Integer& k);
/// Same substitution with k left formal; entry j is the coefficient of k^j.
std::vector<Rational> as_polynomial_in_k(const SymFunc& f);

/// Expands f over the variables x_1..x_k; keys are exponent vectors of
/// length k, values their (integer) multiplicities.  Testing oracle only,
/// guarded by k <= 4 and degree <= 10.
std::map<std::vector<int>, Integer> monomial_oracle(const SymFunc& f, int k);

} // namespace ecsf

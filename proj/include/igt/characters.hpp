#pragma once

#include "igt/group.hpp"

#include <vector>

namespace igt {

/// The input was expected to be a genuine character but is not one.
struct not_a_character : error {
    using error::error;
};

/// A class function on a finite group: one exact cyclotomic value per
/// conjugacy class, in the deterministic class order of FiniteGroup.
class ClassFunction {
public:
    ClassFunction() : group_(nullptr), conductor_(1) {}
    ClassFunction(const FiniteGroup& g, long conductor, std::vector<Cyc> values);

    const FiniteGroup& group() const { return *group_; }
    long conductor() const { return conductor_; }
    const std::vector<Cyc>& values() const { return values_; }
    const Cyc& value(long cls) const { return values_[static_cast<std::size_t>(cls)]; }
    const Cyc& value_on_element(std::size_t e) const;

    /// Value at the identity class.
    const Cyc& degree_value() const { return values_[0]; }
    /// Degree as an integer; throws not_a_character when non-integral.
    long degree() const;

    ClassFunction embedded(long m) const;
    ClassFunction conj() const;

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
    ClassFunction scaled(const Cyc& c) const;

    bool operator==(const ClassFunction& o) const;
    bool operator!=(const ClassFunction& o) const { return !(*this == o); }

    /// Canonical value list, used for deterministic sorting.
    std::string str() const;

private:
    const FiniteGroup* group_;
    long conductor_;
    std::vector<Cyc> values_;
};

struct CharacterTable {
    const FiniteGroup* group = nullptr;
    long conductor = 1; // the group exponent
    std::vector<ClassFunction> irreducibles;

    std::size_t size() const { return irreducibles.size(); }
    const ClassFunction& at(std::size_t i) const { return irreducibles[i]; }
    std::vector<long> degrees() const;
};

/// Complete irreducible character table by the Dixon–Schneider method:
/// common eigenvectors of the class-sum matrices over F_p for the least prime
/// p = 1 (mod exponent) with p > 2*sqrt(|E|), lifted to exact values in
/// Q(zeta_exponent) through eigenvalue multiplicities.  The result passes the
/// orthogonality relations exactly (verified before returning).
CharacterTable dixon_schneider(const FiniteGroup& g);

/// Hermitian pairing (1/|E|) sum_cls |cls| a(cls) conj(b(cls)); equals the
/// multiplicity pairing on genuine characters.
Cyc inner_product_cyc(const ClassFunction& a, const ClassFunction& b);
/// Same, demanding a rational result; throws not_a_character otherwise.
QQ inner_product(const ClassFunction& a, const ClassFunction& b);

/// Multiplicity vector over a character table.
struct CharDecomposition {
    const CharacterTable* table = nullptr;
    std::vector<long> mult;

    long degree() const;
    bool is_zero() const;
    bool operator==(const CharDecomposition& o) const { return mult == o.mult; }
    bool operator<(const CharDecomposition& o) const { return mult < o.mult; }
};

/// e_mu = <chi, mu>; all multiplicities must be nonnegative integers.
CharDecomposition decompose(const ClassFunction& chi, const CharacterTable& table);
/// The class function sum e_mu * mu.
ClassFunction class_function_of(const CharDecomposition& dec);

/// All constituents of the decomposed character with total degree exactly t,
/// in lexicographic order of the multiplicity vector.  Requires t >= 1.
std::vector<CharDecomposition> constituents_of_degree(const CharDecomposition& dec, long t);

/// Exterior / symmetric power characters via the Newton recurrences
///   t*lambda_t(e) = sum_{i=1..t} (-1)^(i-1) lambda_{t-i}(e) chi(e^i)
///   d*h_d(e)      = sum_{k=1..d} chi(e^k) h_{d-k}(e).
ClassFunction ext_power_char(const ClassFunction& chi, long t);
ClassFunction sym_power_char(const ClassFunction& chi, long d);

/// Determinant character of a decomposed character: prod_mu det(mu)^(e_mu)
/// with det(mu) the top exterior power of mu.  Always linear.
ClassFunction det_char(const CharDecomposition& dec);

/// Z(chi) = { e : chi(e)/chi(1) is a root of unity }; verified to be a
/// subgroup (throws not_a_character otherwise).
FiniteGroup::Subgroup center_of_character(const ClassFunction& chi);

} // namespace igt

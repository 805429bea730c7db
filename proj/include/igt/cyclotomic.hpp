#pragma once

#include "igt/errors.hpp"
#include "igt/rational.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace igt {

/// Exact element of the cyclotomic field Q(zeta_n), stored as a polynomial in
/// z = zeta_n reduced modulo the n-th cyclotomic polynomial Phi_n.  The
/// coefficient vector always has length phi(n), so equality is coefficient-wise.
/// Values are immutable after construction; all operations are pure.
class Cyc {
public:
    /// Zero at conductor 1.
    Cyc() : conductor_(1), coeffs_(1) {}

    /// A rational embedded at the given conductor.
    explicit Cyc(QQ r, long conductor = 1);
    explicit Cyc(long r, long conductor = 1) : Cyc(QQ(r), conductor) {}

    static Cyc zero(long conductor) { return Cyc(QQ(0), conductor); }
    static Cyc one(long conductor) { return Cyc(QQ(1), conductor); }

    /// z^power in Q(zeta_n); the exponent is reduced mod n.
    static Cyc zeta_power(long conductor, long power = 1);

    /// zeta_order^power as an element of Q(zeta_n).  Requires order | lcm(2, n),
    /// which is exactly the condition for the root to lie in the field.
    static Cyc root_of_unity(long conductor, long order, long power = 1);

    long conductor() const { return conductor_; }
    const std::vector<QQ>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True when the value lies in Q (only the constant coordinate is nonzero).
    bool is_rational() const;
    /// The rational value; throws precondition_error when not rational.
    QQ rational_value() const;

    /// Image under Q(zeta_n) -> Q(zeta_m) for n | m.
    Cyc embedded(long m) const;

    Cyc operator-() const;
    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    Cyc& operator+=(const Cyc& b) { *this = *this + b; return *this; }
    Cyc& operator-=(const Cyc& b) { *this = *this - b; return *this; }
    Cyc& operator*=(const Cyc& b) { *this = *this * b; return *this; }

    /// Multiplicative inverse; throws precondition_error on zero.
    Cyc inverse() const;
    Cyc pow(long e) const;

    /// Complex conjugation z -> z^-1 (a field automorphism fixing Q).
    Cyc conj() const;
    /// The Galois map z -> z^k for gcd(k, n) = 1.
    Cyc galois(long k) const;

    /// True iff a^lcm(2,n) = 1; the roots of unity in Q(zeta_n) form the
    /// cyclic group of that order.
    bool is_root_of_unity() const;

    bool operator==(const Cyc& other) const {
        return conductor_ == other.conductor_ && coeffs_ == other.coeffs_;
    }
    bool operator!=(const Cyc& other) const { return !(*this == other); }

    /// Canonical printing: descending powers of z, coefficients as p/q.
    /// Printing then reparsing is the identity.
    std::string str() const;

    /// Read-only complex embedding z -> exp(2*pi*i/n), for report output only.
    std::complex<double> approx() const;

private:
    long conductor_;
    std::vector<QQ> coeffs_; // length phi(conductor_)

    friend class CycField;
};

/// Parses the cyclotomic literal grammar
///   element := ['+'|'-'] term (('+'|'-') term)*
///   term    := rational ('*'? 'z' ('^' uint)?)? | 'z' ('^' uint)?
///   rational:= int ('/' uint)?
/// and returns the canonical reduced element.  Throws parse_error with the
/// offending position.
Cyc parse_cyc(std::string_view text, long conductor);

long euler_phi(long n);

/// Lifts both operands into Q(zeta_lcm); the explicit request required for
/// mixed-conductor arithmetic.
std::pair<Cyc, Cyc> to_common_conductor(const Cyc& a, const Cyc& b);

} // namespace igt

#include "igt/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace igt {

bool parse_qq(std::string_view text, QQ& out) {
    if (text.empty()) return false;
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size()) {
        if (text[i] != '/') return false;
        ++i;
        if (i == text.size()) return false;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i != text.size() || den_start == i) return false;
        if (std::all_of(text.begin() + den_start, text.end(), [](char c) { return c == '0'; }))
            return false; // zero denominator
    }
    std::string s(text);
    if (s[0] == '+') s.erase(0, 1);
    out = QQ(s);
    return true;
}

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using Poly = std::vector<QQ>; // dense, index = degree

int poly_degree(const Poly& p) {
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
        if (!is_zero(p[d])) return d;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    int da = poly_degree(a), db = poly_degree(b);
    if (da < 0 || db < 0) return {QQ(0)};
    Poly out(static_cast<std::size_t>(da + db + 1), QQ(0));
    for (int i = 0; i <= da; ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; j <= db; ++j) {
            if (is_zero(b[j])) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Exact division, remainder must vanish.
Poly poly_divexact(Poly num, const Poly& den) {
    int dd = poly_degree(den);
    int dn = poly_degree(num);
    if (dd < 0) throw internal_error("poly_divexact: division by zero polynomial");
    Poly q(static_cast<std::size_t>(std::max(dn - dd + 1, 1)), QQ(0));
    while (dn >= dd) {
        QQ c = num[dn] / den[dd];
        q[dn - dd] = c;
        for (int i = 0; i <= dd; ++i) num[dn - dd + i] -= c * den[i];
        dn = poly_degree(num);
    }
    if (dn >= 0) throw internal_error("poly_divexact: nonzero remainder");
    return q;
}

// divmod for the extended Euclid used by inverse().
void poly_divmod(Poly num, const Poly& den, Poly& q, Poly& r) {
    int dd = poly_degree(den);
    int dn = poly_degree(num);
    q.assign(static_cast<std::size_t>(std::max(dn - dd + 1, 1)), QQ(0));
    while (dn >= dd) {
        QQ c = num[dn] / den[dd];
        q[dn - dd] = c;
        for (int i = 0; i <= dd; ++i) num[dn - dd + i] -= c * den[i];
        dn = poly_degree(num);
    }
    r = std::move(num);
}

} // namespace

/// Per-conductor reduction data: Phi_n and the expansions of z^k, 0 <= k < 2n,
/// on the power basis 1, z, ..., z^(phi-1).
class CycField {
public:
    explicit CycField(long n) : n_(n), phi_(euler_phi(n)) {
        cyclotomic_poly();
        build_power_table();
    }

    long n() const { return n_; }
    long phi() const { return phi_; }
    const Poly& modulus() const { return phi_poly_; }
    const std::vector<QQ>& power(long k) const { return powers_[static_cast<std::size_t>(k)]; }

    static const CycField& get(long n) {
        // Recursive: building Phi_n pulls in Phi_d for every divisor d.
        static std::recursive_mutex mu;
        static std::map<long, std::unique_ptr<CycField>> cache;
        std::lock_guard<std::recursive_mutex> lock(mu);
        auto it = cache.find(n);
        if (it == cache.end())
            it = cache.emplace(n, std::make_unique<CycField>(n)).first;
        return *it->second;
    }

private:
    // Phi_n(x) = (x^n - 1) / prod_{d | n, d < n} Phi_d(x), computed recursively
    // with exact division only.
    void cyclotomic_poly() {
        Poly num(static_cast<std::size_t>(n_ + 1), QQ(0));
        num[0] = QQ(-1);
        num[static_cast<std::size_t>(n_)] = QQ(1);
        for (long d = 1; d < n_; ++d) {
            if (n_ % d != 0) continue;
            num = poly_divexact(num, CycField::get(d).phi_poly_);
        }
        phi_poly_ = std::move(num);
        if (poly_degree(phi_poly_) != phi_)
            throw internal_error("cyclotomic polynomial degree mismatch");
    }

    void build_power_table() {
        powers_.resize(static_cast<std::size_t>(2 * n_));
        for (long k = 0; k < 2 * n_; ++k) {
            std::vector<QQ> row(static_cast<std::size_t>(phi_), QQ(0));
            if (k < phi_) {
                row[static_cast<std::size_t>(k)] = QQ(1);
            } else {
                // z * z^(k-1), then fold the degree-phi coefficient through
                // z^phi = -(Phi_n - x^phi).
                const auto& prev = powers_[static_cast<std::size_t>(k - 1)];
                QQ top = prev[static_cast<std::size_t>(phi_ - 1)];
                for (long i = phi_ - 1; i >= 1; --i) row[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
                row[0] = QQ(0);
                if (!is_zero(top)) {
                    for (long i = 0; i < phi_; ++i)
                        row[static_cast<std::size_t>(i)] -= top * phi_poly_[static_cast<std::size_t>(i)];
                }
            }
            powers_[static_cast<std::size_t>(k)] = std::move(row);
        }
    }

    long n_;
    long phi_;
    Poly phi_poly_;
    std::vector<std::vector<QQ>> powers_;
};

Cyc::Cyc(QQ r, long conductor) : conductor_(conductor) {
    if (conductor < 1) throw precondition_error("conductor must be positive");
    coeffs_.assign(static_cast<std::size_t>(CycField::get(conductor).phi()), QQ(0));
    coeffs_[0] = std::move(r);
}

Cyc Cyc::zeta_power(long conductor, long power) {
    const CycField& f = CycField::get(conductor);
    long k = power % conductor;
    if (k < 0) k += conductor;
    Cyc out;
    out.conductor_ = conductor;
    out.coeffs_ = f.power(k);
    return out;
}

Cyc Cyc::root_of_unity(long conductor, long order, long power) {
    if (order < 1) throw precondition_error("root order must be positive");
    long p = power % order;
    if (p < 0) p += order;
    if (conductor % order == 0)
        return zeta_power(conductor, (conductor / order) * p);
    // order | lcm(2, n) but order does not divide n: n odd, order = 2m, m | n.
    if (order % 2 == 0 && conductor % (order / 2) == 0 && conductor % 2 == 1) {
        long m = order / 2;
        // zeta_2m = -zeta_m^((m+1)/2)
        Cyc base = -zeta_power(conductor, (conductor / m) * ((m + 1) / 2));
        return base.pow(p);
    }
    throw precondition_error("root of unity of order " + std::to_string(order) +
                             " does not lie in Q(zeta_" + std::to_string(conductor) + ")");
}

bool Cyc::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const QQ& c) { return igt::is_zero(c); });
}

bool Cyc::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!igt::is_zero(coeffs_[i])) return false;
    return true;
}

QQ Cyc::rational_value() const {
    if (!is_rational()) throw precondition_error("value is not rational: " + str());
    return coeffs_[0];
}

Cyc Cyc::embedded(long m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0)
        throw precondition_error("no embedding of Q(zeta_" + std::to_string(conductor_) +
                                 ") into Q(zeta_" + std::to_string(m) + ")");
    long step = m / conductor_;
    Cyc out = Cyc::zero(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (igt::is_zero(coeffs_[i])) continue;
        Cyc term = zeta_power(m, step * static_cast<long>(i));
        for (std::size_t j = 0; j < out.coeffs_.size(); ++j)
            out.coeffs_[j] += coeffs_[i] * term.coeffs_[j];
    }
    return out;
}

std::pair<Cyc, Cyc> to_common_conductor(const Cyc& a, const Cyc& b) {
    long m = std::lcm(a.conductor(), b.conductor());
    return {a.embedded(m), b.embedded(m)};
}

namespace {

// Auto-embedding applies only when one operand's value is rational.
std::pair<Cyc, Cyc> align(const Cyc& a, const Cyc& b, const char* op) {
    if (a.conductor() == b.conductor()) return {a, b};
    if (a.is_rational()) return {Cyc(a.rational_value(), b.conductor()), b};
    if (b.is_rational()) return {a, Cyc(b.rational_value(), a.conductor())};
    throw precondition_error(std::string("conductor mismatch in ") + op +
                             ": " + std::to_string(a.conductor()) + " vs " +
                             std::to_string(b.conductor()) +
                             " (use to_common_conductor for an explicit embedding)");
}

} // namespace

Cyc Cyc::operator-() const {
    Cyc out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    auto [x, y] = align(a, b, "add");
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
    auto [x, y] = align(a, b, "sub");
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    auto [x, y] = align(a, b, "mul");
    const CycField& f = CycField::get(x.conductor_);
    const long phi = f.phi();
    std::vector<QQ> conv(static_cast<std::size_t>(2 * phi - 1), QQ(0));
    for (long i = 0; i < phi; ++i) {
        if (igt::is_zero(x.coeffs_[static_cast<std::size_t>(i)])) continue;
        for (long j = 0; j < phi; ++j) {
            if (igt::is_zero(y.coeffs_[static_cast<std::size_t>(j)])) continue;
            conv[static_cast<std::size_t>(i + j)] +=
                x.coeffs_[static_cast<std::size_t>(i)] * y.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    Cyc out = Cyc::zero(x.conductor_);
    for (long k = 0; k < 2 * phi - 1; ++k) {
        const QQ& c = conv[static_cast<std::size_t>(k)];
        if (igt::is_zero(c)) continue;
        if (k < phi) {
            out.coeffs_[static_cast<std::size_t>(k)] += c;
        } else {
            const auto& row = f.power(k);
            for (long i = 0; i < phi; ++i)
                out.coeffs_[static_cast<std::size_t>(i)] += c * row[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw precondition_error("division by zero");
    if (is_rational()) {
        Cyc out = *this;
        out.coeffs_[0] = QQ(1) / out.coeffs_[0];
        return out;
    }
    // Extended Euclid in Q[x] against Phi_n (irreducible, so the gcd is 1).
    const CycField& f = CycField::get(conductor_);
    Poly r0 = f.modulus();
    Poly r1(coeffs_.begin(), coeffs_.end());
    Poly s0{QQ(0)}, s1{QQ(1)};
    while (true) {
        int d1 = poly_degree(r1);
        if (d1 <= 0) break;
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        Poly s = s0;
        Poly qs = poly_mul(q, s1);
        s.resize(std::max(s.size(), qs.size()), QQ(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s[i] -= qs[i];
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (poly_degree(r1) != 0) throw internal_error("inverse: gcd with Phi_n not constant");
    QQ scale = QQ(1) / r1[0];
    Cyc out = Cyc::zero(conductor_);
    for (std::size_t i = 0; i < s1.size() && i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = s1[i] * scale;
    // s1 has degree < phi because deg(a) < phi and r0 started at Phi_n.
    for (std::size_t i = out.coeffs_.size(); i < s1.size(); ++i)
        if (!igt::is_zero(s1[i])) throw internal_error("inverse: cofactor degree too large");
    return out;
}

Cyc Cyc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyc acc = Cyc::one(conductor_);
    Cyc base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

Cyc Cyc::galois(long k) const {
    long kk = k % conductor_;
    if (kk < 0) kk += conductor_;
    if (std::gcd(kk, conductor_) != 1)
        throw precondition_error("galois exponent not coprime to conductor");
    const CycField& f = CycField::get(conductor_);
    Cyc out = Cyc::zero(conductor_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (igt::is_zero(coeffs_[i])) continue;
        const auto& row = f.power((static_cast<long>(i) * kk) % conductor_);
        for (std::size_t j = 0; j < out.coeffs_.size(); ++j)
            out.coeffs_[j] += coeffs_[i] * row[j];
    }
    return out;
}

Cyc Cyc::conj() const { return galois(conductor_ - 1); }

bool Cyc::is_root_of_unity() const {
    if (is_zero()) return false;
    long m = std::lcm(2L, conductor_);
    return pow(m) == Cyc::one(conductor_);
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool first = true;
    for (long i = static_cast<long>(coeffs_.size()) - 1; i >= 0; --i) {
        const QQ& c = coeffs_[static_cast<std::size_t>(i)];
        if (igt::is_zero(c)) continue;
        QQ a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << "z";
            if (i != 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

std::complex<double> Cyc::approx() const {
    std::complex<double> out = 0.0;
    const double theta = 2.0 * 3.14159265358979323846 / static_cast<double>(conductor_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (igt::is_zero(coeffs_[i])) continue;
        double c = static_cast<double>(coeffs_[i]);
        out += c * std::polar(1.0, theta * static_cast<double>(i));
    }
    return out;
}

namespace {

struct CycParser {
    std::string_view text;
    std::size_t pos = 0;
    long conductor;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    unsigned long parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected an unsigned integer", start);
        return std::stoul(std::string(text.substr(start, pos - start)));
    }

    QQ parse_rational() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw parse_error("expected an integer", start);
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::size_t den_start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == den_start) throw parse_error("expected a denominator", den_start);
        }
        QQ out;
        if (!parse_qq(text.substr(start, pos - start), out))
            throw parse_error("malformed rational (zero denominator?)", start);
        return out;
    }

    // term := rational ('*'? 'z' ('^' uint)?)? | 'z' ('^' uint)?
    Cyc parse_term() {
        skip_ws();
        QQ coeff(1);
        bool have_coeff = false;
        if (peek() != 'z') {
            coeff = parse_rational();
            have_coeff = true;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != 'z')
                throw parse_error("expected 'z' after '*'", pos);
        }
        if (pos < text.size() && text[pos] == 'z') {
            ++pos;
            long e = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = static_cast<long>(parse_uint());
            }
            Cyc out = Cyc::zeta_power(conductor, e);
            if (have_coeff && coeff != 1) out = Cyc(coeff, conductor) * out;
            return out;
        }
        if (!have_coeff) throw parse_error("expected a term", pos);
        return Cyc(coeff, conductor);
    }

    Cyc parse_element() {
        Cyc acc = Cyc::zero(conductor);
        skip_ws();
        bool negate = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negate = text[pos] == '-';
            ++pos;
        }
        Cyc t = parse_term();
        acc = negate ? acc - t : acc + t;
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-')
                throw parse_error(std::string("unexpected character '") + c + "'", pos);
            ++pos;
            Cyc u = parse_term();
            acc = (c == '-') ? acc - u : acc + u;
        }
        return acc;
    }
};

} // namespace

Cyc parse_cyc(std::string_view text, long conductor) {
    CycParser p{text, 0, conductor};
    if (p.at_end()) throw parse_error("empty input", 0);
    return p.parse_element();
}

} // namespace igt

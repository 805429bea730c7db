#include "igt/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace igt {

ClassFunction::ClassFunction(const FiniteGroup& g, long conductor, std::vector<Cyc> values)
    : group_(&g), conductor_(conductor), values_(std::move(values)) {
    if (values_.size() != g.class_count())
        throw precondition_error("class function length does not match class count");
}

const Cyc& ClassFunction::value_on_element(std::size_t e) const {
    return values_[static_cast<std::size_t>(group_->classes().class_of[e])];
}

long ClassFunction::degree() const {
    const Cyc& d = values_[0];
    if (!d.is_rational()) throw not_a_character("degree is not rational");
    QQ q = d.rational_value();
    if (denominator(q) != 1) throw not_a_character("degree is not an integer");
    return static_cast<long>(numerator(q));
}

ClassFunction ClassFunction::embedded(long m) const {
    std::vector<Cyc> vals;
    vals.reserve(values_.size());
    for (const auto& v : values_) vals.push_back(v.embedded(m));
    return ClassFunction(*group_, m, std::move(vals));
}

ClassFunction ClassFunction::conj() const {
    std::vector<Cyc> vals;
    vals.reserve(values_.size());
    for (const auto& v : values_) vals.push_back(v.conj());
    return ClassFunction(*group_, conductor_, std::move(vals));
}

namespace {

std::pair<ClassFunction, ClassFunction> align_cf(const ClassFunction& a, const ClassFunction& b) {
    if (&a.group() != &b.group())
        throw precondition_error("class functions live on different groups");
    long m = std::lcm(a.conductor(), b.conductor());
    return {a.embedded(m), b.embedded(m)};
}

} // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    auto [x, y] = align_cf(a, b);
    std::vector<Cyc> vals;
    vals.reserve(x.values().size());
    for (std::size_t i = 0; i < x.values().size(); ++i) vals.push_back(x.values()[i] + y.values()[i]);
    return ClassFunction(x.group(), x.conductor(), std::move(vals));
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    auto [x, y] = align_cf(a, b);
    std::vector<Cyc> vals;
    vals.reserve(x.values().size());
    for (std::size_t i = 0; i < x.values().size(); ++i) vals.push_back(x.values()[i] * y.values()[i]);
    return ClassFunction(x.group(), x.conductor(), std::move(vals));
}

ClassFunction ClassFunction::scaled(const Cyc& c) const {
    std::vector<Cyc> vals;
    vals.reserve(values_.size());
    for (const auto& v : values_) vals.push_back(v * c.embedded(conductor_));
    return ClassFunction(*group_, conductor_, std::move(vals));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
    if (group_ != o.group_) return false;
    if (conductor_ == o.conductor_) return values_ == o.values_;
    long m = std::lcm(conductor_, o.conductor_);
    return embedded(m).values() == o.embedded(m).values();
}

std::string ClassFunction::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ", ";
        os << values_[i].str();
    }
    return os.str();
}

std::vector<long> CharacterTable::degrees() const {
    std::vector<long> out;
    out.reserve(irreducibles.size());
    for (const auto& c : irreducibles) out.push_back(c.degree());
    return out;
}

// ---------------------------------------------------------------------------
// Dixon–Schneider
// ---------------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;

u64 addm(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 subm(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }
u64 mulm(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powm(u64 a, u64 e, u64 p) {
    u64 acc = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) acc = mulm(acc, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return acc;
}

u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// least prime p = 1 (mod e) with p > bound
long dixon_prime(long e, double bound) {
    for (long p = e + 1;; p += e)
        if (static_cast<double>(p) > bound && is_prime(p)) return p;
}

u64 primitive_root(long p) {
    std::vector<long> qs;
    long m = p - 1;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            qs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) qs.push_back(m);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (long q : qs)
            if (powm(g, static_cast<u64>((p - 1) / q), static_cast<u64>(p)) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

using ModVec = std::vector<u64>;
using ModMat = std::vector<ModVec>; // row-major

// RREF in place; returns pivot columns.
std::vector<long> mod_rref(ModMat& m, u64 p) {
    std::vector<long> pivots;
    if (m.empty()) return pivots;
    const long rows = static_cast<long>(m.size()), cols = static_cast<long>(m[0].size());
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long pr = -1;
        for (long i = r; i < rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[static_cast<std::size_t>(pr)], m[static_cast<std::size_t>(r)]);
        u64 inv = invm(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], p);
        for (long j = c; j < cols; ++j)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                mulm(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)], inv, p);
        for (long i = 0; i < rows; ++i) {
            if (i == r) continue;
            u64 f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (!f) continue;
            for (long j = c; j < cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    subm(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                         mulm(f, m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)], p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// kernel basis (as columns) of a square matrix
std::vector<ModVec> mod_kernel(ModMat m, u64 p) {
    const long n = static_cast<long>(m.size());
    std::vector<long> pivots = mod_rref(m, p);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (long c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<ModVec> basis;
    for (long f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        ModVec v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[static_cast<std::size_t>(pivots[pr])] =
                subm(0, m[pr][static_cast<std::size_t>(f)], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// characteristic polynomial mod p via Hessenberg reduction
ModVec mod_charpoly(ModMat h, u64 p) {
    const long n = static_cast<long>(h.size());
    // similarity reduction to upper Hessenberg
    for (long c = 0; c + 2 < n; ++c) {
        long piv = -1;
        for (long r = c + 1; r < n; ++r)
            if (h[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != c + 1) {
            std::swap(h[static_cast<std::size_t>(piv)], h[static_cast<std::size_t>(c + 1)]);
            for (long r = 0; r < n; ++r)
                std::swap(h[static_cast<std::size_t>(r)][static_cast<std::size_t>(piv)],
                          h[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]);
        }
        u64 inv = invm(h[static_cast<std::size_t>(c + 1)][static_cast<std::size_t>(c)], p);
        for (long r = c + 2; r < n; ++r) {
            u64 f = mulm(h[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], inv, p);
            if (!f) continue;
            for (long j = 0; j < n; ++j)
                h[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                    subm(h[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                         mulm(f, h[static_cast<std::size_t>(c + 1)][static_cast<std::size_t>(j)], p), p);
            for (long i = 0; i < n; ++i)
                h[static_cast<std::size_t>(i)][static_cast<std::size_t>(c + 1)] =
                    addm(h[static_cast<std::size_t>(i)][static_cast<std::size_t>(c + 1)],
                         mulm(f, h[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)], p), p);
        }
    }
    // leading-principal-minor recurrence for Hessenberg matrices
    std::vector<ModVec> ps(static_cast<std::size_t>(n + 1));
    ps[0] = {1};
    for (long k = 1; k <= n; ++k) {
        const ModVec& prev = ps[static_cast<std::size_t>(k - 1)];
        ModVec cur(static_cast<std::size_t>(k + 1), 0);
        // (x - h[k-1][k-1]) * prev
        for (std::size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] = addm(cur[i + 1], prev[i], p);
            cur[i] = subm(cur[i], mulm(h[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)], prev[i], p), p);
        }
        u64 prod = 1;
        for (long i = 1; i <= k - 1; ++i) {
            prod = mulm(prod, h[static_cast<std::size_t>(k - i)][static_cast<std::size_t>(k - i - 1)], p);
            if (!prod) break;
            u64 coef = mulm(h[static_cast<std::size_t>(k - 1 - i)][static_cast<std::size_t>(k - 1)], prod, p);
            if (!coef) continue;
            const ModVec& pk = ps[static_cast<std::size_t>(k - 1 - i)];
            for (std::size_t j = 0; j < pk.size(); ++j)
                cur[j] = subm(cur[j], mulm(coef, pk[j], p), p);
        }
        ps[static_cast<std::size_t>(k)] = std::move(cur);
    }
    return ps[static_cast<std::size_t>(n)];
}

std::vector<u64> poly_roots(const ModVec& poly, u64 p) {
    std::vector<u64> roots;
    for (u64 x = 0; x < p; ++x) {
        u64 acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;) acc = addm(mulm(acc, x, p), poly[i], p);
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

} // namespace

CharacterTable dixon_schneider(const FiniteGroup& g) {
    const auto& cc = g.classes();
    const long r = static_cast<long>(cc.reps.size());
    const long e = g.exponent();
    const std::size_t n = g.order();
    const u64 p = static_cast<u64>(dixon_prime(e, 2.0 * std::sqrt(static_cast<double>(n))));

    // class element lists and inverse classes
    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(r));
    for (std::size_t x = 0; x < n; ++x)
        members[static_cast<std::size_t>(cc.class_of[x])].push_back(x);
    std::vector<long> jstar(static_cast<std::size_t>(r));
    for (long j = 0; j < r; ++j)
        jstar[static_cast<std::size_t>(j)] = cc.class_of[g.inverse(cc.reps[static_cast<std::size_t>(j)])];

    // class-sum structure constants: a[i][j][k] = #{x in C_i : x^-1 g_k in C_j}
    std::vector<ModMat> A(static_cast<std::size_t>(r),
                          ModMat(static_cast<std::size_t>(r), ModVec(static_cast<std::size_t>(r), 0)));
    for (long i = 0; i < r; ++i)
        for (std::size_t x : members[static_cast<std::size_t>(i)]) {
            std::size_t xi = g.inverse(x);
            for (long k = 0; k < r; ++k) {
                long j = cc.class_of[g.mul(xi, cc.reps[static_cast<std::size_t>(k)])];
                auto& row = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                row[static_cast<std::size_t>(k)] = addm(row[static_cast<std::size_t>(k)], 1, p);
            }
        }

    // split F_p^r into common eigenspaces of the class-sum matrices
    std::vector<std::vector<ModVec>> spaces; // each: list of column vectors
    {
        std::vector<ModVec> full;
        for (long i = 0; i < r; ++i) {
            ModVec v(static_cast<std::size_t>(r), 0);
            v[static_cast<std::size_t>(i)] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (long i = 1; i < r; ++i) {
        bool all_one = std::all_of(spaces.begin(), spaces.end(),
                                   [](const auto& s) { return s.size() == 1; });
        if (all_one) break;
        const ModMat& M = A[static_cast<std::size_t>(i)];
        std::vector<std::vector<ModVec>> next;
        for (auto& S : spaces) {
            const long s = static_cast<long>(S.size());
            if (s == 1) {
                next.push_back(std::move(S));
                continue;
            }
            // restriction T with M B = B T, solved through RREF of [B | M B]
            ModMat aug(static_cast<std::size_t>(r), ModVec(static_cast<std::size_t>(2 * s), 0));
            for (long row = 0; row < r; ++row)
                for (long c = 0; c < s; ++c) {
                    aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] =
                        S[static_cast<std::size_t>(c)][static_cast<std::size_t>(row)];
                    u64 acc = 0;
                    for (long t = 0; t < r; ++t)
                        acc = addm(acc,
                                   mulm(M[static_cast<std::size_t>(row)][static_cast<std::size_t>(t)],
                                        S[static_cast<std::size_t>(c)][static_cast<std::size_t>(t)], p),
                                   p);
                    aug[static_cast<std::size_t>(row)][static_cast<std::size_t>(s + c)] = acc;
                }
            mod_rref(aug, p);
            ModMat T(static_cast<std::size_t>(s), ModVec(static_cast<std::size_t>(s), 0));
            for (long a = 0; a < s; ++a)
                for (long b = 0; b < s; ++b)
                    T[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                        aug[static_cast<std::size_t>(a)][static_cast<std::size_t>(s + b)];
            ModVec cp = mod_charpoly(T, p);
            std::vector<u64> roots = poly_roots(cp, p);
            long split_total = 0;
            for (u64 lam : roots) {
                ModMat shifted = T;
                for (long d = 0; d < s; ++d)
                    shifted[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)] =
                        subm(shifted[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)], lam, p);
                std::vector<ModVec> ker = mod_kernel(std::move(shifted), p);
                if (ker.empty()) continue;
                std::vector<ModVec> sub;
                for (const ModVec& kv : ker) {
                    ModVec v(static_cast<std::size_t>(r), 0);
                    for (long c = 0; c < s; ++c) {
                        if (!kv[static_cast<std::size_t>(c)]) continue;
                        for (long row = 0; row < r; ++row)
                            v[static_cast<std::size_t>(row)] =
                                addm(v[static_cast<std::size_t>(row)],
                                     mulm(kv[static_cast<std::size_t>(c)],
                                          S[static_cast<std::size_t>(c)][static_cast<std::size_t>(row)], p),
                                     p);
                    }
                    sub.push_back(std::move(v));
                }
                split_total += static_cast<long>(sub.size());
                next.push_back(std::move(sub));
            }
            if (split_total != s)
                throw internal_error("Dixon-Schneider: class matrix restriction not diagonalizable");
        }
        spaces = std::move(next);
    }
    if (static_cast<long>(spaces.size()) != r)
        throw internal_error("Dixon-Schneider: eigenspace count differs from class count");

    // omega vectors, normalized at the identity class
    std::vector<ModVec> omegas;
    for (auto& S : spaces) {
        ModVec v = S[0];
        if (!v[0]) throw internal_error("Dixon-Schneider: omega vanishes at the identity class");
        u64 inv = invm(v[0], p);
        for (auto& x : v) x = mulm(x, inv, p);
        omegas.push_back(std::move(v));
    }

    // degrees from the second orthogonality of omega vectors
    std::vector<u64> inv_size(static_cast<std::size_t>(r));
    for (long j = 0; j < r; ++j) inv_size[static_cast<std::size_t>(j)] = invm(cc.sizes[static_cast<std::size_t>(j)] % p, p);
    std::vector<long> degs(static_cast<std::size_t>(r), 0);
    std::vector<ModVec> chi_p(static_cast<std::size_t>(r), ModVec(static_cast<std::size_t>(r), 0));
    for (std::size_t t = 0; t < omegas.size(); ++t) {
        u64 s = 0;
        for (long j = 0; j < r; ++j)
            s = addm(s,
                     mulm(mulm(omegas[t][static_cast<std::size_t>(j)],
                               omegas[t][static_cast<std::size_t>(jstar[static_cast<std::size_t>(j)])], p),
                          inv_size[static_cast<std::size_t>(j)], p),
                     p);
        u64 d2 = mulm(static_cast<u64>(n % p), invm(s, p), p);
        long d = -1;
        for (u64 y = 1; 2 * y < p; ++y)
            if (mulm(y, y, p) == d2) { d = static_cast<long>(y); break; }
        if (d <= 0) throw internal_error("Dixon-Schneider: no degree square root");
        degs[t] = d;
        for (long j = 0; j < r; ++j)
            chi_p[t][static_cast<std::size_t>(j)] =
                mulm(mulm(static_cast<u64>(d % p), omegas[t][static_cast<std::size_t>(j)], p),
                     inv_size[static_cast<std::size_t>(j)], p);
    }

    // exact lift: chi(g_j) = sum_a m_a zeta_m^a with multiplicities recovered mod p
    u64 w = powm(primitive_root(static_cast<long>(p)), static_cast<u64>((p - 1) / static_cast<u64>(e)), p);
    std::vector<ClassFunction> irred;
    for (std::size_t t = 0; t < omegas.size(); ++t) {
        std::vector<Cyc> values(static_cast<std::size_t>(r), Cyc::zero(e));
        for (long j = 0; j < r; ++j) {
            long m = cc.rep_orders[static_cast<std::size_t>(j)];
            u64 minv = invm(static_cast<u64>(m % static_cast<long>(p)), p);
            u64 wm = powm(w, static_cast<u64>(e / m), p); // primitive m-th root mod p
            Cyc val = Cyc::zero(e);
            for (long a = 0; a < m; ++a) {
                u64 acc = 0;
                for (long k = 0; k < m; ++k) {
                    long cls = g.class_power(j, k);
                    u64 lam = powm(wm, static_cast<u64>(((m - a) * k) % m), p);
                    acc = addm(acc, mulm(chi_p[t][static_cast<std::size_t>(cls)], lam, p), p);
                }
                u64 ma = mulm(acc, minv, p);
                if (ma == 0) continue;
                if (ma > static_cast<u64>(degs[t]))
                    throw internal_error("Dixon-Schneider: eigenvalue multiplicity out of range");
                val += Cyc(static_cast<long>(ma), e) * Cyc::root_of_unity(e, m, a);
            }
            values[static_cast<std::size_t>(j)] = std::move(val);
        }
        irred.emplace_back(g, e, std::move(values));
    }

    std::sort(irred.begin(), irred.end(), [](const ClassFunction& a, const ClassFunction& b) {
        long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.str() < b.str();
    });

    CharacterTable table{&g, e, std::move(irred)};

    // built-in oracle: exact first orthogonality and the degree identity
    long sum_sq = 0;
    for (const auto& chi : table.irreducibles) sum_sq += chi.degree() * chi.degree();
    if (sum_sq != static_cast<long>(n))
        throw internal_error("Dixon-Schneider: degree squares do not sum to |E|");
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = i; j < table.size(); ++j) {
            Cyc ip = inner_product_cyc(table.at(i), table.at(j));
            if (ip != Cyc(i == j ? 1 : 0, ip.conductor()))
                throw internal_error("Dixon-Schneider: orthogonality failed");
        }
    return table;
}

Cyc inner_product_cyc(const ClassFunction& a, const ClassFunction& b) {
    auto [x, y] = align_cf(a, b);
    const auto& cc = x.group().classes();
    Cyc acc = Cyc::zero(x.conductor());
    for (std::size_t c = 0; c < cc.sizes.size(); ++c)
        acc += Cyc(QQ(static_cast<long>(cc.sizes[c])), x.conductor()) * x.values()[c] * y.values()[c].conj();
    return acc * Cyc(QQ(1) / static_cast<long>(x.group().order()), x.conductor());
}

QQ inner_product(const ClassFunction& a, const ClassFunction& b) {
    Cyc v = inner_product_cyc(a, b);
    if (!v.is_rational())
        throw not_a_character("inner product is not rational: " + v.str());
    return v.rational_value();
}

long CharDecomposition::degree() const {
    long d = 0;
    for (std::size_t i = 0; i < mult.size(); ++i)
        d += mult[i] * table->irreducibles[i].degree();
    return d;
}

bool CharDecomposition::is_zero() const {
    return std::all_of(mult.begin(), mult.end(), [](long m) { return m == 0; });
}

CharDecomposition decompose(const ClassFunction& chi, const CharacterTable& table) {
    if (&chi.group() != table.group)
        throw precondition_error("decompose: character lives on a different group");
    CharDecomposition dec{&table, std::vector<long>(table.size(), 0)};
    for (std::size_t i = 0; i < table.size(); ++i) {
        Cyc v = inner_product_cyc(chi, table.at(i));
        if (!v.is_rational()) throw not_a_character("multiplicity not rational");
        QQ q = v.rational_value();
        if (denominator(q) != 1 || q < 0)
            throw not_a_character("multiplicity " + q.str() + " is not a nonnegative integer");
        dec.mult[i] = static_cast<long>(numerator(q));
    }
    if (!(class_function_of(dec) == chi))
        throw not_a_character("class function is not a character of this table");
    return dec;
}

ClassFunction class_function_of(const CharDecomposition& dec) {
    const CharacterTable& t = *dec.table;
    std::vector<Cyc> vals(t.group->class_count(), Cyc::zero(t.conductor));
    ClassFunction acc(*t.group, t.conductor, std::move(vals));
    for (std::size_t i = 0; i < dec.mult.size(); ++i) {
        if (!dec.mult[i]) continue;
        acc = acc + t.at(i).scaled(Cyc(dec.mult[i], t.conductor));
    }
    return acc;
}

std::vector<CharDecomposition> constituents_of_degree(const CharDecomposition& dec, long t) {
    if (t < 1) throw precondition_error("constituent degree must be >= 1");
    const CharacterTable& table = *dec.table;
    std::vector<long> degs = table.degrees();
    std::vector<CharDecomposition> out;
    std::vector<long> cur(dec.mult.size(), 0);
    // lexicographic DFS over multiplicity vectors
    auto rec = [&](auto&& self, std::size_t i, long remaining) -> void {
        if (remaining == 0) {
            // pad the tail with zeros and emit
            CharDecomposition d{&table, cur};
            for (std::size_t j = i; j < cur.size(); ++j) d.mult[j] = 0;
            out.push_back(std::move(d));
            return;
        }
        if (i == cur.size()) return;
        long cap = std::min(dec.mult[i], remaining / degs[i]);
        for (long c = 0; c <= cap; ++c) {
            cur[i] = c;
            self(self, i + 1, remaining - c * degs[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, t);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// shared recurrence driver: coef(i) multiplies chi(e^i) against prev[t-i]
ClassFunction newton_recurrence(const ClassFunction& chi, long t, bool exterior) {
    const FiniteGroup& g = chi.group();
    const long r = static_cast<long>(g.class_count());
    const long n = chi.conductor();
    std::vector<std::vector<Cyc>> rows; // rows[tau][class]
    rows.emplace_back(static_cast<std::size_t>(r), Cyc::one(n));
    for (long tau = 1; tau <= t; ++tau) {
        std::vector<Cyc> cur(static_cast<std::size_t>(r), Cyc::zero(n));
        for (long c = 0; c < r; ++c) {
            Cyc acc = Cyc::zero(n);
            for (long i = 1; i <= tau; ++i) {
                const Cyc& chival = chi.value(g.class_power(c, i));
                Cyc term = rows[static_cast<std::size_t>(tau - i)][static_cast<std::size_t>(c)] * chival;
                if (exterior && i % 2 == 0) acc -= term;
                else acc += term;
            }
            cur[static_cast<std::size_t>(c)] = acc * Cyc(QQ(1) / tau, n);
        }
        rows.push_back(std::move(cur));
    }
    return ClassFunction(g, n, std::move(rows[static_cast<std::size_t>(t)]));
}

} // namespace

ClassFunction ext_power_char(const ClassFunction& chi, long t) {
    if (t < 0) throw precondition_error("exterior power degree must be >= 0");
    return newton_recurrence(chi, t, true);
}

ClassFunction sym_power_char(const ClassFunction& chi, long d) {
    if (d < 0) throw precondition_error("symmetric power degree must be >= 0");
    return newton_recurrence(chi, d, false);
}

ClassFunction det_char(const CharDecomposition& dec) {
    const CharacterTable& t = *dec.table;
    const long n = t.conductor;
    std::vector<Cyc> vals(t.group->class_count(), Cyc::one(n));
    ClassFunction acc(*t.group, n, std::move(vals));
    for (std::size_t i = 0; i < dec.mult.size(); ++i) {
        if (!dec.mult[i]) continue;
        ClassFunction dmu = ext_power_char(t.at(i), t.at(i).degree());
        for (long k = 0; k < dec.mult[i]; ++k) acc = acc * dmu;
    }
    if (acc.degree() != 1) throw internal_error("det_char: result is not linear");
    return acc;
}

FiniteGroup::Subgroup center_of_character(const ClassFunction& chi) {
    if (chi.degree_value().is_zero())
        throw precondition_error("center_of_character: chi(1) = 0");
    const FiniteGroup& g = chi.group();
    Cyc dinv = chi.degree_value().inverse();
    const auto& cls = g.classes();
    std::vector<bool> in_class(cls.reps.size());
    for (std::size_t c = 0; c < cls.reps.size(); ++c)
        in_class[c] = (chi.value(static_cast<long>(c)) * dinv).is_root_of_unity();
    try {
        return g.subgroup_where(
            [&](std::size_t e) { return in_class[static_cast<std::size_t>(cls.class_of[e])]; });
    } catch (const precondition_error&) {
        throw not_a_character("center of the given class function is not a subgroup");
    }
}

} // namespace igt

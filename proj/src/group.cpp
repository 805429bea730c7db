#include "igt/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace igt {

namespace {

Mat scalar_normalize(const Mat& m) {
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) {
                if (m.at(i, j) == Cyc::one(m.conductor())) return m;
                return m.scaled(m.at(i, j).inverse());
            }
    throw precondition_error("cannot normalize the zero matrix");
}

std::string perm_key(const std::vector<long>& p) {
    std::ostringstream os;
    os << "p";
    for (long v : p) os << ":" << v;
    return os.str();
}

std::vector<long> perm_compose(const std::vector<long>& a, const std::vector<long>& b) {
    // (a then b): image[i] = b[a[i]]
    std::vector<long> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
    return out;
}

} // namespace

std::string FiniteGroup::payload_key(const Mat& m) const { return m.key(); }

std::size_t FiniteGroup::intern(std::string key, std::size_t parent, int gen) {
    auto [it, inserted] = index_.emplace(std::move(key), keys_.size());
    if (inserted) {
        keys_.push_back(&it->first);
        parent_.push_back(parent);
        lastgen_.push_back(gen);
    }
    return it->second;
}

FiniteGroup FiniteGroup::matrix_closure(std::vector<Mat> generators, Realization mode,
                                        std::size_t cap) {
    if (generators.empty()) throw precondition_error("closure: no generators");
    if (mode == Realization::Permutation)
        throw precondition_error("matrix_closure: mode must be Linear or Projective");
    FiniteGroup g;
    g.realization_ = mode;
    g.conductor_ = generators[0].conductor();
    g.degree_ = generators[0].rows();
    for (auto& m : generators) {
        if (!m.is_square() || m.rows() != g.degree_ || m.conductor() != g.conductor_)
            throw precondition_error("closure: generators must be square, same size, same conductor");
        if (det(m).is_zero()) throw precondition_error("closure: singular generator");
        if (mode == Realization::Projective) m = scalar_normalize(m);
    }
    g.gen_mats_ = std::move(generators);
    g.closure_run(cap);
    return g;
}

FiniteGroup FiniteGroup::permutation_closure(std::vector<std::vector<long>> generators,
                                             std::size_t cap) {
    if (generators.empty()) throw precondition_error("closure: no generators");
    FiniteGroup g;
    g.realization_ = Realization::Permutation;
    g.degree_ = static_cast<long>(generators[0].size());
    for (auto& p : generators) {
        if (static_cast<long>(p.size()) != g.degree_)
            throw precondition_error("closure: permutation degrees differ");
        std::vector<bool> seen(p.size(), false);
        for (auto& v : p) {
            if (v < 1 || v > g.degree_ || seen[static_cast<std::size_t>(v - 1)])
                throw precondition_error("closure: not a permutation (1-based images expected)");
            seen[static_cast<std::size_t>(v - 1)] = true;
            v -= 1; // store 0-based
        }
        g.gen_perms_.push_back(std::move(p));
    }
    g.closure_run(cap);
    return g;
}

void FiniteGroup::closure_run(std::size_t cap) {
    const std::size_t ngens = std::max(gen_mats_.size(), gen_perms_.size());
    rmul_.assign(ngens, {});

    const bool matrix_mode = realization_ != Realization::Permutation;
    std::vector<Mat> live_mats;      // aligned with indices, cleared layer by layer
    std::vector<std::vector<long>> live_perms;

    if (matrix_mode) {
        Mat id = Mat::identity(degree_, conductor_);
        intern(payload_key(id), 0, -1);
        live_mats.push_back(std::move(id));
    } else {
        std::vector<long> id(static_cast<std::size_t>(degree_));
        std::iota(id.begin(), id.end(), 0);
        intern(perm_key(id), 0, -1);
        live_perms.push_back(std::move(id));
    }

    gen_elem_.clear();

    std::size_t layer_begin = 0, layer_end = 1;
    while (layer_begin < layer_end) {
        for (std::size_t e = layer_begin; e < layer_end; ++e) {
            for (std::size_t gi = 0; gi < ngens; ++gi) {
                std::size_t target;
                if (matrix_mode) {
                    Mat p = live_mats[e] * gen_mats_[gi];
                    if (realization_ == Realization::Projective) p = scalar_normalize(p);
                    std::string k = payload_key(p);
                    std::size_t before = keys_.size();
                    target = intern(std::move(k), e, static_cast<int>(gi));
                    if (target == before) live_mats.push_back(std::move(p));
                } else {
                    std::vector<long> p = perm_compose(live_perms[e], gen_perms_[gi]);
                    std::string k = perm_key(p);
                    std::size_t before = keys_.size();
                    target = intern(std::move(k), e, static_cast<int>(gi));
                    if (target == before) live_perms.push_back(std::move(p));
                }
                if (keys_.size() > cap)
                    throw cap_exceeded("group closure exceeded cap of " + std::to_string(cap) +
                                       " elements");
                for (auto& r : rmul_) r.resize(keys_.size());
                rmul_[gi][e] = target;
            }
        }
        // Matrices of the finished layer are no longer needed: children carry
        // their own.  Keep the identity and release the rest.
        if (matrix_mode)
            for (std::size_t e = std::max<std::size_t>(layer_begin, 1); e < layer_end; ++e)
                live_mats[e] = Mat();
        layer_begin = layer_end;
        layer_end = keys_.size();
    }

    for (std::size_t gi = 0; gi < ngens; ++gi)
        gen_elem_.push_back(rmul_[gi][0]);
}

const Mat& FiniteGroup::generator_matrix(std::size_t g) const {
    if (realization_ == Realization::Permutation)
        throw precondition_error("permutation group has no generator matrices");
    return gen_mats_[g];
}

std::vector<int> FiniteGroup::word(std::size_t e) const {
    std::vector<int> w;
    while (e != 0) {
        w.push_back(lastgen_[e]);
        e = parent_[e];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

Mat FiniteGroup::element_matrix(std::size_t e) const {
    if (realization_ == Realization::Permutation)
        throw precondition_error("permutation group has no element matrices");
    Mat m = Mat::identity(degree_, conductor_);
    for (int g : word(e)) m = m * gen_mats_[static_cast<std::size_t>(g)];
    if (realization_ == Realization::Projective) m = scalar_normalize(m);
    return m;
}

std::vector<long> FiniteGroup::element_permutation(std::size_t e) const {
    if (realization_ != Realization::Permutation)
        throw precondition_error("not a permutation group");
    std::vector<long> p(static_cast<std::size_t>(degree_));
    std::iota(p.begin(), p.end(), 0);
    for (int g : word(e)) p = perm_compose(p, gen_perms_[static_cast<std::size_t>(g)]);
    return p;
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const {
    if (b == 0) return a;
    return rmul_[static_cast<std::size_t>(lastgen_[b])][mul(a, parent_[b])];
}

void FiniteGroup::ensure_inverses() const {
    if (!inverse_.empty()) return;
    std::vector<std::size_t> geninv(gen_elem_.size());
    for (std::size_t g = 0; g < gen_elem_.size(); ++g) {
        std::size_t x = gen_elem_[g], acc = 0;
        // acc = gen^(ord-1)
        std::size_t cur = x;
        while (cur != 0) {
            acc = cur;
            cur = mul(cur, x);
        }
        geninv[g] = (x == 0) ? 0 : acc;
    }
    inverse_.resize(order());
    inverse_[0] = 0;
    for (std::size_t e = 1; e < order(); ++e)
        inverse_[e] = mul(geninv[static_cast<std::size_t>(lastgen_[e])], inverse_[parent_[e]]);
}

std::size_t FiniteGroup::inverse(std::size_t a) const {
    ensure_inverses();
    return inverse_[a];
}

std::size_t FiniteGroup::power(std::size_t a, long k) const {
    if (k < 0) return power(inverse(a), -k);
    std::size_t acc = 0;
    for (long i = 0; i < k; ++i) acc = mul(acc, a);
    return acc;
}

long FiniteGroup::element_order(std::size_t a) const {
    if (a == 0) return 1;
    long o = 1;
    std::size_t x = a;
    while (x != 0) {
        x = mul(x, a);
        ++o;
        if (static_cast<std::size_t>(o) > order() + 1)
            throw internal_error("element order exceeded group order");
    }
    return o;
}

bool FiniteGroup::is_central(std::size_t e) const {
    for (std::size_t g : gen_elem_)
        if (mul(e, g) != mul(g, e)) return false;
    return true;
}

std::optional<std::size_t> FiniteGroup::index_of_matrix(const Mat& m) const {
    if (realization_ == Realization::Permutation) return std::nullopt;
    Mat mm = (realization_ == Realization::Projective) ? scalar_normalize(m) : m;
    auto it = index_.find(mm.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const FiniteGroup::ConjugacyClasses& FiniteGroup::classes() const {
    if (classes_ready_) return classes_;
    const std::size_t n = order();
    std::vector<long> cls(n, -1);
    std::vector<std::size_t> reps;
    ensure_inverses();
    std::vector<std::size_t> geninv(gen_elem_.size());
    for (std::size_t g = 0; g < gen_elem_.size(); ++g) geninv[g] = inverse_[gen_elem_[g]];
    for (std::size_t s = 0; s < n; ++s) {
        if (cls[s] != -1) continue;
        long c = static_cast<long>(reps.size());
        reps.push_back(s);
        std::vector<std::size_t> stack{s};
        cls[s] = c;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t g = 0; g < gen_elem_.size(); ++g) {
                std::size_t y = mul(mul(geninv[g], x), gen_elem_[g]);
                if (cls[y] == -1) {
                    cls[y] = c;
                    stack.push_back(y);
                }
            }
        }
    }
    std::vector<std::size_t> sizes(reps.size(), 0);
    for (long c : cls) sizes[static_cast<std::size_t>(c)]++;
    std::vector<long> orders(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) orders[c] = element_order(reps[c]);

    // Deterministic ordering: identity class first (order 1), then by
    // (representative order, class size, representative index).
    std::vector<std::size_t> perm(reps.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (orders[a] != orders[b]) return orders[a] < orders[b];
        if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
        return reps[a] < reps[b];
    });
    std::vector<long> rank(reps.size());
    for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = static_cast<long>(i);

    classes_.reps.resize(reps.size());
    classes_.sizes.resize(reps.size());
    classes_.rep_orders.resize(reps.size());
    classes_.class_of.resize(n);
    for (std::size_t c = 0; c < reps.size(); ++c) {
        classes_.reps[static_cast<std::size_t>(rank[c])] = reps[c];
        classes_.sizes[static_cast<std::size_t>(rank[c])] = sizes[c];
        classes_.rep_orders[static_cast<std::size_t>(rank[c])] = orders[c];
    }
    for (std::size_t e = 0; e < n; ++e)
        classes_.class_of[e] = rank[static_cast<std::size_t>(cls[e])];
    classes_ready_ = true;
    return classes_;
}

long FiniteGroup::class_power(long cls, long k) const {
    auto key = std::make_pair(cls, k);
    auto it = class_power_cache_.find(key);
    if (it != class_power_cache_.end()) return it->second;
    const auto& cc = classes();
    long out = cc.class_of[power(cc.reps[static_cast<std::size_t>(cls)], k)];
    class_power_cache_.emplace(key, out);
    return out;
}

long FiniteGroup::exponent() const {
    if (exponent_ != 0) return exponent_;
    const auto& cc = classes();
    long e = 1;
    for (long o : cc.rep_orders) e = std::lcm(e, o);
    exponent_ = e;
    return e;
}

void FiniteGroup::ensure_children() const {
    if (!children_.empty()) return;
    children_.resize(order());
    for (std::size_t e = 1; e < order(); ++e)
        children_[parent_[e]].emplace_back(e, lastgen_[e]);
}

void FiniteGroup::for_each_element_matrix(
    const std::function<void(std::size_t, const Mat&)>& visit) const {
    if (realization_ == Realization::Permutation)
        throw precondition_error("permutation group has no element matrices");
    ensure_children();
    struct Frame {
        std::size_t idx;
        Mat mat;
        std::size_t next_child = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({0, Mat::identity(degree_, conductor_), 0});
    visit(0, stack.back().mat);
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& kids = children_[f.idx];
        if (f.next_child >= kids.size()) {
            stack.pop_back();
            continue;
        }
        auto [child, gen] = kids[f.next_child++];
        Mat m = f.mat * gen_mats_[static_cast<std::size_t>(gen)];
        if (realization_ == Realization::Projective) m = scalar_normalize(m);
        visit(child, m);
        stack.push_back({child, std::move(m), 0});
    }
}

bool FiniteGroup::Subgroup::contains(std::size_t e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
}

FiniteGroup::Subgroup FiniteGroup::subgroup_generated(std::vector<std::size_t> gens) const {
    std::vector<bool> in(order(), false);
    in[0] = true;
    std::vector<std::size_t> members{0};
    std::deque<std::size_t> queue{0};
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t s : gens) {
            std::size_t y = mul(x, s);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
                queue.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return Subgroup{this, std::move(members)};
}

FiniteGroup::Subgroup FiniteGroup::subgroup_where(
    const std::function<bool(std::size_t)>& pred) const {
    std::vector<std::size_t> sel;
    for (std::size_t e = 0; e < order(); ++e)
        if (pred(e)) sel.push_back(e);
    if (sel.empty() || sel[0] != 0)
        throw precondition_error("predicate set does not contain the identity");
    // Grow a verified generating set until the generated subgroup matches.
    std::vector<std::size_t> gens;
    Subgroup h = subgroup_generated({});
    while (h.elements != sel) {
        std::size_t fresh = 0;
        bool found = false;
        for (std::size_t e : sel)
            if (!h.contains(e)) {
                fresh = e;
                found = true;
                break;
            }
        if (!found) {
            // h strictly larger than sel: closure escaped the predicate set.
            throw precondition_error("predicate set is not a subgroup (not closed under multiplication)");
        }
        gens.push_back(fresh);
        h = subgroup_generated(gens);
        for (std::size_t e : h.elements)
            if (!std::binary_search(sel.begin(), sel.end(), e))
                throw precondition_error("predicate set is not a subgroup (not closed under multiplication)");
    }
    return h;
}

bool FiniteGroup::is_subgroup_equal(const Subgroup& a, const Subgroup& b) {
    return a.group == b.group && a.elements == b.elements;
}

FiniteGroup::Subgroup FiniteGroup::derived_subgroup() const {
    ensure_inverses();
    std::vector<std::size_t> gens;
    for (std::size_t a : gen_elem_)
        for (std::size_t b : gen_elem_) {
            std::size_t comm = mul(mul(inverse_[a], inverse_[b]), mul(a, b));
            if (comm != 0) gens.push_back(comm);
        }
    // close the generating set under conjugation to get the normal closure
    while (true) {
        Subgroup h = subgroup_generated(gens);
        bool grew = false;
        std::vector<std::size_t> add;
        for (std::size_t x : gens)
            for (std::size_t g : gen_elem_) {
                std::size_t y = mul(mul(inverse_[g], x), g);
                if (!h.contains(y)) {
                    add.push_back(y);
                    grew = true;
                }
            }
        if (!grew) return h;
        gens.insert(gens.end(), add.begin(), add.end());
    }
}

} // namespace igt

#pragma once

#include "igt/linalg.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace igt {

/// Fully enumerated finite group, realized by permutations, by matrices, or by
/// matrices modulo scalars (projective mode, where every element is stored
/// scalar-normalized so that its first nonzero entry is 1).
///
/// Elements are identified by their BFS discovery index; index 0 is the
/// identity.  Every element stores the generator word reaching it, and all
/// group arithmetic is done on indices via the right-multiplication tables
/// recorded during closure, so matrices are never needed after enumeration.
/// Immutable after construction and safe to share between threads.
class FiniteGroup {
public:
    enum class Realization { Permutation, Linear, Projective };

    /// BFS closure of matrix generators.  In projective mode generators and
    /// all products are scalar-normalized before hashing, so the result is
    /// the image in PGL.  Throws cap_exceeded when the enumeration passes
    /// `cap` elements.
    static FiniteGroup matrix_closure(std::vector<Mat> generators, Realization mode,
                                      std::size_t cap = 1000000);

    /// BFS closure of permutation generators given as 1-based image arrays.
    static FiniteGroup permutation_closure(std::vector<std::vector<long>> generators,
                                           std::size_t cap = 1000000);

    Realization realization() const { return realization_; }
    std::size_t order() const { return keys_.size(); }
    std::size_t generator_count() const { return gen_elem_.size(); }
    /// Element index of generator g.
    std::size_t generator_element(std::size_t g) const { return gen_elem_[g]; }
    const Mat& generator_matrix(std::size_t g) const;
    long conductor() const { return conductor_; }
    /// Matrix dimension, or permutation degree.
    long degree() const { return degree_; }

    // --- element data ---
    std::vector<int> word(std::size_t e) const;
    std::size_t parent_of(std::size_t e) const { return parent_[e]; }
    int last_gen_of(std::size_t e) const { return lastgen_[e]; }
    const std::string& element_key(std::size_t e) const { return *keys_[e]; }
    /// Matrix of an element (linear/projective realizations), evaluated from
    /// its word.  Projective elements come back scalar-normalized.
    Mat element_matrix(std::size_t e) const;
    std::vector<long> element_permutation(std::size_t e) const;

    // --- index arithmetic ---
    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;
    std::size_t power(std::size_t a, long k) const;
    long element_order(std::size_t a) const;
    long exponent() const;
    bool is_central(std::size_t e) const;

    /// Looks an explicit matrix up in the element table (normalizing first in
    /// projective mode).
    std::optional<std::size_t> index_of_matrix(const Mat& m) const;

    // --- conjugacy classes ---
    struct ConjugacyClasses {
        std::vector<std::size_t> reps;   // least element index per class
        std::vector<std::size_t> sizes;
        std::vector<long> class_of;      // element index -> class index
        std::vector<long> rep_orders;
    };
    /// Identity class first, then ordered by (representative order, class
    /// size, representative index).  Computed once and cached.
    const ConjugacyClasses& classes() const;
    std::size_t class_count() const { return classes().reps.size(); }
    /// Class of rep(cls)^k.
    long class_power(long cls, long k) const;

    /// Visits every element together with its matrix, streaming depth-first
    /// over the BFS tree so only O(depth) matrices are alive at once.
    void for_each_element_matrix(const std::function<void(std::size_t, const Mat&)>& visit) const;

    // --- subgroups ---
    struct Subgroup {
        const FiniteGroup* group = nullptr;
        std::vector<std::size_t> elements; // sorted
        std::size_t order() const { return elements.size(); }
        bool contains(std::size_t e) const;
    };
    /// The subgroup of elements satisfying `pred`; throws precondition_error
    /// when the set is not closed under multiplication.
    Subgroup subgroup_where(const std::function<bool(std::size_t)>& pred) const;
    Subgroup subgroup_generated(std::vector<std::size_t> gens) const;
    static bool is_subgroup_equal(const Subgroup& a, const Subgroup& b);
    /// Smallest normal subgroup containing all commutators of generators.
    Subgroup derived_subgroup() const;

private:
    FiniteGroup() = default;
    void closure_run(std::size_t cap);
    std::string payload_key(const Mat& m) const;
    std::size_t intern(std::string key, std::size_t parent, int gen);
    void ensure_inverses() const;
    void ensure_children() const;

    Realization realization_ = Realization::Permutation;
    long conductor_ = 1;
    long degree_ = 0;

    std::vector<Mat> gen_mats_;                  // linear/projective (normalized)
    std::vector<std::vector<long>> gen_perms_;   // permutation images, 0-based

    std::unordered_map<std::string, std::size_t> index_;
    std::vector<const std::string*> keys_;
    std::vector<std::size_t> parent_;
    std::vector<int> lastgen_;
    std::vector<std::size_t> gen_elem_;
    std::vector<std::vector<std::size_t>> rmul_;  // per generator: index -> index

    mutable std::vector<std::size_t> inverse_;    // lazy
    mutable std::vector<std::vector<std::pair<std::size_t, int>>> children_; // lazy BFS tree
    mutable ConjugacyClasses classes_;
    mutable bool classes_ready_ = false;
    mutable long exponent_ = 0;
    mutable std::map<std::pair<long, long>, long> class_power_cache_;
};

} // namespace igt

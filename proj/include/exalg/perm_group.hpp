#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace exalg {

struct OrderBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotNormal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAbelian : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Permutation of {0,...,deg-1} given by its image sequence.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int x : img_) {
            if (x < 0 || static_cast<size_t>(x) >= img_.size() || seen[x])
                throw std::domain_error("Perm: not a bijection");
            seen[x] = true;
        }
    }
    static Perm identity(int degree) {
        std::vector<int> v(degree);
        std::iota(v.begin(), v.end(), 0);
        return Perm(std::move(v));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    /// (a*b)(x) = a(b(x)).
    Perm operator*(const Perm& o) const {
        std::vector<int> v(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) v[i] = img_[o.img_[i]];
        Perm p;
        p.img_ = std::move(v);
        return p;
    }
    Perm inverse() const {
        std::vector<int> v(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<int>(i);
        Perm p;
        p.img_ = std::move(v);
        return p;
    }
    bool is_identity() const {
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    /// Cycle notation, e.g. "(0 1)(2 4 3)"; identity prints as "()".
    std::string cycles() const {
        std::string out;
        std::vector<bool> seen(img_.size(), false);
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == static_cast<int>(i)) continue;
            out += "(";
            size_t j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) out += " ";
                first = false;
                out += std::to_string(j);
                j = img_[j];
            }
            out += ")";
        }
        return out.empty() ? "()" : out;
    }

private:
    std::vector<int> img_;
};

/// Finite permutation group with full element enumeration. Immutable after
/// construction; the element list is sorted lexicographically on image
/// sequences and all deterministic "least element" choices refer to it.
class PermGroup {
public:
    static constexpr size_t kDefaultOrderBound = 512;

    /// Breadth-first closure of the generators.
    static std::shared_ptr<const PermGroup> close(int degree, std::vector<Perm> gens,
                                                  std::string name = "",
                                                  size_t bound = kDefaultOrderBound) {
        std::set<Perm> elems;
        std::vector<Perm> frontier;
        elems.insert(Perm::identity(degree));
        frontier.push_back(Perm::identity(degree));
        for (const auto& g : gens) {
            if (g.degree() != degree) throw std::domain_error("PermGroup: degree mismatch");
        }
        while (!frontier.empty()) {
            std::vector<Perm> next;
            for (const auto& e : frontier) {
                for (const auto& g : gens) {
                    Perm p = g * e;
                    if (elems.insert(p).second) {
                        if (elems.size() > bound)
                            throw OrderBoundExceeded("PermGroup: order bound " +
                                                     std::to_string(bound) + " exceeded");
                        next.push_back(std::move(p));
                    }
                }
            }
            frontier = std::move(next);
        }
        auto g = std::shared_ptr<PermGroup>(new PermGroup());
        g->degree_ = degree;
        g->gens_ = std::move(gens);
        g->name_ = std::move(name);
        g->elems_.assign(elems.begin(), elems.end());
        g->finalize();
        return g;
    }

    int degree() const { return degree_; }
    size_t order() const { return elems_.size(); }
    const std::string& name() const { return name_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<Perm>& elements() const { return elems_; }
    const Perm& elem(int i) const { return elems_[i]; }

    int index_of(const Perm& p) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
        if (it == elems_.end() || !(*it == p)) throw std::domain_error("PermGroup: not a member");
        return static_cast<int>(it - elems_.begin());
    }
    bool contains(const Perm& p) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
        return it != elems_.end() && *it == p;
    }

    int id() const { return id_; }
    int mul(int a, int b) const { return mult_[a * elems_.size() + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }  // g a g^-1

    int elem_order(int a) const {
        int k = 1, x = a;
        while (x != id_) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }
    long exponent() const {
        long e = 1;
        for (size_t i = 0; i < elems_.size(); ++i)
            e = std::lcm(e, static_cast<long>(elem_order(static_cast<int>(i))));
        return e;
    }

    bool is_abelian() const {
        for (size_t a = 0; a < elems_.size(); ++a)
            for (size_t b = a + 1; b < elems_.size(); ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    /// Conjugacy classes as sorted index lists; the identity class comes first,
    /// classes ordered by their least member.
    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    int class_of(int a) const { return class_of_[a]; }

    /// Subgroup generated by the given element indices (sorted index list).
    std::vector<int> subgroup_closure(std::vector<int> seed) const {
        std::set<int> got(seed.begin(), seed.end());
        got.insert(id_);
        std::vector<int> frontier(got.begin(), got.end());
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int a : frontier) {
                for (int s : seed) {
                    for (int p : {mul(a, s), mul(a, inv_[s])}) {
                        if (got.insert(p).second) next.push_back(p);
                    }
                }
            }
            frontier = std::move(next);
        }
        return {got.begin(), got.end()};
    }

private:
    PermGroup() = default;

    void finalize() {
        size_t n = elems_.size();
        mult_.resize(n * n);
        inv_.resize(n);
        for (size_t a = 0; a < n; ++a) {
            for (size_t b = 0; b < n; ++b) {
                Perm p = elems_[a] * elems_[b];
                auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
                if (it == elems_.end() || !(*it == p))
                    throw std::logic_error("PermGroup: closure violated");
                mult_[a * n + b] = static_cast<int>(it - elems_.begin());
            }
        }
        id_ = index_of(Perm::identity(degree_));
        for (size_t a = 0; a < n; ++a) {
            for (size_t b = 0; b < n; ++b)
                if (mult_[a * n + b] == id_) {
                    inv_[a] = static_cast<int>(b);
                    break;
                }
        }
        // conjugacy classes
        class_of_.assign(n, -1);
        for (size_t a = 0; a < n; ++a) {
            if (class_of_[a] >= 0) continue;
            std::set<int> cls;
            for (size_t g = 0; g < n; ++g) cls.insert(conj(static_cast<int>(g), static_cast<int>(a)));
            int ci = static_cast<int>(classes_.size());
            classes_.emplace_back(cls.begin(), cls.end());
            for (int x : cls) class_of_[x] = ci;
        }
    }

    int degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elems_;
    std::string name_;
    std::vector<int> mult_;
    std::vector<int> inv_;
    int id_ = 0;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

/// Subgroup of a PermGroup given by a sorted member index list.
struct Subgroup {
    GroupPtr parent;
    std::vector<int> members;  // sorted element indices, closed
    bool is_normal = false;
    bool is_abelian = false;

    size_t order() const { return members.size(); }
    bool contains(int idx) const {
        return std::binary_search(members.begin(), members.end(), idx);
    }
};

inline Subgroup make_subgroup(const GroupPtr& g, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup s{g, members, true, true};
    for (int a : members)
        for (int b : members) {
            if (!s.contains(g->mul(a, b))) throw std::domain_error("Subgroup: not closed");
            if (g->mul(a, b) != g->mul(b, a)) s.is_abelian = false;
        }
    for (size_t x = 0; x < g->order() && s.is_normal; ++x)
        for (int a : members)
            if (!s.contains(g->conj(static_cast<int>(x), a))) {
                s.is_normal = false;
                break;
            }
    return s;
}

/// All subgroups of G that are both normal and abelian, found by closing
/// unions of conjugacy classes (every normal subgroup is a union of classes).
inline std::vector<Subgroup> normal_abelian_subgroups(const GroupPtr& g) {
    const auto& classes = g->conjugacy_classes();
    size_t k = classes.size();
    int id_class = g->class_of(g->id());
    std::vector<int> others;
    for (size_t c = 0; c < k; ++c)
        if (static_cast<int>(c) != id_class) others.push_back(static_cast<int>(c));
    if (others.size() > 24) throw OrderBoundExceeded("normal_abelian_subgroups: too many classes");

    std::set<std::vector<int>> seen;
    std::vector<Subgroup> result;
    for (size_t mask = 0; mask < (size_t(1) << others.size()); ++mask) {
        std::vector<int> uni = classes[id_class];
        for (size_t b = 0; b < others.size(); ++b)
            if (mask & (size_t(1) << b))
                uni.insert(uni.end(), classes[others[b]].begin(), classes[others[b]].end());
        std::sort(uni.begin(), uni.end());
        std::vector<int> closed = g->subgroup_closure(uni);
        if (closed != uni) continue;  // not already a subgroup; appears as another union
        if (!seen.insert(closed).second) continue;
        Subgroup s = make_subgroup(g, closed);
        if (s.is_abelian) result.push_back(std::move(s));
    }
    std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return result;
}

/// Minimal index [G:A] over normal abelian subgroups A (Theorem-level criterion).
inline size_t min_abelian_index(const GroupPtr& g) {
    size_t best = g->order();  // index of the trivial subgroup
    for (const auto& s : normal_abelian_subgroups(g)) best = std::min(best, g->order() / s.order());
    return best;
}

/// Whether some normal abelian subgroup has index dividing d.
inline bool can_grade(const GroupPtr& g, size_t d) {
    for (const auto& s : normal_abelian_subgroups(g)) {
        size_t idx = g->order() / s.order();
        if (d % idx == 0) return true;
    }
    return false;
}

/// Quotient G/N realized faithfully by the left action on cosets, plus the
/// projection map and the lexicographically-least coset section.
struct Quotient {
    GroupPtr group;             // the quotient as a permutation group on cosets
    std::vector<int> proj;      // G element index -> quotient element index
    std::vector<int> section;   // quotient element index -> least G element index
};

inline Quotient quotient(const GroupPtr& g, const Subgroup& n) {
    if (n.parent.get() != g.get()) throw std::domain_error("quotient: subgroup of another group");
    if (!n.is_normal) throw NotNormal("quotient: subgroup is not normal");
    size_t order = g->order();
    std::vector<int> coset_of(order, -1);
    std::vector<std::vector<int>> cosets;
    for (size_t a = 0; a < order; ++a) {
        if (coset_of[a] >= 0) continue;
        std::vector<int> coset;
        for (int x : n.members) coset.push_back(g->mul(static_cast<int>(a), x));
        std::sort(coset.begin(), coset.end());
        int ci = static_cast<int>(cosets.size());
        for (int x : coset) coset_of[x] = ci;
        cosets.push_back(std::move(coset));
    }
    // order cosets by least member; identity coset is first since the identity
    // permutation is the lexicographic minimum.
    std::vector<int> perm_order(cosets.size());
    std::iota(perm_order.begin(), perm_order.end(), 0);
    std::sort(perm_order.begin(), perm_order.end(),
              [&](int a, int b) { return cosets[a][0] < cosets[b][0]; });
    std::vector<int> rank(cosets.size());
    for (size_t i = 0; i < perm_order.size(); ++i) rank[perm_order[i]] = static_cast<int>(i);

    size_t q = cosets.size();
    // left action of each group element on cosets
    auto act = [&](int a) {
        std::vector<int> images(q);
        for (size_t c = 0; c < q; ++c) {
            int rep = cosets[perm_order[c]][0];
            images[c] = rank[coset_of[g->mul(a, rep)]];
        }
        return Perm(std::move(images));
    };
    std::vector<Perm> gens;
    for (const auto& gen : g->generators()) gens.push_back(act(g->index_of(gen)));
    auto qg = PermGroup::close(static_cast<int>(q), gens, g->name() + "/N");
    Quotient out;
    out.group = qg;
    out.proj.resize(order);
    for (size_t a = 0; a < order; ++a) out.proj[a] = qg->index_of(act(static_cast<int>(a)));
    out.section.assign(qg->order(), -1);
    for (size_t a = 0; a < order; ++a) {
        int h = out.proj[a];
        if (out.section[h] < 0 || static_cast<int>(a) < out.section[h])
            out.section[h] = static_cast<int>(a);
    }
    return out;
}

/// Finite group presented by an explicit multiplication table on labeled
/// elements, realized as a PermGroup through the left regular representation.
struct LabeledGroup {
    GroupPtr group;                   // regular representation
    std::vector<std::string> labels;  // label of table index i
    std::vector<int> to_perm;         // table index -> PermGroup element index
    std::vector<int> from_perm;       // PermGroup element index -> table index

    int index_of_label(const std::string& s) const {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == s) return static_cast<int>(i);
        throw std::domain_error("LabeledGroup: unknown label " + s);
    }
};

/// table[i][j] = index of element i*j; element 0 must be the identity.
inline LabeledGroup labeled_group_from_table(const std::vector<std::vector<int>>& table,
                                             std::vector<std::string> labels, std::string name) {
    size_t n = table.size();
    for (size_t i = 0; i < n; ++i) {
        if (table[i][0] != static_cast<int>(i) || table[0][i] != static_cast<int>(i))
            throw std::domain_error("labeled_group_from_table: element 0 is not the identity");
    }
    std::vector<Perm> regular;
    for (size_t i = 0; i < n; ++i) {
        std::vector<int> img(n);
        for (size_t j = 0; j < n; ++j) img[j] = table[i][j];
        regular.emplace_back(std::move(img));
    }
    auto grp = PermGroup::close(static_cast<int>(n), regular, std::move(name), std::max(n, PermGroup::kDefaultOrderBound));
    if (grp->order() != n) throw std::domain_error("labeled_group_from_table: table not closed");
    LabeledGroup lg;
    lg.group = grp;
    lg.labels = std::move(labels);
    lg.to_perm.resize(n);
    lg.from_perm.resize(n);
    for (size_t i = 0; i < n; ++i) {
        int p = grp->index_of(regular[i]);
        lg.to_perm[i] = p;
        lg.from_perm[p] = static_cast<int>(i);
    }
    return lg;
}

}  // namespace exalg

#pragma once

#include <numeric>
#include <vector>

#include "errors.hpp"

namespace moebius {

// Permutations of {1..k}, stored one-based (slot 0 is unused and kept at 0).
// Composition convention: (f.compose(g))(i) = f(g(i)), the right factor acts
// first. A product written left to right in cycle notation is therefore
// multiplied with the rightmost cycle applied first.
struct Perm {
    std::vector<int> img;

    static Perm identity(int k) {
        Perm p;
        p.img.resize(static_cast<size_t>(k) + 1);
        std::iota(p.img.begin(), p.img.end(), 0);
        return p;
    }

    // The cycle through the given labels in order, everything else fixed.
    static Perm cycle(int k, const std::vector<int>& labels) {
        Perm p = identity(k);
        std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
        for (size_t i = 0; i < labels.size(); ++i) {
            int from = labels[i];
            if (from < 1 || from > k || seen[from])
                throw InternalInconsistency("cycle labels must be distinct and in range");
            seen[from] = 1;
            p.img[from] = labels[(i + 1) % labels.size()];
        }
        return p;
    }

    int size() const { return static_cast<int>(img.size()) - 1; }
    int operator()(int i) const { return img[i]; }

    bool is_permutation() const {
        std::vector<char> hit(img.size(), 0);
        for (int i = 1; i <= size(); ++i) {
            int j = img[i];
            if (j < 1 || j > size() || hit[j]) return false;
            hit[j] = 1;
        }
        return true;
    }

    Perm compose(const Perm& g) const {
        if (g.size() != size())
            throw InternalInconsistency("composing permutations of different degrees");
        Perm r = identity(size());
        for (int i = 1; i <= size(); ++i) r.img[i] = img[g.img[i]];
        return r;
    }

    Perm inverse() const {
        Perm r = identity(size());
        for (int i = 1; i <= size(); ++i) r.img[img[i]] = i;
        return r;
    }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
};

inline Perm commutator(const Perm& f, const Perm& g) {
    return f.compose(g).compose(f.inverse()).compose(g.inverse());
}

// (1 2 ... k).
inline Perm full_cycle(int k) {
    std::vector<int> labels(static_cast<size_t>(k));
    std::iota(labels.begin(), labels.end(), 1);
    return Perm::cycle(k, labels);
}

// Witness that the full k-cycle is a product of g commutators acting
// transitively: images of the 2g handle generators v1, w1, ..., vg, wg,
// with the product [v1,w1]...[vg,wg] equal to (1 2 ... k). Only odd k
// admits one: commutators are even permutations and a k-cycle is even
// exactly when k is odd.
struct PermWitness {
    int k = 0;
    Perm sigma, tau;
    int genus = 1;
    std::vector<Perm> images;

    Perm boundary() const {
        Perm p = Perm::identity(k);
        for (size_t j = 0; j + 1 < images.size(); j += 2)
            p = p.compose(commutator(images[j], images[j + 1]));
        return p;
    }

    // Orbit of 1 under forward closure; the generators of a finite
    // permutation group generate it as a semigroup, so inverses add nothing.
    bool transitive() const {
        std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
        std::vector<int> stack{1};
        seen[1] = 1;
        int found = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (const Perm& p : images) {
                int j = p(i);
                if (!seen[j]) {
                    seen[j] = 1;
                    ++found;
                    stack.push_back(j);
                }
            }
        }
        return found == k;
    }

    void validate() const {
        if (k % 2 == 0)
            throw EvenK("commutator witness only exists for odd cycle lengths");
        if (k < 3)
            throw InternalInconsistency("witness degree must be at least 3");
        if (static_cast<int>(images.size()) != 2 * genus)
            throw InternalInconsistency("witness needs two generator images per handle");
        for (const Perm& p : images)
            if (p.size() != k || !p.is_permutation())
                throw InternalInconsistency("generator image is not a permutation of the fiber");
        if (!(images[0] == sigma) || !(images[1] == tau.inverse()))
            throw InternalInconsistency("first handle must carry sigma and tau inverse");
        if (!(boundary() == full_cycle(k)))
            throw InternalInconsistency("commutator product is not the full cycle");
        if (!transitive())
            throw InternalInconsistency("generator images do not act transitively");
    }
};

// Writes (1 2 ... k) as the commutator sigma tau^{-1} sigma^{-1} tau for odd
// k >= 3. With m = (k+1)/2 the factorization (1, m+1, ..., k)(1, 2, ..., m)
// equals the full cycle, and the left factor is a relabeling of tau^{-1}:
// sigma is read off by aligning the cycle (1, m, m-1, ..., 2) with
// (1, m+1, m+2, ..., k) point by point, then matching up the leftovers.
inline PermWitness k_cycle_as_commutator(int k) {
    if (k % 2 == 0)
        throw EvenK("commutator witness only exists for odd cycle lengths");
    if (k < 3)
        throw InternalInconsistency("cycle length must be at least 3");
    const int m = (k + 1) / 2;

    std::vector<int> tlabels(static_cast<size_t>(m));
    std::iota(tlabels.begin(), tlabels.end(), 1);
    Perm tau = Perm::cycle(k, tlabels);

    Perm sigma = Perm::identity(k);
    for (int j = 2; j <= m; ++j) sigma.img[j] = k + 2 - j;
    for (int i = 1; i < m; ++i) sigma.img[m + i] = i + 1;

    PermWitness w;
    w.k = k;
    w.sigma = sigma;
    w.tau = tau;
    w.genus = 1;
    w.images = {sigma, tau.inverse()};
    w.validate();
    return w;
}

// Generator images for a genus g surface with one boundary whose boundary
// word maps to the full k-cycle: the first handle carries the commutator
// witness, the remaining g-1 handles map to the identity.
inline PermWitness surface_cover_hom(int g, int k) {
    if (g < 1)
        throw InternalInconsistency("cover genus must be positive");
    PermWitness w = k_cycle_as_commutator(k);
    w.genus = g;
    for (int j = 1; j < g; ++j) {
        w.images.push_back(Perm::identity(k));
        w.images.push_back(Perm::identity(k));
    }
    w.validate();
    return w;
}

}  // namespace moebius

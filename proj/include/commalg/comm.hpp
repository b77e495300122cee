#pragma once

#include <vector>

#include "commalg/schreier.hpp"

namespace commalg {

/// One representative of a commensurator class: an isomorphism between two
/// finite-index subgroups, given by images of a free basis of the domain.
/// The images are themselves a verified free basis of the codomain, so the
/// map is an isomorphism onto it and inversion is a structural swap.
class Commensurator {
public:
    /// Validate a basis-to-word map. Throws if an image falls outside the
    /// codomain or the images fail basis verification.
    static Commensurator from_basis_map(FreeBasis basis, std::vector<Word> images,
                                        const SubgroupGraph& codomain);
    /// Conjugation representative X -> w X w^-1 on the whole group.
    static Commensurator inner(const Word& w);
    static Commensurator identity(const Alphabet& alphabet);

    const SubgroupGraph& domain() const { return domain_basis_.subgroup(); }
    const SubgroupGraph& codomain() const { return image_basis_.subgroup(); }
    const FreeBasis& domain_basis() const { return domain_basis_; }
    const std::vector<Word>& images() const { return images_; }
    const Alphabet& alphabet() const { return domain().alphabet(); }

    /// Apply the representative to w (must lie in the domain).
    Word apply(const Word& w) const;

private:
    Commensurator(FreeBasis domain_basis, std::vector<Word> images, FreeBasis image_basis)
        : domain_basis_(std::move(domain_basis)),
          images_(std::move(images)),
          image_basis_(std::move(image_basis)) {}

    friend Commensurator invert(const Commensurator& c);

    FreeBasis domain_basis_;
    std::vector<Word> images_;
    FreeBasis image_basis_;  // images verified as a free basis of the codomain
};

/// c2 after c1, on the exact maximal domain c1^-1(codomain(c1) ∩ domain(c2)).
Commensurator compose(const Commensurator& c2, const Commensurator& c1);
Commensurator invert(const Commensurator& c);
Commensurator pow(const Commensurator& c, int e);

/// Class equality: agreement on a free basis of the intersection of the two
/// domains (sound and complete for equivalence over finite-index subgroups).
bool equal(const Commensurator& c1, const Commensurator& c2);
bool is_identity(const Commensurator& c);

}  // namespace commalg

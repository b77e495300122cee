#include "commalg/comm.hpp"

namespace commalg {

Commensurator Commensurator::from_basis_map(FreeBasis basis, std::vector<Word> images,
                                            const SubgroupGraph& codomain) {
    if (images.size() != static_cast<std::size_t>(basis.size()))
        throw Error("from_basis_map: need one image per basis element");
    for (const Word& w : images)
        if (!membership(w, codomain)) throw NotInSubgroup(print(w));
    FreeBasis image_basis = verify_basis(images, codomain);
    return Commensurator(std::move(basis), std::move(images), std::move(image_basis));
}

Commensurator Commensurator::inner(const Word& w) {
    const Alphabet& alpha = w.alphabet();
    SubgroupGraph whole = SubgroupGraph::whole_group(alpha);
    std::vector<Word> gens;
    std::vector<Word> images;
    for (int g = 0; g < alpha.rank(); ++g) {
        gens.push_back(Word::generator(alpha, g));
        images.push_back(conjugate(gens.back(), w));
    }
    return from_basis_map(verify_basis(gens, whole), std::move(images), whole);
}

Commensurator Commensurator::identity(const Alphabet& alphabet) {
    return inner(Word(alphabet));
}

Word Commensurator::apply(const Word& w) const {
    Word basis_word(domain_basis_.basis_alphabet());
    try {
        basis_word = domain_basis_.rewrite(w);
    } catch (const NotInSubgroup&) {
        throw NotInDomain(print(w));
    }
    return substitute(basis_word, images_);
}

Commensurator invert(const Commensurator& c) {
    return Commensurator(c.image_basis_, c.domain_basis_.elements(), c.domain_basis_);
}

Commensurator compose(const Commensurator& c2, const Commensurator& c1) {
    if (c1.alphabet() != c2.alphabet()) throw AlphabetMismatch("compose: alphabet mismatch");
    SubgroupGraph middle = intersect(c1.codomain(), c2.domain());
    FreeBasis middle_basis = schreier_basis(middle);
    Commensurator c1_inv = invert(c1);
    std::vector<Word> preimages;
    std::vector<Word> images;
    preimages.reserve(static_cast<std::size_t>(middle_basis.size()));
    images.reserve(static_cast<std::size_t>(middle_basis.size()));
    for (const Word& b : middle_basis.elements()) {
        preimages.push_back(c1_inv.apply(b));
        images.push_back(c2.apply(b));
    }
    SubgroupGraph domain = span_graph(c1.alphabet(), preimages);
    SubgroupGraph codomain = span_graph(c1.alphabet(), images);
    FreeBasis domain_basis = verify_basis(preimages, domain);
    return Commensurator::from_basis_map(std::move(domain_basis), std::move(images), codomain);
}

Commensurator pow(const Commensurator& c, int e) {
    Commensurator base = e < 0 ? invert(c) : c;
    int k = e < 0 ? -e : e;
    Commensurator acc = Commensurator::identity(c.alphabet());
    for (int i = 0; i < k; ++i) acc = compose(acc, base);
    return acc;
}

bool equal(const Commensurator& c1, const Commensurator& c2) {
    if (c1.alphabet() != c2.alphabet()) throw AlphabetMismatch("equal: alphabet mismatch");
    SubgroupGraph common = intersect(c1.domain(), c2.domain());
    FreeBasis basis = schreier_basis(common);
    for (const Word& b : basis.elements())
        if (c1.apply(b) != c2.apply(b)) return false;
    return true;
}

bool is_identity(const Commensurator& c) {
    for (const Word& b : c.domain_basis().elements())
        if (c.apply(b) != b) return false;
    return true;
}

}  // namespace commalg

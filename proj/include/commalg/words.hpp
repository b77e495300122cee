#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "commalg/error.hpp"

namespace commalg {

/// Ranked alphabet of free-group generator names. Cheap to copy.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    int rank() const { return static_cast<int>(names_->size()); }
    const std::string& name(int i) const { return (*names_)[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return *names_; }

    bool operator==(const Alphabet& other) const {
        return names_ == other.names_ || *names_ == *other.names_;
    }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

    /// F_2 = <A, B>.
    static Alphabet upper2();
    /// Baumslag-Solitar generators a, b.
    static Alphabet bs();
    /// Basis letters x1..xN.
    static Alphabet basis_letters(int count);

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

struct Syllable {
    int gen;           // generator index into the alphabet
    std::int64_t exp;  // nonzero exponent
    bool operator==(const Syllable&) const = default;
};

/// Freely reduced word in syllable (run-length) form. Immutable value type.
class Word {
public:
    explicit Word(Alphabet alphabet) : alpha_(std::move(alphabet)) {}

    /// Free reduction of an arbitrary syllable sequence.
    static Word reduce(const Alphabet& alphabet, std::span<const Syllable> raw);
    static Word generator(const Alphabet& alphabet, int gen, std::int64_t exp = 1);

    const Alphabet& alphabet() const { return alpha_; }
    const std::vector<Syllable>& syllables() const { return syl_; }
    bool is_identity() const { return syl_.empty(); }
    /// Letter length (sum of |exponents|).
    std::int64_t length() const;

    bool operator==(const Word& other) const {
        return alpha_ == other.alpha_ && syl_ == other.syl_;
    }
    bool operator!=(const Word& other) const { return !(*this == other); }
    bool operator<(const Word& other) const;  // arbitrary total order for containers

private:
    Alphabet alpha_;
    std::vector<Syllable> syl_;  // invariant: reduced
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
/// Conjugation x^y := y * x * y^-1.
Word conjugate(const Word& x, const Word& y);
/// Commutator [x, y] := x^-1 y^-1 x y.
Word commutator(const Word& x, const Word& y);
/// Left-normed [x, y, z] = [[x, y], z].
Word commutator(const Word& x, const Word& y, const Word& z);
Word pow(const Word& u, std::int64_t e);

/// Substitute images[i] for generator i of w. Images share one alphabet.
Word substitute(const Word& w, const std::vector<Word>& images);

/// Grammar: tokens separated by spaces; token = NAME or NAME^SIGNED_INT;
/// empty string is the identity.
Word parse(const std::string& text, const Alphabet& alphabet);
/// Canonical form: minimal syllables, "^" omitted for exponent 1.
std::string print(const Word& w);

}  // namespace commalg

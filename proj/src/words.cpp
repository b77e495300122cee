#include "commalg/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace commalg {

Alphabet::Alphabet(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    if (names_->empty()) throw Error("alphabet must be nonempty");
    std::set<std::string> seen;
    for (const auto& n : *names_) {
        if (n.empty()) throw Error("generator names must be nonempty");
        if (!seen.insert(n).second) throw Error("duplicate generator name: " + n);
    }
}

Alphabet Alphabet::upper2() {
    static const Alphabet a({"A", "B"});
    return a;
}

Alphabet Alphabet::bs() {
    static const Alphabet a({"a", "b"});
    return a;
}

Alphabet Alphabet::basis_letters(int count) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) names.push_back("x" + std::to_string(i));
    return Alphabet(std::move(names));
}

Word Word::reduce(const Alphabet& alphabet, std::span<const Syllable> raw) {
    Word out(alphabet);
    for (const Syllable& s : raw) {
        if (s.gen < 0 || s.gen >= alphabet.rank())
            throw IndexOutOfRange("generator index " + std::to_string(s.gen) +
                                  " out of range for rank " + std::to_string(alphabet.rank()));
        if (s.exp == 0) continue;
        if (!out.syl_.empty() && out.syl_.back().gen == s.gen) {
            out.syl_.back().exp += s.exp;
            if (out.syl_.back().exp == 0) out.syl_.pop_back();
        } else {
            out.syl_.push_back(s);
        }
    }
    return out;
}

Word Word::generator(const Alphabet& alphabet, int gen, std::int64_t exp) {
    Syllable s{gen, exp};
    return reduce(alphabet, std::span<const Syllable>(&s, 1));
}

std::int64_t Word::length() const {
    std::int64_t n = 0;
    for (const auto& s : syl_) n += s.exp < 0 ? -s.exp : s.exp;
    return n;
}

bool Word::operator<(const Word& other) const {
    return std::lexicographical_compare(
        syl_.begin(), syl_.end(), other.syl_.begin(), other.syl_.end(),
        [](const Syllable& a, const Syllable& b) {
            return a.gen != b.gen ? a.gen < b.gen : a.exp < b.exp;
        });
}

namespace {

void check_same_alphabet(const Word& u, const Word& v) {
    if (u.alphabet() != v.alphabet()) throw AlphabetMismatch("words over different alphabets");
}

}  // namespace

Word multiply(const Word& u, const Word& v) {
    check_same_alphabet(u, v);
    std::vector<Syllable> raw(u.syllables());
    raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
    return Word::reduce(u.alphabet(), raw);
}

Word invert(const Word& u) {
    std::vector<Syllable> raw;
    raw.reserve(u.syllables().size());
    for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it)
        raw.push_back({it->gen, -it->exp});
    return Word::reduce(u.alphabet(), raw);
}

Word conjugate(const Word& x, const Word& y) {
    return multiply(multiply(y, x), invert(y));
}

Word commutator(const Word& x, const Word& y) {
    return multiply(multiply(invert(x), invert(y)), multiply(x, y));
}

Word commutator(const Word& x, const Word& y, const Word& z) {
    return commutator(commutator(x, y), z);
}

Word pow(const Word& u, std::int64_t e) {
    Word base = e < 0 ? invert(u) : u;
    std::int64_t k = e < 0 ? -e : e;
    Word acc(u.alphabet());
    for (std::int64_t i = 0; i < k; ++i) acc = multiply(acc, base);
    return acc;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
    if (static_cast<int>(images.size()) != w.alphabet().rank())
        throw AlphabetMismatch("substitute: need one image per generator");
    if (images.empty()) throw AlphabetMismatch("substitute: empty image list");
    const Alphabet& target = images.front().alphabet();
    std::vector<Syllable> raw;
    for (const Syllable& s : w.syllables()) {
        const Word& img = images[static_cast<std::size_t>(s.gen)];
        if (img.alphabet() != target) throw AlphabetMismatch("substitute: mixed image alphabets");
        Word piece = pow(img, s.exp);
        raw.insert(raw.end(), piece.syllables().begin(), piece.syllables().end());
    }
    return Word::reduce(target, raw);
}

Word parse(const std::string& text, const Alphabet& alphabet) {
    std::vector<Syllable> raw;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ') ++i;
        std::string token = text.substr(start, i - start);
        std::string name = token;
        std::int64_t exp = 1;
        if (auto caret = token.find('^'); caret != std::string::npos) {
            name = token.substr(0, caret);
            std::string expstr = token.substr(caret + 1);
            try {
                std::size_t used = 0;
                exp = std::stoll(expstr, &used);
                if (used != expstr.size()) throw std::invalid_argument(expstr);
            } catch (const std::exception&) {
                throw ParseError("bad exponent '" + expstr + "'", start);
            }
        }
        int gen = -1;
        for (int g = 0; g < alphabet.rank(); ++g)
            if (alphabet.name(g) == name) {
                gen = g;
                break;
            }
        if (gen < 0) throw ParseError("unknown generator name '" + name + "'", start);
        raw.push_back({gen, exp});
    }
    return Word::reduce(alphabet, raw);
}

std::string print(const Word& w) {
    std::ostringstream out;
    bool first = true;
    for (const Syllable& s : w.syllables()) {
        if (!first) out << ' ';
        first = false;
        out << w.alphabet().name(s.gen);
        if (s.exp != 1) out << '^' << s.exp;
    }
    return out.str();
}

}  // namespace commalg

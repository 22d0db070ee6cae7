#include "stanley/parse.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace stanley {

namespace {

// (variable index, exponent) pairs; the ambient size is only known after a
// whole input has been scanned, so monomials are parsed sparsely first.
using SparseMonomial = std::vector<std::pair<int, int>>;

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at offset " + std::to_string(pos), pos);
    }

    long parse_number() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a number");
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000000) fail("number too large");
            ++pos;
        }
        return value;
    }

    SparseMonomial parse_monomial() {
        SparseMonomial m;
        if (peek() == '1') {
            ++pos;
            return m;
        }
        while (true) {
            skip_ws();
            if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'X'))
                fail("expected a variable");
            ++pos;
            int index = static_cast<int>(parse_number());
            if (index < 1) fail("variable index must be at least 1");
            int exp = 1;
            if (peek() == '^') {
                ++pos;
                exp = static_cast<int>(parse_number());
            }
            m.emplace_back(index, exp);
            if (peek() != '*') break;
            ++pos;
        }
        return m;
    }

    // Returns an empty list for the zero ideal literal "0".
    std::vector<SparseMonomial> parse_ideal() {
        skip_ws();
        if (peek() == '0') {
            ++pos;
            if (!done()) fail("unexpected input after zero ideal");
            return {};
        }
        std::vector<SparseMonomial> out;
        while (true) {
            out.push_back(parse_monomial());
            if (done()) break;
            if (peek() != ',') fail("expected ','");
            ++pos;
        }
        return out;
    }
};

int max_index(const std::vector<SparseMonomial>& ms) {
    int n = 0;
    for (const auto& m : ms)
        for (const auto& [idx, exp] : m) n = std::max(n, idx);
    return n;
}

Monomial densify(const SparseMonomial& m, int n) {
    std::vector<int> exps(n, 0);
    for (const auto& [idx, exp] : m) {
        if (idx > n)
            throw ParseError("variable x" + std::to_string(idx) +
                                 " exceeds ambient of " + std::to_string(n),
                             0);
        exps[idx - 1] += exp;
    }
    return Monomial(std::move(exps));
}

}  // namespace

Monomial parse_monomial(std::string_view text, int n) {
    Scanner s{text};
    SparseMonomial m = s.parse_monomial();
    if (!s.done()) s.fail("unexpected trailing input");
    return densify(m, n);
}

MonomialIdeal parse_ideal(std::string_view text, std::optional<int> n) {
    Scanner s{text};
    auto ms = s.parse_ideal();
    int ambient = n.value_or(max_index(ms));
    std::vector<Monomial> gens;
    gens.reserve(ms.size());
    for (const auto& m : ms) gens.push_back(densify(m, ambient));
    return minimalize(std::move(gens), ambient);
}

FactorModule parse_factor(std::string_view text_I, std::string_view text_J,
                          std::optional<int> n) {
    Scanner si{text_I};
    auto mi = si.parse_ideal();
    Scanner sj{text_J};
    auto mj = sj.parse_ideal();

    int ambient = n.value_or(std::max(max_index(mi), max_index(mj)));
    if (ambient < 1) ambient = 1;

    std::vector<Monomial> gi, gj;
    for (const auto& m : mi) gi.push_back(densify(m, ambient));
    for (const auto& m : mj) gj.push_back(densify(m, ambient));
    return make_factor(minimalize(std::move(gi), ambient),
                       minimalize(std::move(gj), ambient));
}

}  // namespace stanley

#include "l2alex/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "l2alex/errors.hpp"

namespace l2alex {

Braid parse_braid(const std::string& text) {
    Braid b;
    b.strands = 2;
    b.letters.clear();
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool sawToken = false;
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const std::size_t tokenStart = i;
        if (text[i] != 's') throw parse_error("expected braid letter 's<k>'", i);
        ++i;
        std::size_t numStart = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == numStart) throw parse_error("missing strand index after 's'", numStart);
        int k = std::stoi(text.substr(numStart, i - numStart));
        if (k < 1) throw parse_error("strand index must be at least 1", numStart);
        int sign = 1;
        if (i < n && text[i] == '^') {
            if (text.compare(i, 3, "^-1") != 0)
                throw parse_error("only exponent ^-1 is allowed", i);
            sign = -1;
            i += 3;
        }
        if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
            throw parse_error("malformed braid token", tokenStart);
        b.letters.push_back(sign * k);
        b.strands = std::max(b.strands, k + 1);
        sawToken = true;
    }
    if (!sawToken) throw parse_error("empty braid word", 0);
    return b;
}

std::vector<int> braid_permutation(const Braid& b) {
    std::vector<int> perm(b.strands);
    std::iota(perm.begin(), perm.end(), 0);
    // Each crossing swaps adjacent slots; the sign only selects over/under.
    for (int letter : b.letters) {
        int k = std::abs(letter) - 1;
        std::swap(perm[k], perm[k + 1]);
    }
    // perm now maps final slot -> initial strand; invert to strand -> slot.
    std::vector<int> out(b.strands);
    for (int slot = 0; slot < b.strands; ++slot) out[perm[slot]] = slot;
    return out;
}

int closure_component_count(const Braid& b) {
    std::vector<int> perm = braid_permutation(b);
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return cycles;
}

GroupPresentation wirtinger_from_braid(const Braid& b) {
    if (closure_component_count(b) != 1)
        throw not_a_knot_error("braid closure has " +
                               std::to_string(closure_component_count(b)) +
                               " components; expected a knot");

    const int n = b.strands;
    GroupPresentation p;
    p.generators = n + static_cast<int>(b.letters.size());
    for (int i = 0; i < p.generators; ++i) p.names.push_back("x" + std::to_string(i + 1));

    // cur[slot] = generator of the arc currently running through this slot.
    std::vector<int> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    int next = n;
    for (int letter : b.letters) {
        const int k = std::abs(letter) - 1;
        const int a = cur[k];
        const int bgen = cur[k + 1];
        const int fresh = next++;
        Word rel;
        if (letter > 0) {
            // Positive crossing: strand in slot k passes over; under arc is
            // renamed, fresh = a b a^{-1}.
            rel = Word::generator(fresh) * Word::generator(a) * Word::generator(bgen, -1) *
                  Word::generator(a, -1);
            cur[k] = fresh;
            cur[k + 1] = a;
        } else {
            // Negative crossing: strand in slot k passes under; fresh = b^{-1} a b.
            rel = Word::generator(fresh) * Word::generator(bgen, -1) * Word::generator(a, -1) *
                  Word::generator(bgen);
            cur[k] = bgen;
            cur[k + 1] = fresh;
        }
        p.relators.push_back(std::move(rel));
    }
    // Closure identifications cur[j] = x_j; drop the last one as redundant.
    for (int j = 0; j + 1 < n; ++j)
        p.relators.push_back(Word::generator(cur[j]) * Word::generator(j, -1));
    return p;
}

} // namespace l2alex

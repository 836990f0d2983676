#pragma once

// Word-problem oracles (normal forms) for the group classes the numeric
// engine supports.
//
//   trivial         free group, identity iff the reduced word is empty
//   cyclic          group known to be Z via a generator weight vector;
//                   identity iff the weighted exponent sum vanishes
//   free_by_cyclic  F_n x| Z with monodromy phi; alphabet {0 = z, 1..n},
//                   defining relations z a z^{-1} = phi(a); normal form
//                   z^k u with u a reduced fiber word
//
// Oracles are immutable after construction and safe to share across threads.

#include <memory>
#include <vector>

#include "l2alex/automorphism.hpp"
#include "l2alex/word.hpp"

namespace l2alex {

class NormalFormOracle {
public:
    enum class Strategy { trivial, cyclic, free_by_cyclic };

    static NormalFormOracle trivial(int generator_count);
    /// weights[g] is the image of generator g in Z; requires gcd = 1.
    static NormalFormOracle cyclic(std::vector<long long> weights);
    /// Fiber monodromy phi acts on fiber generators 0..n-1; the oracle
    /// alphabet shifts them to 1..n and adds z as generator 0.
    static NormalFormOracle free_by_cyclic(FreeAutomorphism fiber_monodromy);

    Strategy strategy() const { return strategy_; }
    int generator_count() const { return generator_count_; }

    /// Canonical representative; two words are equal in the group iff their
    /// normal forms are equal words.
    Word normal_form(const Word& w) const;
    bool is_identity(const Word& w) const;

    /// Product of two normal forms, already in normal form.  For the
    /// free-by-cyclic oracle this costs one monodromy application per
    /// z-crossing of the right factor instead of a full rescan.
    Word mul(const Word& nf_a, const Word& nf_b) const;

    /// phi^m applied to a fiber word (free-by-cyclic only).
    Word fiber_shift(const Word& fiber_word, long long m) const;
    /// z-exponent of a normal form (free-by-cyclic only).
    static long long z_exponent(const Word& nf);

    const FreeAutomorphism* monodromy() const {
        return strategy_ == Strategy::free_by_cyclic ? &phi_ : nullptr;
    }
    const std::vector<long long>& weights() const { return weights_; }

private:
    NormalFormOracle() = default;
    void check_alphabet(const Word& w) const;
    Word cyclic_canonical(long long s) const;
    Word apply_phi_once(const Word& fiber_word, bool inverse) const;

    Strategy strategy_ = Strategy::trivial;
    int generator_count_ = 0;

    // cyclic
    std::vector<long long> weights_;
    std::vector<long long> bezout_;

    // free_by_cyclic; image tables are pre-shifted into the oracle alphabet
    FreeAutomorphism phi_;
    std::vector<Word> phi_img_;
    std::vector<Word> phi_inv_img_;
};

} // namespace l2alex

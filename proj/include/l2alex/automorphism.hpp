#pragma once

// Free-group automorphisms given by generator images together with the
// images under the inverse automorphism.  The constructor verifies the
// round trip phi(phi^{-1}(a_i)) = phi^{-1}(phi(a_i)) = a_i symbolically;
// an automorphism that fails the check never enters the system.

#include <vector>

#include "l2alex/word.hpp"

namespace l2alex {

class FreeAutomorphism {
public:
    FreeAutomorphism() = default;
    FreeAutomorphism(std::vector<Word> images, std::vector<Word> inverse_images);

    static FreeAutomorphism identity(int rank);
    /// a_i -> a_i * a_j^sign (i != j), other generators fixed.
    static FreeAutomorphism right_multiplier(int rank, int i, int j, int sign = 1);
    /// a_i -> a_j^sign * a_i (i != j), other generators fixed.
    static FreeAutomorphism left_multiplier(int rank, int i, int j, int sign = 1);
    /// a_i -> a_i^{-1}, other generators fixed.
    static FreeAutomorphism inverter(int rank, int i);
    /// a_i <-> a_j.
    static FreeAutomorphism swapper(int rank, int i, int j);

    int rank() const { return static_cast<int>(images_.size()); }
    const Word& image(int gen) const { return images_.at(gen); }
    const Word& inverse_image(int gen) const { return inverse_images_.at(gen); }
    const std::vector<Word>& images() const { return images_; }
    const std::vector<Word>& inverse_images() const { return inverse_images_; }

    Word apply(const Word& w) const;
    Word apply_inverse(const Word& w) const;

    FreeAutomorphism inverse() const;
    bool is_identity() const;

    /// (f o g)(x) = f(g(x)).
    friend FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g);

    friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;

private:
    static Word substitute(const std::vector<Word>& images, const Word& w);

    std::vector<Word> images_;
    std::vector<Word> inverse_images_;
};

} // namespace l2alex

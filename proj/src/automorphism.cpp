#include "l2alex/automorphism.hpp"

#include <string>

#include "l2alex/errors.hpp"

namespace l2alex {

FreeAutomorphism::FreeAutomorphism(std::vector<Word> images, std::vector<Word> inverse_images)
    : images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
    if (images_.size() != inverse_images_.size())
        throw invalid_automorphism_error("image and inverse-image counts differ");
    const int n = rank();
    for (const Word& w : images_)
        if (w.max_generator() >= n)
            throw invalid_automorphism_error("image uses generator outside the rank");
    for (const Word& w : inverse_images_)
        if (w.max_generator() >= n)
            throw invalid_automorphism_error("inverse image uses generator outside the rank");
    for (int i = 0; i < n; ++i) {
        const Word gen = Word::generator(i);
        if (substitute(images_, inverse_images_[i]) != gen ||
            substitute(inverse_images_, images_[i]) != gen)
            throw invalid_automorphism_error(
                "round-trip check failed on generator " + std::to_string(i));
    }
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
    std::vector<Word> img;
    img.reserve(rank);
    for (int i = 0; i < rank; ++i) img.push_back(Word::generator(i));
    return FreeAutomorphism(img, img);
}

FreeAutomorphism FreeAutomorphism::right_multiplier(int rank, int i, int j, int sign) {
    auto id = identity(rank);
    std::vector<Word> img = id.images_;
    std::vector<Word> inv = id.images_;
    img[i] = Word::generator(i) * Word::generator(j, sign);
    inv[i] = Word::generator(i) * Word::generator(j, -sign);
    return FreeAutomorphism(std::move(img), std::move(inv));
}

FreeAutomorphism FreeAutomorphism::left_multiplier(int rank, int i, int j, int sign) {
    auto id = identity(rank);
    std::vector<Word> img = id.images_;
    std::vector<Word> inv = id.images_;
    img[i] = Word::generator(j, sign) * Word::generator(i);
    inv[i] = Word::generator(j, -sign) * Word::generator(i);
    return FreeAutomorphism(std::move(img), std::move(inv));
}

FreeAutomorphism FreeAutomorphism::inverter(int rank, int i) {
    auto id = identity(rank);
    std::vector<Word> img = id.images_;
    img[i] = Word::generator(i, -1);
    return FreeAutomorphism(img, img);
}

FreeAutomorphism FreeAutomorphism::swapper(int rank, int i, int j) {
    auto id = identity(rank);
    std::vector<Word> img = id.images_;
    std::swap(img[i], img[j]);
    return FreeAutomorphism(img, img);
}

Word FreeAutomorphism::substitute(const std::vector<Word>& images, const Word& w) {
    Word out;
    for (const Run& r : w.runs()) {
        const Word& img = images[r.gen];
        if (r.exp > 0) {
            for (int k = 0; k < r.exp; ++k) out.append(img);
        } else {
            Word inv = img.inverse();
            for (int k = 0; k < -r.exp; ++k) out.append(inv);
        }
    }
    return out;
}

Word FreeAutomorphism::apply(const Word& w) const { return substitute(images_, w); }

Word FreeAutomorphism::apply_inverse(const Word& w) const {
    return substitute(inverse_images_, w);
}

FreeAutomorphism FreeAutomorphism::inverse() const {
    FreeAutomorphism f;
    f.images_ = inverse_images_;
    f.inverse_images_ = images_;
    return f;
}

bool FreeAutomorphism::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        if (images_[i] != Word::generator(i)) return false;
    return true;
}

FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g) {
    if (f.rank() != g.rank())
        throw invalid_automorphism_error("composing automorphisms of different ranks");
    std::vector<Word> img, inv;
    img.reserve(f.rank());
    inv.reserve(f.rank());
    for (int i = 0; i < f.rank(); ++i) {
        img.push_back(f.apply(g.image(i)));
        inv.push_back(g.apply_inverse(f.inverse_image(i)));
    }
    return FreeAutomorphism(std::move(img), std::move(inv));
}

} // namespace l2alex

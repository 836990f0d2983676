#include "l2alex/catalog.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "l2alex/errors.hpp"
#include "l2alex/fox.hpp"

namespace l2alex {

double exp_vol_over_6pi(double volume) {
    return std::exp(volume / (6.0 * std::numbers::pi));
}

namespace {

bool parse_torus_name(const std::string& name, int& p, int& q) {
    if (name.size() < 6 || name.compare(0, 2, "T(") != 0 || name.back() != ')') return false;
    std::size_t comma = name.find(',');
    if (comma == std::string::npos) return false;
    try {
        p = std::stoi(name.substr(2, comma - 2));
        q = std::stoi(name.substr(comma + 1, name.size() - comma - 2));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

int torus_genus(int p, int q) { return (std::abs(p) - 1) * (std::abs(q) - 1) / 2; }

void validate_torus(int p, int q) {
    if (std::abs(p) < 2 || std::abs(q) < 2 || std::gcd(p, q) != 1)
        throw validation_error("T(p,q) requires coprime p, q with |p|,|q| >= 2");
}

CatalogEntry torus_entry(int p, int q) {
    validate_torus(p, q);
    CatalogEntry e;
    e.name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    e.genus = torus_genus(p, q);
    e.volume = 0.0;
    e.fibered = true;
    e.exp_vol_over_6pi = 1.0;
    e.leading_C = 1.0;
    e.dilatation = 1.0;
    e.notes = "torus knot; Seifert-fibered exterior, simplicial volume 0";
    return e;
}

// Stored as data, never trusted: the accessor runs the validation gate.
FreeAutomorphism figure_eight_monodromy_data() {
    const Word a = Word::generator(0);
    const Word b = Word::generator(1);
    // a -> a b, b -> b a b;  inverse: a -> a a b^{-1}, b -> b a^{-1}.
    std::vector<Word> img = {a * b, b * a * b};
    std::vector<Word> inv = {a * a * b.inverse(), b * a.inverse()};
    return FreeAutomorphism(std::move(img), std::move(inv));
}

const FreeAutomorphism& gated_figure_eight_monodromy() {
    static const FreeAutomorphism phi = [] {
        FreeAutomorphism candidate = figure_eight_monodromy_data();

        // Gate 1: the fibered presentation must reproduce the figure-eight
        // Alexander polynomial t^2 - 3t + 1.
        GroupPresentation p = fibered_presentation(1, candidate);
        LaurentPoly expected = LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(-3, 1) +
                               LaurentPoly::constant(1);
        if (classical_alexander(p) != expected)
            throw validation_error("stored 4_1 monodromy failed the Alexander gate");

        // Gate 2: abelianized jacobian has trace 3, determinant 1, largest
        // eigenvalue (3 + sqrt 5)/2 (the dilatation).
        long long m[2][2];
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) m[r][c] = candidate.image(r).exponent_sum(c);
        long long tr = m[0][0] + m[1][1];
        long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (tr != 3 || det != 1)
            throw validation_error("stored 4_1 monodromy failed the homology gate");
        double lmax = (static_cast<double>(tr) +
                       std::sqrt(static_cast<double>(tr * tr - 4 * det))) /
                      2.0;
        if (std::abs(lmax - kFigureEightDilatation) > 1e-9)
            throw validation_error("stored 4_1 monodromy has the wrong dilatation");
        return candidate;
    }();
    return phi;
}

} // namespace

const FreeAutomorphism& figure_eight_monodromy() { return gated_figure_eight_monodromy(); }

bool catalog_has(const std::string& name) {
    int p, q;
    if (parse_torus_name(name, p, q))
        return std::abs(p) >= 2 && std::abs(q) >= 2 && std::gcd(p, q) == 1;
    return name == "unknot" || name == "3_1" || name == "4_1" || name == "5_2" ||
           name == "K12n242";
}

CatalogEntry catalog(const std::string& name) {
    if (name == "unknot") {
        CatalogEntry e;
        e.name = name;
        e.genus = 0;
        e.volume = 0.0;
        e.fibered = true;
        e.exp_vol_over_6pi = 1.0;
        e.leading_C = 1.0;
        e.dilatation = 1.0;
        e.notes = "trivial knot; invariant is the constant map 1";
        return e;
    }
    if (name == "3_1") {
        CatalogEntry e = torus_entry(2, 3);
        e.name = "3_1";
        e.notes = "trefoil = T(2,3); the only iterated torus knot of genus one";
        return e;
    }
    if (name == "4_1") {
        CatalogEntry e;
        e.name = name;
        e.genus = 1;
        e.volume = kVolumeFigureEight;
        e.fibered = true;
        e.exp_vol_over_6pi = exp_vol_over_6pi(e.volume);
        e.leading_C = 1.0;
        e.monodromy = figure_eight_monodromy();
        e.dilatation = kFigureEightDilatation;
        e.notes = "figure-eight knot; volume = two ideal regular tetrahedra; "
                  "only hyperbolic fibered knot of genus one";
        return e;
    }
    if (name == "5_2") {
        CatalogEntry e;
        e.name = name;
        e.genus = 1;
        e.volume = kVolumeFiveTwo;
        e.fibered = false;
        e.exp_vol_over_6pi = exp_vol_over_6pi(e.volume);
        e.leading_C = 1.0;
        e.notes = "twist knot 5_2; exterior is census manifold m015; not fibered";
        return e;
    }
    if (name == "K12n242") {
        CatalogEntry e;
        e.name = name;
        e.genus = 5;
        e.volume = kVolumeFiveTwo;
        e.fibered = true;
        e.exp_vol_over_6pi = exp_vol_over_6pi(e.volume);
        e.leading_C = 1.0;
        e.notes = "exterior is census manifold m016; same volume as 5_2, genus 5, fibered";
        return e;
    }
    int p, q;
    if (parse_torus_name(name, p, q)) return torus_entry(p, q);
    throw validation_error("unknown catalog name '" + name + "'");
}

GroupPresentation catalog_presentation(const std::string& name) {
    if (name == "unknot") return unknot_presentation();
    if (name == "3_1") return torus_presentation(2, 3);
    if (name == "4_1") return fibered_presentation(1, figure_eight_monodromy());
    int p, q;
    if (parse_torus_name(name, p, q)) {
        validate_torus(p, q);
        return torus_presentation(p, q);
    }
    throw validation_error("no stored presentation for catalog entry '" + name + "'");
}

} // namespace l2alex

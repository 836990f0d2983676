#include "l2alex/oracle.hpp"

#include <numeric>
#include <string>

#include "l2alex/errors.hpp"

namespace l2alex {

namespace {

// gcd with Bezout coefficients: g = a*x + b*y.
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

} // namespace

NormalFormOracle NormalFormOracle::trivial(int generator_count) {
    NormalFormOracle o;
    o.strategy_ = Strategy::trivial;
    o.generator_count_ = generator_count;
    return o;
}

NormalFormOracle NormalFormOracle::cyclic(std::vector<long long> weights) {
    NormalFormOracle o;
    o.strategy_ = Strategy::cyclic;
    o.generator_count_ = static_cast<int>(weights.size());
    o.weights_ = std::move(weights);
    if (o.weights_.empty()) throw validation_error("cyclic oracle needs at least one generator");

    // Bezout vector with sum_i bezout[i]*weights[i] = 1; pins the canonical
    // representative of each integer class.
    o.bezout_.assign(o.weights_.size(), 0);
    long long g = 0;
    for (std::size_t i = 0; i < o.weights_.size(); ++i) {
        long long x, y;
        long long g2 = ext_gcd(g, o.weights_[i], x, y);
        for (std::size_t j = 0; j < i; ++j) o.bezout_[j] *= x;
        o.bezout_[i] = y;
        g = g2;
    }
    if (g != 1) throw validation_error("cyclic oracle weights are not surjective onto Z");
    return o;
}

NormalFormOracle NormalFormOracle::free_by_cyclic(FreeAutomorphism fiber_monodromy) {
    NormalFormOracle o;
    o.strategy_ = Strategy::free_by_cyclic;
    o.generator_count_ = fiber_monodromy.rank() + 1;
    o.phi_ = std::move(fiber_monodromy);
    o.phi_img_.reserve(o.phi_.rank());
    o.phi_inv_img_.reserve(o.phi_.rank());
    for (int i = 0; i < o.phi_.rank(); ++i) {
        o.phi_img_.push_back(o.phi_.image(i).shifted(1));
        o.phi_inv_img_.push_back(o.phi_.inverse_image(i).shifted(1));
    }
    return o;
}

void NormalFormOracle::check_alphabet(const Word& w) const {
    if (w.max_generator() >= generator_count_)
        throw alphabet_error("word uses generator " + std::to_string(w.max_generator()) +
                             " but the oracle alphabet has " +
                             std::to_string(generator_count_) + " generators");
}

Word NormalFormOracle::cyclic_canonical(long long s) const {
    Word w;
    if (s == 0) return w;
    for (std::size_t i = 0; i < bezout_.size(); ++i) w.append_run(static_cast<int>(i), bezout_[i] * s);
    return w;
}

Word NormalFormOracle::apply_phi_once(const Word& fiber_word, bool inverse) const {
    const std::vector<Word>& tab = inverse ? phi_inv_img_ : phi_img_;
    Word out;
    for (const Run& r : fiber_word.runs()) {
        const Word& img = tab[r.gen - 1];
        if (r.exp > 0) {
            for (int k = 0; k < r.exp; ++k) out.append(img);
        } else {
            Word inv = img.inverse();
            for (int k = 0; k < -r.exp; ++k) out.append(inv);
        }
    }
    return out;
}

Word NormalFormOracle::fiber_shift(const Word& fiber_word, long long m) const {
    Word u = fiber_word;
    const bool inverse = m < 0;
    for (long long k = 0; k < (m < 0 ? -m : m); ++k) u = apply_phi_once(u, inverse);
    return u;
}

long long NormalFormOracle::z_exponent(const Word& nf) {
    if (!nf.empty() && nf.runs().front().gen == 0) return nf.runs().front().exp;
    return 0;
}

Word NormalFormOracle::normal_form(const Word& w) const {
    check_alphabet(w);
    switch (strategy_) {
        case Strategy::trivial:
            return w;
        case Strategy::cyclic:
            return cyclic_canonical(w.weighted_exponent_sum(weights_));
        case Strategy::free_by_cyclic: {
            // Scan right to left, pushing z letters to the front.  Prepending
            // a fiber letter x to z^k u gives z^k phi^{-k}(x) u.
            long long zexp = 0;
            Word u;
            const auto& runs = w.runs();
            for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
                if (it->gen == 0) {
                    zexp += it->exp;
                } else {
                    Word x = fiber_shift(Word::generator(it->gen, it->exp), -zexp);
                    x.append(u);
                    u = std::move(x);
                }
            }
            Word out = Word::generator(0, static_cast<int>(zexp));
            out.append(u);
            return out;
        }
    }
    return w;
}

bool NormalFormOracle::is_identity(const Word& w) const {
    check_alphabet(w);
    if (strategy_ == Strategy::cyclic) return w.weighted_exponent_sum(weights_) == 0;
    return normal_form(w).empty();
}

Word NormalFormOracle::mul(const Word& nf_a, const Word& nf_b) const {
    switch (strategy_) {
        case Strategy::trivial:
            return nf_a * nf_b;
        case Strategy::cyclic:
            return cyclic_canonical(nf_a.weighted_exponent_sum(weights_) +
                                    nf_b.weighted_exponent_sum(weights_));
        case Strategy::free_by_cyclic: {
            // (z^{ka} ua) (z^{kb} ub) = z^{ka+kb} phi^{-kb}(ua) ub.
            long long ka = z_exponent(nf_a);
            long long kb = z_exponent(nf_b);
            Word ua = nf_a;
            if (ka != 0) {
                Word tail;
                for (std::size_t i = 1; i < nf_a.runs().size(); ++i)
                    tail.append_run(nf_a.runs()[i].gen, nf_a.runs()[i].exp);
                ua = std::move(tail);
            }
            Word out = Word::generator(0, static_cast<int>(ka + kb));
            out.append(fiber_shift(ua, -kb));
            if (kb != 0) {
                for (std::size_t i = 1; i < nf_b.runs().size(); ++i)
                    out.append_run(nf_b.runs()[i].gen, nf_b.runs()[i].exp);
            } else {
                out.append(nf_b);
            }
            return out;
        }
    }
    return nf_a * nf_b;
}

} // namespace l2alex

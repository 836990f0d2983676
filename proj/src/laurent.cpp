#include "l2alex/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "l2alex/errors.hpp"

namespace l2alex {

void LaurentPoly::trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1] == 0) --tail;
    coeffs_ = std::vector<long long>(coeffs_.begin() + lead, coeffs_.begin() + tail);
    low_ += static_cast<int>(lead);
}

LaurentPoly LaurentPoly::monomial(long long coeff, int degree) {
    LaurentPoly p;
    if (coeff != 0) {
        p.low_ = degree;
        p.coeffs_ = {coeff};
    }
    return p;
}

long long LaurentPoly::coeff(int degree) const {
    int idx = degree - low_;
    if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[idx];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) {
        *this = rhs;
        return *this;
    }
    int newLow = std::min(low_, rhs.low_);
    int newHigh = std::max(highest_degree(), rhs.highest_degree());
    std::vector<long long> out(newHigh - newLow + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[low_ - newLow + i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[rhs.low_ - newLow + i] += rhs.coeffs_[i];
    low_ = newLow;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly p = a;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly p;
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    p.trim();
    return p;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return LaurentPoly{};
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const long long dTop = divisor.coeffs_.back();
    while (!rem.is_zero() && rem.degree_span() >= divisor.degree_span()) {
        long long rTop = rem.coeffs_.back();
        if (rTop % dTop != 0) return std::nullopt;
        LaurentPoly m = monomial(rTop / dTop, rem.highest_degree() - divisor.highest_degree());
        quot += m;
        rem -= m * divisor;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

LaurentPoly LaurentPoly::normalized() const {
    if (is_zero()) return {};
    LaurentPoly p = *this;
    p.low_ = 0;
    if (p.coeffs_.back() < 0)
        for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly LaurentPoly::reciprocal_substitution() const {
    if (is_zero()) return {};
    LaurentPoly p;
    p.low_ = -highest_degree();
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    return p;
}

double LaurentPoly::evaluate(double t) const {
    double s = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        s += static_cast<double>(coeffs_[i]) * std::pow(t, low_ + static_cast<int>(i));
    return s;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        long long c = coeffs_[i];
        if (c == 0) continue;
        int deg = low_ + i;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        long long mag = std::llabs(c);
        if (mag != 1 || deg == 0) os << mag;
        if (deg != 0) {
            if (mag != 1) os << '*';
            os << var;
            if (deg != 1) os << '^' << deg;
        }
    }
    return os.str();
}

LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly::constant(1);
    for (const auto& row : m)
        if (row.size() != n) throw validation_error("determinant of a non-square matrix");
    if (n > 30) throw validation_error("matrix too large for minor expansion");

    // det over rows 0..r-1 restricted to the column subset `mask`.
    std::unordered_map<std::uint64_t, LaurentPoly> memo;
    auto rec = [&](auto&& self, std::uint64_t mask, std::size_t row) -> LaurentPoly {
        if (row == n) return LaurentPoly::constant(1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        LaurentPoly det;
        int sign = 1;
        for (std::size_t col = 0; col < n; ++col) {
            if (!(mask & (1ull << col))) continue;
            if (!m[row][col].is_zero()) {
                LaurentPoly sub = self(self, mask & ~(1ull << col), row + 1);
                LaurentPoly termPoly = m[row][col] * sub;
                if (sign < 0) termPoly = -termPoly;
                det += termPoly;
            }
            sign = -sign;
        }
        memo.emplace(mask, det);
        return det;
    };
    return rec(rec, (n == 64) ? ~0ull : ((1ull << n) - 1), 0);
}

} // namespace l2alex

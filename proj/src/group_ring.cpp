#include "l2alex/group_ring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace l2alex {

GroupRingElement GroupRingElement::term(Word w, double c) {
    GroupRingElement e;
    if (c != 0.0) e.terms_.push_back({std::move(w), c});
    return e;
}

GroupRingElement GroupRingElement::from_terms(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.first < b.first; });
    GroupRingElement e;
    e.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!e.terms_.empty() && e.terms_.back().first == t.first)
            e.terms_.back().second += t.second;
        else
            e.terms_.push_back(std::move(t));
    }
    std::erase_if(e.terms_, [](const Term& t) { return t.second == 0.0; });
    return e;
}

double GroupRingElement::coeff(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Word& key) { return t.first < key; });
    if (it != terms_.end() && it->first == w) return it->second;
    return 0.0;
}

double GroupRingElement::identity_coeff() const {
    // The empty word sorts first.
    if (!terms_.empty() && terms_.front().first.empty()) return terms_.front().second;
    return 0.0;
}

double GroupRingElement::l1_norm() const {
    double s = 0.0;
    for (const Term& t : terms_) s += std::abs(t.second);
    return s;
}

int GroupRingElement::max_generator() const {
    int m = -1;
    for (const Term& t : terms_) m = std::max(m, t.first.max_generator());
    return m;
}

GroupRingElement GroupRingElement::adjoint() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back({t.first.inverse(), t.second});
    return from_terms(std::move(out));
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            double c = a->second + b->second;
            if (c != 0.0) merged.push_back({a->first, c});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
    return *this += -rhs;
}

GroupRingElement& GroupRingElement::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.second *= s;
    return *this;
}

GroupRingElement operator-(const GroupRingElement& a) {
    GroupRingElement e = a;
    for (auto& t : e.terms_) t.second = -t.second;
    return e;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    std::vector<GroupRingElement::Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            out.push_back({ta.first * tb.first, ta.second * tb.second});
    return GroupRingElement::from_terms(std::move(out));
}

std::string GroupRingElement::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        double c = t.second;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        double mag = std::abs(c);
        if (mag != 1.0 || t.first.empty()) {
            os << mag;
            if (!t.first.empty()) os << '*';
        }
        if (!t.first.empty()) os << t.first.to_string(names);
    }
    return os.str();
}

} // namespace l2alex

#include "l2alex/word.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "l2alex/errors.hpp"

namespace l2alex {

Word Word::generator(int gen, int exp) {
    Word w;
    w.append_run(gen, exp);
    return w;
}

Word Word::from_runs(const std::vector<Run>& raw) {
    Word w;
    for (const Run& r : raw) w.append_run(r.gen, r.exp);
    return w;
}

long long Word::length() const {
    long long n = 0;
    for (const Run& r : runs_) n += (r.exp < 0) ? -static_cast<long long>(r.exp) : r.exp;
    return n;
}

Word Word::inverse() const {
    Word w;
    w.runs_.reserve(runs_.size());
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
        w.runs_.push_back({it->gen, -it->exp});
    return w;
}

Word Word::pow(int n) const {
    if (n == 0) return {};
    Word base = (n > 0) ? *this : inverse();
    int reps = (n > 0) ? n : -n;
    Word out;
    for (int i = 0; i < reps; ++i) out.append(base);
    return out;
}

int Word::max_generator() const {
    int m = -1;
    for (const Run& r : runs_)
        if (r.gen > m) m = r.gen;
    return m;
}

long long Word::exponent_sum(int gen) const {
    long long s = 0;
    for (const Run& r : runs_)
        if (r.gen == gen) s += r.exp;
    return s;
}

long long Word::weighted_exponent_sum(const std::vector<long long>& weight) const {
    long long s = 0;
    for (const Run& r : runs_) {
        if (r.gen < 0 || r.gen >= static_cast<int>(weight.size()))
            throw alphabet_error("generator index " + std::to_string(r.gen) +
                                 " outside weight table");
        s += static_cast<long long>(r.exp) * weight[r.gen];
    }
    return s;
}

void Word::append_run(int gen, long long exp) {
    if (exp == 0) return;
    if (exp > std::numeric_limits<std::int32_t>::max() ||
        exp < std::numeric_limits<std::int32_t>::min())
        throw std::overflow_error("word exponent overflow");
    if (!runs_.empty() && runs_.back().gen == gen) {
        long long merged = static_cast<long long>(runs_.back().exp) + exp;
        if (merged == 0) {
            runs_.pop_back();
        } else {
            if (merged > std::numeric_limits<std::int32_t>::max() ||
                merged < std::numeric_limits<std::int32_t>::min())
                throw std::overflow_error("word exponent overflow");
            runs_.back().exp = static_cast<std::int32_t>(merged);
        }
        return;
    }
    runs_.push_back({gen, static_cast<std::int32_t>(exp)});
}

void Word::append(const Word& w) {
    for (const Run& r : w.runs_) append_run(r.gen, r.exp);
}

Word Word::shifted(int delta) const {
    Word w;
    w.runs_.reserve(runs_.size());
    for (const Run& r : runs_) w.runs_.push_back({r.gen + delta, r.exp});
    return w;
}

Word& Word::operator*=(const Word& rhs) {
    append(rhs);
    return *this;
}

bool Word::operator<(const Word& rhs) const {
    if (runs_.size() != rhs.runs_.size()) return runs_.size() < rhs.runs_.size();
    for (std::size_t i = 0; i < runs_.size(); ++i) {
        if (runs_[i].gen != rhs.runs_[i].gen) return runs_[i].gen < rhs.runs_[i].gen;
        if (runs_[i].exp != rhs.runs_[i].exp) return runs_[i].exp < rhs.runs_[i].exp;
    }
    return false;
}

std::size_t Word::hash() const {
    // FNV-1a over the run data.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (const Run& r : runs_) {
        mix(static_cast<std::uint32_t>(r.gen));
        mix(static_cast<std::uint32_t>(r.exp));
    }
    return static_cast<std::size_t>(h);
}

std::string Word::to_string(const std::vector<std::string>& names) const {
    if (runs_.empty()) return "e";
    std::ostringstream os;
    bool first = true;
    for (const Run& r : runs_) {
        if (!first) os << ' ';
        first = false;
        if (r.gen >= 0 && r.gen < static_cast<int>(names.size()))
            os << names[r.gen];
        else
            os << 'g' << r.gen;
        if (r.exp != 1) os << '^' << r.exp;
    }
    return os.str();
}

Word reduce(const std::vector<Run>& raw) { return Word::from_runs(raw); }

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
    Word w;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < n && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '^') ++i;
        std::string name = text.substr(start, i - start);
        int gen = -1;
        for (std::size_t g = 0; g < names.size(); ++g)
            if (names[g] == name) {
                gen = static_cast<int>(g);
                break;
            }
        if (gen < 0) throw parse_error("unknown generator '" + name + "'", start);
        long long exp = 1;
        if (i < n && text[i] == '^') {
            ++i;
            std::size_t expStart = i;
            if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == expStart) throw parse_error("missing exponent", expStart);
            exp = std::stoll(text.substr(expStart, i - expStart));
        }
        w.append_run(gen, exp);
    }
    return w;
}

} // namespace l2alex

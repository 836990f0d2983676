#pragma once

// Freely reduced words over a finite generator alphabet.
//
// A word is stored as run-length pairs (generator, exponent).  The class
// invariant is free reduction: no exponent is zero and no two adjacent runs
// share a generator.  The empty word is the group identity.

#include <cstdint>
#include <string>
#include <vector>

namespace l2alex {

struct Run {
    std::int32_t gen;
    std::int32_t exp;
    friend bool operator==(const Run&, const Run&) = default;
};

class Word {
public:
    Word() = default;

    /// Single-generator word g^exp (empty when exp == 0).
    static Word generator(int gen, int exp = 1);

    /// Free reduction of an arbitrary run sequence.
    static Word from_runs(const std::vector<Run>& raw);

    bool empty() const { return runs_.empty(); }
    int run_count() const { return static_cast<int>(runs_.size()); }
    /// Total letter count (sum of |exponent|).
    long long length() const;
    const std::vector<Run>& runs() const { return runs_; }

    Word inverse() const;
    Word pow(int n) const;

    /// Largest generator index used, -1 for the empty word.
    int max_generator() const;
    long long exponent_sum(int gen) const;
    /// Sum over runs of exp * weight[gen].
    long long weighted_exponent_sum(const std::vector<long long>& weight) const;

    /// Appends one run, merging and cancelling at the boundary.
    void append_run(int gen, long long exp);
    void append(const Word& w);
    /// Renames generator g to g + delta for every run.
    Word shifted(int delta) const;

    Word& operator*=(const Word& rhs);
    friend Word operator*(Word lhs, const Word& rhs) {
        lhs *= rhs;
        return lhs;
    }

    friend bool operator==(const Word&, const Word&) = default;
    /// Strict total order (length of run vector, then runs lexicographically);
    /// any fixed order works, it only pins deterministic term layouts.
    bool operator<(const Word& rhs) const;

    std::size_t hash() const;

    /// Renders as e.g. "a b^-1 c^2"; indices are used if names are absent.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::vector<Run> runs_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

/// Free reduction entry point used by callers holding raw letter runs.
Word reduce(const std::vector<Run>& raw);

/// Parses "a b^-1 c^2" against a generator name list.
Word parse_word(const std::string& text, const std::vector<std::string>& names);

} // namespace l2alex

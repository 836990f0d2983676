#include "l2alex/ring_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "l2alex/errors.hpp"

namespace l2alex {

RingMatrix RingMatrix::identity(int n) {
    RingMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GroupRingElement::one();
    return m;
}

RingMatrix RingMatrix::scalar(int n, const GroupRingElement& d) {
    RingMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = d;
    return m;
}

RingMatrix RingMatrix::adjoint_transpose() const {
    RingMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).adjoint();
    return m;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool RingMatrix::is_identity() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const GroupRingElement expected =
                (i == j) ? GroupRingElement::one() : GroupRingElement::zero();
            if (at(i, j) != expected) return false;
        }
    return true;
}

double RingMatrix::l1_mass() const {
    double s = 0.0;
    for (const auto& e : e_) s += e.l1_norm();
    return s;
}

std::size_t RingMatrix::max_support() const {
    std::size_t s = 0;
    for (const auto& e : e_) s = std::max(s, e.size());
    return s;
}

RingMatrix& RingMatrix::operator+=(const RingMatrix& rhs) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += rhs.e_[i];
    return *this;
}

RingMatrix& RingMatrix::operator-=(const RingMatrix& rhs) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= rhs.e_[i];
    return *this;
}

RingMatrix& RingMatrix::operator*=(double s) {
    for (auto& e : e_) e *= s;
    return *this;
}

void RingMatrix::add_scalar_diagonal(double c) {
    for (int i = 0; i < std::min(rows_, cols_); ++i)
        at(i, i) += GroupRingElement::term(Word{}, c);
}

void RingMatrix::normalize(const NormalFormOracle& oracle) {
    for (auto& e : e_) {
        std::vector<GroupRingElement::Term> terms;
        terms.reserve(e.size());
        for (const auto& t : e.terms()) terms.push_back({oracle.normal_form(t.first), t.second});
        e = GroupRingElement::from_terms(std::move(terms));
    }
}

RingMatrix mul_free(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols() != b.rows()) throw validation_error("matrix dimension mismatch");
    RingMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            GroupRingElement acc;
            for (int k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            c.at(i, j) = acc;
        }
    return c;
}

namespace {

using Term = GroupRingElement::Term;

// One contiguous slice of an output entry's pair stream: left-factor terms
// [first, last) of block k, each multiplied against all of B(k, j).
struct ChunkPiece {
    int k;
    std::size_t first;
    std::size_t last;
};

struct Chunk {
    std::vector<ChunkPiece> pieces;
    std::size_t pairs = 0;
};

struct EntryPlan {
    int i = 0;
    int j = 0;
    std::vector<Chunk> chunks;
};

std::vector<Term> run_chunk(const RingMatrix& a, const RingMatrix& b, int i, int j,
                            const Chunk& chunk, const NormalFormOracle& oracle) {
    std::unordered_map<Word, double, WordHash> acc;
    acc.reserve(chunk.pairs);
    for (const ChunkPiece& piece : chunk.pieces) {
        const auto& lhs = a.at(i, piece.k).terms();
        const auto& rhs = b.at(piece.k, j).terms();
        for (std::size_t ta = piece.first; ta < piece.last; ++ta) {
            const Word& wa = lhs[ta].first;
            const double ca = lhs[ta].second;
            for (const Term& tb : rhs) acc[oracle.mul(wa, tb.first)] += ca * tb.second;
        }
    }
    std::vector<Term> out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    return out;
}

// Merges two sorted term vectors, summing coefficients of equal words.
std::vector<Term> merge_sorted(std::vector<Term>&& x, std::vector<Term>&& y) {
    std::vector<Term> out;
    out.reserve(x.size() + y.size());
    auto a = x.begin();
    auto b = y.begin();
    while (a != x.end() || b != y.end()) {
        if (b == y.end() || (a != x.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == x.end() || b->first < a->first) {
            out.push_back(std::move(*b++));
        } else {
            out.push_back({std::move(a->first), a->second + b->second});
            ++a;
            ++b;
        }
    }
    return out;
}

// Fixed-shape pairwise fold; per-word additions always combine in the same
// grouping no matter how many threads ran the chunks.
std::vector<Term> fold_chunks(std::vector<std::vector<Term>>&& parts) {
    if (parts.empty()) return {};
    while (parts.size() > 1) {
        std::vector<std::vector<Term>> next;
        next.reserve((parts.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
            next.push_back(merge_sorted(std::move(parts[i]), std::move(parts[i + 1])));
        if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
        parts = std::move(next);
    }
    return std::move(parts.front());
}

} // namespace

RingMatrix mul(const RingMatrix& a, const RingMatrix& b, MulContext& ctx) {
    if (a.cols() != b.rows()) throw validation_error("matrix dimension mismatch");
    if (ctx.oracle == nullptr) throw validation_error("quotient product needs an oracle");
    const NormalFormOracle& oracle = *ctx.oracle;

    // Plan chunks; the layout depends only on the inputs and chunk_pairs.
    std::vector<EntryPlan> plans;
    plans.reserve(a.rows() * b.cols());
    const std::size_t target = std::max<std::size_t>(1, ctx.chunk_pairs);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            EntryPlan plan;
            plan.i = i;
            plan.j = j;
            Chunk cur;
            for (int k = 0; k < a.cols(); ++k) {
                const std::size_t na = a.at(i, k).size();
                const std::size_t nb = b.at(k, j).size();
                if (na == 0 || nb == 0) continue;
                std::size_t first = 0;
                while (first < na) {
                    std::size_t room = (cur.pairs >= target) ? 0 : (target - cur.pairs + nb - 1) / nb;
                    if (room == 0) {
                        plan.chunks.push_back(std::move(cur));
                        cur = Chunk{};
                        room = (target + nb - 1) / nb;
                    }
                    std::size_t take = std::min(room, na - first);
                    cur.pieces.push_back({k, first, first + take});
                    cur.pairs += take * nb;
                    first += take;
                }
            }
            if (cur.pairs > 0) plan.chunks.push_back(std::move(cur));
            plans.push_back(std::move(plan));
        }

    // Flat task list over (entry, chunk).
    struct Task {
        int plan;
        int chunk;
    };
    std::vector<Task> tasks;
    for (std::size_t p = 0; p < plans.size(); ++p)
        for (std::size_t c = 0; c < plans[p].chunks.size(); ++c)
            tasks.push_back({static_cast<int>(p), static_cast<int>(c)});

    std::vector<std::vector<std::vector<Term>>> partial(plans.size());
    for (std::size_t p = 0; p < plans.size(); ++p) partial[p].resize(plans[p].chunks.size());

    const int ntasks = static_cast<int>(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (ctx.parallel && ntasks > 1)
#endif
    for (int t = 0; t < ntasks; ++t) {
        const EntryPlan& plan = plans[tasks[t].plan];
        partial[tasks[t].plan][tasks[t].chunk] =
            run_chunk(a, b, plan.i, plan.j, plan.chunks[tasks[t].chunk], oracle);
    }

    RingMatrix c(a.rows(), b.cols());
    std::vector<double> dropped(plans.size(), 0.0);
    const int nplans = static_cast<int>(plans.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (ctx.parallel && nplans > 1)
#endif
    for (int p = 0; p < nplans; ++p) {
        std::vector<Term> merged = fold_chunks(std::move(partial[p]));
        if (ctx.prune > 0.0) {
            std::vector<Term> kept;
            kept.reserve(merged.size());
            double mass = 0.0;
            for (auto& t : merged) {
                if (std::abs(t.second) < ctx.prune)
                    mass += std::abs(t.second);
                else
                    kept.push_back(std::move(t));
            }
            merged = std::move(kept);
            dropped[p] = mass;
        } else {
            std::erase_if(merged, [](const Term& t) { return t.second == 0.0; });
        }
        c.at(plans[p].i, plans[p].j) = GroupRingElement::from_terms(std::move(merged));
    }
    for (double d : dropped) ctx.pruned_mass += d;
    return c;
}

RingMatrix mul_reference(const RingMatrix& a, const RingMatrix& b,
                         const NormalFormOracle& oracle) {
    if (a.cols() != b.rows()) throw validation_error("matrix dimension mismatch");
    RingMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            std::map<Word, double> acc;
            for (int k = 0; k < a.cols(); ++k)
                for (const auto& ta : a.at(i, k).terms())
                    for (const auto& tb : b.at(k, j).terms())
                        acc[oracle.mul(ta.first, tb.first)] += ta.second * tb.second;
            std::vector<GroupRingElement::Term> terms(acc.begin(), acc.end());
            c.at(i, j) = GroupRingElement::from_terms(std::move(terms));
        }
    return c;
}

RingMatrix block_diag(const RingMatrix& a, const RingMatrix& b) {
    RingMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return c;
}

} // namespace l2alex

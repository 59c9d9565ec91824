#pragma once

// Shared helpers for the unit and acceptance suites: seeded random
// instances, the brute-force set-intersection oracle, and exact rational
// measure arithmetic. Everything here is independent of the library's
// single-pass counting path.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "prayatul/core.hpp"

namespace testutil {

struct TripleCase {
    prayatul::LabelSequence truth;
    prayatul::LabelSequence primary;
    prayatul::LabelSequence alternative;
};

inline TripleCase random_case(std::mt19937& rng, int max_n = 64, int max_classes = 4) {
    std::uniform_int_distribution<int> n_dist(1, max_n);
    std::uniform_int_distribution<int> k_dist(1, max_classes);
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> label_dist(0, k_dist(rng) - 1);

    TripleCase c;
    for (int i = 0; i < n; ++i) {
        const std::string id = "i" + std::to_string(i);
        c.truth.ids.push_back(id);
        c.primary.ids.push_back(id);
        c.alternative.ids.push_back(id);
        c.truth.labels.push_back("c" + std::to_string(label_dist(rng)));
        c.primary.labels.push_back("c" + std::to_string(label_dist(rng)));
        c.alternative.labels.push_back("c" + std::to_string(label_dist(rng)));
    }
    return c;
}

// Any aligned triple whose matrix has exactly the given counts. Truth is a
// single class; wrong predictions use a second token.
inline TripleCase sequences_for_counts(std::int64_t br, std::int64_t rw, std::int64_t wr,
                                       std::int64_t bw) {
    TripleCase c;
    const std::int64_t n = br + rw + wr + bw;
    c.truth.ids.reserve(n);
    std::int64_t i = 0;
    auto push = [&](const char* p_label, const char* q_label) {
        const std::string id = "i" + std::to_string(i++);
        c.truth.ids.push_back(id);
        c.primary.ids.push_back(id);
        c.alternative.ids.push_back(id);
        c.truth.labels.emplace_back("t");
        c.primary.labels.emplace_back(p_label);
        c.alternative.labels.emplace_back(q_label);
    };
    for (std::int64_t k = 0; k < br; ++k) push("t", "t");
    for (std::int64_t k = 0; k < rw; ++k) push("t", "x");
    for (std::int64_t k = 0; k < wr; ++k) push("x", "t");
    for (std::int64_t k = 0; k < bw; ++k) push("x", "x");
    return c;
}

// Materializes the right/wrong instance-ID sets of both models and takes
// the four intersection cardinalities.
inline prayatul::PrayatulMatrix oracle_matrix(const TripleCase& c, bool keep_cells = false) {
    std::set<std::string> rp, wp, rq, wq;
    for (std::size_t i = 0; i < c.truth.size(); ++i) {
        (c.primary.labels[i] == c.truth.labels[i] ? rp : wp).insert(c.truth.ids[i]);
        (c.alternative.labels[i] == c.truth.labels[i] ? rq : wq).insert(c.truth.ids[i]);
    }
    auto intersect = [](const std::set<std::string>& a, const std::set<std::string>& b) {
        std::vector<std::string> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };
    const auto both_right = intersect(rp, rq);
    const auto right_wrong = intersect(rp, wq);
    const auto wrong_right = intersect(wp, rq);
    const auto both_wrong = intersect(wp, wq);

    prayatul::PrayatulMatrix m;
    m.br = static_cast<std::int64_t>(both_right.size());
    m.rw = static_cast<std::int64_t>(right_wrong.size());
    m.wr = static_cast<std::int64_t>(wrong_right.size());
    m.bw = static_cast<std::int64_t>(both_wrong.size());
    if (keep_cells) {
        m.cells.emplace();
        m.cells->br = both_right;
        m.cells->rw = right_wrong;
        m.cells->wr = wrong_right;
        m.cells->bw = both_wrong;
    }
    return m;
}

// Exact rational value of a measure; defined == false mirrors the
// library's Undefined state.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool defined = false;

    static Rational undefined() { return {}; }
    static Rational of(std::int64_t num, std::int64_t den) {
        if (den == 0) return undefined();
        return {num, den, true};
    }
};

inline bool operator==(const Rational& a, const Rational& b) {
    if (a.defined != b.defined) return false;
    if (!a.defined) return true;
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
}

struct RationalMeasures {
    Rational sigma_c, alpha, xi_c, xi_e, phi_e;
};

inline RationalMeasures rational_measures(const prayatul::PrayatulMatrix& m) {
    RationalMeasures r;
    r.sigma_c = Rational::of(m.rw - m.wr, m.rw + m.wr);
    r.alpha = Rational::of(m.br + m.rw - m.bw, m.total());
    r.xi_c = Rational::of(m.br + m.rw, m.br + m.rw + m.wr);
    r.xi_e = Rational::of(m.br + m.rw - m.wr, m.br + m.rw + m.wr);
    r.phi_e = Rational::of(m.br + m.rw - m.wr, m.total());
    return r;
}

// |a - b| <= bound, all exact.
inline bool abs_diff_within(const Rational& a, const Rational& b, const Rational& bound) {
    const __int128 diff_num =
        static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
    const __int128 diff_den = static_cast<__int128>(a.den) * b.den;
    const __int128 lhs = (diff_num < 0 ? -diff_num : diff_num) * bound.den;
    const __int128 rhs = static_cast<__int128>(bound.num) * (diff_den < 0 ? -diff_den : diff_den);
    return lhs <= rhs;
}

}  // namespace testutil

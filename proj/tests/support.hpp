#pragma once

#include "concord/seifert.hpp"
#include "concord/word.hpp"

#include <gmpxx.h>

#include <random>
#include <utility>
#include <vector>

namespace support {

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eed5eed) {
    return std::mt19937_64(seed);
}

inline concord::Word random_word(std::mt19937_64& rng, int rank, int max_len) {
    std::uniform_int_distribution<int> len_d(0, max_len);
    std::uniform_int_distribution<int> gen_d(1, rank);
    std::uniform_int_distribution<int> sign_d(0, 1);
    concord::Word w(rank);
    int len = len_d(rng);
    for (int i = 0; i < len; ++i)
        w = w * concord::Word::generator(rank, gen_d(rng), sign_d(rng) ? 1 : -1);
    return w;
}

// Random congruence images P^T V0 P of a block sum of genus-1 forms keep
// det(V - V^T) = 1 exactly.
inline concord::SeifertMatrix random_seifert(std::mt19937_64& rng, int genus) {
    int n = 2 * genus;
    std::uniform_int_distribution<int> small(-2, 2);
    concord::IntMat v(static_cast<size_t>(n), std::vector<mpz_class>(static_cast<size_t>(n), 0));
    for (int b = 0; b < genus; ++b) {
        int i = 2 * b;
        v[i][i] = small(rng);
        v[i + 1][i + 1] = small(rng);
        int c = small(rng);
        v[i][i + 1] = c + 1;
        v[i + 1][i] = c;
    }
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> lam(-1, 1);
    for (int step = 0; step < 2 * n; ++step) {
        int i = idx(rng), j = idx(rng), l = lam(rng);
        if (i == j || l == 0)
            continue;
        for (int k = 0; k < n; ++k)
            v[k][i] += l * v[k][j];
        for (int k = 0; k < n; ++k)
            v[i][k] += l * v[j][k];
    }
    return concord::SeifertMatrix(v);
}

// Exact on-circle point from the tangent half-angle s: ((1-s^2), 2s) / (1+s^2).
inline std::pair<mpq_class, mpq_class> circle_point(const mpq_class& s) {
    mpq_class den = 1 + s * s;
    mpq_class re = (1 - s * s) / den;
    mpq_class im = 2 * s / den;
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

// Independent signature oracle: symmetric congruence reduction (rational
// pivots, hyperbolic pairs for zero diagonals) on the realified Hermitian
// form, so it shares no code with the characteristic-polynomial route.
inline int congruence_signature(std::vector<std::vector<mpq_class>> m) {
    int sig = 0;
    std::vector<size_t> live;
    for (size_t i = 0; i < m.size(); ++i)
        live.push_back(i);
    while (!live.empty()) {
        size_t pi = live.size();
        for (size_t a = 0; a < live.size(); ++a)
            if (m[live[a]][live[a]] != 0) {
                pi = a;
                break;
            }
        if (pi < live.size()) {
            size_t p = live[pi];
            mpq_class d = m[p][p];
            sig += sgn(d);
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(pi));
            for (size_t a : live)
                for (size_t b : live)
                    m[a][b] -= m[a][p] * m[p][b] / d;
            continue;
        }
        size_t qi = live.size(), ri = live.size();
        for (size_t a = 0; a < live.size() && qi == live.size(); ++a)
            for (size_t b = a + 1; b < live.size(); ++b)
                if (m[live[a]][live[b]] != 0) {
                    qi = a;
                    ri = b;
                    break;
                }
        if (qi == live.size())
            break;
        size_t p = live[qi], q = live[ri];
        mpq_class d = m[p][q];
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(ri));
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(qi));
        for (size_t a : live)
            for (size_t b : live)
                m[a][b] -= (m[a][p] * m[q][b] + m[a][q] * m[p][b]) / d;
    }
    return sig;
}

inline int signature_oracle(const concord::SeifertMatrix& v, const mpq_class& re,
                            const mpq_class& im) {
    int n = v.size();
    // H = (1-w)V + (1-conj w)V^T, realified as [[Re, -Im], [Im, Re]].
    std::vector<std::vector<mpq_class>> re_h(static_cast<size_t>(n),
                                             std::vector<mpq_class>(static_cast<size_t>(n))),
        im_h = re_h;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            re_h[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (1 - re) * (v.at(i, j) + v.at(j, i));
            im_h[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                im * (v.at(j, i) - v.at(i, j));
        }
    std::vector<std::vector<mpq_class>> big(static_cast<size_t>(2 * n),
                                            std::vector<mpq_class>(static_cast<size_t>(2 * n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto si = static_cast<size_t>(i), sj = static_cast<size_t>(j);
            big[si][sj] = re_h[si][sj];
            big[si + static_cast<size_t>(n)][sj + static_cast<size_t>(n)] = re_h[si][sj];
            big[si][sj + static_cast<size_t>(n)] = -im_h[si][sj];
            big[si + static_cast<size_t>(n)][sj] = im_h[si][sj];
        }
    return congruence_signature(std::move(big)) / 2;
}

} // namespace support

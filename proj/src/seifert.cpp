#include "concord/seifert.hpp"

#include "concord/errors.hpp"

#include <numeric>

namespace concord {

namespace {

std::vector<std::vector<int>> mat_components(const IntMat& v) {
    const int n = static_cast<int>(v.size());
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (v[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0 ||
                v[static_cast<size_t>(j)][static_cast<size_t>(i)] != 0)
                parent[static_cast<size_t>(find(i))] = find(j);
    std::vector<std::vector<int>> comps;
    std::vector<int> slot(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (slot[static_cast<size_t>(r)] < 0) {
            slot[static_cast<size_t>(r)] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<size_t>(slot[static_cast<size_t>(r)])].push_back(i);
    }
    return comps;
}

} // namespace

SeifertMatrix::SeifertMatrix(IntMat entries) : v_(std::move(entries)) {
    const size_t n = v_.size();
    for (const auto& row : v_) {
        if (row.size() != n)
            throw validation_error("Seifert matrix must be square");
    }
    if (n % 2 != 0)
        throw validation_error("Seifert matrix must have even size 2g");
    // det(V − Vᵀ) splits over the support components
    mpz_class det = 1;
    for (const auto& comp : mat_components(v_)) {
        IntMat skew(comp.size(), std::vector<mpz_class>(comp.size()));
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = 0; j < comp.size(); ++j)
                skew[i][j] = v_[static_cast<size_t>(comp[i])][static_cast<size_t>(comp[j])] -
                             v_[static_cast<size_t>(comp[j])][static_cast<size_t>(comp[i])];
        det *= det_int(std::move(skew));
    }
    if (det != 1)
        throw validation_error("Seifert matrix must satisfy det(V - V^T) = 1");
}

SeifertMatrix SeifertMatrix::unknot() { return SeifertMatrix(IntMat{}); }

SeifertMatrix SeifertMatrix::trefoil() {
    return SeifertMatrix({{-1, 1}, {0, -1}});
}

SeifertMatrix SeifertMatrix::left_trefoil() {
    return SeifertMatrix({{1, 0}, {-1, 1}});
}

AlexanderPolynomial::AlexanderPolynomial(const ZPoly& raw) {
    if (raw.is_zero())
        throw validation_error("Alexander polynomial cannot be zero");
    std::vector<mpz_class> c = raw.coeffs();
    size_t val = 0;
    while (c[val] == 0)
        ++val;
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(val));
    ZPoly p(std::move(c));
    if (p.leading() < 0)
        p = -p;
    p_ = std::move(p);
}

bool AlexanderPolynomial::equals_up_to_units(const ZPoly& other) const {
    if (other.is_zero())
        return false;
    return AlexanderPolynomial(other).p_ == p_;
}

std::vector<std::vector<int>> support_components(const SeifertMatrix& v) {
    return mat_components(v.entries());
}

IntMat principal_submatrix(const IntMat& m, const std::vector<int>& idx) {
    IntMat out(idx.size(), std::vector<mpz_class>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j)
            out[i][j] = m[static_cast<size_t>(idx[i])][static_cast<size_t>(idx[j])];
    return out;
}

namespace {

std::vector<std::vector<ZPoly>> presentation_block(const SeifertMatrix& v,
                                                   const std::vector<int>& idx) {
    std::vector<std::vector<ZPoly>> m(idx.size(), std::vector<ZPoly>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i) {
        for (size_t j = 0; j < idx.size(); ++j) {
            const mpz_class& vij = v.at(idx[i], idx[j]);
            const mpz_class& vji = v.at(idx[j], idx[i]);
            m[i][j] = ZPoly({-vji, vij});
        }
    }
    return m;
}

} // namespace

AlexanderPolynomial alexander(const SeifertMatrix& v) {
    ZPoly d = ZPoly::constant(1);
    for (const auto& comp : support_components(v))
        d = d * det_poly(presentation_block(v, comp));
    return AlexanderPolynomial(d);
}

bool degree_gate(const SeifertMatrix& v, int n) {
    if (n < 1)
        throw validation_error("solvability level must be at least 1");
    const int d = alexander(v).degree();
    return d > 2 || (n == 1 && d >= 2);
}

int arf(const SeifertMatrix& v) {
    mpz_class d = alexander(v).at(-1);
    mpz_class r = d % 8;
    if (r < 0)
        r += 8;
    return (r == 1 || r == 7) ? 0 : 1;
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    const int n = a.size(), m = b.size();
    IntMat out(static_cast<size_t>(n + m), std::vector<mpz_class>(static_cast<size_t>(n + m)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            out[static_cast<size_t>(n + i)][static_cast<size_t>(n + j)] = b.at(i, j);
    return SeifertMatrix(std::move(out));
}

SeifertMatrix mirror_reverse(const SeifertMatrix& v) {
    const int n = v.size();
    IntMat out(static_cast<size_t>(n), std::vector<mpz_class>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<size_t>(i)][static_cast<size_t>(j)] = -v.at(j, i);
    return SeifertMatrix(std::move(out));
}

std::vector<std::vector<ZPoly>> localized_presentation(const SeifertMatrix& v) {
    std::vector<int> all(static_cast<size_t>(v.size()));
    std::iota(all.begin(), all.end(), 0);
    return presentation_block(v, all);
}

} // namespace concord

#include "resint/oracle.hpp"

#include <gmpxx.h>

#include <map>

namespace resint::oracle {

namespace {

// odometer enumeration of exponent vectors of weighted degree n
std::vector<std::vector<int>> degree_basis(const RingPtr& ring, int n) {
    std::vector<std::vector<int>> out;
    std::size_t nv = ring->nvars();
    const auto& w = ring->weights();
    std::vector<int> e(nv, 0);
    for (;;) {
        int deg = 0;
        for (std::size_t i = 0; i < nv; ++i) deg += e[i] * w[i];
        if (deg == n) out.push_back(e);
        // advance odometer, bounding each slot by n / w_i
        std::size_t i = 0;
        while (i < nv) {
            if ((e[i] + 1) * w[i] <= n) {
                ++e[i];
                break;
            }
            e[i] = 0;
            ++i;
        }
        if (i == nv) break;
    }
    return out;
}

struct RowReducer {
    // exact Gauss elimination over Q (mpq) or F_p, rows held in echelon form
    long long p;
    std::vector<std::vector<mpq_class>> rows_q;
    std::vector<std::vector<long long>> rows_p;
    std::vector<std::size_t> pivots;

    explicit RowReducer(long long characteristic) : p(characteristic) {}

    static long long inv_mod(long long a, long long p) {
        long long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        return t < 0 ? t + p : t;
    }

    // reduce v against current rows; returns true if it vanished, otherwise
    // inserts the reduced row
    bool reduce_and_insert(std::vector<mpq_class> vq, std::vector<long long> vp, bool insert) {
        if (p == 0) {
            for (std::size_t k = 0; k < rows_q.size(); ++k) {
                std::size_t piv = pivots[k];
                if (vq[piv] == 0) continue;
                mpq_class f = vq[piv] / rows_q[k][piv];
                for (std::size_t c = 0; c < vq.size(); ++c) vq[c] -= f * rows_q[k][c];
            }
            std::size_t piv = vq.size();
            for (std::size_t c = 0; c < vq.size(); ++c)
                if (vq[c] != 0) { piv = c; break; }
            if (piv == vq.size()) return true;
            if (insert) {
                rows_q.push_back(std::move(vq));
                pivots.push_back(piv);
            }
            return false;
        }
        for (std::size_t k = 0; k < rows_p.size(); ++k) {
            std::size_t piv = pivots[k];
            if (vp[piv] == 0) continue;
            long long f = (static_cast<__int128>(vp[piv]) *
                           inv_mod(rows_p[k][piv], p)) % p;
            for (std::size_t c = 0; c < vp.size(); ++c) {
                vp[c] = (vp[c] - static_cast<long long>((static_cast<__int128>(f) *
                                                         rows_p[k][c]) % p)) % p;
                if (vp[c] < 0) vp[c] += p;
            }
        }
        std::size_t piv = vp.size();
        for (std::size_t c = 0; c < vp.size(); ++c)
            if (vp[c] != 0) { piv = c; break; }
        if (piv == vp.size()) return true;
        if (insert) {
            rows_p.push_back(std::move(vp));
            pivots.push_back(piv);
        }
        return false;
    }

    std::size_t rank() const { return pivots.size(); }
};

std::vector<int> add_exp(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

// vector of p over the degree-n basis (index map supplied)
void poly_to_row(const Polynomial& g, const std::vector<int>& shift,
                 const std::map<std::vector<int>, std::size_t>& index, long long p,
                 std::vector<mpq_class>& vq, std::vector<long long>& vp) {
    for (const auto& t : g.terms()) {
        std::vector<int> e = add_exp(t.mon.e, shift);
        auto it = index.find(e);
        if (it == index.end()) throw error("oracle: monomial outside the graded piece");
        if (p == 0) vq[it->second] += t.coef.rat();
        else {
            vp[it->second] = (vp[it->second] + t.coef.res()) % p;
        }
    }
}

// build the reducer spanning { m * g } in degree n
RowReducer span_in_degree(const RingPtr& ring, const std::vector<Polynomial>& gens, int n,
                          const std::map<std::vector<int>, std::size_t>& index,
                          std::size_t dimn) {
    long long p = ring->characteristic();
    RowReducer red(p);
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int gd = g.degree();
        if (gd > n) continue;
        for (const auto& m : degree_basis(ring, n - gd)) {
            std::vector<mpq_class> vq(p == 0 ? dimn : 0, 0);
            std::vector<long long> vp(p == 0 ? 0 : dimn, 0);
            poly_to_row(g, m, index, p, vq, vp);
            red.reduce_and_insert(std::move(vq), std::move(vp), true);
        }
    }
    return red;
}

std::map<std::vector<int>, std::size_t> index_basis(const std::vector<std::vector<int>>& basis) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    return index;
}

}  // namespace

bool membership(const Polynomial& p, const std::vector<Polynomial>& gens, int degree_bound) {
    if (p.is_zero()) return true;
    if (!p.is_homogeneous()) throw error("oracle membership expects homogeneous input");
    const RingPtr& ring = p.ring();
    int n = p.degree();
    if (n > degree_bound) throw error("oracle degree bound exceeded");
    auto basis = degree_basis(ring, n);
    auto index = index_basis(basis);
    RowReducer red = span_in_degree(ring, gens, n, index, basis.size());
    long long ch = ring->characteristic();
    std::vector<mpq_class> vq(ch == 0 ? basis.size() : 0, 0);
    std::vector<long long> vp(ch == 0 ? 0 : basis.size(), 0);
    poly_to_row(p, std::vector<int>(ring->nvars(), 0), index, ch, vq, vp);
    return red.reduce_and_insert(std::move(vq), std::move(vp), false);
}

std::vector<long long> hilbert(const RingPtr& ring, const std::vector<Polynomial>& gens, int D) {
    std::vector<long long> out;
    for (int n = 0; n <= D; ++n) {
        auto basis = degree_basis(ring, n);
        auto index = index_basis(basis);
        RowReducer red = span_in_degree(ring, gens, n, index, basis.size());
        out.push_back(static_cast<long long>(basis.size() - red.rank()));
    }
    return out;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    if (m.empty()) throw error("oracle determinant of an empty matrix");
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw error("oracle determinant of a non-square matrix");
    const RingPtr& ring = m[0][0].ring();
    if (n == 1) return m[0][0];
    Polynomial acc = Polynomial::zero(ring);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            sub.emplace_back(m[r].begin() + 1, m[r].end());
        }
        Polynomial term = m[i][0] * determinant(sub);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace resint::oracle

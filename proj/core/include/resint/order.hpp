#pragma once

#include <memory>
#include <vector>

#include "resint/ring.hpp"

namespace resint {

// Total monomial order compatible with multiplication. The block form puts a
// chosen variable set first (graded reverse lex inside each block), which is
// what every elimination in the toolkit uses.
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
    // variables in `first_block` are eliminated (compare before the rest)
    static MonomialOrder elimination(std::vector<int> first_block) {
        return MonomialOrder(Kind::Block, std::move(first_block));
    }

    Kind kind() const { return kind_; }
    const std::vector<int>& block() const { return block_; }

    // >0 if a > b, <0 if a < b, 0 if equal
    int cmp(const Monomial& a, const Monomial& b, const PolyRing& ring) const {
        switch (kind_) {
            case Kind::Lex: {
                for (std::size_t i = 0; i < a.e.size(); ++i)
                    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
                return 0;
            }
            case Kind::Grevlex:
                return grevlex_cmp(a, b, ring, nullptr);
            case Kind::Block: {
                std::vector<char> mask(ring.nvars(), 0);
                for (int v : block_) mask[static_cast<std::size_t>(v)] = 1;
                int c = grevlex_cmp(a, b, ring, &mask);
                if (c) return c;
                for (auto& m : mask) m = !m;
                return grevlex_cmp(a, b, ring, &mask);
            }
        }
        return 0;
    }

    bool is_elimination() const { return kind_ == Kind::Block; }

    std::string signature() const {
        switch (kind_) {
            case Kind::Lex: return "lex";
            case Kind::Grevlex: return "grevlex";
            case Kind::Block: {
                std::string s = "block(";
                for (std::size_t i = 0; i < block_.size(); ++i) {
                    if (i) s += ",";
                    s += std::to_string(block_[i]);
                }
                return s + ")";
            }
        }
        return "?";
    }

private:
    MonomialOrder(Kind k, std::vector<int> blk) : kind_(k), block_(std::move(blk)) {}

    // weighted degree first, then reverse lex (last differing exponent, smaller
    // wins); mask restricts to a variable subset when non-null
    static int grevlex_cmp(const Monomial& a, const Monomial& b, const PolyRing& ring,
                           const std::vector<char>* mask) {
        long long da = 0, db = 0;
        const auto& w = ring.weights();
        for (std::size_t i = 0; i < a.e.size(); ++i) {
            if (mask && !(*mask)[i]) continue;
            da += static_cast<long long>(w[i]) * a.e[i];
            db += static_cast<long long>(w[i]) * b.e[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = a.e.size(); i-- > 0;) {
            if (mask && !(*mask)[i]) continue;
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        }
        return 0;
    }

    Kind kind_;
    std::vector<int> block_;
};

}  // namespace resint

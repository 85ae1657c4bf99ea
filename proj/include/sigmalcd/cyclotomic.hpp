#pragma once

// q-cyclotomic cosets modulo m, a fixed primitive m-th root of unity xi in
// GF(q^t), minimal polynomials and the Gamma partition of the coset leaders.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace sigmalcd {

/// Multiplicative order of q modulo m (1 when m = 1).
inline std::size_t multiplicative_order(std::uint64_t q, std::size_t m) {
    if (m == 1) return 1;
    std::uint64_t x = q % m;
    std::size_t t = 1;
    while (x != 1) {
        x = (x * q) % m;
        ++t;
    }
    return t;
}

class CyclotomicContext {
public:
    CyclotomicContext() = default;

    CyclotomicContext(Field base, std::size_t m) : base_(std::move(base)), m_(m) {
        if (m_ == 0) throw Error(ErrorKind::GcdNotOne, "m must be positive");
        if (std::gcd<std::uint64_t, std::uint64_t>(base_.size(), m_) != 1)
            throw Error(ErrorKind::GcdNotOne, "gcd(q, m) != 1 for q = " + std::to_string(base_.size()) +
                                                  ", m = " + std::to_string(m_));
        t_ = multiplicative_order(base_.size(), m_);
        ext_ = Field::make(base_.characteristic(), static_cast<std::uint32_t>(base_.degree() * t_));
        emb_ = Embedding(base_, ext_);
        xi_ = ext_.pow(ext_.primitive_element(), (static_cast<std::uint64_t>(ext_.size()) - 1) / m_);
        xi_pows_.resize(m_);
        for (std::size_t i = 0, v = 1; i < m_; ++i) {
            xi_pows_[i] = static_cast<Elem>(v);
            v = ext_.mul(static_cast<Elem>(v), xi_);
        }

        leader_of_.assign(m_, m_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (leader_of_[i] != m_) continue;
            std::vector<std::size_t> coset;
            std::size_t j = i;
            do {
                coset.push_back(j);
                leader_of_[j] = i;
                j = static_cast<std::size_t>((static_cast<std::uint64_t>(j) * base_.size()) % m_);
            } while (j != i);
            leaders_.push_back(i);
            cosets_.push_back(std::move(coset));
        }
    }

    const Field& base() const { return base_; }
    const Field& ext() const { return ext_; }
    const Embedding& embedding() const { return emb_; }
    std::size_t m() const { return m_; }
    /// [GF(q^t) : GF(q)]
    std::size_t t() const { return t_; }
    Elem xi() const { return xi_; }

    /// xi^i for any integer i.
    Elem xi_pow(long long i) const {
        const long long mm = static_cast<long long>(m_);
        return xi_pows_[static_cast<std::size_t>(((i % mm) + mm) % mm)];
    }

    std::size_t reduce(long long i) const {
        const long long mm = static_cast<long long>(m_);
        return static_cast<std::size_t>(((i % mm) + mm) % mm);
    }

    /// Cosets in order of their leaders; each lists i, iq, iq^2, ...
    const std::vector<std::vector<std::size_t>>& cosets() const { return cosets_; }
    const std::vector<std::size_t>& leaders() const { return leaders_; }
    std::size_t leader_of(long long i) const { return leader_of_[reduce(i)]; }
    const std::vector<std::size_t>& coset_of(long long i) const {
        const std::size_t l = leader_of(i);
        const auto it = std::lower_bound(leaders_.begin(), leaders_.end(), l);
        return cosets_[static_cast<std::size_t>(it - leaders_.begin())];
    }

    /// M_{xi^i}(x) = prod over the coset of i of (x - xi^j), over GF(q).
    Poly minimal_polynomial(long long i) const {
        Vec acc{1};
        for (std::size_t j : coset_of(i)) {
            const Elem root = ext_.neg(xi_pows_[j]);
            Vec next(acc.size() + 1, 0);
            for (std::size_t k = 0; k < acc.size(); ++k) {
                next[k + 1] = ext_.add(next[k + 1], acc[k]);
                next[k] = ext_.add(next[k], ext_.mul(acc[k], root));
            }
            acc = std::move(next);
        }
        Vec coeffs(acc.size());
        for (std::size_t k = 0; k < acc.size(); ++k) {
            const auto pre = emb_.preimage(acc[k]);
            if (!pre) throw Error(ErrorKind::Discrepancy, "minimal polynomial coefficient outside GF(q)");
            coeffs[k] = *pre;
        }
        return {base_, std::move(coeffs)};
    }

private:
    Field base_, ext_;
    Embedding emb_;
    std::size_t m_ = 1, t_ = 1;
    Elem xi_ = 1;
    Vec xi_pows_;
    std::vector<std::vector<std::size_t>> cosets_;
    std::vector<std::size_t> leaders_;
    std::vector<std::size_t> leader_of_;
};

struct GammaPartition {
    std::vector<std::size_t> gamma0_plus;
    std::vector<std::size_t> gamma0_minus;
    std::vector<std::size_t> gamma1;
};

/// Gamma_{0,+}: leaders i with xi^i = ±1. Gamma_{0,-}: other leaders whose
/// coset contains -i. Gamma_1: the smaller leader of every pair {C_i, C_-i}
/// with C_i != C_-i.
inline GammaPartition gamma_partition(const CyclotomicContext& ctx) {
    GammaPartition g;
    const std::size_t m = ctx.m();
    const bool half = ctx.base().size() % 2 == 1 && m % 2 == 0;
    for (std::size_t i : ctx.leaders()) {
        const std::size_t neg_leader = ctx.leader_of(-static_cast<long long>(i));
        if (neg_leader == i) {
            if (i == 0 || (half && i == m / 2))
                g.gamma0_plus.push_back(i);
            else
                g.gamma0_minus.push_back(i);
        } else if (i < neg_leader) {
            g.gamma1.push_back(i);
        }
    }
    return g;
}

}  // namespace sigmalcd

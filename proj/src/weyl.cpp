#include "knf/weyl.hpp"

#include <algorithm>

#include "knf/error.hpp"

namespace knf {

WeylElement WeylElement::inverse() const { return WeylElement(std::vector<std::size_t>(word_.rbegin(), word_.rend())); }

WeylElement WeylElement::left_multiply(std::size_t i) const {
    std::vector<std::size_t> w;
    w.reserve(word_.size() + 1);
    w.push_back(i);
    w.insert(w.end(), word_.begin(), word_.end());
    return WeylElement(std::move(w));
}

WeylElement WeylElement::right_multiply(std::size_t i) const {
    std::vector<std::size_t> w = word_;
    w.push_back(i);
    return WeylElement(std::move(w));
}

WeightVector apply(const RootSystem& rs, const WeylElement& w, const WeightVector& v) {
    WeightVector out = v;
    const auto& word = w.word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = rs.simple_reflect(*it, out);
    return out;
}

WeightVector dot_action(const RootSystem& rs, const WeylElement& w, const WeightVector& lambda) {
    return apply(rs, w, lambda + rs.rho()) - rs.rho();
}

std::size_t inversion_count(const RootSystem& rs, const WeylElement& w) {
    const WeylElement inv = w.inverse();
    std::size_t n = 0;
    for (const auto& a : rs.positive_roots())
        if (!rs.is_positive_root(apply(rs, inv, a))) ++n;
    return n;
}

bool is_min_coset_rep(const DomainSpec& d, const WeylElement& w) {
    const WeylElement inv = w.inverse();
    for (std::size_t i = 0; i < d.rank(); ++i) {
        if (!d.is_compact_node(i)) continue;
        if (!d.rs->is_positive_root(apply(*d.rs, inv, d.rs->simple_roots()[i]))) return false;
    }
    return true;
}

bool rho_image_compact_dominant(const DomainSpec& d, const WeylElement& w) {
    const WeightVector v = apply(*d.rs, w, d.rs->rho());
    for (std::size_t i = 0; i < d.rank(); ++i)
        if (d.is_compact_node(i) && inner(v, d.rs->simple_roots()[i]) <= Rational(0)) return false;
    return true;
}

std::vector<WeylElement> enumerate_W0(const DomainSpec& d, int max_k) {
    const RootSystem& rs = *d.rs;
    struct Node {
        WeylElement w;
        WeightVector image;
    };
    std::vector<WeylElement> out{WeylElement{}};
    std::vector<Node> layer{{WeylElement{}, rs.rho()}};
    for (int k = 1; (max_k < 0 || k <= max_k) && !layer.empty(); ++k) {
        std::map<WeightVector, WeylElement> next;
        for (const auto& node : layer)
            for (std::size_t i = 0; i < d.rank(); ++i) {
                // w s_i is longer than w iff w(σ_i) > 0; its ρ-image is wρ − w(σ_i).
                const WeightVector root = apply(rs, node.w, rs.simple_roots()[i]);
                if (!rs.is_positive_root(root)) continue;
                WeightVector img = node.image - root;
                bool ok = true;
                for (std::size_t c = 0; c < d.rank() && ok; ++c)
                    if (d.is_compact_node(c) && inner(img, rs.simple_roots()[c]) <= Rational(0)) ok = false;
                if (!ok) continue;
                auto w = node.w.right_multiply(i);
                auto [it, inserted] = next.emplace(std::move(img), w);
                if (!inserted && w.word() < it->second.word()) it->second = std::move(w);
            }
        layer.clear();
        std::vector<WeylElement> level;
        for (auto& [img, w] : next) {
            level.push_back(w);
            layer.push_back({std::move(w), img});
        }
        std::sort(level.begin(), level.end(), [](const WeylElement& a, const WeylElement& b) { return a.word() < b.word(); });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::map<std::pair<int, std::int64_t>, std::vector<WeylElement>> stratify_by_j(const DomainSpec& d,
                                                                                const IrrepLabel& lambda, int max_k) {
    check_label(d, lambda);
    if (!placeable(d, lambda))
        throw ParityError("E(λ) - a = " + (E_of(d, lambda) - lambda.twist_a).str() + " is not odd for " +
                          lambda.str() + " on " + d.name());
    const WeightVector lam = d.rs->from_omega_coords(std::span<const int>(lambda.m));
    std::map<std::pair<int, std::int64_t>, std::vector<WeylElement>> out;
    for (auto& w : enumerate_W0(d, max_k)) {
        const Rational j = (d.E(dot_action(*d.rs, w, lam)) - lambda.twist_a - Rational(1)) / Rational(2);
        out[{static_cast<int>(w.length()), j.to_integer()}].push_back(std::move(w));
    }
    return out;
}

}  // namespace knf

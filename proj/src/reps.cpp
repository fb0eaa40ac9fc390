#include "knf/reps.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "knf/error.hpp"

namespace knf {

void Character::add(const CharKey& key, std::int64_t mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

void Character::add(const Character& other, std::int64_t scale) {
    for (const auto& [k, m] : other.terms_) add(k, m * scale);
}

std::int64_t Character::multiplicity(const CharKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t Character::mass() const {
    std::int64_t s = 0;
    for (const auto& [k, m] : terms_) s += m;
    return s;
}

Character Character::shifted(const IntWeight& by, const Rational& twist) const {
    Character out;
    for (const auto& [k, m] : terms_) {
        CharKey nk{k.weight, k.twist + twist};
        for (std::size_t i = 0; i < by.size(); ++i) nk.weight[i] += by[i];
        out.add(nk, m);
    }
    return out;
}

Character Character::times(const Character& other) const {
    Character out;
    for (const auto& [k, m] : terms_)
        for (const auto& [k2, m2] : other.terms_) {
            CharKey nk{k.weight, k.twist + k2.twist};
            for (std::size_t i = 0; i < nk.weight.size(); ++i) nk.weight[i] += k2.weight[i];
            out.add(nk, m * m2);
        }
    return out;
}

namespace {

std::atomic<std::int64_t> g_guard{0};

std::int64_t default_guard() {
    if (const char* env = std::getenv("KNF_DIM_GUARD")) {
        try {
            long long v = std::stoll(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 100000;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

// Integer model of the invariant form: D⟨ω_i,ω_j⟩ and D·½⟨σ_j,σ_j⟩.
struct ScaledForm {
    std::int64_t D = 1;
    std::vector<std::vector<std::int64_t>> gram;
    std::vector<std::int64_t> dn;

    explicit ScaledForm(const RootSystem& rs) {
        const auto n = static_cast<std::size_t>(rs.rank());
        for (std::size_t i = 0; i < n; ++i) {
            D = lcm64(D, rs.half_norms()[i].den());
            for (std::size_t j = 0; j < n; ++j) D = lcm64(D, rs.omega_gram()[i][j].den());
        }
        gram.assign(n, std::vector<std::int64_t>(n));
        dn.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            dn[i] = (rs.half_norms()[i] * Rational(D)).to_integer();
            for (std::size_t j = 0; j < n; ++j) gram[i][j] = (rs.omega_gram()[i][j] * Rational(D)).to_integer();
        }
    }

    [[nodiscard]] std::int64_t norm(const IntWeight& x) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * gram[i][j] * x[j];
        }
        return s;
    }
};

struct SubRoot {
    IntWeight omega;
    std::vector<std::int64_t> pairing;  // D⟨x,α⟩ = Σ_j x_j pairing_j
    int height = 0;
};

class Freudenthal {
public:
    Freudenthal(const RootSystem& rs, const std::vector<bool>& subset) : rs_(rs), form_(rs), subset_(subset) {
        const auto n = static_cast<std::size_t>(rs.rank());
        for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
            const auto& c = rs.positive_roots_sigma()[r];
            bool inside = true;
            for (std::size_t j = 0; j < n; ++j)
                if (c[j] != 0 && !subset_[j]) inside = false;
            if (!inside) continue;
            SubRoot s;
            s.omega = rs.positive_roots_omega()[r];
            s.pairing.resize(n);
            for (std::size_t j = 0; j < n; ++j) s.pairing[j] = c[j] * form_.dn[j];
            s.height = std::accumulate(c.begin(), c.end(), 0);
            roots_.push_back(std::move(s));
        }
    }

    [[nodiscard]] bool dominant(const IntWeight& x) const {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (subset_[i] && x[i] < 0) return false;
        return true;
    }

    void reflect(std::size_t i, IntWeight& x) const {
        const int c = x[i];
        if (c == 0) return;
        const auto& row = rs_.cartan()[i];
        for (std::size_t k = 0; k < x.size(); ++k) x[k] -= c * row[k];
    }

    [[nodiscard]] IntWeight dominant_conjugate(IntWeight x) const {
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (subset_[i] && x[i] < 0) {
                    reflect(i, x);
                    moved = true;
                }
        }
        return x;
    }

    [[nodiscard]] std::int64_t pair(const IntWeight& x, const SubRoot& a) const {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * a.pairing[j];
        return s;
    }

    // Dominant weights of the irreducible module with highest weight λ and their multiplicities.
    [[nodiscard]] std::map<IntWeight, std::int64_t> dominant_multiplicities(const IntWeight& lambda) const {
        std::map<IntWeight, int> depth{{lambda, 0}};
        std::deque<IntWeight> queue{lambda};
        while (!queue.empty()) {
            IntWeight mu = std::move(queue.front());
            queue.pop_front();
            const int h = depth[mu];
            for (const auto& a : roots_) {
                IntWeight nu = mu;
                for (std::size_t k = 0; k < nu.size(); ++k) nu[k] -= a.omega[k];
                if (!dominant(nu) || depth.count(nu)) continue;
                depth.emplace(nu, h + a.height);
                queue.push_back(std::move(nu));
            }
        }
        std::vector<std::pair<int, IntWeight>> order;
        for (const auto& [w, h] : depth) order.emplace_back(h, w);
        std::sort(order.begin(), order.end());

        std::map<IntWeight, std::int64_t> mult;
        const std::int64_t lam_norm = form_.norm(lambda);
        for (const auto& [h, mu] : order) {
            if (h == 0) {
                mult[mu] = 1;
                continue;
            }
            std::int64_t num = 0;
            for (const auto& a : roots_) {
                IntWeight v = mu;
                for (int k = 1; k * a.height <= h; ++k) {
                    for (std::size_t i = 0; i < v.size(); ++i) v[i] += a.omega[i];
                    auto it = mult.find(dominant_conjugate(v));
                    if (it == mult.end() || it->second == 0) continue;
                    num += it->second * pair(v, a);
                }
            }
            IntWeight diff = lambda;
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= mu[i];
            std::int64_t den = lam_norm - form_.norm(mu);
            for (const auto& a : roots_) den += pair(diff, a);
            if (den <= 0 || (2 * num) % den != 0)
                throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
            const std::int64_t m = 2 * num / den;
            if (m != 0) mult[mu] = m;
        }
        return mult;
    }

    [[nodiscard]] Character full(const IntWeight& lambda, const Rational& twist) const {
        Character ch;
        for (const auto& [mu, m] : dominant_multiplicities(lambda)) {
            std::set<IntWeight> orbit{mu};
            std::deque<IntWeight> queue{mu};
            while (!queue.empty()) {
                IntWeight x = std::move(queue.front());
                queue.pop_front();
                for (std::size_t i = 0; i < x.size(); ++i) {
                    if (!subset_[i] || x[i] == 0) continue;
                    IntWeight y = x;
                    reflect(i, y);
                    if (orbit.insert(y).second) queue.push_back(std::move(y));
                }
            }
            for (const auto& w : orbit) ch.add(CharKey{w, twist}, m);
        }
        return ch;
    }

private:
    const RootSystem& rs_;
    ScaledForm form_;
    std::vector<bool> subset_;
    std::vector<SubRoot> roots_;
};

std::vector<bool> all_roots(const RootSystem& rs) { return std::vector<bool>(static_cast<std::size_t>(rs.rank()), true); }

void check_weight(const RootSystem& rs, std::span<const int> lambda) {
    if (lambda.size() != static_cast<std::size_t>(rs.rank()))
        throw Error("weight has " + std::to_string(lambda.size()) + " coefficients, " + rs.name() + " needs " +
                    std::to_string(rs.rank()));
}

void check_guard(std::int64_t dim, const std::string& what) {
    if (dim > dimension_guard())
        throw GuardError(what + " has dimension " + std::to_string(dim) + ", above the guard " +
                         std::to_string(dimension_guard()));
}

std::int64_t binomial_capped(std::int64_t n, int k, std::int64_t cap) {
    if (k < 0 || k > n) return 0;
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::int64_t>(r);
}

}  // namespace

std::int64_t dimension_guard() {
    std::int64_t g = g_guard.load();
    return g > 0 ? g : default_guard();
}

void set_dimension_guard(std::int64_t limit) {
    if (limit <= 0) throw std::invalid_argument("dimension guard must be positive");
    g_guard.store(limit);
}

std::int64_t weyl_dim(const RootSystem& rs, std::span<const int> lambda, const std::vector<bool>& subset) {
    check_weight(rs, lambda);
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (subset[i] && lambda[i] < 0)
            throw Error("weyl_dim needs a dominant weight; coefficient " + std::to_string(i + 1) + " is negative");
    Rational d(1);
    const auto& hn = rs.half_norms();
    for (const auto& c : rs.positive_roots_sigma()) {
        bool inside = true;
        Rational num, den;
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            if (!subset[j]) {
                inside = false;
                break;
            }
            num += Rational(c[j] * (lambda[j] + 1)) * hn[j];
            den += Rational(c[j]) * hn[j];
        }
        if (!inside) continue;
        try {
            d *= num / den;
        } catch (const std::overflow_error&) {
            throw GuardError("dimension of V^" + IrrepLabel(IntWeight(lambda.begin(), lambda.end())).str() + " on " +
                             rs.name() + " exceeds the 64-bit range");
        }
    }
    return d.to_integer();
}

std::int64_t weyl_dim(const RootSystem& rs, std::span<const int> lambda) {
    return weyl_dim(rs, lambda, all_roots(rs));
}

Character character(const RootSystem& rs, std::span<const int> lambda, const Rational& twist) {
    return levi_character(rs, all_roots(rs), lambda, twist);
}

Character levi_character(const RootSystem& rs, const std::vector<bool>& subset, std::span<const int> lambda,
                         const Rational& twist) {
    check_weight(rs, lambda);
    check_guard(weyl_dim(rs, lambda, subset), "representation");
    Freudenthal f(rs, subset);
    return f.full(IntWeight(lambda.begin(), lambda.end()), twist);
}

Decomposition decompose(const RootSystem& rs, const Character& ch) {
    const auto n = static_cast<std::size_t>(rs.rank());
    // Height functional: sum of σ-coordinates.
    std::vector<Rational> h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h[i] += rs.inv_cartan()[i][j];
    auto height = [&](const IntWeight& w) {
        Rational s;
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] != 0) s += Rational(w[i]) * h[i];
        return s;
    };

    Character rest = ch;
    Decomposition out;
    std::map<IntWeight, Character> cache;
    while (!rest.empty()) {
        const CharKey* top = nullptr;
        Rational best;
        for (const auto& [k, m] : rest.terms()) {
            Rational ht = height(k.weight);
            if (top == nullptr || ht > best) {
                top = &k;
                best = ht;
            }
        }
        const CharKey key = *top;
        const std::int64_t m = rest.multiplicity(key);
        if (m < 0 || std::any_of(key.weight.begin(), key.weight.end(), [](int c) { return c < 0; }))
            throw Error("character is not that of a genuine module (top weight " + IrrepLabel(key.weight).str() + ")");
        auto it = cache.find(key.weight);
        if (it == cache.end()) it = cache.emplace(key.weight, character(rs, key.weight)).first;
        rest.add(it->second.shifted(IntWeight(n, 0), key.twist), -m);
        out[IrrepLabel(key.weight, key.twist)] += m;
    }
    return out;
}

std::int64_t total_dimension(const RootSystem& rs, const Decomposition& d) {
    std::int64_t s = 0;
    for (const auto& [l, m] : d) s += m * weyl_dim(rs, l.m);
    return s;
}

Decomposition tensor_decompose(const RootSystem& rs, const Decomposition& lhs, const IrrepLabel& nu) {
    const auto n = static_cast<std::size_t>(rs.rank());
    check_guard(total_dimension(rs, lhs) * weyl_dim(rs, nu.m), "tensor product");
    const Character ch = character(rs, nu.m, nu.twist_a);
    Freudenthal f(rs, all_roots(rs));
    Decomposition out;
    for (const auto& [lambda, mult] : lhs) {
        for (const auto& [key, m] : ch.terms()) {
            IntWeight v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = lambda.m[i] + key.weight[i] + 1;
            int sign = 1;
            bool wall = false;
            while (!wall) {
                auto neg = std::find_if(v.begin(), v.end(), [](int c) { return c <= 0; });
                if (neg == v.end()) break;
                if (*neg == 0) {
                    wall = true;
                    break;
                }
                f.reflect(static_cast<std::size_t>(neg - v.begin()), v);
                sign = -sign;
            }
            if (wall) continue;
            for (auto& c : v) c -= 1;
            IrrepLabel l(v, lambda.twist_a + key.twist);
            auto& slot = out[l];
            slot += sign * m * mult;
            if (slot == 0) out.erase(l);
        }
    }
    for (const auto& [l, m] : out)
        if (m < 0) throw std::logic_error("tensor decomposition produced a negative multiplicity");
    return out;
}

Decomposition tensor_decompose(const RootSystem& rs, const IrrepLabel& lambda, const IrrepLabel& nu) {
    check_weight(rs, lambda.m);
    check_weight(rs, nu.m);
    if (!lambda.is_dominant() || !nu.is_dominant()) throw Error("tensor_decompose needs dominant weights");
    return tensor_decompose(rs, Decomposition{{lambda, 1}}, nu);
}

Character exterior_power(const Character& ch, int k) {
    if (k < 0) throw Error("negative exterior power");
    std::size_t dim = 0;
    if (!ch.empty()) dim = ch.terms().begin()->first.weight.size();
    std::vector<std::map<CharKey, std::int64_t>> e(static_cast<std::size_t>(k) + 1);
    e[0][CharKey{IntWeight(dim, 0), {}}] = 1;
    int processed = 0;
    for (const auto& [key, mult] : ch.terms()) {
        if (mult < 0) throw Error("exterior power of a virtual character");
        for (std::int64_t copy = 0; copy < mult; ++copy) {
            ++processed;
            for (int j = std::min(k, processed); j >= 1; --j) {
                auto& dst = e[static_cast<std::size_t>(j)];
                for (const auto& [src, m] : e[static_cast<std::size_t>(j - 1)]) {
                    CharKey nk{src.weight, src.twist + key.twist};
                    for (std::size_t i = 0; i < dim; ++i) nk.weight[i] += key.weight[i];
                    dst[nk] += m;
                }
            }
        }
    }
    Character out;
    for (const auto& [key, m] : e[static_cast<std::size_t>(k)]) out.add(key, m);
    return out;
}

Decomposition wedge_of_sum(const RootSystem& rs, std::span<const IrrepLabel> summands, int k) {
    std::int64_t dim = 0;
    for (const auto& l : summands) {
        check_weight(rs, l.m);
        if (!l.is_dominant()) throw Error("wedge_of_sum needs dominant weights");
        dim += weyl_dim(rs, l.m);
    }
    check_guard(binomial_capped(dim, k, dimension_guard()), "exterior power");
    Character sum;
    for (const auto& l : summands) sum.add(character(rs, l.m, l.twist_a));
    return decompose(rs, exterior_power(sum, k));
}

Decomposition wedge_decompose(const RootSystem& rs, const IrrepLabel& lambda, int k) {
    return wedge_of_sum(rs, std::span<const IrrepLabel>(&lambda, 1), k);
}

}  // namespace knf

#include "knf/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "knf/error.hpp"

namespace knf {

WeightVector WeightVector::unit(std::size_t dim, std::size_t i) {
    WeightVector v(dim);
    v[i] = 1;
    return v;
}

bool WeightVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
    if (o.dim() != dim()) throw Error("weight vector dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
    if (o.dim() != dim()) throw Error("weight vector dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

WeightVector& WeightVector::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

std::string WeightVector::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
    os << ')';
    return os.str();
}

Rational inner(const WeightVector& u, const WeightVector& v) {
    if (u.dim() != v.dim())
        throw Error("inner product of vectors of dimension " + std::to_string(u.dim()) + " and " +
                    std::to_string(v.dim()));
    Rational s;
    for (std::size_t i = 0; i < u.dim(); ++i)
        if (!u[i].is_zero() && !v[i].is_zero()) s += u[i] * v[i];
    return s;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
    }
    return "?";
}

std::string RootSystem::name() const {
    if (family_ == Family::E6 || family_ == Family::E7) return family_name(family_);
    return family_name(family_) + std::to_string(rank_);
}

namespace {

WeightVector vec(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> entries) {
    WeightVector v(dim);
    for (const auto& [i, c] : entries) v[i] = c;
    return v;
}

// ½(e8 − e7 − e6 − e5 − e4 − e3 − e2 + e1)
WeightVector e_type_first_root() {
    const Rational h(1, 2);
    WeightVector v(8);
    v[0] = h;
    for (std::size_t i = 1; i < 7; ++i) v[i] = -h;
    v[7] = h;
    return v;
}

std::vector<WeightVector> e_type_simple_roots(int rank) {
    std::vector<WeightVector> s;
    s.push_back(e_type_first_root());
    s.push_back(vec(8, {{0, 1}, {1, 1}}));   // e1 + e2
    s.push_back(vec(8, {{0, -1}, {1, 1}}));  // e2 − e1
    for (int i = 4; i <= rank; ++i) {
        // σ_i = e_{i-1} − e_{i-2} (1-based), i.e. e3−e2, e4−e3, ...
        s.push_back(vec(8, {{static_cast<std::size_t>(i - 2), 1}, {static_cast<std::size_t>(i - 3), -1}}));
    }
    return s;
}

IntMatrix e_type_cartan(int rank) {
    IntMatrix a(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
    link(1, 3);
    link(2, 4);
    for (int i = 3; i < rank; ++i) link(i, i + 1);
    return a;
}

void check_rank(Family f, int rank) {
    int lo = 0;
    switch (f) {
        case Family::A: lo = 2; break;
        case Family::B: lo = 3; break;
        case Family::C: lo = 1; break;
        case Family::D: lo = 4; break;
        case Family::E6:
            if (rank != 6) throw RangeError("root system E6 has fixed rank 6, got " + std::to_string(rank));
            return;
        case Family::E7:
            if (rank != 7) throw RangeError("root system E7 has fixed rank 7, got " + std::to_string(rank));
            return;
    }
    if (rank < lo)
        throw RangeError("root system " + family_name(f) + "_n requires n >= " + std::to_string(lo) + ", got " +
                         std::to_string(rank));
}

}  // namespace

RootSystemPtr build_root_system(Family family, int rank) {
    check_rank(family, rank);
    std::shared_ptr<RootSystem> rs(new RootSystem());
    rs->family_ = family;
    rs->rank_ = rank;
    const auto n = static_cast<std::size_t>(rank);

    switch (family) {
        case Family::A:
            rs->ambient_dim_ = n + 1;
            for (std::size_t i = 0; i < n; ++i) rs->simple_.push_back(vec(n + 1, {{i, 1}, {i + 1, -1}}));
            break;
        case Family::B:
        case Family::C:
        case Family::D:
            rs->ambient_dim_ = n;
            for (std::size_t i = 0; i + 1 < n; ++i) rs->simple_.push_back(vec(n, {{i, 1}, {i + 1, -1}}));
            if (family == Family::B) rs->simple_.push_back(vec(n, {{n - 1, 1}}));
            if (family == Family::C) rs->simple_.push_back(vec(n, {{n - 1, 2}}));
            if (family == Family::D) rs->simple_.push_back(vec(n, {{n - 2, 1}, {n - 1, 1}}));
            break;
        case Family::E6:
        case Family::E7:
            rs->ambient_dim_ = 8;
            rs->simple_ = e_type_simple_roots(rank);
            break;
    }
    rs->finish();
    return rs;
}

void RootSystem::finish() {
    const auto n = static_cast<std::size_t>(rank_);
    half_norms_.resize(n);
    for (std::size_t j = 0; j < n; ++j) half_norms_[j] = inner(simple_[j], simple_[j]) / Rational(2);

    IntMatrix computed(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            computed[i][j] = static_cast<int>((inner(simple_[i], simple_[j]) / half_norms_[j]).to_integer());
    if (family_ == Family::E6 || family_ == Family::E7) {
        // The stored matrix is authoritative; the realization must reproduce it.
        cartan_ = e_type_cartan(rank_);
        if (computed != cartan_) throw std::logic_error("E-type realization disagrees with the stored Cartan matrix");
    } else {
        cartan_ = std::move(computed);
    }

    inv_cartan_ = inverse(to_rational(cartan_));

    fundamental_.clear();
    for (std::size_t i = 0; i < n; ++i) {
        WeightVector w(ambient_dim_);
        for (std::size_t j = 0; j < n; ++j) w += inv_cartan_[i][j] * simple_[j];
        fundamental_.push_back(std::move(w));
    }

    // All roots: the Weyl orbit of the simple roots.
    std::set<WeightVector> roots(simple_.begin(), simple_.end());
    std::deque<WeightVector> queue(simple_.begin(), simple_.end());
    while (!queue.empty()) {
        WeightVector v = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            WeightVector r = simple_reflect(i, v);
            if (roots.insert(r).second) queue.push_back(std::move(r));
        }
    }

    struct Entry {
        int height;
        std::vector<int> sigma;
        WeightVector root;
    };
    std::vector<Entry> pos;
    for (const auto& r : roots) {
        auto c = to_sigma_coords(r);
        std::vector<int> ci(n);
        bool nonneg = true;
        for (std::size_t j = 0; j < n; ++j) {
            ci[j] = static_cast<int>(c[j].to_integer());
            if (ci[j] < 0) nonneg = false;
        }
        if (!nonneg) continue;
        pos.push_back({std::accumulate(ci.begin(), ci.end(), 0), std::move(ci), r});
    }
    std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.sigma < b.sigma;
    });
    positive_.clear();
    positive_sigma_.clear();
    positive_omega_.clear();
    for (auto& e : pos) {
        std::vector<int> om(n, 0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) om[k] += e.sigma[j] * cartan_[j][k];
        positive_omega_.push_back(std::move(om));
        positive_sigma_.push_back(std::move(e.sigma));
        positive_.push_back(std::move(e.root));
    }

    rho_ = WeightVector(ambient_dim_);
    for (const auto& r : positive_) rho_ += r;
    rho_ *= Rational(1, 2);

    omega_gram_.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) omega_gram_[i][j] = inner(fundamental_[i], fundamental_[j]);
}

bool RootSystem::is_root(const WeightVector& v) const {
    if (v.dim() != ambient_dim_) return false;
    if (is_positive_root(v)) return true;
    return is_positive_root(-v);
}

bool RootSystem::is_positive_root(const WeightVector& v) const {
    if (v.dim() != ambient_dim_) return false;
    return std::find(positive_.begin(), positive_.end(), v) != positive_.end();
}

std::vector<Rational> RootSystem::to_omega_coords(const WeightVector& v) const {
    if (v.dim() != ambient_dim_)
        throw Error("vector of dimension " + std::to_string(v.dim()) + " does not belong to " + name());
    std::vector<Rational> m(rank_);
    for (std::size_t j = 0; j < m.size(); ++j) m[j] = inner(v, simple_[j]) / half_norms_[j];
    if (from_omega_coords(std::span<const Rational>(m)) != v)
        throw Error("vector " + v.str() + " is not in the span of the simple roots of " + name());
    return m;
}

std::vector<Rational> RootSystem::to_sigma_coords(const WeightVector& v) const {
    const auto m = to_omega_coords(v);
    std::vector<Rational> c(rank_);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].is_zero()) continue;
        for (std::size_t j = 0; j < c.size(); ++j) c[j] += m[i] * inv_cartan_[i][j];
    }
    return c;
}

WeightVector RootSystem::from_omega_coords(std::span<const Rational> m) const {
    if (m.size() != static_cast<std::size_t>(rank_)) throw Error("expected " + std::to_string(rank_) + " ω-coordinates");
    WeightVector v(ambient_dim_);
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!m[i].is_zero()) v += m[i] * fundamental_[i];
    return v;
}

WeightVector RootSystem::from_omega_coords(std::span<const int> m) const {
    std::vector<Rational> r(m.begin(), m.end());
    return from_omega_coords(std::span<const Rational>(r));
}

WeightVector RootSystem::from_sigma_coords(std::span<const Rational> c) const {
    if (c.size() != static_cast<std::size_t>(rank_)) throw Error("expected " + std::to_string(rank_) + " σ-coordinates");
    WeightVector v(ambient_dim_);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) v += c[i] * simple_[i];
    return v;
}

WeightVector RootSystem::reflect(const WeightVector& root, const WeightVector& v) const {
    if (!is_root(root)) throw Error("reflection in " + root.str() + ", which is not a root of " + name());
    const Rational f = Rational(2) * inner(v, root) / inner(root, root);
    return v - f * root;
}

WeightVector RootSystem::simple_reflect(std::size_t i, const WeightVector& v) const {
    const Rational f = inner(v, simple_[i]) / half_norms_[i];
    if (f.is_zero()) return v;
    return v - f * simple_[i];
}

RootSystemPtr parse_root_system(std::string_view name) {
    const std::string text(name);
    if (text.size() < 2 || text.find_first_not_of("0123456789", 1) != std::string::npos)
        throw std::invalid_argument("root system '" + text + "' should look like A3, B3, C2, D4, E6 or E7");
    const int rank = std::stoi(text.substr(1));
    switch (text[0]) {
        case 'A': return build_root_system(Family::A, rank);
        case 'B': return build_root_system(Family::B, rank);
        case 'C': return build_root_system(Family::C, rank);
        case 'D': return build_root_system(Family::D, rank);
        case 'E':
            if (rank == 6) return build_root_system(Family::E6, 6);
            if (rank == 7) return build_root_system(Family::E7, 7);
            throw RangeError("E-type root systems: only E6 and E7 occur, got " + text);
        default: throw std::invalid_argument("unknown root system family in '" + text + "'");
    }
}

}  // namespace knf

#include "knf/label.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace knf {

bool IrrepLabel::is_dominant() const {
    return std::all_of(m.begin(), m.end(), [](int c) { return c >= 0; });
}

bool IrrepLabel::is_zero() const {
    return std::all_of(m.begin(), m.end(), [](int c) { return c == 0; });
}

int IrrepLabel::coefficient_sum() const { return std::accumulate(m.begin(), m.end(), 0); }

std::string IrrepLabel::str() const {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += m[i] > 0 ? "+" : "";
        if (m[i] == -1)
            out += "-";
        else if (m[i] != 1)
            out += std::to_string(m[i]);
        out += "ω" + std::to_string(i + 1);
    }
    if (out.empty()) out = "0";
    if (!twist_a.is_zero()) out += "{a=" + twist_a.str() + "}";
    return out;
}

IrrepLabel fundamental_sum(std::size_t rank, std::initializer_list<int> indices, Rational a) {
    IrrepLabel l(std::vector<int>(rank, 0), a);
    for (int i : indices) {
        if (i <= 0 || i > static_cast<int>(rank)) continue;
        l.m[static_cast<std::size_t>(i - 1)] += 1;
    }
    return l;
}

std::vector<int> parse_coefficients(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("malformed coefficient list '" + std::string(text) + "'");
        if (v < 0) throw std::invalid_argument("negative coefficient in '" + std::string(text) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace knf

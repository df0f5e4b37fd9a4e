#include "u3/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <tuple>

namespace u3 {

namespace {

// Parses a non-negative integer list with the given separators, e.g.
// "3,2,0" or "3,2,0;3,2;3".  Returns false on any malformed input.
bool parse_ints(const std::string& text, const std::string& seps, std::vector<int>& out) {
    out.clear();
    const char* p = text.data();
    const char* end = p + text.size();
    size_t sep = 0;
    while (true) {
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || next == p || value < 0) return false;
        out.push_back(value);
        p = next;
        if (p == end) return sep == seps.size();
        if (sep >= seps.size() || *p != seps[sep]) return false;
        ++sep;
        ++p;
    }
}

} // namespace

std::string to_string(const U3Irrep& g) {
    return std::to_string(g.n13) + "," + std::to_string(g.n23) + "," + std::to_string(g.n33);
}

std::optional<U3Irrep> parse_u3(const std::string& text) {
    std::vector<int> v;
    if (!parse_ints(text, ",,", v) || v.size() != 3) return std::nullopt;
    U3Irrep g{v[0], v[1], v[2]};
    if (!valid(g)) return std::nullopt;
    return g;
}

bool valid(const GelfandPattern& p) {
    return valid(p.irrep()) && p.n13 >= p.n12 && p.n12 >= p.n23 && p.n23 >= p.n22 &&
           p.n22 >= p.n33 && p.n12 >= p.n11 && p.n11 >= p.n22;
}

bool canonical_less(const GelfandPattern& a, const GelfandPattern& b) {
    // Patterns of different irreps: order by top row so mixed containers
    // still get a strict weak order.
    auto top = [](const GelfandPattern& p) { return std::tie(p.n13, p.n23, p.n33); };
    if (top(a) != top(b)) return top(a) < top(b);
    const int za = zrow2(a) + zrow1(a), zb = zrow2(b) + zrow1(b);
    if (za != zb) return za > zb;
    if (zrow2(a) != zrow2(b)) return zrow2(a) > zrow2(b);
    return std::tie(a.n12, a.n22, a.n11) > std::tie(b.n12, b.n22, b.n11);
}

std::vector<GelfandPattern> enumerate_patterns(const U3Irrep& g) {
    std::vector<GelfandPattern> out;
    out.reserve(static_cast<size_t>(dimension(g)));
    for (int n12 = g.n13; n12 >= g.n23; --n12)
        for (int n22 = g.n23; n22 >= g.n33; --n22)
            for (int n11 = n12; n11 >= n22; --n11)
                out.push_back({g.n13, g.n23, g.n33, n12, n22, n11});
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

std::string to_string(const GelfandPattern& p) {
    return std::to_string(p.n13) + "," + std::to_string(p.n23) + "," + std::to_string(p.n33) +
           ";" + std::to_string(p.n12) + "," + std::to_string(p.n22) + ";" +
           std::to_string(p.n11);
}

std::optional<GelfandPattern> parse_pattern(const std::string& text) {
    std::vector<int> v;
    if (!parse_ints(text, ",,;,;", v) || v.size() != 6) return std::nullopt;
    GelfandPattern p{v[0], v[1], v[2], v[3], v[4], v[5]};
    if (!valid(p)) return std::nullopt;
    return p;
}

std::uint64_t pack(const GelfandPattern& p) {
    auto at = [](int v, int shift) { return static_cast<std::uint64_t>(v) << shift; };
    return at(p.n13, 50) | at(p.n23, 40) | at(p.n33, 30) | at(p.n12, 20) | at(p.n22, 10) |
           at(p.n11, 0);
}

IrrepBasis::IrrepBasis(const U3Irrep& g) : irrep_(g), states_(enumerate_patterns(g)) {
    index_.reserve(states_.size());
    for (int i = 0; i < static_cast<int>(states_.size()); ++i) {
        const GelfandPattern& p = states_[i];
        index_.emplace(pack(p), i);
        const std::uint64_t w =
            (static_cast<std::uint64_t>(zrow2(p)) << 20) | static_cast<std::uint64_t>(zrow1(p));
        auto [it, fresh] = blocks_.try_emplace(w);
        if (fresh) weights_.emplace_back(zrow2(p), zrow1(p));
        it->second.push_back(i);
    }
    // states_ is canonically ordered, so weights_ already lists blocks by
    // decreasing z2+z1 then decreasing z2.
}

int IrrepBasis::index(const GelfandPattern& p) const {
    auto it = index_.find(pack(p));
    return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& IrrepBasis::weight_block(int z2, int z1) const {
    static const std::vector<int> empty;
    const std::uint64_t w =
        (static_cast<std::uint64_t>(z2) << 20) | static_cast<std::uint64_t>(z1);
    auto it = blocks_.find(w);
    return it == blocks_.end() ? empty : it->second;
}

} // namespace u3

#include "u3/table_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <random>

namespace u3 {

namespace {

constexpr std::uint32_t kCgcMagic = 0x55334343;    // "U3CC"
constexpr std::uint32_t kWignerMagic = 0x55335754; // "U3WT"
constexpr std::uint32_t kVersion = 1;

struct Writer {
    std::string bytes;

    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    }
    void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
};

struct Reader {
    const std::string& bytes;
    size_t pos = 0;
    bool ok = true;

    std::uint32_t u32() {
        if (pos + 4 > bytes.size()) {
            ok = false;
            return 0;
        }
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[pos + i])) << (8 * i);
        pos += 4;
        return v;
    }
    std::uint64_t u64() {
        if (pos + 8 > bytes.size()) {
            ok = false;
            return 0;
        }
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[pos + i])) << (8 * i);
        pos += 8;
        return v;
    }
    std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
    double f64() { return std::bit_cast<double>(u64()); }
};

std::string slug(const U3Irrep& g) {
    return std::to_string(g.n13) + "_" + std::to_string(g.n23) + "_" + std::to_string(g.n33);
}

// Write-to-temporary plus rename, so concurrent readers never observe a
// partial file.
void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
    std::filesystem::create_directories(path.parent_path());
    static std::mt19937_64 rng{std::random_device{}()};
    const std::filesystem::path tmp =
        path.parent_path() / (path.filename().string() + ".tmp" + std::to_string(rng()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            return; // caching is best effort; failure to write is not fatal
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

std::optional<std::string> read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (!in.good() && !in.eof()) return std::nullopt;
    return bytes;
}

void write_irrep(Writer& w, const U3Irrep& g) {
    w.i32(g.n13);
    w.i32(g.n23);
    w.i32(g.n33);
}

U3Irrep read_irrep(Reader& r) {
    U3Irrep g;
    g.n13 = r.i32();
    g.n23 = r.i32();
    g.n33 = r.i32();
    return g;
}

} // namespace

std::filesystem::path cgc_cache_path(const std::filesystem::path& dir, const U3Irrep& g1,
                                     const U3Irrep& g2, const U3Irrep& coupled) {
    return dir / "cgc" / (slug(g1) + "__" + slug(g2) + "__" + slug(coupled) + ".bin");
}

std::filesystem::path wigner_cache_path(const std::filesystem::path& dir, const SU3Irrep& s1,
                                        const SU3Irrep& s2) {
    return dir / "wigner" /
           (std::to_string(s1.lambda) + "_" + std::to_string(s1.mu) + "__" +
            std::to_string(s2.lambda) + "_" + std::to_string(s2.mu) + ".bin");
}

void save_table(const std::filesystem::path& dir, const CGTable& table) {
    Writer w;
    w.u32(kCgcMagic);
    w.u32(kVersion);
    w.f64(table.tol());
    write_irrep(w, table.g1());
    write_irrep(w, table.g2());
    write_irrep(w, table.coupled());
    w.i32(table.rho_max());
    const int nstates = table.coupled_basis().size();
    w.u32(static_cast<std::uint32_t>(nstates));
    for (int s = 0; s < nstates; ++s) {
        for (int rho = 0; rho < table.rho_max(); ++rho) {
            const auto& terms = table.terms(s, rho);
            w.u32(static_cast<std::uint32_t>(terms.size()));
            for (const CGTerm& t : terms) {
                w.u32(static_cast<std::uint32_t>(t.i1));
                w.u32(static_cast<std::uint32_t>(t.i2));
                w.f64(t.value);
            }
        }
    }
    atomic_write(cgc_cache_path(dir, table.g1(), table.g2(), table.coupled()), w.bytes);
}

std::optional<CGTable> load_table(const std::filesystem::path& dir, const U3Irrep& g1,
                                  const U3Irrep& g2, const U3Irrep& coupled, double tol) {
    const auto bytes = read_all(cgc_cache_path(dir, g1, g2, coupled));
    if (!bytes) return std::nullopt;
    Reader r{*bytes};
    if (r.u32() != kCgcMagic || r.u32() != kVersion) return std::nullopt;
    if (r.f64() != tol) return std::nullopt;
    if (read_irrep(r) != g1 || read_irrep(r) != g2 || read_irrep(r) != coupled) return std::nullopt;
    const int rho_max = r.i32();
    const int nstates = static_cast<int>(r.u32());
    if (!r.ok || rho_max < 0 || nstates != static_cast<int>(dimension(coupled)))
        return std::nullopt;

    const long d1 = dimension(g1), d2 = dimension(g2);
    std::vector<std::vector<std::vector<CGTerm>>> terms(
        nstates, std::vector<std::vector<CGTerm>>(rho_max));
    for (int s = 0; s < nstates; ++s) {
        for (int rho = 0; rho < rho_max; ++rho) {
            const std::uint32_t n = r.u32();
            if (!r.ok || n > static_cast<std::uint64_t>(d1) * d2) return std::nullopt;
            auto& list = terms[s][rho];
            list.reserve(n);
            for (std::uint32_t k = 0; k < n; ++k) {
                CGTerm t;
                t.i1 = static_cast<int>(r.u32());
                t.i2 = static_cast<int>(r.u32());
                t.value = r.f64();
                if (!r.ok || t.i1 >= d1 || t.i2 >= d2) return std::nullopt;
                list.push_back(t);
            }
        }
    }
    if (!r.ok || r.pos != bytes->size()) return std::nullopt;
    return table_from_parts(g1, g2, coupled, tol, rho_max, std::move(terms));
}

void save_wigner(const std::filesystem::path& dir, const WignerTable& table) {
    Writer w;
    w.u32(kWignerMagic);
    w.u32(kVersion);
    w.f64(table.tol);
    w.i32(table.s1.lambda);
    w.i32(table.s1.mu);
    w.i32(table.s2.lambda);
    w.i32(table.s2.mu);
    w.u64(table.entries.size());
    for (const ReducedWignerEntry& e : table.entries) {
        write_irrep(w, e.coupled);
        w.i32(e.rho);
        w.i32(e.kappa1);
        w.i32(e.L1);
        w.i32(e.kappa2);
        w.i32(e.L2);
        w.i32(e.kappa3);
        w.i32(e.L3);
        w.f64(e.value);
    }
    atomic_write(wigner_cache_path(dir, table.s1, table.s2), w.bytes);
}

std::optional<WignerTable> load_wigner(const std::filesystem::path& dir, const SU3Irrep& s1,
                                       const SU3Irrep& s2, double tol) {
    const auto bytes = read_all(wigner_cache_path(dir, s1, s2));
    if (!bytes) return std::nullopt;
    Reader r{*bytes};
    if (r.u32() != kWignerMagic || r.u32() != kVersion) return std::nullopt;
    if (r.f64() != tol) return std::nullopt;
    if (r.i32() != s1.lambda || r.i32() != s1.mu || r.i32() != s2.lambda || r.i32() != s2.mu)
        return std::nullopt;
    const std::uint64_t n = r.u64();
    if (!r.ok || n > (bytes->size() - r.pos) / 8) return std::nullopt;
    WignerTable out;
    out.s1 = s1;
    out.s2 = s2;
    out.tol = tol;
    out.entries.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        ReducedWignerEntry e;
        e.coupled = read_irrep(r);
        e.rho = r.i32();
        e.kappa1 = r.i32();
        e.L1 = r.i32();
        e.kappa2 = r.i32();
        e.L2 = r.i32();
        e.kappa3 = r.i32();
        e.L3 = r.i32();
        e.value = r.f64();
        if (!r.ok) return std::nullopt;
        out.entries.push_back(e);
    }
    if (!r.ok || r.pos != bytes->size()) return std::nullopt;
    return out;
}

} // namespace u3

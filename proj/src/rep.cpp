#include "skw/rep.hpp"

#include "skw/error.hpp"

#include <cstring>
#include <fstream>
#include <iterator>

namespace skw {

bool GradedRep::parity_consistent() const {
    if (parity.size() != dim || gen_parity.size() != gens.size()) return false;
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t r = 0; r < dim; ++r) {
            const Elem* row = gens[g].row(r);
            for (std::size_t c = 0; c < dim; ++c)
                if (row[c] && parity[c] != (parity[r] ^ gen_parity[g])) return false;
        }
    return true;
}

Matrix GradedRep::parity_operator() const {
    Matrix P(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) P.at(i, i) = parity[i] ? F->neg(1) : 1;
    return P;
}

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

struct Reader {
    const std::vector<std::uint8_t>& buf;
    std::size_t pos = 0;
    const std::uint8_t* take(std::size_t n) {
        if (pos + n > buf.size()) throw CacheError("cache file truncated");
        const std::uint8_t* p = buf.data() + pos;
        pos += n;
        return p;
    }
    std::uint32_t u32() {
        const std::uint8_t* p = take(4);
        return p[0] | (p[1] << 8) | (p[2] << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
    }
};

} // namespace

void write_cache(const GradedRep& rep, const std::filesystem::path& path) {
    const Field& F = *rep.F;
    std::vector<std::uint8_t> out{'S', 'K', 'W', 'L'};
    put_u32(out, kCacheVersion);
    put_u32(out, F.p());
    put_u32(out, F.k());
    out.insert(out.end(), F.modulus().begin(), F.modulus().end());
    put_u32(out, static_cast<std::uint32_t>(rep.dim));
    put_u32(out, static_cast<std::uint32_t>(rep.gens.size()));
    out.reserve(out.size() + rep.gens.size() * rep.dim * rep.dim * F.k() + 4 + rep.dim + rep.gens.size());
    for (const auto& M : rep.gens)
        for (Elem e : M.data) {
            auto b = F.serialize(e);
            out.insert(out.end(), b.begin(), b.end());
        }
    out.insert(out.end(), {'P', 'R', 'T', 'Y'});
    for (int b : rep.parity) out.push_back(static_cast<std::uint8_t>(b));
    for (int b : rep.gen_parity) out.push_back(static_cast<std::uint8_t>(b));

    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw EnvironmentError("cannot write " + tmp.string());
        f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
        if (!f) throw EnvironmentError("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw EnvironmentError("cannot rename " + tmp.string() + ": " + ec.message());
}

GradedRep read_cache(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw EnvironmentError("cannot open " + path.string());
    std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    Reader r{buf};
    if (std::memcmp(r.take(4), "SKWL", 4) != 0) throw CacheError("bad magic in " + path.string());
    std::uint32_t version = r.u32();
    if (version != kCacheVersion) throw CacheError("unsupported cache version " + std::to_string(version));
    std::uint32_t p = r.u32(), k = r.u32();
    if (!Field::is_prime(p) || p == 2 || k == 0 || k > 16) throw CacheError("bad field in cache header");
    const std::uint8_t* mod = r.take(k);
    GradedRep rep;
    rep.F = Field::make(p, k);
    if (!std::equal(mod, mod + k, rep.F->modulus().begin())) throw CacheError("cache modulus differs from the field");
    rep.dim = r.u32();
    std::uint32_t G = r.u32();
    const std::size_t need = static_cast<std::size_t>(G) * rep.dim * rep.dim * k;
    if (buf.size() - r.pos < need) throw CacheError("cache file truncated");
    for (std::uint32_t g = 0; g < G; ++g) {
        Matrix M(rep.dim, rep.dim);
        for (auto& e : M.data) e = rep.F->deserialize(r.take(k));
        rep.gens.push_back(std::move(M));
    }
    rep.parity.assign(rep.dim, 0);
    rep.gen_parity.assign(G, 0);
    if (r.pos != buf.size()) {
        if (std::memcmp(r.take(4), "PRTY", 4) != 0) throw CacheError("unknown trailer in cache");
        const std::uint8_t* pb = r.take(rep.dim + G);
        for (std::size_t i = 0; i < rep.dim; ++i) rep.parity[i] = pb[i];
        for (std::size_t i = 0; i < G; ++i) rep.gen_parity[i] = pb[rep.dim + i];
        if (r.pos != buf.size()) throw CacheError("trailing bytes in cache");
    }
    for (std::uint32_t g = 0; g < G; ++g) rep.gen_labels.push_back("g" + std::to_string(g));
    rep.provenance = path.string();
    return rep;
}

} // namespace skw

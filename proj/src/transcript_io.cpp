#include "y00/transcript_io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace y00 {

namespace {

// this code assumes a little-endian host; true of every supported target
void put_u32(std::ostream& os, std::uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); }
void put_u64(std::ostream& os, std::uint64_t v) { os.write(reinterpret_cast<const char*>(&v), 8); }
void put_f64(std::ostream& os, double v) { os.write(reinterpret_cast<const char*>(&v), 8); }
void put_u8(std::ostream& os, std::uint8_t v) { os.write(reinterpret_cast<const char*>(&v), 1); }

std::uint32_t get_u32(std::istream& is) {
    std::uint32_t v;
    is.read(reinterpret_cast<char*>(&v), 4);
    return v;
}
std::uint64_t get_u64(std::istream& is) {
    std::uint64_t v;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}
double get_f64(std::istream& is) {
    double v;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}
std::uint8_t get_u8(std::istream& is) {
    char v;
    is.read(&v, 1);
    return std::uint8_t(v);
}

constexpr char kMagic[4] = {'Y', '0', '0', 'T'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kRecordLen = 26;

}  // namespace

void write_transcript_csv(const Transcript& t, std::ostream& os) {
    os << "i,x,r,l,y_re,y_im,b_bob\n";
    char buf[64];
    for (std::size_t i = 0; i < t.size(); ++i) {
        os << i << ',' << int(t.x[i]) << ',' << t.basis[i] << ',' << t.sent[i] << ',';
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g", t.y_eve[i].real(), t.y_eve[i].imag());
        os << buf << ',' << int(t.b_bob[i]) << '\n';
    }
}

Transcript read_transcript_csv(std::istream& is) {
    Transcript t;
    std::string line;
    if (!std::getline(is, line) || line.rfind("i,x,r,l", 0) != 0)
        throw std::invalid_argument("not a transcript CSV (missing header)");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        unsigned long long i;
        int x, r, l, b;
        double re, im;
        if (std::sscanf(line.c_str(), "%llu,%d,%d,%d,%lg,%lg,%d", &i, &x, &r, &l, &re, &im, &b) != 7)
            throw std::invalid_argument("bad transcript CSV row: " + line);
        t.x.push_back(std::uint8_t(x));
        t.basis.push_back(r);
        t.sent.push_back(l);
        t.y_eve.emplace_back(re, im);
        t.b_bob.push_back(std::uint8_t(b));
    }
    return t;
}

void write_transcript_binary(const Transcript& t, std::ostream& os) {
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    put_u64(os, t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        put_u32(os, kRecordLen);
        put_u8(os, t.x[i]);
        put_u32(os, std::uint32_t(t.basis[i]));
        put_u32(os, std::uint32_t(t.sent[i]));
        put_f64(os, t.y_eve[i].real());
        put_f64(os, t.y_eve[i].imag());
        put_u8(os, t.b_bob[i]);
    }
}

Transcript read_transcript_binary(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::invalid_argument("not a binary transcript (bad magic)");
    const std::uint32_t version = get_u32(is);
    if (version != kVersion)
        throw std::invalid_argument("unsupported transcript version " + std::to_string(version));
    const std::uint64_t n = get_u64(is);
    Transcript t;
    t.x.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint32_t len = get_u32(is);
        if (len != kRecordLen)
            throw std::invalid_argument("bad record length " + std::to_string(len));
        t.x.push_back(get_u8(is));
        t.basis.push_back(std::int32_t(get_u32(is)));
        t.sent.push_back(std::int32_t(get_u32(is)));
        const double re = get_f64(is);
        const double im = get_f64(is);
        t.y_eve.emplace_back(re, im);
        t.b_bob.push_back(get_u8(is));
        if (!is) throw std::invalid_argument("truncated binary transcript");
    }
    return t;
}

void save_transcript(const Transcript& t, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open for writing: " + path);
    if (t.size() <= kTranscriptCsvLimit) write_transcript_csv(t, os);
    else write_transcript_binary(t, os);
}

Transcript load_transcript(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::invalid_argument("cannot open for reading: " + path);
    char magic[4] = {};
    is.read(magic, 4);
    is.seekg(0);
    if (std::memcmp(magic, kMagic, 4) == 0) return read_transcript_binary(is);
    return read_transcript_csv(is);
}

}  // namespace y00

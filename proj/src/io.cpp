#include "qha/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "qha/errors.hpp"

namespace qha {

namespace {

using nlohmann::json;

void put_f64_le(std::string& buf, double v) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) buf.push_back(static_cast<char>((bits >> (8 * b)) & 0xff));
}

double get_f64_le(const char* p) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b)
        bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[b])) << (8 * b);
    return std::bit_cast<double>(bits);
}

void write_file(const std::string& path, const char* magic, const char* kind,
                const PhaseGrid& grid, const Complex* data, std::size_t count) {
    std::string buf;
    buf.reserve(count * 16 + 64);
    buf += magic;
    buf += '\n';
    json header = {{"N", grid.n}, {"L", grid.half_width}, {"kind", kind}};
    buf += header.dump();
    buf += '\n';
    for (std::size_t i = 0; i < count; ++i) {
        put_f64_le(buf, data[i].real());
        put_f64_le(buf, data[i].imag());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FileFormatError("cannot open '" + path + "' for writing");
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw FileFormatError("short write to '" + path + "'");
}

struct Parsed {
    PhaseGrid grid;
    std::vector<Complex> data;
};

Parsed read_file(const std::string& path, const char* magic, const char* kind,
                 bool vector_payload) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileFormatError("cannot open '" + path + "'");
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    const std::string want_magic = std::string(magic) + "\n";
    if (contents.size() < want_magic.size() ||
        contents.compare(0, want_magic.size(), want_magic) != 0)
        throw FileFormatError("'" + path + "': bad magic at byte offset 0 (expected " + magic + ")");

    const std::size_t header_start = want_magic.size();
    const std::size_t header_end = contents.find('\n', header_start);
    if (header_end == std::string::npos)
        throw FileFormatError("'" + path + "': unterminated JSON header at byte offset " +
                              std::to_string(header_start));
    json header;
    try {
        header = json::parse(contents.substr(header_start, header_end - header_start));
    } catch (const json::exception& e) {
        throw FileFormatError("'" + path + "': unparsable header at byte offset " +
                              std::to_string(header_start) + ": " + e.what());
    }
    if (!header.contains("N") || !header.contains("L") || !header.contains("kind"))
        throw FileFormatError("'" + path + "': header missing N/L/kind");
    if (header["kind"] != kind)
        throw FileFormatError("'" + path + "': kind '" + header["kind"].dump() + "', expected '" +
                              kind + "'");

    Parsed out;
    out.grid = make_grid(header["N"].get<int>(), header["L"].get<double>());
    const std::size_t n = static_cast<std::size_t>(out.grid.n);
    const std::size_t count = vector_payload ? n : n * n;
    const std::size_t payload_at = header_end + 1;
    const std::size_t expected = count * 16;
    const std::size_t got = contents.size() - payload_at;
    if (got != expected)
        throw FileFormatError("'" + path + "': payload at byte offset " +
                              std::to_string(payload_at) + " has " + std::to_string(got) +
                              " bytes, expected " + std::to_string(expected));
    out.data.resize(count);
    const char* p = contents.data() + payload_at;
    for (std::size_t i = 0; i < count; ++i, p += 16)
        out.data[i] = {get_f64_le(p), get_f64_le(p + 8)};
    return out;
}

}  // namespace

void write_symbol(const std::string& path, const SymbolGrid& s) {
    // row-major: row = position index
    const int n = s.grid.n;
    std::vector<Complex> flat(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) flat[static_cast<std::size_t>(j) * n + k] = s.values(j, k);
    write_file(path, "QHAGRID1", "symbol", s.grid, flat.data(), flat.size());
}

SymbolGrid read_symbol(const std::string& path) {
    Parsed p = read_file(path, "QHAGRID1", "symbol", false);
    const int n = p.grid.n;
    CMatrix v(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) v(j, k) = p.data[static_cast<std::size_t>(j) * n + k];
    SymbolGrid s{p.grid, std::move(v)};
    validate(s, path.c_str());
    return s;
}

void write_operator(const std::string& path, const OperatorMatrix& t) {
    const int n = t.grid.n;
    std::vector<Complex> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i) * n + j] = t.kernel(i, j);
    write_file(path, "QHAOP1", "operator", t.grid, flat.data(), flat.size());
}

OperatorMatrix read_operator(const std::string& path) {
    Parsed p = read_file(path, "QHAOP1", "operator", false);
    const int n = p.grid.n;
    CMatrix k(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) k(i, j) = p.data[static_cast<std::size_t>(i) * n + j];
    OperatorMatrix t{p.grid, std::move(k)};
    validate(t, path.c_str());
    return t;
}

void write_window(const std::string& path, const WindowVector& w) {
    write_file(path, "QHAVEC1", "window", w.grid, w.values.data(),
               static_cast<std::size_t>(w.values.size()));
}

WindowVector read_window(const std::string& path) {
    Parsed p = read_file(path, "QHAVEC1", "window", true);
    CVector v(p.grid.n);
    for (int i = 0; i < p.grid.n; ++i) v(i) = p.data[static_cast<std::size_t>(i)];
    WindowVector w{p.grid, std::move(v)};
    validate(w, path.c_str());
    return w;
}

}  // namespace qha

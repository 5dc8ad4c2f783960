#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "weyl/errors.hpp"
#include "weyl/walk/lattice.hpp"

namespace weyl::walk {

namespace {

constexpr std::array<char, 4> kMagic = {'W', 'Q', 'W', '1'};

template <typename U>
void put_le(std::ostream& out, U v) {
    for (std::size_t i = 0; i < sizeof(U); ++i) {
        out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
}

template <typename U>
U get_le(std::istream& in) {
    U v = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) {
        const int b = in.get();
        if (b == std::char_traits<char>::eof()) throw InvalidInput("WQW1: truncated stream");
        v |= static_cast<U>(static_cast<unsigned char>(b)) << (8 * i);
    }
    return v;
}

}  // namespace

void write_wqw1(std::ostream& out, const LatticeState& state, Chirality c) {
    out.write(kMagic.data(), kMagic.size());
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(state.side()));
    put_le<std::uint8_t>(out, c == Chirality::Plus ? 0 : 1);
    for (const cplx& a : state.data()) {
        put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(a.real()));
        put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(a.imag()));
    }
    if (!out) throw InvalidInput("WQW1: write failed");
}

void write_wqw1(const std::filesystem::path& path, const LatticeState& state, Chirality c) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open " + path.string() + " for writing");
    write_wqw1(f, state, c);
}

std::pair<LatticeState, Chirality> read_wqw1(std::istream& in) {
    std::array<char, 4> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kMagic) throw InvalidInput("WQW1: bad magic");
    const auto n = get_le<std::uint32_t>(in);
    const auto chir = get_le<std::uint8_t>(in);
    if (chir > 1) throw InvalidInput("WQW1: bad chirality byte");
    if (n == 0 || n > 4096) throw InvalidInput("WQW1: implausible grid side");
    LatticeState s(static_cast<int>(n));
    for (cplx& a : s.data()) {
        const double re = std::bit_cast<double>(get_le<std::uint64_t>(in));
        const double im = std::bit_cast<double>(get_le<std::uint64_t>(in));
        a = {re, im};
    }
    return {std::move(s), chir == 0 ? Chirality::Plus : Chirality::Minus};
}

std::pair<LatticeState, Chirality> read_wqw1(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open " + path.string());
    return read_wqw1(f);
}

DispersionRow dispersion_row(const WaveVector& k, Chirality c) {
    return {k, dispersion(k, c), n_vector(k, c), lambda_scalar(k, c)};
}

void write_dispersion_csv(std::ostream& out, const std::vector<DispersionRow>& rows, bool rescaled_columns) {
    std::ostringstream buf;
    buf.imbue(std::locale::classic());
    buf << std::setprecision(17);
    buf << "kx,ky,kz,omega,nx,ny,nz,lambda";
    if (rescaled_columns) buf << ",ux,uy,uz";
    buf << '\n';
    for (const auto& r : rows) {
        buf << r.k.kx << ',' << r.k.ky << ',' << r.k.kz << ',' << r.omega << ',' << r.n[0] << ','
            << r.n[1] << ',' << r.n[2] << ',' << r.lambda;
        if (rescaled_columns) {
            const WaveVector u = r.k.rescaled();
            buf << ',' << u.kx << ',' << u.ky << ',' << u.kz;
        }
        buf << '\n';
    }
    out << buf.str();
}

}  // namespace weyl::walk

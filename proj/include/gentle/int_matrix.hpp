#pragma once
// Exact rank computation for small dense integer matrices: fraction-free
// Bareiss elimination over the rationals, Gaussian elimination over F_p.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace gentle {

using BigInt = boost::multiprecision::cpp_int;

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> data;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
        rows = static_cast<int>(init.size());
        cols = rows == 0 ? 0 : static_cast<int>(init.begin()->size());
        data.reserve(static_cast<std::size_t>(rows) * cols);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols)
                throw std::invalid_argument("ragged matrix initializer");
            for (long long x : row) data.emplace_back(x);
        }
    }

    BigInt& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    IntMatrix transposed() const {
        IntMatrix t(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : data)
            if (x != 0) return false;
        return true;
    }
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch in multiply");
    IntMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                if (b.at(k, j) != 0) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

// Rank over Q via Bareiss fraction-free elimination. All intermediate
// divisions are exact, entries stay integral throughout.
inline int rank_rational(IntMatrix m) {
    int r = 0;
    BigInt prev = 1;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = c + 1; j < m.cols; ++j)
                m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

namespace detail {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 acc = 1, b = base % mod;
    while (exp) {
        if (exp & 1) acc = acc * b % mod;
        b = static_cast<unsigned __int128>(b) * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

// Gaussian elimination rank over F_p on a flat row-major array of residues.
inline int rank_mod_p_flat(std::vector<std::uint64_t>& a, int rows, int cols, std::uint64_t p) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i) * cols + c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = c; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(pivot) * cols + j],
                          a[static_cast<std::size_t>(r) * cols + j]);
        std::uint64_t inv = mod_pow(a[static_cast<std::size_t>(r) * cols + c], p - 2, p);
        for (int i = r + 1; i < rows; ++i) {
            std::uint64_t f = a[static_cast<std::size_t>(i) * cols + c];
            if (f == 0) continue;
            std::uint64_t scale = static_cast<unsigned __int128>(f) * inv % p;
            for (int j = c; j < cols; ++j) {
                std::uint64_t sub = static_cast<unsigned __int128>(scale) *
                                    a[static_cast<std::size_t>(r) * cols + j] % p;
                std::uint64_t& e = a[static_cast<std::size_t>(i) * cols + j];
                e = (e + p - sub) % p;
            }
        }
        ++r;
    }
    return r;
}

}  // namespace detail

// Rank of the reduction of m modulo a prime p.
inline int rank_mod_p(const IntMatrix& m, long long p) {
    if (!detail::is_prime(p)) throw std::invalid_argument("rank_mod_p: modulus is not prime");
    std::vector<std::uint64_t> a(m.data.size());
    const BigInt bp = p;
    for (std::size_t i = 0; i < m.data.size(); ++i) {
        BigInt residue = m.data[i] % bp;
        if (residue < 0) residue += bp;
        a[i] = residue.convert_to<std::uint64_t>();
    }
    return detail::rank_mod_p_flat(a, m.rows, m.cols, static_cast<std::uint64_t>(p));
}

}  // namespace gentle

#pragma once
// Closed-formula side of the Hochschild dimension computation: truncated
// integer power series, the g_m / f_3 building blocks, the dimension series
// derived from the invariant phi, exact rational forms, the surface and
// tilde-A evaluators, and partial recovery of phi from dimension data.

#include <map>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gentle/ag_invariant.hpp"
#include "gentle/cochain.hpp"

namespace gentle {

// Power series truncated at a fixed degree; arithmetic never sees beyond it.
struct TruncSeries {
    std::vector<BigInt> c;  // c[i] = coefficient of z^i, size = max degree + 1

    explicit TruncSeries(int max_degree = 0) : c(max_degree + 1) {}
    int max_degree() const { return static_cast<int>(c.size()) - 1; }
    const BigInt& operator[](int i) const { return c[i]; }
    BigInt& operator[](int i) { return c[i]; }
    bool operator==(const TruncSeries&) const = default;

    TruncSeries& add_scaled(const TruncSeries& other, const BigInt& factor) {
        for (int i = 0; i <= std::min(max_degree(), other.max_degree()); ++i)
            c[i] += factor * other.c[i];
        return *this;
    }
};

// g_m(z) = z^m (1+z) (eps_m + z^m) / (1 - z^{2m}),
// eps_m = 1 iff m is even or the field has characteristic 2. Expanded by
// shifting the numerator against the geometric series in z^{2m}.
inline TruncSeries g_series(int m, bool char2, int max_degree) {
    if (m <= 0) throw std::invalid_argument("g_series: m must be positive");
    TruncSeries out(max_degree);
    const int eps = (m % 2 == 0 || char2) ? 1 : 0;
    // numerator: eps*z^m + eps*z^{m+1} + z^{2m} + z^{2m+1}
    for (long long shift = 0; shift <= max_degree; shift += 2 * m) {
        auto bump = [&](long long d, int v) {
            if (v != 0 && d <= max_degree) out[static_cast<int>(d)] += v;
        };
        bump(shift + m, eps);
        bump(shift + m + 1, eps);
        bump(shift + 2 * m, 1);
        bump(shift + 2 * m + 1, 1);
    }
    return out;
}

inline TruncSeries f3_series(bool char2, int max_degree) {
    TruncSeries out = g_series(3, char2, max_degree);
    if (max_degree >= 1) out[1] += 1;
    return out;
}

// h(z) = (1 - chi) z + sum_m phi(1,m) z^m + sum_{m>0} phi(0,m) g_m(z)
inline TruncSeries h_from_phi(const PhiInvariant& phi_inv, int chi, bool char2, int max_degree) {
    TruncSeries out(max_degree);
    if (max_degree >= 1) out[1] += 1 - chi;
    for (const auto& [key, mult] : phi_inv.entries) {
        const auto& [n, m] = key;
        if (n == 1 && m <= max_degree) out[m] += mult;
        if (n == 0 && m > 0) out.add_scaled(g_series(m, char2, max_degree), mult);
    }
    return out;
}

// The coefficient view of h: dims[0] = h[0] + 1, dims[i] = h[i] for i >= 1.
inline DimSeries dims_from_h(const TruncSeries& h, long long characteristic) {
    DimSeries out;
    out.characteristic = characteristic;
    for (int i = 0; i <= h.max_degree(); ++i) {
        BigInt v = h[i] + (i == 0 ? 1 : 0);
        out.dims.push_back(v.convert_to<long long>());
    }
    return out;
}

// Dimension formulas evaluated directly through psi (independent arithmetic
// from h_from_phi; the two are cross-checked in the tests):
//   dim HH^0 = 1 + phi(1,0)
//   dim HH^1 = 1 - chi + phi(1,1) [+ phi(0,1) in characteristic 2]
//   dim HH^n = phi(1,n) + a_n psi(n) + b_n psi(n-1)  for n >= 2
inline DimSeries hh_dims_closed(const PhiInvariant& phi_inv, int chi, bool char2,
                                int max_degree) {
    DimSeries out;
    out.characteristic = char2 ? 2 : 0;
    out.dims.resize(max_degree + 1);
    out.dims[0] = 1 + phi_inv.at(1, 0);
    if (max_degree >= 1)
        out.dims[1] = 1 - chi + phi_inv.at(1, 1) + (char2 ? phi_inv.at(0, 1) : 0);
    for (int n = 2; n <= max_degree; ++n) {
        int a, b;
        if (char2) a = b = 1;
        else if (n % 2 == 0) a = 1, b = 0;
        else a = 0, b = 1;
        out.dims[n] = phi_inv.at(1, n) + a * psi(phi_inv, n) + b * psi(phi_inv, n - 1);
    }
    return out;
}

// Specialization for finite global dimension: no phi(0,m) entries, and
//   h(z) = (1 - chi) z + sum_n phi(1,n) z^n,
// independent of the characteristic.
inline TruncSeries finite_gldim_series(const PhiInvariant& phi_inv, int chi, int max_degree) {
    for (const auto& [key, mult] : phi_inv.entries)
        if (key.first == 0)
            throw std::invalid_argument(
                "finite_gldim_series: phi has a (0,m) entry (infinite global dimension)");
    return h_from_phi(phi_inv, chi, false, max_degree);
}

// ---------------------------------------------------------------------------
// Exact rational form of h.
// ---------------------------------------------------------------------------

// Dense integer polynomial, coefficients low degree first, no trailing zeros.
struct Poly {
    std::vector<BigInt> c;

    Poly() = default;
    Poly(std::initializer_list<long long> init) {
        for (long long x : init) c.emplace_back(x);
        trim();
    }
    static Poly zero() { return Poly{}; }
    static Poly one() { return Poly{1}; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool operator==(const Poly&) const = default;
};

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
    out.trim();
    return out;
}

inline Poly poly_scale(const Poly& a, const BigInt& k) {
    Poly out = a;
    for (auto& x : out.c) x *= k;
    out.trim();
    return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    out.trim();
    return out;
}

namespace detail {

inline BigInt poly_content(const Poly& a) {
    BigInt g = 0;
    for (const auto& x : a.c) g = boost::multiprecision::gcd(g, x);
    return g;
}

inline Poly poly_primitive(const Poly& a) {
    BigInt g = poly_content(a);
    if (g == 0 || g == 1) return a;
    Poly out = a;
    for (auto& x : out.c) x /= g;
    return out;
}

// remainder of lc(b)^k * a modulo b for suitable k; only used inside the
// primitive-PRS gcd, where associates are all we need
inline Poly poly_pseudo_rem(Poly a, const Poly& b) {
    const BigInt lead = b.c.back();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        BigInt top = a.c.back();
        int shift = a.degree() - b.degree();
        for (auto& x : a.c) x *= lead;
        for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] -= top * b.c[i];
        a.trim();
    }
    return a;
}

inline Poly poly_gcd(Poly a, Poly b) {
    a = poly_primitive(a);
    b = poly_primitive(b);
    while (!b.is_zero()) {
        Poly r = poly_primitive(poly_pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.c.back() < 0)
        for (auto& x : a.c) x = -x;
    return a;
}

// exact division, asserting zero remainder
inline Poly poly_divexact(Poly a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divexact: division by zero");
    Poly q;
    if (a.degree() < b.degree()) {
        if (!a.is_zero()) throw std::logic_error("poly_divexact: not divisible");
        return q;
    }
    q.c.assign(a.degree() - b.degree() + 1, BigInt(0));
    for (int d = a.degree() - b.degree(); d >= 0; --d) {
        if (a.degree() != d + b.degree()) continue;
        BigInt f = a.c.back() / b.c.back();
        if (f * b.c.back() != a.c.back()) throw std::logic_error("poly_divexact: not divisible");
        q.c[d] = f;
        for (int i = 0; i <= b.degree(); ++i) a.c[i + d] -= f * b.c[i];
        a.trim();
    }
    if (!a.is_zero()) throw std::logic_error("poly_divexact: nonzero remainder");
    return q;
}

}  // namespace detail

// numerator / denominator with integer coefficients; denominator has
// constant term 1 and the fraction is in lowest terms.
struct RationalSeriesForm {
    Poly numerator;
    Poly denominator;
};

// Expand to a truncated series; requires denominator constant term +-1.
inline TruncSeries expand(const RationalSeriesForm& form, int max_degree) {
    if (form.denominator.is_zero() || (form.denominator.c[0] != 1 && form.denominator.c[0] != -1))
        throw std::invalid_argument("expand: denominator constant term must be a unit");
    const BigInt d0 = form.denominator.c[0];
    TruncSeries out(max_degree);
    for (int k = 0; k <= max_degree; ++k) {
        BigInt v = k <= form.numerator.degree() ? form.numerator.c[k] : BigInt(0);
        for (int j = 1; j <= std::min(k, form.denominator.degree()); ++j)
            v -= form.denominator.c[j] * out[k - j];
        out[k] = v / d0;  // d0 = +-1
    }
    return out;
}

// h as an exact rational function: common denominator prod (1 - z^{2m}) over
// the m with phi(0,m) > 0, then reduced to lowest terms.
inline RationalSeriesForm h_closed_form(const PhiInvariant& phi_inv, int chi, bool char2) {
    std::vector<int> ms;
    for (const auto& [key, mult] : phi_inv.entries)
        if (key.first == 0 && key.second > 0) ms.push_back(key.second);

    Poly den = Poly::one();
    for (int m : ms) {
        Poly factor;  // 1 - z^{2m}
        factor.c.assign(2 * m + 1, BigInt(0));
        factor.c[0] = 1;
        factor.c[2 * m] = -1;
        den = poly_mul(den, factor);
    }

    // polynomial part: (1 - chi) z + sum phi(1,m) z^m
    Poly head;
    head.c.assign(2, BigInt(0));
    head.c[1] = 1 - chi;
    head.trim();
    for (const auto& [key, mult] : phi_inv.entries)
        if (key.first == 1) {
            Poly t;
            t.c.assign(key.second + 1, BigInt(0));
            t.c[key.second] = mult;
            head = poly_add(head, t);
        }

    Poly num = poly_mul(head, den);
    for (int m : ms) {
        const int eps = (m % 2 == 0 || char2) ? 1 : 0;
        Poly gnum;  // z^m (1+z) (eps_m + z^m); positions collide when m = 1
        gnum.c.assign(2 * m + 2, BigInt(0));
        gnum.c[m] += eps;
        gnum.c[m + 1] += eps;
        gnum.c[2 * m] += 1;
        gnum.c[2 * m + 1] += 1;
        Poly cofactor;  // den / (1 - z^{2m})
        {
            Poly f;
            f.c.assign(2 * m + 1, BigInt(0));
            f.c[0] = 1;
            f.c[2 * m] = -1;
            cofactor = detail::poly_divexact(den, f);
        }
        num = poly_add(num, poly_scale(poly_mul(gnum, cofactor), phi_inv.at(0, m)));
    }

    RationalSeriesForm form{num, den};
    if (form.numerator.is_zero()) {
        form.denominator = Poly::one();
        return form;
    }
    Poly g = detail::poly_gcd(form.numerator, form.denominator);
    if (!g.is_zero() && g.degree() >= 0) {
        if (g.c[0] < 0)
            for (auto& x : g.c) x = -x;
        // g(0) divides den(0) = 1
        form.numerator = detail::poly_divexact(form.numerator, g);
        form.denominator = detail::poly_divexact(form.denominator, g);
    }
    return form;
}

// ---------------------------------------------------------------------------
// Surface-triangulation and tilde-A evaluators.
// ---------------------------------------------------------------------------

struct SurfaceParams {
    long long genus = 0;       // g >= 0
    long long boundaries = 1;  // b >= 1
    long long c0 = 0;          // boundary components: two marked points, both segments on one triangle
    long long c1 = 0;          // boundary components with exactly one marked point
    long long d = 0;           // triangles with two boundary sides

    void validate() const {
        if (genus < 0 || boundaries < 1 || c0 < 0 || c1 < 0 || d < 0)
            throw std::invalid_argument("surface parameters out of range");
        if (c0 + c1 > boundaries)
            throw std::invalid_argument("c0 + c1 exceeds the number of boundary components");
        if (4 * (genus - 1) + 2 * boundaries + d < 0)
            throw std::invalid_argument("negative triangle-count multiplier");
    }
};

// h(z) = c0 + (2g + b - 1 + c1) z + (4(g-1) + 2b + d) f_3(z)
inline TruncSeries h_surface(const SurfaceParams& p, bool char2, int max_degree) {
    p.validate();
    TruncSeries out = f3_series(char2, max_degree);
    const BigInt mult = 4 * (p.genus - 1) + 2 * p.boundaries + p.d;
    for (auto& x : out.c) x *= mult;
    out[0] += p.c0;
    if (max_degree >= 1) out[1] += 2 * p.genus + p.boundaries - 1 + p.c1;
    return out;
}

struct TildeAParams {
    long long s1 = 0, t1 = 0, s2 = 0, t2 = 0;

    void validate() const {
        if (s1 < 0 || t1 < 0 || s2 < 0 || t2 < 0)
            throw std::invalid_argument("tilde-A parameters must be nonnegative");
    }
};

// h(z) = c0 + (1 + c1) z + (t1 + t2) f_3(z), where c0 counts the i with
// (s_i, t_i) = (0,1) and c1 those with (s_i, t_i) = (1,0).
inline TruncSeries h_tilde_a(const TildeAParams& p, bool char2, int max_degree) {
    p.validate();
    const int c0 = (p.s1 == 0 && p.t1 == 1 ? 1 : 0) + (p.s2 == 0 && p.t2 == 1 ? 1 : 0);
    const int c1 = (p.s1 == 1 && p.t1 == 0 ? 1 : 0) + (p.s2 == 1 && p.t2 == 0 ? 1 : 0);
    TruncSeries out = f3_series(char2, max_degree);
    const BigInt mult = p.t1 + p.t2;
    for (auto& x : out.c) x *= mult;
    out[0] += c0;
    if (max_degree >= 1) out[1] += 1 + c1;
    return out;
}

// ---------------------------------------------------------------------------
// Partial inversion: what the dimension data in characteristics 0 and 2
// determines about phi.
// ---------------------------------------------------------------------------

inline int mobius(int n) {
    if (n <= 0) throw std::invalid_argument("mobius: n must be positive");
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

struct InferredPhi {
    long long phi_1_0 = 0;
    long long phi_1_1 = 0;
    std::map<int, long long> psi_odd;    // odd k -> psi(k)
    std::map<int, long long> phi_0_odd;  // odd k -> phi(0,k)
    // residual[n-2] = phi(1,n) + a_n psi(n) + b_n psi(n-1) for n = 2..N
    // (characteristic != 2 coefficients); even-index psi is not separable
    std::vector<long long> residual;
    bool finite_gldim = false;
    std::vector<long long> phi_1_full;  // phi(1,n), n = 0..N, when finite_gldim
};

inline InferredPhi infer_phi_partial(const DimSeries& dims_char0, const DimSeries& dims_char2,
                                     int chi) {
    const auto& d0 = dims_char0.dims;
    const auto& d2 = dims_char2.dims;
    if (d0.size() != d2.size() || d0.size() < 3)
        throw std::invalid_argument("infer_phi_partial: need matching truncation with N >= 2");
    const int N = static_cast<int>(d0.size()) - 1;
    auto inconsistent = [](const std::string& why) {
        throw std::domain_error("infer_phi_partial: inconsistent input (" + why + ")");
    };

    InferredPhi out;
    out.phi_1_0 = d0[0] - 1;
    if (out.phi_1_0 < 0) inconsistent("dim HH^0 < 1");
    if (d0[0] != d2[0]) inconsistent("HH^0 differs between characteristics");

    // dims_char2[n] - dims_char0[n] equals psi(n) for odd n, psi(n-1) for even n
    for (int n = 1; n <= N; ++n) {
        long long diff = d2[n] - d0[n];
        if (diff < 0) inconsistent("characteristic-2 dimension below characteristic-0");
        int k = n % 2 == 1 ? n : n - 1;
        if (k < 1) continue;
        auto [it, inserted] = out.psi_odd.emplace(k, diff);
        if (!inserted && it->second != diff) inconsistent("conflicting psi values");
    }

    // Moebius inversion over (odd) divisors
    for (const auto& [k, unused] : out.psi_odd) {
        long long value = 0;
        for (int d = 1; d <= k; ++d) {
            if (k % d != 0) continue;
            auto it = out.psi_odd.find(d);
            if (it == out.psi_odd.end()) inconsistent("missing psi divisor");
            value += mobius(k / d) * it->second;
        }
        if (value < 0) inconsistent("negative phi(0,k)");
        out.phi_0_odd[k] = value;
    }

    out.phi_1_1 = d0[1] - (1 - chi);
    if (out.phi_1_1 < 0) inconsistent("negative phi(1,1)");
    for (int n = 2; n <= N; ++n) out.residual.push_back(d0[n]);

    bool all_psi_zero = true;
    for (const auto& [k, v] : out.psi_odd)
        if (v != 0) all_psi_zero = false;
    bool equal_series = d0 == d2;
    bool vanishing_tail = d0[N] == 0 && d0[N - 1] == 0;
    if (all_psi_zero && equal_series && vanishing_tail) {
        out.finite_gldim = true;
        out.phi_1_full.push_back(out.phi_1_0);
        out.phi_1_full.push_back(out.phi_1_1);
        for (int n = 2; n <= N; ++n) out.phi_1_full.push_back(d0[n]);
    }
    return out;
}

}  // namespace gentle

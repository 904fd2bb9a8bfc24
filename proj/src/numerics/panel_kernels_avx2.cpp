// Compiled with -mavx2 -mfma; only called after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "lightcone/numerics/gauss_legendre.hpp"
#include "lightcone/numerics/panel_kernels.hpp"

namespace lightcone::numerics::detail {

namespace {

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

inline __m256d poly(__m256d x, const double* c, int n) {
    __m256d acc = splat(c[0]);
    for (int i = 1; i < n; ++i) {
        acc = _mm256_fmadd_pd(acc, x, splat(c[i]));
    }
    return acc;
}

// sin and cos by Cody-Waite reduction modulo pi/2 and the Cephes minimax
// polynomials on [-pi/4, pi/4]. Accurate to ~1 ulp for |x| < 1e6.
inline void sincos(__m256d x, __m256d& s, __m256d& c) {
    static constexpr double two_over_pi = 0.636619772367581343076;
    static constexpr double pio2_1 = 1.57079632673412561417e+00;
    static constexpr double pio2_2 = 6.07710050630396597660e-11;
    static constexpr double pio2_2t = 2.02226624879595063154e-21;
    static constexpr double sin_c[] = {1.58962301576546568060e-10, -2.50507477628578072866e-8,
                                       2.75573136213857245213e-6,  -1.98412698295895385996e-4,
                                       8.33333333332211858878e-3,  -1.66666666666666307295e-1};
    static constexpr double cos_c[] = {-1.13585365213876817300e-11, 2.08757008419747316778e-9,
                                       -2.75573141792967388112e-7,  2.48015872888517045348e-5,
                                       -1.38888888888730564116e-3,  4.16666666666665929218e-2};

    const __m256d q = _mm256_round_pd(_mm256_mul_pd(x, splat(two_over_pi)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d z = _mm256_fnmadd_pd(q, splat(pio2_1), x);
    z = _mm256_fnmadd_pd(q, splat(pio2_2), z);
    z = _mm256_fnmadd_pd(q, splat(pio2_2t), z);

    const __m256d zz = _mm256_mul_pd(z, z);
    const __m256d ps = _mm256_fmadd_pd(_mm256_mul_pd(z, zz), poly(zz, sin_c, 6), z);
    const __m256d pc = _mm256_fmadd_pd(_mm256_mul_pd(zz, zz), poly(zz, cos_c, 6),
                                       _mm256_fnmadd_pd(splat(0.5), zz, splat(1.0)));

    // Quadrant q mod 4 selects and signs the polynomials.
    const __m128i qi32 = _mm256_cvtpd_epi32(q);
    const __m256i qi = _mm256_cvtepi32_epi64(qi32);
    const __m256i swap = _mm256_and_si256(qi, _mm256_set1_epi64x(1));
    const __m256d swap_mask = _mm256_castsi256_pd(_mm256_cmpeq_epi64(swap, _mm256_set1_epi64x(1)));
    const __m256i sin_neg = _mm256_slli_epi64(_mm256_and_si256(qi, _mm256_set1_epi64x(2)), 62);
    const __m256i cos_neg =
        _mm256_slli_epi64(_mm256_and_si256(_mm256_add_epi64(qi, _mm256_set1_epi64x(1)),
                                           _mm256_set1_epi64x(2)),
                          62);
    const __m256d s_sel = _mm256_blendv_pd(ps, pc, swap_mask);
    const __m256d c_sel = _mm256_blendv_pd(pc, ps, swap_mask);
    s = _mm256_xor_pd(s_sel, _mm256_castsi256_pd(sin_neg));
    c = _mm256_xor_pd(c_sel, _mm256_castsi256_pd(cos_neg));
}

// exp(x) for x <= 0 (Cephes rational form); flushes to zero below -708.
inline __m256d exp_nonpositive(__m256d x) {
    static constexpr double log2e = 1.4426950408889634073599;
    static constexpr double c1 = 6.93145751953125e-1;
    static constexpr double c2 = 1.42860682030941723212e-6;
    static constexpr double p[] = {1.26177193074810590878e-4, 3.02994407707441961300e-2,
                                   9.99999999999999999910e-1};
    static constexpr double q[] = {3.00198505138664455042e-6, 2.52448340349684104192e-3,
                                   2.27265548208155028766e-1, 2.00000000000000000009e0};

    const __m256d underflow = _mm256_cmp_pd(x, splat(-708.0), _CMP_LT_OQ);
    x = _mm256_max_pd(x, splat(-708.0));
    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, splat(log2e)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, splat(c1), x);
    r = _mm256_fnmadd_pd(n, splat(c2), r);
    const __m256d rr = _mm256_mul_pd(r, r);
    const __m256d px = _mm256_mul_pd(r, poly(rr, p, 3));
    const __m256d qx = poly(rr, q, 4);
    const __m256d e = _mm256_fmadd_pd(splat(2.0), _mm256_div_pd(px, _mm256_sub_pd(qx, px)),
                                      splat(1.0));
    const __m256i ni = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(n));
    const __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(ni, _mm256_set1_epi64x(1023)), 52);
    const __m256d scaled = _mm256_mul_pd(e, _mm256_castsi256_pd(bits));
    return _mm256_andnot_pd(underflow, scaled);
}

inline __m256d omega_factor(OmegaPower p, __m256d omega) {
    switch (p) {
    case OmegaPower::MinusOne:
        return _mm256_div_pd(splat(1.0), omega);
    case OmegaPower::MinusHalf:
        return _mm256_div_pd(splat(1.0), _mm256_sqrt_pd(omega));
    case OmegaPower::Zero:
        return splat(1.0);
    case OmegaPower::PlusHalf:
        return _mm256_sqrt_pd(omega);
    case OmegaPower::PlusOne:
        return omega;
    }
    return splat(1.0);
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

} // namespace

void integrate_panels_avx2(const PanelIntegrand& f, std::span<const double> edges,
                           std::span<complex> values, std::span<double> l1) {
    const GaussRule& gl = gauss_legendre_16();
    const std::size_t n_nodes = gl.nodes.size();  // multiple of 4
    const __m256d m2 = splat(f.mass * f.mass);
    const __m256d phase_k = splat(f.phase_k);
    const __m256d phase_T = splat(f.phase_T);
    const __m256d neg_gauss = splat(-f.gauss_rate);
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    const bool gauss = f.gauss_rate > 0.0;

    for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
        const double centre_s = 0.5 * (edges[j] + edges[j + 1]);
        const double half_s = 0.5 * (edges[j + 1] - edges[j]);
        const __m256d centre = splat(centre_s);
        const __m256d half = splat(half_s);
        __m256d re = _mm256_setzero_pd();
        __m256d im = _mm256_setzero_pd();
        __m256d abs_sum = _mm256_setzero_pd();
        for (std::size_t i = 0; i < n_nodes; i += 4) {
            const __m256d k = _mm256_fmadd_pd(half, _mm256_loadu_pd(&gl.nodes[i]), centre);
            const __m256d omega = _mm256_sqrt_pd(_mm256_fmadd_pd(k, k, m2));
            __m256d amp = _mm256_mul_pd(_mm256_loadu_pd(&gl.weights[i]),
                                        omega_factor(f.omega_power, omega));
            for (int p = 0; p < f.k_power; ++p) {
                amp = _mm256_mul_pd(amp, k);
            }
            if (gauss) {
                amp = _mm256_mul_pd(amp, exp_nonpositive(_mm256_mul_pd(neg_gauss,
                                                                       _mm256_mul_pd(k, k))));
            }
            const __m256d theta = _mm256_fmsub_pd(phase_k, k, _mm256_mul_pd(phase_T, omega));
            __m256d s;
            __m256d c;
            sincos(theta, s, c);
            re = _mm256_fmadd_pd(amp, c, re);
            im = _mm256_fmadd_pd(amp, s, im);
            abs_sum = _mm256_add_pd(abs_sum, _mm256_and_pd(amp, abs_mask));
        }
        values[j] = complex(half_s * hsum(re), half_s * hsum(im));
        l1[j] = std::abs(half_s) * hsum(abs_sum);
    }
}

} // namespace lightcone::numerics::detail
